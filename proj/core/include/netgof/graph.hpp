#pragma once

#include <Eigen/Dense>

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <utility>
#include <vector>

namespace netgof {

using Matrix = Eigen::MatrixXd;
using Vector = Eigen::VectorXd;

/// Symmetric 0/1 adjacency matrix of a simple undirected graph.
///
/// Stored densely as doubles so residual and trace kernels can consume it
/// without conversion. Immutable after construction.
class AdjacencyMatrix {
public:
    /// Validates symmetry, binary entries and a zero diagonal.
    explicit AdjacencyMatrix(Matrix entries);

    /// Builds from an edge list over nodes [0, n). Self-loops and duplicates
    /// must already be removed.
    static AdjacencyMatrix from_edges(int n, const std::vector<std::pair<int, int>>& edges);

    int size() const noexcept { return static_cast<int>(entries_.rows()); }
    const Matrix& dense() const noexcept { return entries_; }
    bool has_edge(int i, int j) const { return entries_(i, j) != 0.0; }
    double operator()(int i, int j) const { return entries_(i, j); }

    std::int64_t edge_count() const;
    std::vector<std::pair<int, int>> edges() const;

    /// Relabels nodes: node i of the result is node perm[i] of this graph.
    AdjacencyMatrix permuted(const std::vector<int>& perm) const;

    bool operator==(const AdjacencyMatrix& other) const { return entries_ == other.entries_; }

private:
    Matrix entries_;
};

/// Symmetric matrix of edge probabilities. The diagonal is ignored by all
/// consumers and is stored as zero.
class ProbabilityMatrix {
public:
    explicit ProbabilityMatrix(Matrix entries);

    int size() const noexcept { return static_cast<int>(entries_.rows()); }
    const Matrix& dense() const noexcept { return entries_; }
    double operator()(int i, int j) const { return entries_(i, j); }

    /// Off-diagonal entries clamped into [eps, 1 - eps].
    ProbabilityMatrix clipped(double eps) const;

    ProbabilityMatrix permuted(const std::vector<int>& perm) const;

private:
    Matrix entries_;
};

using DegreeVector = std::vector<std::int64_t>;

DegreeVector degrees(const AdjacencyMatrix& a);

struct GraphSummary {
    int n = 0;
    std::int64_t edges = 0;
    std::int64_t max_degree = 0;
    std::int64_t min_degree = 0;
    double mean_degree = 0.0;
};

GraphSummary summarize(const AdjacencyMatrix& a);

enum class Indexing { ZeroBased, OneBased };

struct LoadStats {
    std::int64_t lines = 0;
    std::int64_t self_loops = 0;
    std::int64_t duplicates = 0;
};

struct LoadedGraph {
    AdjacencyMatrix adjacency;
    LoadStats stats;
};

/// Parses an undirected edge list: one pair of integer ids per line,
/// separated by whitespace and/or a comma. Lines starting with '#' are
/// comments, except `# nodes N` which declares the node count. `nodes`
/// overrides both the declaration and the inferred count.
LoadedGraph load_edge_list(std::istream& in, Indexing indexing,
                           std::optional<int> nodes = std::nullopt);
LoadedGraph load_edge_list_file(const std::string& path, Indexing indexing,
                                std::optional<int> nodes = std::nullopt);

/// Writes `# nodes N` followed by one `i j` line per edge with i < j.
void write_edge_list(std::ostream& out, const AdjacencyMatrix& a,
                     Indexing indexing = Indexing::ZeroBased);

/// Reads a whitespace/comma separated square matrix of reals.
Matrix load_dense_matrix(std::istream& in);

/// Symmetrises a directed weight matrix (W = T + T^T) and links every pair
/// whose weight reaches the median of the upper-triangular weights.
AdjacencyMatrix threshold_weights(const Matrix& directed_weights);

}  // namespace netgof

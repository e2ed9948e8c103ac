#include "netgof/graph.hpp"

#include "netgof/error.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <fstream>
#include <istream>
#include <ostream>
#include <set>
#include <sstream>
#include <string>

namespace netgof {

namespace {

void require_square(const Matrix& m, const char* what) {
    if (m.rows() != m.cols()) throw InvalidArgument(std::string(what) + " must be square");
}

std::vector<std::string_view> split_tokens(std::string_view line) {
    std::vector<std::string_view> tokens;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && (std::isspace(static_cast<unsigned char>(line[i])) || line[i] == ','))
            ++i;
        std::size_t j = i;
        while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j])) && line[j] != ',')
            ++j;
        if (j > i) tokens.push_back(line.substr(i, j - i));
        i = j;
    }
    return tokens;
}

std::optional<long long> parse_integer(std::string_view token) {
    long long value = 0;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc() || ptr != token.data() + token.size()) return std::nullopt;
    return value;
}

// Recognises "# nodes N" (case-sensitive keyword).
std::optional<int> node_declaration(std::string_view comment) {
    auto tokens = split_tokens(comment.substr(1));
    if (tokens.size() == 2 && tokens[0] == "nodes") {
        if (auto v = parse_integer(tokens[1]); v && *v > 0) return static_cast<int>(*v);
    }
    return std::nullopt;
}

}  // namespace

AdjacencyMatrix::AdjacencyMatrix(Matrix entries) : entries_(std::move(entries)) {
    require_square(entries_, "adjacency matrix");
    const auto n = entries_.rows();
    if (n < 2) throw InvalidArgument("adjacency matrix needs at least 2 nodes");
    for (Eigen::Index i = 0; i < n; ++i) {
        if (entries_(i, i) != 0.0) throw InvalidArgument("adjacency matrix has a self-loop");
        for (Eigen::Index j = i + 1; j < n; ++j) {
            const double v = entries_(i, j);
            if (v != 0.0 && v != 1.0) throw InvalidArgument("adjacency matrix entries must be 0 or 1");
            if (entries_(j, i) != v) throw InvalidArgument("adjacency matrix must be symmetric");
        }
    }
}

AdjacencyMatrix AdjacencyMatrix::from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
    Matrix m = Matrix::Zero(n, n);
    for (auto [i, j] : edges) {
        if (i < 0 || j < 0 || i >= n || j >= n) throw InvalidArgument("edge endpoint out of range");
        if (i == j) throw InvalidArgument("self-loop in edge list");
        m(i, j) = m(j, i) = 1.0;
    }
    return AdjacencyMatrix(std::move(m));
}

std::int64_t AdjacencyMatrix::edge_count() const {
    return static_cast<std::int64_t>(std::llround(entries_.sum() / 2.0));
}

std::vector<std::pair<int, int>> AdjacencyMatrix::edges() const {
    std::vector<std::pair<int, int>> out;
    const int n = size();
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (entries_(i, j) != 0.0) out.emplace_back(i, j);
    return out;
}

AdjacencyMatrix AdjacencyMatrix::permuted(const std::vector<int>& perm) const {
    const int n = size();
    if (static_cast<int>(perm.size()) != n) throw InvalidArgument("permutation size mismatch");
    Matrix m(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) m(i, j) = entries_(perm[i], perm[j]);
    return AdjacencyMatrix(std::move(m));
}

ProbabilityMatrix::ProbabilityMatrix(Matrix entries) : entries_(std::move(entries)) {
    require_square(entries_, "probability matrix");
    const auto n = entries_.rows();
    for (Eigen::Index i = 0; i < n; ++i) {
        entries_(i, i) = 0.0;
        for (Eigen::Index j = i + 1; j < n; ++j) {
            const double v = entries_(i, j);
            if (!(v >= 0.0 && v <= 1.0))
                throw InvalidArgument("probability (" + std::to_string(i) + ", " + std::to_string(j) +
                                      ") = " + std::to_string(v) + " outside [0, 1]");
            if (std::abs(entries_(j, i) - v) > 1e-12 * std::max(1.0, std::abs(v)))
                throw InvalidArgument("probability matrix must be symmetric");
            entries_(j, i) = v;
        }
    }
}

ProbabilityMatrix ProbabilityMatrix::clipped(double eps) const {
    Matrix m = entries_.cwiseMax(eps).cwiseMin(1.0 - eps);
    m.diagonal().setZero();
    return ProbabilityMatrix(std::move(m));
}

ProbabilityMatrix ProbabilityMatrix::permuted(const std::vector<int>& perm) const {
    const int n = size();
    if (static_cast<int>(perm.size()) != n) throw InvalidArgument("permutation size mismatch");
    Matrix m(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) m(i, j) = entries_(perm[i], perm[j]);
    return ProbabilityMatrix(std::move(m));
}

DegreeVector degrees(const AdjacencyMatrix& a) {
    const Vector sums = a.dense().rowwise().sum();
    DegreeVector d(static_cast<std::size_t>(sums.size()));
    for (Eigen::Index i = 0; i < sums.size(); ++i) d[i] = static_cast<std::int64_t>(std::llround(sums(i)));
    return d;
}

GraphSummary summarize(const AdjacencyMatrix& a) {
    const auto d = degrees(a);
    GraphSummary s;
    s.n = a.size();
    s.edges = a.edge_count();
    s.max_degree = *std::max_element(d.begin(), d.end());
    s.min_degree = *std::min_element(d.begin(), d.end());
    s.mean_degree = 2.0 * static_cast<double>(s.edges) / s.n;
    return s;
}

LoadedGraph load_edge_list(std::istream& in, Indexing indexing, std::optional<int> nodes) {
    const long long offset = indexing == Indexing::OneBased ? 1 : 0;
    std::set<std::pair<int, int>> edges;
    LoadStats stats;
    std::optional<int> declared;
    long long max_id = -1;

    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        std::string_view view(line);
        const auto first = view.find_first_not_of(" \t\r");
        if (first == std::string_view::npos) continue;
        view.remove_prefix(first);
        if (view.front() == '#') {
            if (auto d = node_declaration(view)) declared = d;
            continue;
        }
        auto tokens = split_tokens(view);
        if (tokens.size() != 2)
            throw ParseError("expected two node ids, found " + std::to_string(tokens.size()) + " tokens",
                             line_no);
        auto u = parse_integer(tokens[0]);
        auto v = parse_integer(tokens[1]);
        if (!u || !v) throw ParseError("node ids must be integers", line_no);
        if (*u < offset || *v < offset)
            throw ParseError("node id below " + std::to_string(offset), line_no);
        ++stats.lines;
        const long long i = *u - offset;
        const long long j = *v - offset;
        max_id = std::max({max_id, i, j});
        if (max_id > 1'000'000'000) throw ParseError("node id too large", line_no);
        if (i == j) {
            ++stats.self_loops;
            continue;
        }
        const std::pair<int, int> key{static_cast<int>(std::min(i, j)), static_cast<int>(std::max(i, j))};
        if (!edges.insert(key).second) ++stats.duplicates;
    }

    if (edges.empty()) throw ParseError("edge list contains no edges", 0);

    int n = static_cast<int>(max_id + 1);
    if (auto want = nodes ? nodes : declared) {
        if (*want < n)
            throw ParseError("node id " + std::to_string(max_id + offset) + " exceeds declared node count " +
                                 std::to_string(*want),
                             0);
        n = *want;
    }
    return {AdjacencyMatrix::from_edges(n, {edges.begin(), edges.end()}), stats};
}

LoadedGraph load_edge_list_file(const std::string& path, Indexing indexing, std::optional<int> nodes) {
    std::ifstream in(path);
    if (!in) throw DatasetMissing("cannot open " + path);
    return load_edge_list(in, indexing, nodes);
}

void write_edge_list(std::ostream& out, const AdjacencyMatrix& a, Indexing indexing) {
    const int offset = indexing == Indexing::OneBased ? 1 : 0;
    out << "# nodes " << a.size() << '\n';
    for (auto [i, j] : a.edges()) out << i + offset << ' ' << j + offset << '\n';
}

Matrix load_dense_matrix(std::istream& in) {
    std::vector<std::vector<double>> rows;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        std::string_view view(line);
        const auto first = view.find_first_not_of(" \t\r");
        if (first == std::string_view::npos || view[first] == '#') continue;
        std::vector<double> row;
        for (auto token : split_tokens(view)) {
            double v = 0.0;
            auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), v);
            if (ec != std::errc() || ptr != token.data() + token.size())
                throw ParseError("not a number: " + std::string(token), line_no);
            row.push_back(v);
        }
        rows.push_back(std::move(row));
    }
    const auto n = rows.size();
    if (n == 0) throw ParseError("empty matrix", 0);
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        if (rows[i].size() != n) throw ParseError("matrix is not square", i + 1);
        for (std::size_t j = 0; j < n; ++j) m(i, j) = rows[i][j];
    }
    return m;
}

AdjacencyMatrix threshold_weights(const Matrix& directed_weights) {
    require_square(directed_weights, "weight matrix");
    const Matrix w = directed_weights + directed_weights.transpose();
    const auto n = w.rows();
    std::vector<double> upper;
    upper.reserve(static_cast<std::size_t>(n * (n - 1) / 2));
    for (Eigen::Index i = 0; i < n; ++i)
        for (Eigen::Index j = i + 1; j < n; ++j) upper.push_back(w(i, j));
    if (upper.empty()) throw InvalidArgument("weight matrix needs at least 2 nodes");
    std::sort(upper.begin(), upper.end());
    // Linear interpolation between order statistics (Hyndman-Fan type 7).
    const double h = 0.5 * static_cast<double>(upper.size() - 1);
    const auto lo = static_cast<std::size_t>(std::floor(h));
    const auto hi = std::min(lo + 1, upper.size() - 1);
    const double median = upper[lo] + (h - static_cast<double>(lo)) * (upper[hi] - upper[lo]);

    Matrix a = Matrix::Zero(n, n);
    for (Eigen::Index i = 0; i < n; ++i)
        for (Eigen::Index j = i + 1; j < n; ++j)
            if (w(i, j) >= median) a(i, j) = a(j, i) = 1.0;
    return AdjacencyMatrix(std::move(a));
}

}  // namespace netgof

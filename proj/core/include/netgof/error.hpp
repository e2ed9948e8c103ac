#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace netgof {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed input text (edge lists, matrices, config files).
class ParseError : public Error {
public:
    ParseError(const std::string& what, std::size_t line)
        : Error(line ? "line " + std::to_string(line) + ": " + what : what), line_(line) {}

    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

/// Precondition violations on otherwise well-formed values.
class InvalidArgument : public Error {
public:
    using Error::Error;
};

/// Iterative numerical kernel failed to converge or hit a singular system.
class NumericalError : public Error {
public:
    using Error::Error;
};

/// A candidate model could not be fitted to the observed network.
class FitError : public Error {
public:
    enum class Kind {
        MleNonexistence,
        NonConvergence,
        EigenFailure,
        DegenerateSimplex,
        InvalidInput,
    };

    FitError(Kind kind, const std::string& what, std::vector<int> nodes = {})
        : Error(what), kind_(kind), nodes_(std::move(nodes)) {}

    Kind kind() const noexcept { return kind_; }
    const std::vector<int>& offending_nodes() const noexcept { return nodes_; }

private:
    Kind kind_;
    std::vector<int> nodes_;
};

/// Raised by the test driver when the candidate is untestable on this input.
/// Distinct from a rejection: no statistic was computed.
class UntestableCandidate : public Error {
public:
    UntestableCandidate(const std::string& what, FitError::Kind kind)
        : Error(what), kind_(kind) {}

    FitError::Kind kind() const noexcept { return kind_; }

private:
    FitError::Kind kind_;
};

class ConfigError : public Error {
public:
    using Error::Error;
};

class DatasetMissing : public Error {
public:
    using Error::Error;
};

}  // namespace netgof

#pragma once
#include <stdexcept>
#include <string>

namespace graphknit {

// Error taxonomy shared across the library. Everything derives from
// std::runtime_error so callers can catch broadly or per kind.
struct ValidationError : std::runtime_error {
  explicit ValidationError(const std::string& m) : std::runtime_error(m) {}
};

struct ParseError : std::runtime_error {
  explicit ParseError(const std::string& m) : std::runtime_error(m) {}
};

// Tensor shape mismatch; message names the op and the offending shapes.
struct ShapeError : std::runtime_error {
  explicit ShapeError(const std::string& m) : std::runtime_error(m) {}
};

// A tuple component falls outside the dataset vocabulary.
struct VocabOverflowError : std::runtime_error {
  explicit VocabOverflowError(const std::string& m) : std::runtime_error(m) {}
};

// Non-finite loss or gradient during training.
struct DivergenceError : std::runtime_error {
  explicit DivergenceError(const std::string& m) : std::runtime_error(m) {}
};

// A retry budget was exhausted (connected-graph redraws, walk steps, ...).
struct BudgetError : std::runtime_error {
  explicit BudgetError(const std::string& m) : std::runtime_error(m) {}
};

// Model output decoded to zero usable tuples.
struct EmptyGenerationError : std::runtime_error {
  explicit EmptyGenerationError(const std::string& m) : std::runtime_error(m) {}
};

// Checkpoint file truncated or inconsistent with its header.
struct IntegrityError : std::runtime_error {
  explicit IntegrityError(const std::string& m) : std::runtime_error(m) {}
};

// Checkpoint version tag does not match this build.
struct VersionError : std::runtime_error {
  explicit VersionError(const std::string& m) : std::runtime_error(m) {}
};

// A feature is not defined for the given graph (disconnected, degenerate...).
struct UndefinedFeatureError : std::runtime_error {
  explicit UndefinedFeatureError(const std::string& m) : std::runtime_error(m) {}
};

}  // namespace graphknit

// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace hmi {

// Shape or batch-count mismatch in a numeric operation.
class DimensionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Token id outside the model vocabulary.
class VocabularyError : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

// Duplicate registration of an id that must be unique.
class ConflictError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Working set cannot fit in the configured device capacity.
class CapacityError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Request names an instance or version that does not exist.
class RoutingError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Table construction failed (empty corpus, missing model stack).
class BuildError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Internal scheduling contract violated (e.g. compute reached a layer whose
// adapters were never prefetched). Always a bug, never an input error.
class SchedulingBugError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// Malformed artifact file. Carries the byte offset where parsing stopped.
class FormatError : public std::runtime_error {
 public:
  FormatError(const std::string& what, std::size_t offset)
      : std::runtime_error(what + " (at byte offset " + std::to_string(offset) + ")"),
        offset_(offset) {}
  std::size_t offset() const noexcept { return offset_; }

 private:
  std::size_t offset_;
};

}  // namespace hmi

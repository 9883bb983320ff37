#pragma once

#include <cstdint>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace gradaug {

// Tensor/layer dimension mismatches and invalid op arguments.
class ShapeError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

// Malformed run configuration (bad value, unknown key).
class ConfigError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

// Dataset ingestion failures, split by cause so callers can tell them apart.
class DatasetIoError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};
class BadMagicError : public DatasetIoError {
public:
  using DatasetIoError::DatasetIoError;
};
class TruncatedFileError : public DatasetIoError {
public:
  using DatasetIoError::DatasetIoError;
};
class CountMismatchError : public DatasetIoError {
public:
  using DatasetIoError::DatasetIoError;
};

class CheckpointError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

using Shape = std::vector<int64_t>;

inline int64_t shape_numel(const Shape& s) {
  int64_t n = 1;
  for (int64_t d : s) n *= d;
  return n;
}

inline std::string shape_str(const Shape& s) {
  std::ostringstream os;
  os << '[';
  for (size_t i = 0; i < s.size(); ++i) {
    if (i) os << ',';
    os << s[i];
  }
  os << ']';
  return os.str();
}

template <typename... Args>
std::string cat(Args&&... args) {
  std::ostringstream os;
  (os << ... << args);
  return os.str();
}

}  // namespace gradaug

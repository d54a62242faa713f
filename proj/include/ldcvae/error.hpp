#pragma once

#include <stdexcept>
#include <string>

namespace ldc {

// Error taxonomy for the whole library. Callers that care about the class of
// failure (tests, the CLI) inspect kind(); everyone else treats it as a
// runtime_error.
enum class ErrorKind {
  shape_mismatch,
  domain,          // math domain violation (log of non-positive, ...)
  contract,        // API misuse (non-scalar loss, wrong graph, ...)
  schema,          // config / genomic schema mismatch
  io_header,       // malformed magic or header
  io_version,      // format version mismatch
  io_truncated,    // payload shorter than header promises
  data,            // degenerate cohort, too few events, ...
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& msg)
      : std::runtime_error(msg), kind_(kind) {}
  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& msg) {
  throw Error(kind, msg);
}

}  // namespace ldc

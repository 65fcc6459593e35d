#pragma once

#include <cstdio>
#include <cstdlib>
#include <stdexcept>
#include <string>

namespace sqgol {

/// Thrown for precondition violations and malformed inputs.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Thrown when a file (state dump, pattern, config) cannot be parsed.
class ParseError : public Error {
 public:
  ParseError(const std::string& source, std::size_t line, const std::string& what)
      : Error(source + ":" + std::to_string(line) + ": " + what), line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

[[noreturn]] inline void invariant_failure(const char* expr, const char* file, int line,
                                           const char* msg) {
  std::fprintf(stderr, "sqgol: invariant violated: %s (%s) at %s:%d\n", msg, expr, file, line);
  std::fflush(stderr);
  std::abort();
}

}  // namespace sqgol

// Internal invariants. These are never compiled out: a broken amplitude must
// stop the run rather than propagate silently into a sweep result.
#define SQGOL_INVARIANT(expr, msg)                                   \
  do {                                                               \
    if (!(expr)) ::sqgol::invariant_failure(#expr, __FILE__, __LINE__, msg); \
  } while (0)

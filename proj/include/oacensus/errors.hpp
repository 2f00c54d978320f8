#pragma once

#include <stdexcept>
#include <string>

namespace oac {

/// Error categories. The CLI maps structural/precondition/unsupported/io
/// failures to exit code 2; check failures (pass == false verdicts) are not
/// exceptions and map to exit code 1.
enum class errc {
    structural,    // malformed input: wrong dimensions, out-of-range entries
    precondition,  // well-formed input violating an operation's contract
    unsupported,   // input outside the operation's stated scope
    overflow,      // exact integer arithmetic would overflow 128 bits
    io             // file not found / unparsable
};

class Error : public std::runtime_error {
  public:
    Error(errc kind, const std::string& msg) : std::runtime_error(msg), kind_(kind) {}
    errc kind() const noexcept { return kind_; }

  private:
    errc kind_;
};

[[noreturn]] inline void fail_structural(const std::string& m) { throw Error(errc::structural, m); }
[[noreturn]] inline void fail_precondition(const std::string& m) { throw Error(errc::precondition, m); }
[[noreturn]] inline void fail_unsupported(const std::string& m) { throw Error(errc::unsupported, m); }
[[noreturn]] inline void fail_overflow(const std::string& m) { throw Error(errc::overflow, m); }
[[noreturn]] inline void fail_io(const std::string& m) { throw Error(errc::io, m); }

} // namespace oac

#ifndef S1S_ERROR_HPP
#define S1S_ERROR_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace s1s {

/// Base class of every domain error raised by the library. The name is
/// stable and is what the command line reports.
class error : public std::runtime_error {
public:
  error(const char* name, const std::string& what)
      : std::runtime_error(what), name_(name) {}

  const char* name() const noexcept { return name_; }

private:
  const char* name_;
};

class parse_error : public error {
public:
  parse_error(const std::string& what, std::size_t line, std::size_t column)
      : parse_error("ParseError", what, line, column) {}

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

protected:
  parse_error(const char* name, const std::string& what, std::size_t line,
              std::size_t column)
      : error(name, std::to_string(line) + ":" + std::to_string(column) +
                        ": " + what),
        line_(line), column_(column) {}

private:
  std::size_t line_;
  std::size_t column_;
};

/// HOA input that is well formed but uses an acceptance kind we do not handle.
class unsupported_acceptance : public parse_error {
public:
  unsupported_acceptance(const std::string& what, std::size_t line,
                         std::size_t column)
      : parse_error("UnsupportedAcceptance", what, line, column) {}
};

class sort_error : public error {
public:
  explicit sort_error(const std::string& what) : error("SortError", what) {}
};

class capacity_exceeded : public error {
public:
  explicit capacity_exceeded(const std::string& what)
      : error("CapacityExceeded", what) {}
};

class growth_insufficient : public error {
public:
  explicit growth_insufficient(const std::string& what)
      : error("GrowthInsufficient", what) {}
};

class depth_exceeded : public error {
public:
  explicit depth_exceeded(const std::string& what)
      : error("DepthExceeded", what) {}
};

class precondition_violation : public error {
public:
  explicit precondition_violation(const std::string& what)
      : error("PreconditionViolation", what) {}
};

class alphabet_mismatch : public error {
public:
  explicit alphabet_mismatch(const std::string& what)
      : error("AlphabetMismatch", what) {}
};

class unknown_track : public error {
public:
  explicit unknown_track(const std::string& what)
      : error("UnknownTrack", what) {}
};

} // namespace s1s

#endif

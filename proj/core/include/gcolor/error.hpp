#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace gcolor {

/// Malformed input file. Carries the 1-based line number of the offending line
/// (0 when the problem is not tied to a line, e.g. a missing header).
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& detail, const std::string& context = {})
      : std::runtime_error(format(line, detail, context)), line_(line), detail_(detail) {}

  std::size_t line() const noexcept { return line_; }
  /// Message without the line and context prefix.
  const std::string& detail() const noexcept { return detail_; }

 private:
  static std::string format(std::size_t line, const std::string& detail,
                            const std::string& context) {
    std::string out = context.empty() ? std::string() : context + ": ";
    if (line != 0) out += "line " + std::to_string(line) + ": ";
    return out + detail;
  }

  std::size_t line_;
  std::string detail_;
};

/// The request exceeds what an exact routine is built to handle (size caps).
class CapabilityError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace gcolor

#pragma once

#include <cstdint>
#include <istream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace csppke {

/// Malformed input file. The message always names the offending line.
class FormatError : public std::runtime_error {
 public:
  FormatError(std::size_t line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

/// An enumeration or search would exceed its configured work budget.
class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Line-oriented reader that tracks 1-based line numbers for diagnostics.
class LineReader {
 public:
  explicit LineReader(std::istream& in) : in_(in) {}

  /// Next line without its terminator; throws FormatError at end of input.
  std::string next(std::string_view expecting);
  /// Next line, or false at end of input.
  bool try_next(std::string& line);
  /// Look at the next line without consuming it.
  bool peek(std::string& line);

  std::size_t line_number() const { return line_; }
  [[noreturn]] void fail(const std::string& what) const { throw FormatError(line_, what); }

 private:
  std::istream& in_;
  std::size_t line_ = 0;
  bool has_peeked_ = false;
  std::string peeked_;
};

std::vector<std::string_view> split_ws(std::string_view line);

/// Strict decimal parsers; throw std::invalid_argument on any trailing junk.
std::uint64_t parse_u64(std::string_view token);
double parse_double(std::string_view token);

/// Shortest round-trippable decimal representation.
std::string format_double(double value);

}  // namespace csppke

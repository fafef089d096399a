#include "csppke/textio.hpp"

#include <charconv>

namespace csppke {

bool LineReader::try_next(std::string& line) {
  if (has_peeked_) {
    has_peeked_ = false;
    line = std::move(peeked_);
    ++line_;
    return true;
  }
  if (!std::getline(in_, line)) return false;
  ++line_;
  return true;
}

std::string LineReader::next(std::string_view expecting) {
  std::string line;
  if (!try_next(line)) {
    throw FormatError(line_ + 1, "unexpected end of input, expected " + std::string(expecting));
  }
  return line;
}

bool LineReader::peek(std::string& line) {
  if (!has_peeked_) {
    if (!std::getline(in_, peeked_)) return false;
    has_peeked_ = true;
  }
  line = peeked_;
  return true;
}

std::vector<std::string_view> split_ws(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    const std::size_t start = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r') ++i;
    if (i > start) out.push_back(line.substr(start, i - start));
  }
  return out;
}

std::uint64_t parse_u64(std::string_view token) {
  std::uint64_t value = 0;
  const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc{} || ptr != token.data() + token.size() || token.empty()) {
    throw std::invalid_argument("not an unsigned integer: '" + std::string(token) + "'");
  }
  return value;
}

double parse_double(std::string_view token) {
  double value = 0;
  const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc{} || ptr != token.data() + token.size() || token.empty()) {
    throw std::invalid_argument("not a number: '" + std::string(token) + "'");
  }
  return value;
}

std::string format_double(double value) {
  char buf[64];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, value);
  return std::string(buf, ptr);
}

}  // namespace csppke

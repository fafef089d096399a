#include "csppke/f2/bitvec.hpp"

#include <stdexcept>

#include "csppke/rng.hpp"
#include "csppke/textio.hpp"

namespace csppke {

namespace {
void require_same_length(const BitVec& a, const BitVec& b, const char* op) {
  if (a.size() != b.size()) {
    throw std::invalid_argument(std::string("BitVec::") + op + ": length mismatch " +
                                std::to_string(a.size()) + " vs " + std::to_string(b.size()));
  }
}
}  // namespace

BitVec BitVec::random(std::size_t length, Rng& rng) {
  BitVec v(length);
  for (auto& w : v.words_) w = rng();
  v.clear_padding();
  return v;
}

BitVec BitVec::from_string(std::string_view bits) {
  BitVec v(bits.size());
  for (std::size_t i = 0; i < bits.size(); ++i) {
    if (bits[i] == '1') {
      v.set(i, true);
    } else if (bits[i] != '0') {
      throw std::invalid_argument("BitVec::from_string: expected '0' or '1'");
    }
  }
  return v;
}

std::size_t BitVec::weight() const {
  std::size_t total = 0;
  for (const auto w : words_) total += static_cast<std::size_t>(std::popcount(w));
  return total;
}

std::size_t BitVec::and_weight(const BitVec& other) const {
  require_same_length(*this, other, "and_weight");
  std::size_t total = 0;
  for (std::size_t i = 0; i < words_.size(); ++i) {
    total += static_cast<std::size_t>(std::popcount(words_[i] & other.words_[i]));
  }
  return total;
}

std::size_t BitVec::distance(const BitVec& other) const {
  require_same_length(*this, other, "distance");
  std::size_t total = 0;
  for (std::size_t i = 0; i < words_.size(); ++i) {
    total += static_cast<std::size_t>(std::popcount(words_[i] ^ other.words_[i]));
  }
  return total;
}

BitVec& BitVec::operator^=(const BitVec& other) {
  require_same_length(*this, other, "xor");
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] ^= other.words_[i];
  return *this;
}

BitVec& BitVec::operator|=(const BitVec& other) {
  require_same_length(*this, other, "or");
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= other.words_[i];
  return *this;
}

void BitVec::clear_padding() {
  if (length_ % 64 != 0) words_.back() &= (std::uint64_t{1} << (length_ % 64)) - 1;
}

std::string BitVec::to_string() const {
  std::string s(length_, '0');
  for (std::size_t i = 0; i < length_; ++i) {
    if (get(i)) s[i] = '1';
  }
  return s;
}

std::string to_hex(const BitVec& v) {
  static constexpr char kDigits[] = "0123456789abcdef";
  std::string out = std::to_string(v.size());
  out.push_back(' ');
  const std::size_t digits = (v.size() + 3) / 4;
  for (std::size_t j = 0; j < digits; ++j) {
    const std::uint64_t word = v.words()[(4 * j) >> 6];
    out.push_back(kDigits[(word >> ((4 * j) & 63)) & 0xF]);
  }
  return out;
}

BitVec from_hex(std::string_view text) {
  const auto space = text.find(' ');
  if (space == std::string_view::npos) throw std::invalid_argument("bit vector: expected '<length> <hex>'");
  const std::uint64_t length = parse_u64(text.substr(0, space));
  const std::string_view hex = text.substr(space + 1);
  if (hex.size() != (length + 3) / 4) {
    throw std::invalid_argument("bit vector: expected " + std::to_string((length + 3) / 4) +
                                " hex digits, got " + std::to_string(hex.size()));
  }
  BitVec v(length);
  auto words = v.mutable_words();
  for (std::size_t j = 0; j < hex.size(); ++j) {
    const char c = hex[j];
    std::uint64_t nibble = 0;
    if (c >= '0' && c <= '9') {
      nibble = static_cast<std::uint64_t>(c - '0');
    } else if (c >= 'a' && c <= 'f') {
      nibble = static_cast<std::uint64_t>(c - 'a' + 10);
    } else {
      throw std::invalid_argument(std::string("bit vector: invalid hex digit '") + c + "'");
    }
    words[(4 * j) >> 6] |= nibble << ((4 * j) & 63);
  }
  BitVec check = v;
  check.clear_padding();
  if (!(check == v)) throw std::invalid_argument("bit vector: nonzero bits beyond length");
  return v;
}

}  // namespace csppke

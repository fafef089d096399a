#include "csppke/f2/trivector.hpp"

#include <stdexcept>

namespace csppke {

TriVector TriVector::from_bits(const BitVec& v) {
  TriVector t(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) t.set_bit(i, v.get(i));
  return t;
}

TriVector TriVector::from_string(std::string_view text) {
  TriVector t(text.size());
  for (std::size_t i = 0; i < text.size(); ++i) {
    switch (text[i]) {
      case '0': t.set(i, Tri::zero); break;
      case '1': t.set(i, Tri::one); break;
      case '?': t.set(i, Tri::erased); break;
      default: throw std::invalid_argument("TriVector::from_string: expected '0', '1' or '?'");
    }
  }
  return t;
}

std::size_t TriVector::erased_count() const {
  std::size_t count = 0;
  for (const auto s : symbols_) count += (s == Tri::erased);
  return count;
}

std::size_t TriVector::disagreements(const BitVec& v) const {
  if (v.size() != size()) throw std::invalid_argument("TriVector::disagreements: length mismatch");
  std::size_t count = 0;
  for (std::size_t i = 0; i < symbols_.size(); ++i) {
    if (symbols_[i] != Tri::erased && (symbols_[i] == Tri::one) != v.get(i)) ++count;
  }
  return count;
}

std::string TriVector::to_string() const {
  std::string s(size(), '?');
  for (std::size_t i = 0; i < size(); ++i) {
    if (symbols_[i] == Tri::zero) s[i] = '0';
    if (symbols_[i] == Tri::one) s[i] = '1';
  }
  return s;
}

}  // namespace csppke

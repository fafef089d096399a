#include "csppke/f2/sparse_matrix.hpp"

#include <algorithm>
#include <ostream>
#include <stdexcept>
#include <string>

#include "csppke/rng.hpp"

namespace csppke {

SparseRowMatrix::SparseRowMatrix(std::size_t m, std::size_t n, std::size_t k,
                                 std::vector<std::uint32_t> indices)
    : m_(m), n_(n), k_(k), indices_(std::move(indices)) {
  if (n > 0x7fffffffULL) throw std::invalid_argument("SparseRowMatrix: more than 2^31 columns");
  if (indices_.size() != m * k) {
    throw std::invalid_argument("SparseRowMatrix: expected " + std::to_string(m * k) +
                                " indices, got " + std::to_string(indices_.size()));
  }
  for (std::size_t i = 0; i < m; ++i) {
    const auto r = row(i);
    for (std::size_t j = 0; j < k; ++j) {
      if (r[j] >= n) {
        throw std::invalid_argument("SparseRowMatrix: row " + std::to_string(i) + " index " +
                                    std::to_string(r[j]) + " >= n = " + std::to_string(n));
      }
      if (j > 0 && r[j] <= r[j - 1]) {
        throw std::invalid_argument("SparseRowMatrix: row " + std::to_string(i) +
                                    " indices not strictly increasing");
      }
    }
  }
}

SparseRowMatrix SparseRowMatrix::from_rows(std::size_t n, std::size_t k,
                                           const std::vector<std::vector<std::uint32_t>>& rows) {
  std::vector<std::uint32_t> flat;
  flat.reserve(rows.size() * k);
  for (const auto& r : rows) {
    if (r.size() != k) throw std::invalid_argument("SparseRowMatrix::from_rows: row has wrong weight");
    flat.insert(flat.end(), r.begin(), r.end());
  }
  return SparseRowMatrix(rows.size(), n, k, std::move(flat));
}

std::uint32_t SparseRowMatrix::neighbor(std::size_t i, std::size_t j) const {
  if (i >= m_ || j >= k_) {
    throw std::out_of_range("neighbor(" + std::to_string(i) + ", " + std::to_string(j) +
                            ") outside " + std::to_string(m_) + " x " + std::to_string(k_));
  }
  return indices_[i * k_ + j];
}

BitVec SparseRowMatrix::column(std::size_t j) const {
  BitVec c(m_);
  for (std::size_t i = 0; i < m_; ++i) {
    const auto r = row(i);
    if (std::binary_search(r.begin(), r.end(), static_cast<std::uint32_t>(j))) c.set(i, true);
  }
  return c;
}

std::vector<BitVec> SparseRowMatrix::columns() const {
  std::vector<BitVec> out(n_, BitVec(m_));
  for (std::size_t i = 0; i < m_; ++i) {
    for (const auto c : row(i)) out[c].set(i, true);
  }
  return out;
}

std::vector<std::uint32_t> random_k_subset(std::size_t n, std::size_t k, Rng& rng) {
  if (k > n) throw std::invalid_argument("random_k_subset: k > n");
  std::vector<std::uint32_t> out;
  out.reserve(k);
  // Floyd's algorithm: k draws, uniform over k-subsets.
  for (std::size_t j = n - k; j < n; ++j) {
    const auto t = static_cast<std::uint32_t>(rng.below(j + 1));
    if (std::find(out.begin(), out.end(), t) == out.end()) {
      out.push_back(t);
    } else {
      out.push_back(static_cast<std::uint32_t>(j));
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

SparseRowMatrix random_mnk_matrix(std::size_t m, std::size_t n, std::size_t k, Rng& rng) {
  std::vector<std::uint32_t> flat;
  flat.reserve(m * k);
  for (std::size_t i = 0; i < m; ++i) {
    const auto r = random_k_subset(n, k, rng);
    flat.insert(flat.end(), r.begin(), r.end());
  }
  return SparseRowMatrix(m, n, k, std::move(flat));
}

BitVec row_or(const SparseRowMatrix& M, std::span<const std::size_t> rows) {
  if (rows.empty()) throw std::invalid_argument("row_or: empty row set");
  BitVec out(M.cols());
  for (const auto i : rows) {
    if (i >= M.rows()) throw std::invalid_argument("row_or: row " + std::to_string(i) + " out of range");
    for (const auto c : M.row(i)) out.set(c, true);
  }
  return out;
}

BitVec matvec(const SparseRowMatrix& M, const BitVec& x) {
  if (x.size() != M.cols()) {
    throw std::invalid_argument("matvec: x has length " + std::to_string(x.size()) + ", expected " +
                                std::to_string(M.cols()));
  }
  BitVec out(M.rows());
  for (std::size_t i = 0; i < M.rows(); ++i) {
    bool parity = false;
    for (const auto c : M.row(i)) parity ^= x.get(c);
    if (parity) out.set(i, true);
  }
  return out;
}

void write_srm(std::ostream& out, const SparseRowMatrix& M) {
  out << "SRM " << M.rows() << ' ' << M.cols() << ' ' << M.row_weight() << '\n';
  std::string line;
  for (std::size_t i = 0; i < M.rows(); ++i) {
    line.clear();
    for (const auto c : M.row(i)) {
      if (!line.empty()) line.push_back(' ');
      line += std::to_string(c);
    }
    line.push_back('\n');
    out << line;
  }
}

SparseRowMatrix read_srm(LineReader& in) {
  const std::string header = in.next("SRM header");
  const auto tokens = split_ws(header);
  if (tokens.size() != 4 || tokens[0] != "SRM") in.fail("expected 'SRM m n k', got '" + header + "'");
  std::size_t m = 0, n = 0, k = 0;
  try {
    m = parse_u64(tokens[1]);
    n = parse_u64(tokens[2]);
    k = parse_u64(tokens[3]);
  } catch (const std::invalid_argument& e) {
    in.fail(e.what());
  }
  if (k > n) in.fail("SRM: k > n");
  std::vector<std::uint32_t> flat;
  flat.reserve(m * k);
  for (std::size_t i = 0; i < m; ++i) {
    const std::string line = in.next("SRM row");
    const auto parts = split_ws(line);
    if (parts.size() != k) {
      in.fail("SRM row " + std::to_string(i) + ": expected " + std::to_string(k) + " indices, got " +
              std::to_string(parts.size()));
    }
    for (std::size_t j = 0; j < k; ++j) {
      std::uint64_t c = 0;
      try {
        c = parse_u64(parts[j]);
      } catch (const std::invalid_argument& e) {
        in.fail(e.what());
      }
      if (c >= n) in.fail("SRM row " + std::to_string(i) + ": column " + std::to_string(c) + " >= n");
      if (j > 0 && c <= flat.back()) in.fail("SRM row " + std::to_string(i) + ": indices not strictly increasing");
      flat.push_back(static_cast<std::uint32_t>(c));
    }
  }
  return SparseRowMatrix(m, n, k, std::move(flat));
}

}  // namespace csppke

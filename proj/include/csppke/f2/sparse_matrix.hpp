#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <vector>

#include "csppke/f2/bitvec.hpp"
#include "csppke/textio.hpp"

namespace csppke {

class Rng;

/// An (m, n, k)-matrix over F_2: every row has exactly k nonzero entries.
/// Rows are stored as strictly increasing 0-based column indices in one
/// flat array.
class SparseRowMatrix {
 public:
  SparseRowMatrix() = default;
  /// `indices` holds m*k column indices, row-major. Throws
  /// std::invalid_argument if any row is out of range or not strictly
  /// increasing.
  SparseRowMatrix(std::size_t m, std::size_t n, std::size_t k, std::vector<std::uint32_t> indices);

  static SparseRowMatrix from_rows(std::size_t n, std::size_t k,
                                   const std::vector<std::vector<std::uint32_t>>& rows);

  std::size_t rows() const { return m_; }
  std::size_t cols() const { return n_; }
  std::size_t row_weight() const { return k_; }

  std::span<const std::uint32_t> row(std::size_t i) const {
    return {indices_.data() + i * k_, k_};
  }

  /// Column index of the j-th nonzero entry of row i (both 0-based).
  /// Throws std::out_of_range.
  std::uint32_t neighbor(std::size_t i, std::size_t j) const;

  /// Column j as a length-m vector (its truth table when rows are points).
  BitVec column(std::size_t j) const;
  std::vector<BitVec> columns() const;

  const std::vector<std::uint32_t>& flat_indices() const { return indices_; }

  bool operator==(const SparseRowMatrix&) const = default;

 private:
  std::size_t m_ = 0;
  std::size_t n_ = 0;
  std::size_t k_ = 0;
  std::vector<std::uint32_t> indices_;
};

/// k distinct columns of [0, n), uniformly, sorted ascending.
std::vector<std::uint32_t> random_k_subset(std::size_t n, std::size_t k, Rng& rng);

/// Uniformly random (m, n, k)-matrix: each row an independent k-subset.
SparseRowMatrix random_mnk_matrix(std::size_t m, std::size_t n, std::size_t k, Rng& rng);

/// Component-wise OR of the selected rows, as a length-n vector.
/// Throws std::invalid_argument if `rows` is empty or an index is invalid.
BitVec row_or(const SparseRowMatrix& M, std::span<const std::size_t> rows);

/// M x over F_2. Throws std::invalid_argument if x.size() != cols().
BitVec matvec(const SparseRowMatrix& M, const BitVec& x);

/// "SRM m n k" header then m lines of k space-separated indices.
void write_srm(std::ostream& out, const SparseRowMatrix& M);
SparseRowMatrix read_srm(LineReader& in);

}  // namespace csppke

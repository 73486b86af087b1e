#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <string>
#include <vector>

namespace qrec {

using Prime = std::uint32_t;

bool is_prime(Prime p);

/// Dense row-major matrix over the prime field F_p.
///
/// Zero-dimensional shapes (0 x n, n x 0) are legal and act as zero maps; the
/// representations in this library have empty components all the time.
class FpMat {
 public:
  using Entry = std::uint32_t;

  FpMat() = default;
  FpMat(Prime p, std::size_t rows, std::size_t cols);
  FpMat(Prime p, std::size_t rows, std::size_t cols, std::vector<Entry> entries);

  static FpMat identity(Prime p, std::size_t n);
  static FpMat zero(Prime p, std::size_t rows, std::size_t cols) { return FpMat(p, rows, cols); }
  /// Entries may be negative or >= p; they are reduced mod p.
  static FpMat from_rows(Prime p, std::initializer_list<std::initializer_list<long long>> rows);
  static FpMat from_rows(Prime p, const std::vector<std::vector<long long>>& rows);

  Prime p() const noexcept { return p_; }
  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool empty() const noexcept { return rows_ == 0 || cols_ == 0; }
  const std::vector<Entry>& entries() const noexcept { return data_; }
  /// Raw row-major storage; callers must keep every entry in [0, p).
  Entry* data() noexcept { return data_.data(); }

  Entry operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  void set(std::size_t r, std::size_t c, long long value);

  bool is_zero() const;
  bool is_square() const noexcept { return rows_ == cols_; }

  FpMat transpose() const;
  FpMat scaled(Entry k) const;
  FpMat columns(const std::vector<std::size_t>& idx) const;
  FpMat column_range(std::size_t first, std::size_t count) const;
  FpMat row_range(std::size_t first, std::size_t count) const;

  FpMat operator+(const FpMat& o) const;
  FpMat operator-(const FpMat& o) const;
  FpMat operator*(const FpMat& o) const;
  FpMat& operator+=(const FpMat& o);

  bool operator==(const FpMat& o) const = default;

  std::string to_string() const;

 private:
  Prime p_ = 2;
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Entry> data_;
};

FpMat::Entry inverse_mod(FpMat::Entry a, Prime p);

struct RrefResult {
  FpMat reduced;
  std::vector<std::size_t> pivot_cols;
  std::size_t rank = 0;
};

RrefResult rref(const FpMat& m);
std::size_t rank(const FpMat& m);

/// Columns form a basis of the null space, one per free column of rref(m).
FpMat kernel_basis(const FpMat& m);
/// Pivot columns of m: a basis of the column space.
FpMat image_basis(const FpMat& m);
/// Standard basis vectors completing the column space of m to the whole space.
FpMat complement_basis(const FpMat& m);

/// x with a * x = b, free variables set to zero; nullopt when inconsistent.
std::optional<FpMat> solve(const FpMat& a, const FpMat& b);

bool is_invertible(const FpMat& m);
FpMat inverse(const FpMat& m);

FpMat kron(const FpMat& a, const FpMat& b);
/// Block matrix from a grid. Every block in a grid row shares its row count and
/// every block in a grid column shares its column count.
FpMat block(const std::vector<std::vector<FpMat>>& grid);
FpMat block_diagonal(Prime p, const std::vector<FpMat>& blocks);

}  // namespace qrec

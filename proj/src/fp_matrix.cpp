#include "qrec/fp_matrix.hpp"

#include <algorithm>
#include <bitset>
#include <sstream>

#include "qrec/errors.hpp"

namespace qrec {

namespace {

const std::bitset<65536>& prime_sieve() {
  static const std::bitset<65536> sieve = [] {
    std::bitset<65536> s;
    s.set();
    s[0] = false;
    s[1] = false;
    for (std::size_t i = 2; i * i < s.size(); ++i) {
      if (!s[i]) continue;
      for (std::size_t j = i * i; j < s.size(); j += i) s[j] = false;
    }
    return s;
  }();
  return sieve;
}

FpMat::Entry reduce(long long v, Prime p) {
  long long r = v % static_cast<long long>(p);
  if (r < 0) r += p;
  return static_cast<FpMat::Entry>(r);
}

void require_same_field(const FpMat& a, const FpMat& b, const char* op) {
  if (a.p() != b.p()) throw ContractViolation(std::string(op) + ": matrices over different fields");
}

}  // namespace

bool is_prime(Prime p) { return p < 65536 && prime_sieve()[p]; }

FpMat::FpMat(Prime p, std::size_t rows, std::size_t cols)
    : p_(p), rows_(rows), cols_(cols), data_(rows * cols, 0) {
  if (!is_prime(p)) throw ContractViolation("FpMat: modulus " + std::to_string(p) + " is not a prime below 2^16");
}

FpMat::FpMat(Prime p, std::size_t rows, std::size_t cols, std::vector<Entry> entries)
    : p_(p), rows_(rows), cols_(cols), data_(std::move(entries)) {
  if (!is_prime(p)) throw ContractViolation("FpMat: modulus " + std::to_string(p) + " is not a prime below 2^16");
  if (data_.size() != rows * cols) throw ContractViolation("FpMat: entry count does not match shape");
  for (Entry e : data_) {
    if (e >= p) throw ContractViolation("FpMat: entry out of range [0, p)");
  }
}

FpMat FpMat::identity(Prime p, std::size_t n) {
  FpMat m(p, n, n);
  for (std::size_t i = 0; i < n; ++i) m.data_[i * n + i] = 1;
  return m;
}

FpMat FpMat::from_rows(Prime p, std::initializer_list<std::initializer_list<long long>> rows) {
  std::vector<std::vector<long long>> v;
  for (const auto& r : rows) v.emplace_back(r);
  return from_rows(p, v);
}

FpMat FpMat::from_rows(Prime p, const std::vector<std::vector<long long>>& rows) {
  const std::size_t r = rows.size();
  const std::size_t c = r == 0 ? 0 : rows.front().size();
  FpMat m(p, r, c);
  for (std::size_t i = 0; i < r; ++i) {
    if (rows[i].size() != c) throw ContractViolation("FpMat::from_rows: ragged rows");
    for (std::size_t j = 0; j < c; ++j) m.data_[i * c + j] = reduce(rows[i][j], p);
  }
  return m;
}

void FpMat::set(std::size_t r, std::size_t c, long long value) { data_[r * cols_ + c] = reduce(value, p_); }

bool FpMat::is_zero() const {
  for (Entry e : data_) {
    if (e != 0) return false;
  }
  return true;
}

FpMat FpMat::transpose() const {
  FpMat t(p_, cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t.data_[j * rows_ + i] = data_[i * cols_ + j];
  return t;
}

FpMat FpMat::scaled(Entry k) const {
  FpMat out = *this;
  const std::uint64_t kk = k % p_;
  for (Entry& e : out.data_) e = static_cast<Entry>((e * kk) % p_);
  return out;
}

FpMat FpMat::columns(const std::vector<std::size_t>& idx) const {
  FpMat out(p_, rows_, idx.size());
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < idx.size(); ++j) out.data_[i * idx.size() + j] = data_[i * cols_ + idx[j]];
  return out;
}

FpMat FpMat::column_range(std::size_t first, std::size_t count) const {
  if (first + count > cols_) throw ContractViolation("FpMat::column_range out of bounds");
  FpMat out(p_, rows_, count);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < count; ++j) out.data_[i * count + j] = data_[i * cols_ + first + j];
  return out;
}

FpMat FpMat::row_range(std::size_t first, std::size_t count) const {
  if (first + count > rows_) throw ContractViolation("FpMat::row_range out of bounds");
  FpMat out(p_, count, cols_);
  std::copy(data_.begin() + static_cast<std::ptrdiff_t>(first * cols_),
            data_.begin() + static_cast<std::ptrdiff_t>((first + count) * cols_), out.data_.begin());
  return out;
}

FpMat FpMat::operator+(const FpMat& o) const {
  FpMat out = *this;
  out += o;
  return out;
}

FpMat& FpMat::operator+=(const FpMat& o) {
  require_same_field(*this, o, "operator+");
  if (rows_ != o.rows_ || cols_ != o.cols_) throw ContractViolation("FpMat +: shape mismatch");
  for (std::size_t i = 0; i < data_.size(); ++i) {
    Entry s = data_[i] + o.data_[i];
    data_[i] = s >= p_ ? s - p_ : s;
  }
  return *this;
}

FpMat FpMat::operator-(const FpMat& o) const {
  require_same_field(*this, o, "operator-");
  if (rows_ != o.rows_ || cols_ != o.cols_) throw ContractViolation("FpMat -: shape mismatch");
  FpMat out = *this;
  for (std::size_t i = 0; i < data_.size(); ++i) {
    out.data_[i] = data_[i] >= o.data_[i] ? data_[i] - o.data_[i] : data_[i] + p_ - o.data_[i];
  }
  return out;
}

FpMat FpMat::operator*(const FpMat& o) const {
  require_same_field(*this, o, "operator*");
  if (cols_ != o.rows_) throw ContractViolation("FpMat *: inner dimensions differ");
  FpMat out(p_, rows_, o.cols_);
  std::vector<std::uint64_t> acc(o.cols_);
  for (std::size_t i = 0; i < rows_; ++i) {
    std::fill(acc.begin(), acc.end(), 0);
    for (std::size_t k = 0; k < cols_; ++k) {
      const std::uint64_t a = data_[i * cols_ + k];
      if (a == 0) continue;
      const Entry* row = o.data_.data() + k * o.cols_;
      for (std::size_t j = 0; j < o.cols_; ++j) acc[j] = (acc[j] + a * row[j]) % p_;
    }
    for (std::size_t j = 0; j < o.cols_; ++j) out.data_[i * o.cols_ + j] = static_cast<Entry>(acc[j]);
  }
  return out;
}

std::string FpMat::to_string() const {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < rows_; ++i) {
    if (i) os << ',';
    os << '[';
    for (std::size_t j = 0; j < cols_; ++j) {
      if (j) os << ',';
      os << (*this)(i, j);
    }
    os << ']';
  }
  os << ']';
  return os.str();
}

FpMat::Entry inverse_mod(FpMat::Entry a, Prime p) {
  if (a % p == 0) throw ContractViolation("inverse_mod: zero has no inverse");
  long long t = 0, new_t = 1;
  long long r = p, new_r = a % p;
  while (new_r != 0) {
    const long long q = r / new_r;
    t = t - q * new_t;
    std::swap(t, new_t);
    r = r - q * new_r;
    std::swap(r, new_r);
  }
  return reduce(t, p);
}

RrefResult rref(const FpMat& m) {
  RrefResult res{m, {}, 0};
  const std::uint64_t p = m.p();
  const std::size_t rows = m.rows(), cols = m.cols();
  FpMat::Entry* a = res.reduced.data();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t pivot = r;
    while (pivot < rows && a[pivot * cols + c] == 0) ++pivot;
    if (pivot == rows) continue;
    if (pivot != r) std::swap_ranges(a + pivot * cols, a + (pivot + 1) * cols, a + r * cols);
    FpMat::Entry* prow = a + r * cols;
    const std::uint64_t inv = inverse_mod(prow[c], m.p());
    for (std::size_t j = c; j < cols; ++j) prow[j] = static_cast<FpMat::Entry>((prow[j] * inv) % p);
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r) continue;
      FpMat::Entry* row = a + i * cols;
      const std::uint64_t f = row[c];
      if (f == 0) continue;
      const std::uint64_t neg = p - f;
      for (std::size_t j = c; j < cols; ++j) {
        if (prow[j] == 0) continue;
        row[j] = static_cast<FpMat::Entry>((row[j] + neg * prow[j]) % p);
      }
    }
    res.pivot_cols.push_back(c);
    ++r;
  }
  res.rank = r;
  return res;
}

std::size_t rank(const FpMat& m) { return rref(m).rank; }

FpMat kernel_basis(const FpMat& m) {
  const auto rr = rref(m);
  const std::size_t cols = m.cols();
  std::vector<bool> is_pivot(cols, false);
  for (auto c : rr.pivot_cols) is_pivot[c] = true;
  std::vector<std::size_t> free_cols;
  for (std::size_t c = 0; c < cols; ++c)
    if (!is_pivot[c]) free_cols.push_back(c);

  FpMat basis(m.p(), cols, free_cols.size());
  for (std::size_t k = 0; k < free_cols.size(); ++k) {
    const std::size_t f = free_cols[k];
    basis.set(f, k, 1);
    for (std::size_t i = 0; i < rr.rank; ++i) {
      // pivot variable x_{pivot_i} = -reduced(i, f)
      basis.set(rr.pivot_cols[i], k, -static_cast<long long>(rr.reduced(i, f)));
    }
  }
  return basis;
}

FpMat image_basis(const FpMat& m) { return m.columns(rref(m).pivot_cols); }

FpMat complement_basis(const FpMat& m) {
  const std::size_t n = m.rows();
  const FpMat aug = block({{m, FpMat::identity(m.p(), n)}});
  std::vector<std::size_t> picked;
  for (auto c : rref(aug).pivot_cols)
    if (c >= m.cols()) picked.push_back(c - m.cols());
  return FpMat::identity(m.p(), n).columns(picked);
}

std::optional<FpMat> solve(const FpMat& a, const FpMat& b) {
  if (a.rows() != b.rows()) throw ContractViolation("solve: row counts differ");
  const auto rr = rref(block({{a, b}}));
  const std::size_t n = a.cols();
  FpMat x(a.p(), n, b.cols());
  for (std::size_t i = 0; i < rr.rank; ++i) {
    const std::size_t pc = rr.pivot_cols[i];
    if (pc >= n) return std::nullopt;  // pivot in the augmented part: inconsistent
    for (std::size_t j = 0; j < b.cols(); ++j) x.set(pc, j, rr.reduced(i, n + j));
  }
  return x;
}

bool is_invertible(const FpMat& m) { return m.is_square() && rank(m) == m.rows(); }

FpMat inverse(const FpMat& m) {
  if (!m.is_square()) throw ContractViolation("inverse: matrix is not square");
  auto x = solve(m, FpMat::identity(m.p(), m.rows()));
  if (!x || rank(m) != m.rows()) throw ContractViolation("inverse: matrix is singular");
  return *x;
}

FpMat kron(const FpMat& a, const FpMat& b) {
  require_same_field(a, b, "kron");
  const Prime p = a.p();
  FpMat out(p, a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) {
      const std::uint64_t x = a(i, j);
      if (x == 0) continue;
      for (std::size_t k = 0; k < b.rows(); ++k)
        for (std::size_t l = 0; l < b.cols(); ++l)
          out.set(i * b.rows() + k, j * b.cols() + l, static_cast<long long>((x * b(k, l)) % p));
    }
  return out;
}

FpMat block(const std::vector<std::vector<FpMat>>& grid) {
  if (grid.empty() || grid.front().empty()) throw ContractViolation("block: empty grid");
  const Prime p = grid.front().front().p();
  const std::size_t gcols = grid.front().size();
  std::vector<std::size_t> col_widths(gcols), row_heights(grid.size());
  for (std::size_t j = 0; j < gcols; ++j) col_widths[j] = grid.front()[j].cols();
  for (std::size_t i = 0; i < grid.size(); ++i) {
    if (grid[i].size() != gcols) throw ContractViolation("block: ragged grid");
    row_heights[i] = grid[i].front().rows();
    for (std::size_t j = 0; j < gcols; ++j) {
      const FpMat& b = grid[i][j];
      if (b.p() != p) throw ContractViolation("block: mixed fields");
      if (b.rows() != row_heights[i] || b.cols() != col_widths[j])
        throw ContractViolation("block: inconsistent block dimensions");
    }
  }
  std::size_t total_rows = 0, total_cols = 0;
  for (auto h : row_heights) total_rows += h;
  for (auto w : col_widths) total_cols += w;
  FpMat out(p, total_rows, total_cols);
  std::size_t r0 = 0;
  for (std::size_t i = 0; i < grid.size(); ++i) {
    std::size_t c0 = 0;
    for (std::size_t j = 0; j < gcols; ++j) {
      const FpMat& b = grid[i][j];
      for (std::size_t r = 0; r < b.rows(); ++r)
        for (std::size_t c = 0; c < b.cols(); ++c) out.set(r0 + r, c0 + c, b(r, c));
      c0 += col_widths[j];
    }
    r0 += row_heights[i];
  }
  return out;
}

FpMat block_diagonal(Prime p, const std::vector<FpMat>& blocks) {
  std::size_t rows = 0, cols = 0;
  for (const auto& b : blocks) {
    rows += b.rows();
    cols += b.cols();
  }
  FpMat out(p, rows, cols);
  std::size_t r0 = 0, c0 = 0;
  for (const auto& b : blocks) {
    for (std::size_t r = 0; r < b.rows(); ++r)
      for (std::size_t c = 0; c < b.cols(); ++c) out.set(r0 + r, c0 + c, b(r, c));
    r0 += b.rows();
    c0 += b.cols();
  }
  return out;
}

}  // namespace qrec

#include "hall/fq_matrix.hpp"

#include <algorithm>
#include <string>

#include "hall/error.hpp"

namespace hall::fq {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

void require_prime_modulus(std::uint64_t p) {
  if (!is_prime(p) || p >= (std::uint64_t{1} << 31)) {
    throw InvalidInput("modulus " + std::to_string(p) + " is not a prime below 2^31");
  }
}

Elem inv_mod(Elem a, Elem p) {
  if (a % p == 0) {
    throw InvalidInput("zero has no inverse mod " + std::to_string(p));
  }
  long long t = 0, new_t = 1;
  long long r = p, new_r = a % p;
  while (new_r != 0) {
    const long long q = r / new_r;
    t = t - q * new_t;
    std::swap(t, new_t);
    r = r - q * new_r;
    std::swap(r, new_r);
  }
  if (t < 0) t += p;
  return static_cast<Elem>(t);
}

Elem reduce(long long value, Elem p) {
  long long r = value % static_cast<long long>(p);
  if (r < 0) r += p;
  return static_cast<Elem>(r);
}

FqScalar::FqScalar(long long value, Elem modulus) : value_(0), modulus_(modulus) {
  require_prime_modulus(modulus);
  value_ = reduce(value, modulus);
}

FqScalar FqScalar::operator+(const FqScalar& o) const {
  if (o.modulus_ != modulus_) throw InvalidInput("modulus mismatch");
  return FqScalar(add_mod(value_, o.value_, modulus_), modulus_);
}
FqScalar FqScalar::operator-(const FqScalar& o) const {
  if (o.modulus_ != modulus_) throw InvalidInput("modulus mismatch");
  return FqScalar(sub_mod(value_, o.value_, modulus_), modulus_);
}
FqScalar FqScalar::operator*(const FqScalar& o) const {
  if (o.modulus_ != modulus_) throw InvalidInput("modulus mismatch");
  return FqScalar(mul_mod(value_, o.value_, modulus_), modulus_);
}
FqScalar FqScalar::inverse() const { return FqScalar(inv_mod(value_, modulus_), modulus_); }

FqMatrix::FqMatrix(std::size_t rows, std::size_t cols, Elem p)
    : rows_(rows), cols_(cols), p_(p), data_(rows * cols, 0) {}

FqMatrix::FqMatrix(std::initializer_list<std::initializer_list<long long>> rows, Elem p)
    : rows_(rows.size()), cols_(rows.size() == 0 ? 0 : rows.begin()->size()), p_(p) {
  data_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw InvalidInput("ragged matrix literal");
    for (long long v : r) data_.push_back(reduce(v, p));
  }
}

FqMatrix FqMatrix::identity(std::size_t n, Elem p) {
  FqMatrix m(n, n, p);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

FqMatrix FqMatrix::from_rows(const std::vector<Vector>& rows, std::size_t cols, Elem p) {
  FqMatrix m(rows.size(), cols, p);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw InvalidInput("row length mismatch");
    std::copy(rows[r].begin(), rows[r].end(), m.data_.begin() + r * cols);
  }
  return m;
}

FqMatrix FqMatrix::from_columns(const std::vector<Vector>& cols, std::size_t rows, Elem p) {
  FqMatrix m(rows, cols.size(), p);
  for (std::size_t c = 0; c < cols.size(); ++c) {
    if (cols[c].size() != rows) throw InvalidInput("column length mismatch");
    for (std::size_t r = 0; r < rows; ++r) m(r, c) = cols[c][r];
  }
  return m;
}

Vector FqMatrix::row(std::size_t r) const {
  return Vector(data_.begin() + r * cols_, data_.begin() + (r + 1) * cols_);
}

Vector FqMatrix::column(std::size_t c) const {
  Vector v(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
  return v;
}

bool FqMatrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](Elem e) { return e == 0; });
}

FqMatrix FqMatrix::transpose() const {
  FqMatrix t(cols_, rows_, p_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

FqMatrix FqMatrix::block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const {
  if (r0 + nr > rows_ || c0 + nc > cols_) throw InvalidInput("block out of range");
  FqMatrix b(nr, nc, p_);
  for (std::size_t r = 0; r < nr; ++r)
    for (std::size_t c = 0; c < nc; ++c) b(r, c) = (*this)(r0 + r, c0 + c);
  return b;
}

void FqMatrix::set_block(std::size_t r0, std::size_t c0, const FqMatrix& m) {
  if (r0 + m.rows_ > rows_ || c0 + m.cols_ > cols_) throw InvalidInput("block out of range");
  for (std::size_t r = 0; r < m.rows_; ++r)
    for (std::size_t c = 0; c < m.cols_; ++c) (*this)(r0 + r, c0 + c) = m(r, c);
}

FqMatrix FqMatrix::scaled(Elem s) const {
  FqMatrix out = *this;
  for (auto& e : out.data_) e = mul_mod(e, s % p_, p_);
  return out;
}

static void require_same_shape(const FqMatrix& a, const FqMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols() || a.modulus() != b.modulus()) {
    throw InvalidInput("matrix shape or modulus mismatch");
  }
}

FqMatrix operator+(const FqMatrix& a, const FqMatrix& b) {
  require_same_shape(a, b);
  FqMatrix out = a;
  for (std::size_t i = 0; i < out.data_.size(); ++i)
    out.data_[i] = add_mod(a.data_[i], b.data_[i], a.p_);
  return out;
}

FqMatrix operator-(const FqMatrix& a, const FqMatrix& b) {
  require_same_shape(a, b);
  FqMatrix out = a;
  for (std::size_t i = 0; i < out.data_.size(); ++i)
    out.data_[i] = sub_mod(a.data_[i], b.data_[i], a.p_);
  return out;
}

FqMatrix operator-(const FqMatrix& a) {
  FqMatrix out = a;
  for (auto& e : out.data_) e = neg_mod(e, a.p_);
  return out;
}

FqMatrix operator*(const FqMatrix& a, const FqMatrix& b) {
  if (a.cols_ != b.rows_ || a.p_ != b.p_) {
    throw InvalidInput("matrix product shape mismatch: " + std::to_string(a.rows_) + "x" +
                       std::to_string(a.cols_) + " * " + std::to_string(b.rows_) + "x" +
                       std::to_string(b.cols_));
  }
  FqMatrix out(a.rows_, b.cols_, a.p_);
  const std::uint64_t p = a.p_;
  for (std::size_t r = 0; r < a.rows_; ++r) {
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const std::uint64_t x = a(r, k);
      if (x == 0) continue;
      for (std::size_t c = 0; c < b.cols_; ++c) {
        out(r, c) = static_cast<Elem>((out(r, c) + x * b(k, c)) % p);
      }
    }
  }
  return out;
}

Vector operator*(const FqMatrix& a, const Vector& v) {
  if (a.cols_ != v.size()) throw InvalidInput("matrix-vector shape mismatch");
  Vector out(a.rows_, 0);
  for (std::size_t r = 0; r < a.rows_; ++r) {
    std::uint64_t acc = 0;
    for (std::size_t c = 0; c < a.cols_; ++c) acc += std::uint64_t{a(r, c)} * v[c] % a.p_;
    out[r] = static_cast<Elem>(acc % a.p_);
  }
  return out;
}

bool operator==(const FqMatrix& a, const FqMatrix& b) {
  return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.p_ == b.p_ && a.data_ == b.data_;
}

std::strong_ordering operator<=>(const FqMatrix& a, const FqMatrix& b) {
  if (auto c = a.rows_ <=> b.rows_; c != 0) return c;
  if (auto c = a.cols_ <=> b.cols_; c != 0) return c;
  if (auto c = a.p_ <=> b.p_; c != 0) return c;
  return a.data_ <=> b.data_;
}

FqMatrix hstack(const FqMatrix& a, const FqMatrix& b) {
  if (a.rows() != b.rows()) throw InvalidInput("hstack row mismatch");
  FqMatrix out(a.rows(), a.cols() + b.cols(), a.modulus());
  out.set_block(0, 0, a);
  out.set_block(0, a.cols(), b);
  return out;
}

FqMatrix vstack(const FqMatrix& a, const FqMatrix& b) {
  if (a.cols() != b.cols()) throw InvalidInput("vstack column mismatch");
  FqMatrix out(a.rows() + b.rows(), a.cols(), a.modulus());
  out.set_block(0, 0, a);
  out.set_block(a.rows(), 0, b);
  return out;
}

FqMatrix block_diagonal(const FqMatrix& a, const FqMatrix& b) {
  FqMatrix out(a.rows() + b.rows(), a.cols() + b.cols(), a.modulus());
  out.set_block(0, 0, a);
  out.set_block(a.rows(), a.cols(), b);
  return out;
}

RowReduction rref_rank_kernel(const FqMatrix& m) {
  RowReduction out;
  FqMatrix a = m;
  const Elem p = m.modulus();
  const std::size_t rows = a.rows();
  const std::size_t cols = a.cols();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t pivot = r;
    while (pivot < rows && a(pivot, c) == 0) ++pivot;
    if (pivot == rows) continue;
    if (pivot != r) {
      for (std::size_t k = 0; k < cols; ++k) std::swap(a(r, k), a(pivot, k));
    }
    const Elem inv = inv_mod(a(r, c), p);
    for (std::size_t k = c; k < cols; ++k) a(r, k) = mul_mod(a(r, k), inv, p);
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || a(i, c) == 0) continue;
      const Elem f = a(i, c);
      for (std::size_t k = c; k < cols; ++k) {
        a(i, k) = sub_mod(a(i, k), mul_mod(f, a(r, k), p), p);
      }
    }
    out.pivots.push_back(c);
    ++r;
  }
  out.rank = r;

  std::vector<bool> is_pivot(cols, false);
  for (auto c : out.pivots) is_pivot[c] = true;
  FqMatrix kernel(cols - out.rank, cols, p);
  std::size_t k = 0;
  for (std::size_t free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    kernel(k, free) = 1;
    for (std::size_t i = 0; i < out.rank; ++i) {
      kernel(k, out.pivots[i]) = neg_mod(a(i, free), p);
    }
    ++k;
  }
  out.rref = std::move(a);
  out.kernel_basis = std::move(kernel);
  return out;
}

FqMatrix rref(const FqMatrix& m) { return rref_rank_kernel(m).rref; }

std::size_t rank(const FqMatrix& m) {
  if (m.empty()) return 0;
  return rref_rank_kernel(m).rank;
}

bool is_invertible(const FqMatrix& m) {
  return m.rows() == m.cols() && (m.rows() == 0 || rank(m) == m.rows());
}

std::optional<FqMatrix> inverse(const FqMatrix& m) {
  if (m.rows() != m.cols()) return std::nullopt;
  const std::size_t n = m.rows();
  const auto red = rref_rank_kernel(hstack(m, FqMatrix::identity(n, m.modulus())));
  if (red.rank < n || (n > 0 && red.pivots[n - 1] != n - 1)) return std::nullopt;
  return red.rref.block(0, n, n, n);
}

FqMatrix row_space_basis(const FqMatrix& rows) {
  const auto red = rref_rank_kernel(rows);
  return red.rref.block(0, 0, red.rank, rows.cols());
}

std::optional<Solution> solve(const FqMatrix& a, const Vector& b) {
  if (a.rows() != b.size()) {
    throw InvalidInput("solve: matrix has " + std::to_string(a.rows()) +
                       " rows but right-hand side has length " + std::to_string(b.size()));
  }
  const Elem p = a.modulus();
  FqMatrix aug(a.rows(), a.cols() + 1, p);
  aug.set_block(0, 0, a);
  for (std::size_t r = 0; r < b.size(); ++r) aug(r, a.cols()) = b[r] % p;
  const auto red = rref_rank_kernel(aug);
  if (!red.pivots.empty() && red.pivots.back() == a.cols()) return std::nullopt;
  Solution sol;
  sol.particular.assign(a.cols(), 0);
  for (std::size_t i = 0; i < red.rank; ++i) {
    sol.particular[red.pivots[i]] = red.rref(i, a.cols());
  }
  sol.kernel_basis = rref_rank_kernel(a).kernel_basis;
  return sol;
}

std::optional<FqMatrix> solve_matrix(const FqMatrix& a, const FqMatrix& b) {
  if (a.rows() != b.rows()) throw InvalidInput("solve_matrix: row mismatch");
  const Elem p = a.modulus();
  const auto red = rref_rank_kernel(hstack(a, b));
  for (auto c : red.pivots) {
    if (c >= a.cols()) return std::nullopt;
  }
  FqMatrix x(a.cols(), b.cols(), p);
  for (std::size_t i = 0; i < red.rank; ++i) {
    for (std::size_t c = 0; c < b.cols(); ++c) x(red.pivots[i], c) = red.rref(i, a.cols() + c);
  }
  return x;
}

void reduce_by_rref(Vector& v, const FqMatrix& basis, std::span<const std::size_t> pivots) {
  const Elem p = basis.modulus();
  for (std::size_t i = 0; i < pivots.size(); ++i) {
    const Elem f = v[pivots[i]];
    if (f == 0) continue;
    for (std::size_t c = 0; c < basis.cols(); ++c) {
      if (basis(i, c) != 0) v[c] = sub_mod(v[c], mul_mod(f, basis(i, c), p), p);
    }
  }
}

FqSubspace::FqSubspace(std::size_t ambient_dim, Elem p)
    : ambient_dim_(ambient_dim), basis_(0, ambient_dim, p) {}

FqSubspace::FqSubspace(std::size_t ambient_dim, FqMatrix basis, std::vector<std::size_t> pivots)
    : ambient_dim_(ambient_dim), basis_(std::move(basis)), pivots_(std::move(pivots)) {}

FqSubspace FqSubspace::span_of_rows(const FqMatrix& rows) {
  const auto red = rref_rank_kernel(rows);
  return FqSubspace(rows.cols(), red.rref.block(0, 0, red.rank, rows.cols()), red.pivots);
}

FqSubspace FqSubspace::span_of_columns(const FqMatrix& cols) {
  return span_of_rows(cols.transpose());
}

FqSubspace FqSubspace::full(std::size_t ambient_dim, Elem p) {
  return span_of_rows(FqMatrix::identity(ambient_dim, p));
}

bool FqSubspace::contains(const Vector& v) const {
  if (v.size() != ambient_dim_) throw InvalidInput("subspace membership: dimension mismatch");
  Vector w = v;
  reduce_by_rref(w, basis_, pivots_);
  return std::all_of(w.begin(), w.end(), [](Elem e) { return e == 0; });
}

bool FqSubspace::contains(const FqSubspace& other) const {
  for (std::size_t r = 0; r < other.dim(); ++r) {
    if (!contains(other.basis_.row(r))) return false;
  }
  return true;
}

std::vector<FqSubspace> enumerate_subspaces(std::size_t n, std::size_t k, Elem p) {
  require_prime_modulus(p);
  if (k > n) {
    throw InvalidInput("enumerate_subspaces: dimension " + std::to_string(k) +
                       " exceeds ambient dimension " + std::to_string(n));
  }
  std::vector<FqSubspace> out;
  // Pivot sets in increasing lexicographic order; free entries sit right of
  // each row's pivot in non-pivot columns.
  std::vector<std::size_t> pivots(k);
  for (std::size_t i = 0; i < k; ++i) pivots[i] = i;
  while (true) {
    std::vector<std::pair<std::size_t, std::size_t>> free_slots;
    std::vector<bool> is_pivot(n, false);
    for (auto c : pivots) is_pivot[c] = true;
    for (std::size_t r = 0; r < k; ++r) {
      for (std::size_t c = pivots[r] + 1; c < n; ++c) {
        if (!is_pivot[c]) free_slots.emplace_back(r, c);
      }
    }
    std::vector<Elem> digits(free_slots.size(), 0);
    while (true) {
      FqMatrix basis(k, n, p);
      for (std::size_t r = 0; r < k; ++r) basis(r, pivots[r]) = 1;
      for (std::size_t i = 0; i < free_slots.size(); ++i) {
        basis(free_slots[i].first, free_slots[i].second) = digits[i];
      }
      out.push_back(FqSubspace::span_of_rows(basis));
      std::size_t i = digits.size();
      bool carried_out = true;
      while (i > 0) {
        --i;
        digits[i] = (digits[i] + 1) % p;
        if (digits[i] != 0) {
          carried_out = false;
          break;
        }
      }
      if (carried_out) break;
    }
    // Next combination of pivot columns.
    std::size_t i = k;
    while (i > 0 && pivots[i - 1] == n - k + (i - 1)) --i;
    if (i == 0) break;
    ++pivots[i - 1];
    for (std::size_t j = i; j < k; ++j) pivots[j] = pivots[j - 1] + 1;
  }
  return out;
}

}  // namespace hall::fq

#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <vector>

namespace hall::fq {

using Elem = std::uint32_t;
using Vector = std::vector<Elem>;

bool is_prime(std::uint64_t n);

/// Residues are kept below 2^31 so products fit in 64 bits.
void require_prime_modulus(std::uint64_t p);

inline Elem add_mod(Elem a, Elem b, Elem p) {
  const std::uint64_t s = std::uint64_t{a} + b;
  return static_cast<Elem>(s >= p ? s - p : s);
}
inline Elem sub_mod(Elem a, Elem b, Elem p) { return a >= b ? a - b : a + (p - b); }
inline Elem mul_mod(Elem a, Elem b, Elem p) {
  return static_cast<Elem>((std::uint64_t{a} * b) % p);
}
inline Elem neg_mod(Elem a, Elem p) { return a == 0 ? 0 : p - a; }
Elem inv_mod(Elem a, Elem p);

/// Reduce an arbitrary integer into [0, p).
Elem reduce(long long value, Elem p);

class FqScalar {
 public:
  FqScalar(long long value, Elem modulus);

  Elem value() const { return value_; }
  Elem modulus() const { return modulus_; }

  FqScalar operator+(const FqScalar& o) const;
  FqScalar operator-(const FqScalar& o) const;
  FqScalar operator*(const FqScalar& o) const;
  FqScalar inverse() const;
  bool operator==(const FqScalar&) const = default;

 private:
  Elem value_;
  Elem modulus_;
};

/// Dense row-major matrix over the prime field F_p.
class FqMatrix {
 public:
  FqMatrix() = default;
  FqMatrix(std::size_t rows, std::size_t cols, Elem p);
  FqMatrix(std::initializer_list<std::initializer_list<long long>> rows, Elem p);

  static FqMatrix identity(std::size_t n, Elem p);
  /// Each vector becomes a row; all must have length `cols`.
  static FqMatrix from_rows(const std::vector<Vector>& rows, std::size_t cols, Elem p);
  /// Each vector becomes a column; all must have length `rows`.
  static FqMatrix from_columns(const std::vector<Vector>& cols, std::size_t rows, Elem p);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Elem modulus() const { return p_; }
  bool empty() const { return rows_ == 0 || cols_ == 0; }

  Elem operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  Elem& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }

  std::span<const Elem> data() const { return data_; }
  std::span<Elem> data() { return data_; }
  Vector row(std::size_t r) const;
  Vector column(std::size_t c) const;

  bool is_zero() const;
  FqMatrix transpose() const;
  FqMatrix block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const;
  void set_block(std::size_t r0, std::size_t c0, const FqMatrix& m);
  FqMatrix scaled(Elem s) const;

  friend FqMatrix operator+(const FqMatrix& a, const FqMatrix& b);
  friend FqMatrix operator-(const FqMatrix& a, const FqMatrix& b);
  friend FqMatrix operator-(const FqMatrix& a);
  friend FqMatrix operator*(const FqMatrix& a, const FqMatrix& b);
  friend Vector operator*(const FqMatrix& a, const Vector& v);

  friend bool operator==(const FqMatrix& a, const FqMatrix& b);
  /// Shape first, then entries lexicographically in row-major order.
  friend std::strong_ordering operator<=>(const FqMatrix& a, const FqMatrix& b);

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  Elem p_ = 2;
  std::vector<Elem> data_;
};

FqMatrix hstack(const FqMatrix& a, const FqMatrix& b);
FqMatrix vstack(const FqMatrix& a, const FqMatrix& b);
FqMatrix block_diagonal(const FqMatrix& a, const FqMatrix& b);

struct RowReduction {
  FqMatrix rref;
  std::size_t rank = 0;
  std::vector<std::size_t> pivots;
  /// Rows span the null space {v : m v = 0}; rank + kernel_basis.rows() == cols.
  FqMatrix kernel_basis;
};

RowReduction rref_rank_kernel(const FqMatrix& m);
FqMatrix rref(const FqMatrix& m);
std::size_t rank(const FqMatrix& m);
bool is_invertible(const FqMatrix& m);
std::optional<FqMatrix> inverse(const FqMatrix& m);

/// Rows of `rows` reduced to RREF with zero rows dropped.
FqMatrix row_space_basis(const FqMatrix& rows);

struct Solution {
  Vector particular;
  FqMatrix kernel_basis;
};

/// Solve a x = b. Throws InvalidInput when a.rows() != b.size().
std::optional<Solution> solve(const FqMatrix& a, const Vector& b);

/// Solve a X = b column by column; nullopt if some column has no solution.
std::optional<FqMatrix> solve_matrix(const FqMatrix& a, const FqMatrix& b);

/// Subtract multiples of the RREF rows of `basis` so that v vanishes at every pivot.
void reduce_by_rref(Vector& v, const FqMatrix& basis, std::span<const std::size_t> pivots);

/// A linear subspace of F_p^n stored by its unique RREF basis.
class FqSubspace {
 public:
  FqSubspace(std::size_t ambient_dim, Elem p);
  static FqSubspace span_of_rows(const FqMatrix& rows);
  static FqSubspace span_of_columns(const FqMatrix& cols);
  static FqSubspace full(std::size_t ambient_dim, Elem p);

  std::size_t ambient_dim() const { return ambient_dim_; }
  std::size_t dim() const { return basis_.rows(); }
  Elem modulus() const { return basis_.modulus(); }
  const FqMatrix& basis() const { return basis_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }

  bool contains(const Vector& v) const;
  bool contains(const FqSubspace& other) const;

  friend bool operator==(const FqSubspace& a, const FqSubspace& b) {
    return a.ambient_dim_ == b.ambient_dim_ && a.basis_ == b.basis_;
  }
  friend std::strong_ordering operator<=>(const FqSubspace& a, const FqSubspace& b) {
    if (auto c = a.ambient_dim_ <=> b.ambient_dim_; c != 0) return c;
    return a.basis_ <=> b.basis_;
  }

 private:
  FqSubspace(std::size_t ambient_dim, FqMatrix basis, std::vector<std::size_t> pivots);

  std::size_t ambient_dim_;
  FqMatrix basis_;
  std::vector<std::size_t> pivots_;
};

/// Every k-dimensional subspace of F_p^n, each exactly once, in canonical RREF.
std::vector<FqSubspace> enumerate_subspaces(std::size_t n, std::size_t k, Elem p);

/// Enumerates all p^d vectors of span(rows) in lexicographic coordinate order
/// (last coordinate fastest). `rows` should be in RREF so the order matches the
/// lexicographic order of the vectors themselves. The callback receives the
/// running index and the current vector.
template <class Fn>
void for_each_combination(const FqMatrix& rows, Fn&& fn) {
  const std::size_t d = rows.rows();
  const std::size_t n = rows.cols();
  const Elem p = rows.modulus();
  Vector current(n, 0);
  std::vector<Elem> digits(d, 0);
  std::uint64_t index = 0;
  while (true) {
    fn(index, static_cast<const Vector&>(current));
    ++index;
    std::size_t i = d;
    while (i > 0) {
      --i;
      // Stepping digit i (including the wrap p-1 -> 0) always adds row i.
      for (std::size_t c = 0; c < n; ++c) {
        current[c] = add_mod(current[c], rows(i, c), p);
      }
      digits[i] = (digits[i] + 1) % p;
      if (digits[i] != 0) {
        break;
      }
      if (i == 0) {
        return;
      }
    }
    if (d == 0) {
      return;
    }
  }
}

}  // namespace hall::fq

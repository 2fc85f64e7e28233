#pragma once

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <exception>
#include <map>
#include <thread>
#include <utility>
#include <vector>

#include "hall/error.hpp"
#include "hall/rational.hpp"

namespace hall {

/// Finitely supported exact-rational combination of basis classes.
template <class Basis>
class HallElement {
 public:
  HallElement() = default;
  static HallElement basis(const Basis& b, const Rational& coeff = 1) {
    HallElement e;
    e.add(b, coeff);
    return e;
  }

  const std::map<Basis, Rational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Rational operator[](const Basis& b) const {
    auto it = terms_.find(b);
    return it == terms_.end() ? Rational(0) : it->second;
  }
  void add(const Basis& b, const Rational& coeff) {
    Rational v = (*this)[b] + coeff;
    v.canonicalize();
    if (v == 0) {
      terms_.erase(b);
    } else {
      terms_[b] = v;
    }
  }

  friend HallElement operator+(HallElement a, const HallElement& b) {
    for (const auto& [k, v] : b.terms_) a.add(k, v);
    return a;
  }
  friend HallElement operator*(const Rational& s, const HallElement& a) {
    HallElement out;
    for (const auto& [k, v] : a.terms_) out.add(k, s * v);
    return out;
  }
  friend bool operator==(const HallElement& a, const HallElement& b) { return a.terms_ == b.terms_; }

 private:
  std::map<Basis, Rational> terms_;
};

/// Products of basis pairs. Pairs without an entry are outside the universe.
template <class Basis>
class StructureTable {
 public:
  const HallElement<Basis>* product(const Basis& a, const Basis& b) const {
    auto it = products_.find({a, b});
    return it == products_.end() ? nullptr : &it->second;
  }
  /// Also the mutation hook used to test the verification harness.
  void set_product(const Basis& a, const Basis& b, HallElement<Basis> value) {
    products_[{a, b}] = std::move(value);
  }
  const std::map<std::pair<Basis, Basis>, HallElement<Basis>>& entries() const { return products_; }

 private:
  std::map<std::pair<Basis, Basis>, HallElement<Basis>> products_;
};

/// Bilinear extension of a basis product; `product(x, y)` returns a
/// HallElement or throws OutOfUniverse.
template <class Basis, class Product>
HallElement<Basis> multiply_with(const HallElement<Basis>& a, const HallElement<Basis>& b, Product&& product) {
  HallElement<Basis> out;
  for (const auto& [x, cx] : a.terms()) {
    for (const auto& [y, cy] : b.terms()) out = out + (cx * cy) * product(x, y);
  }
  return out;
}

template <class Basis>
HallElement<Basis> multiply(const StructureTable<Basis>& table, const HallElement<Basis>& a,
                            const HallElement<Basis>& b) {
  return multiply_with(a, b, [&](const Basis& x, const Basis& y) {
    const auto* p = table.product(x, y);
    if (!p) throw OutOfUniverse("product of two basis classes leaves the universe");
    return *p;
  });
}

/// Aut(x) acting on [x,z]_y by precomposition.
struct OrbitReport {
  /// Sum over orbits of 1/|Stab|.
  Rational lhs = 0;
  /// |[x,z]_y| / |Aut x|.
  Rational rhs = 0;
  bool equal = true;
  /// Sum over orbits of |Stab|, the reading with the stabilizer not inverted.
  Rational uninverted = 0;
  bool uninverted_equal = true;
  std::uint64_t members = 0;
  std::uint64_t group_order = 0;
  std::size_t orbits = 0;
  bool free = true;
};

/// Runs fn(i) for i in [0, n) on up to `workers` threads. Exceptions from
/// workers are rethrown on the calling thread (the first one by index wins).
template <class Fn>
void parallel_for(std::size_t n, unsigned workers, Fn&& fn) {
  workers = std::max(1u, std::min<unsigned>(workers, static_cast<unsigned>(std::max<std::size_t>(n, 1))));
  if (workers == 1) {
    for (std::size_t i = 0; i < n; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::exception_ptr> errors(n);
  std::vector<std::thread> pool;
  for (unsigned w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      for (std::size_t i; (i = next.fetch_add(1)) < n;) {
        try {
          fn(i);
        } catch (...) {
          errors[i] = std::current_exception();
        }
      }
    });
  }
  for (auto& t : pool) t.join();
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
}

}  // namespace hall

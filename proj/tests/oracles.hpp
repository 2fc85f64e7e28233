#pragma once

// Independent reference computations used to freeze expected values.

#include <cstdint>
#include <random>
#include <vector>

#include "hall/fq_matrix.hpp"
#include "hall/representation.hpp"

namespace oracle {

inline std::uint64_t ipow(std::uint64_t b, unsigned e) {
  std::uint64_t r = 1;
  while (e--) r *= b;
  return r;
}

// (n choose k)_p = prod_{i<k} (p^{n-i} - 1) / (p^{i+1} - 1)
inline std::uint64_t gaussian_binomial(unsigned n, unsigned k, unsigned p) {
  if (k > n) return 0;
  std::uint64_t num = 1, den = 1;
  for (unsigned i = 0; i < k; ++i) {
    num *= ipow(p, n - i) - 1;
    den *= ipow(p, i + 1) - 1;
  }
  return num / den;
}

// |GL_n(F_p)| = prod_{i<n} (p^n - p^i)
inline std::uint64_t gl_order(unsigned n, unsigned p) {
  std::uint64_t r = 1;
  for (unsigned i = 0; i < n; ++i) r *= ipow(p, n) - ipow(p, i);
  return r;
}

inline hall::fq::FqMatrix random_matrix(std::mt19937_64& rng, std::size_t r, std::size_t c,
                                        hall::fq::Elem p) {
  std::uniform_int_distribution<hall::fq::Elem> d(0, p - 1);
  hall::fq::FqMatrix m(r, c, p);
  for (auto& e : m.data()) e = d(rng);
  return m;
}

// Every tuple of per-vertex matrices x_v -> y_v, checked directly against the
// intertwining equations. Only for tiny dimensions.
template <class Fn>
void brute_force_morphisms(const hall::Representation& x, const hall::Representation& y, Fn&& fn) {
  const auto n = x.dims().size();
  const auto p = x.modulus();
  std::size_t entries = 0;
  for (std::size_t v = 0; v < n; ++v) entries += x.dim(v) * y.dim(v);
  std::vector<hall::fq::Elem> digits(entries, 0);
  while (true) {
    std::vector<hall::fq::FqMatrix> comps;
    std::size_t k = 0;
    for (std::size_t v = 0; v < n; ++v) {
      hall::fq::FqMatrix m(y.dim(v), x.dim(v), p);
      for (auto& e : m.data()) e = digits[k++];
      comps.push_back(std::move(m));
    }
    hall::RepMorphism f(std::move(comps));
    bool ok = true;
    const auto& arrows = x.quiver()->arrows();
    for (std::size_t a = 0; a < arrows.size() && ok; ++a) {
      ok = f[arrows[a].dst] * x.map(a) == y.map(a) * f[arrows[a].src];
    }
    if (ok) fn(f);
    std::size_t i = entries;
    while (i > 0) {
      --i;
      if (++digits[i] < p) break;
      digits[i] = 0;
      if (i == 0) return;
    }
    if (entries == 0) return;
  }
}

inline std::uint64_t brute_force_hom_count(const hall::Representation& x, const hall::Representation& y) {
  std::uint64_t count = 0;
  brute_force_morphisms(x, y, [&](const hall::RepMorphism&) { ++count; });
  return count;
}

inline std::uint64_t brute_force_aut_count(const hall::Representation& x) {
  std::uint64_t count = 0;
  brute_force_morphisms(x, x, [&](const hall::RepMorphism& f) {
    bool inv = true;
    for (const auto& m : f.components()) inv = inv && hall::fq::is_invertible(m);
    if (inv) ++count;
  });
  return count;
}

}  // namespace oracle

#include <random>
#include <set>

#include "doctest.h"
#include "hall/error.hpp"
#include "hall/fq_matrix.hpp"
#include "oracles.hpp"

using namespace hall;
using namespace hall::fq;

TEST_CASE("scalar arithmetic") {
  FqScalar a(5, 7), b(4, 7);
  CHECK((a + b).value() == 2);
  CHECK((a - b).value() == 1);
  CHECK((b - a).value() == 6);
  CHECK((a * b).value() == 6);
  CHECK((a * a.inverse()).value() == 1);
  CHECK(FqScalar(-1, 5).value() == 4);
  CHECK_THROWS_AS(FqScalar(1, 6), InvalidInput);
  CHECK_THROWS_AS(FqScalar(0, 3).inverse(), InvalidInput);
}

TEST_CASE("rref rank kernel on small matrices") {
  SUBCASE("identity over F_2") {
    auto r = rref_rank_kernel(FqMatrix::identity(2, 2));
    CHECK(r.rank == 2);
    CHECK(r.kernel_basis.rows() == 0);
    CHECK(r.rref == FqMatrix::identity(2, 2));
  }
  SUBCASE("zero over F_3") {
    auto r = rref_rank_kernel(FqMatrix(2, 2, 3));
    CHECK(r.rank == 0);
    CHECK(r.kernel_basis.rows() == 2);
  }
  SUBCASE("all ones over F_2") {
    FqMatrix m({{1, 1}, {1, 1}}, 2);
    auto r = rref_rank_kernel(m);
    CHECK(r.rank == 1);
    REQUIRE(r.kernel_basis.rows() == 1);
    CHECK(r.kernel_basis.row(0) == Vector{1, 1});
    CHECK(r.rref == FqMatrix({{1, 1}, {0, 0}}, 2));
  }
  SUBCASE("empty shapes") {
    CHECK(rank(FqMatrix(0, 3, 5)) == 0);
    CHECK(rref_rank_kernel(FqMatrix(0, 3, 5)).kernel_basis.rows() == 3);
    CHECK(rref_rank_kernel(FqMatrix(3, 0, 5)).kernel_basis.rows() == 0);
  }
}

TEST_CASE("rank-nullity, idempotence and kernel vectors on random matrices") {
  std::mt19937_64 rng(17);
  for (Elem p : {2u, 3u, 5u, 7u}) {
    for (int trial = 0; trial < 200; ++trial) {
      const auto r = rng() % 6, c = rng() % 6;
      auto m = oracle::random_matrix(rng, r, c, p);
      auto red = rref_rank_kernel(m);
      CHECK(red.rank + red.kernel_basis.rows() == c);
      CHECK(rref(red.rref) == red.rref);
      CHECK(rank(m.transpose()) == red.rank);
      for (std::size_t k = 0; k < red.kernel_basis.rows(); ++k) {
        auto v = m * red.kernel_basis.row(k);
        CHECK(std::all_of(v.begin(), v.end(), [](Elem e) { return e == 0; }));
      }
      CHECK(rank(red.kernel_basis) == red.kernel_basis.rows());
    }
  }
}

TEST_CASE("solve") {
  SUBCASE("identity") {
    auto s = solve(FqMatrix::identity(3, 5), Vector{1, 2, 3});
    REQUIRE(s);
    CHECK(s->particular == Vector{1, 2, 3});
    CHECK(s->kernel_basis.rows() == 0);
  }
  SUBCASE("zero matrix, nonzero right side") {
    CHECK_FALSE(solve(FqMatrix(2, 2, 3), Vector{0, 1}).has_value());
  }
  SUBCASE("upper triangular over F_2") {
    auto s = solve(FqMatrix({{1, 1}, {0, 1}}, 2), Vector{0, 1});
    REQUIRE(s);
    CHECK(s->particular == Vector{1, 1});
  }
  SUBCASE("shape mismatch") {
    CHECK_THROWS_AS(solve(FqMatrix(2, 2, 3), Vector{0, 1, 2}), InvalidInput);
  }
  SUBCASE("random consistent systems") {
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 200; ++trial) {
      const Elem p = trial % 2 ? 3 : 7;
      auto a = oracle::random_matrix(rng, 1 + rng() % 5, 1 + rng() % 5, p);
      auto x = oracle::random_matrix(rng, a.cols(), 1, p).column(0);
      auto b = a * x;
      auto s = solve(a, b);
      REQUIRE(s);
      CHECK(a * s->particular == b);
    }
  }
}

TEST_CASE("inverse") {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 100; ++trial) {
    auto m = oracle::random_matrix(rng, 3, 3, 5);
    auto inv = inverse(m);
    CHECK(inv.has_value() == (rank(m) == 3));
    if (inv) CHECK(m * *inv == FqMatrix::identity(3, 5));
  }
}

TEST_CASE("subspace enumeration matches the Gaussian binomial product formula") {
  for (Elem p : {2u, 3u}) {
    for (std::size_t n = 0; n <= 4; ++n) {
      for (std::size_t k = 0; k <= n; ++k) {
        auto subs = enumerate_subspaces(n, k, p);
        CHECK(subs.size() == oracle::gaussian_binomial(n, k, p));
        std::set<FqSubspace> distinct(subs.begin(), subs.end());
        CHECK(distinct.size() == subs.size());
        for (const auto& s : subs) {
          CHECK(s.dim() == k);
          CHECK(rref(s.basis()) == s.basis());
        }
      }
    }
  }
  CHECK(enumerate_subspaces(2, 1, 2).size() == 3);
  CHECK(enumerate_subspaces(3, 0, 2).size() == 1);
  CHECK(enumerate_subspaces(3, 3, 2).size() == 1);
  CHECK_THROWS_AS(enumerate_subspaces(2, 3, 2), InvalidInput);
}

TEST_CASE("subspace containment and canonical form") {
  auto a = FqSubspace::span_of_rows(FqMatrix({{1, 1, 0}, {2, 2, 0}}, 3));
  auto b = FqSubspace::span_of_rows(FqMatrix({{2, 2, 0}}, 3));
  CHECK(a == b);
  CHECK(a.dim() == 1);
  CHECK(a.contains(Vector{1, 1, 0}));
  CHECK_FALSE(a.contains(Vector{1, 0, 0}));
  CHECK(FqSubspace::full(3, 3).contains(a));
  CHECK_FALSE(a.contains(FqSubspace::full(3, 3)));
}

TEST_CASE("combination enumeration visits the span in lexicographic order") {
  auto rows = rref(FqMatrix({{1, 0, 2}, {0, 1, 1}}, 3));
  std::vector<Vector> seen;
  for_each_combination(rows, [&](std::uint64_t i, const Vector& v) {
    CHECK(i == seen.size());
    seen.push_back(v);
  });
  CHECK(seen.size() == 9);
  CHECK(std::is_sorted(seen.begin(), seen.end()));
  CHECK(std::set<Vector>(seen.begin(), seen.end()).size() == 9);
}

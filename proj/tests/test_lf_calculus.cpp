#include <random>

#include "doctest.h"
#include "hall/error.hpp"
#include "hall/lf_calculus.hpp"
#include "random_squares.hpp"

using namespace hall;
using namespace hall::lf;

namespace {

TypePtr make(std::vector<Component> c) { return std::make_shared<const LFType>(std::move(c)); }

FiniteSupportFn random_fn(std::mt19937_64& rng, const TypePtr& base) {
  FiniteSupportFn f(base);
  for (const auto& c : base->components()) {
    if (rng() % 3 == 0) continue;
    f.set(c.id, Rational(static_cast<long>(rng() % 11) - 5, 1 + static_cast<long>(rng() % 6)));
  }
  return f;
}

}  // namespace

TEST_CASE("types and weights") {
  CHECK_THROWS_AS(LFType({{"a", {}}, {"a", {2}}}), InvalidInput);
  CHECK_THROWS_AS(LFType({{"a", {0}}}), InvalidInput);
  LFType t({{"a", {2}}, {"b", {3, 9}}, {"c", {2, 3, 5}}});
  CHECK(t.weight("a") == Rational(1, 2));
  CHECK(t.weight("b") == 3);
  CHECK(t.weight("c") == Rational(3, 10));
  CHECK(t.cardinality() == Rational(1, 2) + 3 + Rational(3, 10));
  CHECK_THROWS_AS(t.weight("z"), InvalidInput);
}

TEST_CASE("pushforward") {
  SUBCASE("identity") {
    std::mt19937_64 rng(1);
    auto x = make({{"a", {2}}, {"b", {}}, {"c", {4, 4}}});
    auto a = random_fn(rng, x);
    CHECK(pushforward(ProperMapData::identity(x), a) == a);
  }
  SUBCASE("BZ/2 to a point") {
    auto x = make({{"x", {2}}});
    auto out = pushforward(ProperMapData::to_point(x), FiniteSupportFn::characteristic(x, "x"));
    CHECK(out("pt") == Rational(1, 2));
  }
  SUBCASE("pi_1 of order 3, pi_2 of order 9") {
    auto x = make({{"x", {3, 9}}});
    auto out = pushforward(ProperMapData::to_point(x), FiniteSupportFn::characteristic(x, "x"));
    CHECK(out("pt") == 3);
  }
  SUBCASE("constant function gives the homotopy cardinality") {
    std::mt19937_64 rng(4);
    for (int trial = 0; trial < 20; ++trial) {
      auto x = oracle::random_type(rng, "c", 1 + rng() % 6, 8);
      FiniteSupportFn one(x);
      for (const auto& c : x->components()) one.set(c.id, 1);
      CHECK(pushforward(ProperMapData::to_point(x), one)("pt") == x->cardinality());
    }
  }
  SUBCASE("base mismatch") {
    auto x = make({{"x", {2}}});
    auto y = make({{"y", {2}}});
    CHECK_THROWS_AS(pushforward(ProperMapData::identity(x), FiniteSupportFn(y)), InvalidInput);
    CHECK_THROWS_AS(pullback(ProperMapData::identity(x), FiniteSupportFn(y)), InvalidInput);
  }
}

TEST_CASE("pullback") {
  auto x = make({{"a", {}}, {"b", {2}}, {"c", {}}});
  auto y = make({{"p", {}}, {"q", {5}}});
  ProperMapData f{x, y, {{"a", "p"}, {"b", "p"}, {"c", "q"}}, {}};
  f.fibers["p"] = Fiber{LFType({{"fa", {}}, {"fb", {2}}}), {{"fa", "a"}, {"fb", "b"}}};
  f.fibers["q"] = Fiber{LFType({{"fc", {5}}}), {{"fc", "c"}}};
  CHECK_NOTHROW(f.validate());
  auto chi_p = FiniteSupportFn::characteristic(y, "p");
  auto expected = FiniteSupportFn::characteristic(x, "a") + FiniteSupportFn::characteristic(x, "b");
  CHECK(pullback(f, chi_p) == expected);
  CHECK(pullback(f, FiniteSupportFn(y)) == FiniteSupportFn(x));
  std::mt19937_64 rng(3);
  auto b = random_fn(rng, x);
  CHECK(pullback(ProperMapData::identity(x), b) == b);
}

TEST_CASE("linearity") {
  std::mt19937_64 rng(12);
  for (int trial = 0; trial < 50; ++trial) {
    auto sq = oracle::random_square(rng);
    auto a = random_fn(rng, sq.f.source), b = random_fn(rng, sq.f.source);
    Rational s(static_cast<long>(rng() % 7) - 3, 1 + static_cast<long>(rng() % 4));
    s.canonicalize();
    CHECK(pushforward(sq.f, a + s * b) == pushforward(sq.f, a) + s * pushforward(sq.f, b));
    auto c = random_fn(rng, sq.f.target), d = random_fn(rng, sq.f.target);
    CHECK(pullback(sq.f, c + s * d) == pullback(sq.f, c) + s * pullback(sq.f, d));
  }
}

TEST_CASE("proper map validation") {
  auto x = make({{"a", {}}, {"b", {}}});
  auto y = make({{"p", {}}});
  ProperMapData f{x, y, {{"a", "p"}, {"b", "p"}}, {}};
  CHECK_THROWS_AS(f.validate(), InvalidInput);  // missing fiber
  f.fibers["p"] = Fiber{LFType({{"fa", {}}}), {{"fa", "a"}}};
  CHECK_THROWS_AS(f.validate(), InvalidInput);  // b not covered
  f.fibers["p"] = Fiber{LFType({{"fa", {}}, {"fb", {}}}), {{"fa", "a"}, {"fb", "b"}}};
  CHECK_NOTHROW(f.validate());
  f.component_map.erase("b");
  CHECK_THROWS_AS(f.validate(), InvalidInput);
}

TEST_CASE("lf_product") {
  auto x = LFType({{"a", {2}}, {"b", {3, 4}}});
  auto p = lf_product(x, LFType::point());
  CHECK(p.size() == 2);
  CHECK(p.component("(a,pt)").orders == std::vector<std::uint64_t>{2});
  CHECK(p.component("(b,pt)").orders == std::vector<std::uint64_t>{3, 4});
  CHECK(lf_product(LFType({{"u", {2}}}), LFType({{"v", {3}}})).component("(u,v)").orders ==
        std::vector<std::uint64_t>{6});
  auto three = LFType({{"1", {}}, {"2", {}}, {"3", {}}});
  CHECK(lf_product(x, three).size() == 6);
  for (const auto& a : x.components())
    for (const auto& b : three.components())
      CHECK(lf_product(x, three).weight(product_id(a.id, b.id)) == x.weight(a.id) * three.weight(b.id));
}

TEST_CASE("tensor uses both arguments") {
  auto x = make({{"a", {}}, {"b", {}}});
  auto prod = std::make_shared<const LFType>(lf_product(*x, *x));
  FiniteSupportFn f(x), g(x);
  f.set("a", 2);
  f.set("b", 3);
  g.set("a", 5);
  auto t = tensor(f, g, prod);
  CHECK(t("(a,a)") == 10);
  CHECK(t("(b,a)") == 15);
  CHECK(t("(a,b)") == 0);
}

TEST_CASE("base change") {
  SUBCASE("u = identity") {
    std::mt19937_64 rng(2);
    auto x = oracle::random_type(rng, "x", 3, 8);
    auto y = oracle::random_type(rng, "y", 2, 8);
    ProperMapData f{x, y, {}, {}};
    for (const auto& c : x->components()) f.component_map[c.id] = "y" + std::to_string(rng() % 2);
    oracle::random_fibers(rng, f, 8);
    BaseChangeSquare sq{f, ProperMapData::identity(y), f, ProperMapData::identity(x), {}};
    for (const auto& [yid, fib] : f.fibers)
      for (const auto& c : fib.type.components()) sq.witness[yid][c.id] = c.id;
    auto r = check_base_change(sq);
    CHECK(r.equal);
    CHECK(r.checked == 3);
  }
  SUBCASE("f = identity") {
    std::mt19937_64 rng(3);
    auto y = oracle::random_type(rng, "y", 3, 8);
    auto yp = oracle::random_type(rng, "w", 4, 8);
    ProperMapData u{yp, y, {}, {}};
    for (const auto& c : yp->components()) u.component_map[c.id] = "y" + std::to_string(rng() % 3);
    oracle::random_fibers(rng, u, 8);
    auto id_y = ProperMapData::identity(y);
    BaseChangeSquare sq{id_y, u, ProperMapData::identity(yp), u, {}};
    for (const auto& c : yp->components()) sq.witness[c.id][c.id] = u.component_map.at(c.id);
    auto r = check_base_change(sq);
    CHECK(r.equal);
  }
  SUBCASE("random squares") {
    std::mt19937_64 rng(99);
    for (int trial = 0; trial < 200; ++trial) {
      auto r = check_base_change(oracle::random_square(rng));
      CHECK(r.equal);
      CHECK(r.max_deviation == 0);
    }
  }
  SUBCASE("broken witnesses are rejected") {
    std::mt19937_64 rng(7);
    int rejected = 0;
    for (int trial = 0; trial < 50; ++trial) {
      auto sq = oracle::random_square(rng);
      for (auto& [w, m] : sq.witness) {
        for (auto& [from, to] : m) {
          auto& fib = sq.g.fibers.at(w);
          std::vector<Component> comps = fib.type.components();
          for (auto& c : comps)
            if (c.id == from) c.orders.push_back(2);
          fib.type = LFType(std::move(comps));
          CHECK_THROWS_AS(check_base_change(sq), InvalidInput);
          ++rejected;
          break;
        }
        break;
      }
    }
    CHECK(rejected > 0);
  }
  SUBCASE("non-commuting square is rejected") {
    auto x = make({{"a", {}}});
    auto y = make({{"p", {}}, {"q", {}}});
    ProperMapData f{x, y, {{"a", "p"}}, {{"p", Fiber{LFType({{"fa", {}}}), {{"fa", "a"}}}}}};
    ProperMapData g{x, y, {{"a", "q"}}, {{"q", Fiber{LFType({{"fa", {}}}), {{"fa", "a"}}}}}};
    BaseChangeSquare sq{f, ProperMapData::identity(y), g, ProperMapData::identity(x), {}};
    CHECK_THROWS_AS(check_base_change(sq), InvalidInput);
  }
}

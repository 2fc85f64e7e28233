#include <map>
#include <random>

#include "doctest.h"
#include "hall/derived_hom.hpp"
#include "oracles.hpp"

using namespace hall;
using fq::FqMatrix;

namespace {

struct A2Fixture {
  Catalog cat;
  IsoClassId s1, s2, p1, split;
  explicit A2Fixture(fq::Elem p, DimVector bound = {1, 1}) : cat(Catalog::build(Quiver::a2(), p, bound)) {
    auto q = cat.quiver();
    s1 = cat.classify(Representation(q, p, {1, 0}, {FqMatrix(0, 1, p)}));
    s2 = cat.classify(Representation(q, p, {0, 1}, {FqMatrix(1, 0, p)}));
    p1 = cat.classify(Representation(q, p, {1, 1}, {FqMatrix({{1}}, p)}));
    split = *cat.sum_class(s1, s2);
  }
};

DerivedClass stalk(IsoClassId id, int d = 0) { return DerivedClass::stalk(id, d); }

std::shared_ptr<const Complex> share(Complex c) { return std::make_shared<const Complex>(std::move(c)); }

}  // namespace

TEST_CASE("complex validation") {
  A2Fixture f(2);
  const auto& p1 = f.cat.representative(f.p1);
  // id followed by id does not square to zero.
  auto id = RepMorphism::identity(p1);
  CHECK_THROWS_AS(Complex(f.cat.quiver(), 2, 0, {p1, p1, p1}, {id, id}), InvalidInput);
  CHECK_THROWS_AS(Complex(f.cat.quiver(), 2, 0, {p1, p1}, {}), InvalidInput);
  CHECK_NOTHROW(Complex(f.cat.quiver(), 2, 0, {p1, p1, p1}, {id, RepMorphism::zero(p1, p1)}));
}

TEST_CASE("homology") {
  A2Fixture f(2);
  const auto& m = f.cat.representative(f.p1);
  SUBCASE("stalk") {
    auto h = homology(Complex::stalk(m, 0));
    REQUIRE(h.size() == 1);
    CHECK(h[0].degree == 0);
    CHECK(is_isomorphic(h[0].module, m));
  }
  SUBCASE("identity is exact") {
    for (const auto& t : homology(Complex(f.cat.quiver(), 2, 0, {m, m}, {RepMorphism::identity(m)}))) {
      CHECK(t.module.is_zero());
    }
  }
  SUBCASE("S_2 into P_1") {
    const auto& s2 = f.cat.representative(f.s2);
    auto incl = hom_basis(s2, m);
    REQUIRE(incl.size() == 1);
    auto h = homology(Complex(f.cat.quiver(), 2, -1, {s2, m}, {incl[0]}));
    REQUIRE(h.size() == 2);
    CHECK(h[0].degree == -1);
    CHECK(h[0].module.is_zero());
    CHECK(f.cat.classify(h[1].module) == f.s1);
  }
  SUBCASE("dimension formula on random complexes") {
    std::mt19937_64 rng(8);
    auto q = std::make_shared<const Quiver>(3, std::vector<Arrow>{{0, 1}, {1, 2}, {0, 2}});
    for (int trial = 0; trial < 30; ++trial) {
      // Compose two random morphisms through a kernel so that d^2 = 0.
      auto rep = [&](DimVector d) {
        std::vector<FqMatrix> maps;
        for (const auto& a : q->arrows()) maps.push_back(oracle::random_matrix(rng, d[a.dst], d[a.src], 3));
        return Representation(q, 3, d, std::move(maps));
      };
      auto x = rep({rng() % 3, rng() % 3, rng() % 3});
      auto y = rep({rng() % 3, rng() % 3, rng() % 3});
      auto d0 = HomSpace(x, y).random_element(rng);
      auto kc = kernel_cokernel(d0, x, y);
      Complex c(q, 3, 0, {kc.kernel, x, y}, {kc.inclusion, d0});
      auto h = homology(c);
      for (const auto& t : h) {
        for (std::size_t v = 0; v < 3; ++v) {
          const auto out = fq::rank(c.differential(t.degree)[v]);
          const auto in = fq::rank(c.differential(t.degree - 1)[v]);
          CHECK(t.module.dim(v) == c.term(t.degree).dim(v) - out - in);
        }
      }
      CHECK(h[0].module.is_zero());
      CHECK(h[1].module.is_zero());
    }
  }
}

TEST_CASE("derived_class_of and shift convention") {
  A2Fixture f(2);
  const auto& m = f.cat.representative(f.p1);
  CHECK(derived_class_of(Complex::stalk(m, 0), f.cat) == stalk(f.p1));
  CHECK(derived_class_of(Complex::stalk(m, 0).shifted(1), f.cat) == stalk(f.p1, -1));
  CHECK(stalk(f.p1).shift(1) == stalk(f.p1, -1));
  CHECK(stalk(f.p1).shift(-2) == stalk(f.p1, 2));

  const auto& n = f.cat.representative(f.s2);
  auto mc = share(Complex::stalk(m, 0));
  auto nc = share(Complex::stalk(n, 0));
  auto cone = mapping_cone(ChainMap::zero(mc, nc));
  CHECK(derived_class_of(cone, f.cat) == DerivedClass({{-1, f.p1}, {0, f.s2}}));

  auto big = direct_sum(m, m);
  CHECK_THROWS_AS(derived_class_of(Complex::stalk(big, 0), f.cat), OutOfUniverse);
  CHECK_FALSE(try_derived_class_of(Complex::stalk(big, 0), f.cat).has_value());
  CHECK_THROWS_AS(DerivedClass({{0, f.s1}, {0, f.s2}}), InvalidInput);
  CHECK(DerivedClass({{1, f.s1}, {0, Catalog::zero()}, {-1, f.s2}}).terms().size() == 2);
}

TEST_CASE("projective resolutions") {
  for (fq::Elem p : {2u, 3u}) {
    auto kronecker = std::make_shared<const Quiver>(3, std::vector<Arrow>{{0, 1}, {0, 1}, {1, 2}});
    for (const auto& q : {Quiver::a2(), kronecker}) {
      DimVector bound(q->vertex_count(), 1);
      if (q == Quiver::a2()) bound = {2, 2};
      auto cat = Catalog::build(q, p, bound);
      for (const auto& e : cat.entries()) {
        auto r = projective_resolution(e.representative);
        CHECK(is_intertwiner(r.differential, r.p1, r.p0));
        CHECK(is_intertwiner(r.augmentation, r.p0, e.representative));
        CHECK(is_mono(r.differential));
        CHECK(is_epi(r.augmentation));
        CHECK(compose(r.augmentation, r.differential).is_zero());
        for (std::size_t v = 0; v < q->vertex_count(); ++v) {
          CHECK(r.p0.dim(v) == r.p1.dim(v) + e.representative.dim(v));
        }
        // Ext^1(P, -) = 0 for the projective terms.
        for (const auto& t : cat.entries()) {
          CHECK(ext1_dim(r.p0, t.representative) == 0);
          CHECK(ext1_dim(r.p1, t.representative) == 0);
        }
        CHECK(derived_class_of(projective_realization(stalk(e.id, 1), cat), cat) == stalk(e.id, 1));
      }
    }
  }
}

TEST_CASE("hom_classes") {
  SUBCASE("identity class in Hom_D(x, x)") {
    A2Fixture f(3);
    for (const auto& x : {stalk(f.p1), DerivedClass({{0, f.s1}, {1, f.s2}}), DerivedClass({{-1, f.split}, {0, f.s2}})}) {
      DerivedHom h(x, x, f.cat);
      auto id = ChainMap::identity(h.source());
      CHECK(is_chain_map(id));
      CHECK(h.class_index(id) != 0);
      CHECK(h.class_index(ChainMap::zero(h.source(), h.target())) == 0);
      for (std::uint64_t i = 0; i < h.size({}); ++i) CHECK(h.class_index(h.representative(i)) == i);
    }
  }
  SUBCASE("A_1 has no negative self-extensions") {
    auto cat = Catalog::build(Quiver::a1(), 2, {2});
    auto v1 = *cat.identify(Representation(Quiver::a1(), 2, {1}, {}));
    auto classes = hom_classes(stalk(v1), stalk(v1).shift(-1), cat);
    REQUIRE(classes.size() == 1);
    CHECK(ext_dim(stalk(v1), stalk(v1), -1, cat) == 0);
  }
  SUBCASE("Hom_D(S_1, S_2[1]) = Ext^1(S_1, S_2)") {
    A2Fixture f(2);
    CHECK(hom_classes(stalk(f.s1), stalk(f.s2).shift(1), f.cat).size() == 2);
    CHECK(hom_classes(stalk(f.s2), stalk(f.s1).shift(1), f.cat).size() == 1);
  }
  SUBCASE("caps") {
    A2Fixture f(2);
    EnumerationLimits tiny{1, 0};
    CHECK_THROWS_AS(hom_classes(stalk(f.p1), stalk(f.p1), f.cat, tiny), ResourceLimit);
  }
}

TEST_CASE("mapping cones") {
  A2Fixture f(2, {2, 2});
  const auto& cat = f.cat;
  SUBCASE("identity cone is zero") {
    for (const auto& e : cat.entries()) {
      auto c = share(projective_realization(stalk(e.id, 0), cat));
      CHECK(derived_class_of(mapping_cone(ChainMap::identity(c)), cat).is_zero());
    }
  }
  SUBCASE("zero map cone splits") {
    auto x = DerivedClass({{0, f.s1}, {1, f.s2}});
    auto z = stalk(f.p1, 0);
    DerivedHom h(x, z, cat);
    auto cone = mapping_cone(ChainMap::zero(h.source(), h.target()));
    CHECK(derived_class_of(cone, cat) == DerivedClass({{-1, f.s1}, {0, *cat.sum_class(f.s2, f.p1)}}));
  }
  SUBCASE("cones of module maps are ker[1] + coker") {
    for (const auto& a : cat.entries()) {
      for (const auto& b : cat.entries()) {
        if (dims_total(a.representative.dims()) + dims_total(b.representative.dims()) > 5) continue;
        std::map<DerivedClass, int> expected, actual;
        HomSpace hom(a.representative, b.representative);
        hom.for_each({}, [&](std::uint64_t, const RepMorphism& g) {
          auto kc = kernel_cokernel(g, a.representative, b.representative);
          ++expected[DerivedClass({{-1, cat.classify(kc.kernel)}, {0, cat.classify(kc.cokernel)}})];
        });
        DerivedHom dh(stalk(a.id), stalk(b.id), cat);
        CHECK(dh.dim() == hom.dim());
        dh.for_each({}, [&](std::uint64_t, const ChainMap& g) {
          auto cone = mapping_cone(g);
          ++actual[derived_class_of(cone, cat)];
        });
        CHECK(expected == actual);
      }
    }
  }
}

TEST_CASE("homotopy invariance of cones") {
  A2Fixture f(2);
  std::mt19937_64 rng(21);
  auto universe = derived_universe(f.cat, {-1, 1});
  int checked = 0;
  for (int trial = 0; trial < 200; ++trial) {
    const auto& x = universe[rng() % universe.size()];
    const auto& z = universe[rng() % universe.size()];
    DerivedHom h(x, z, f.cat);
    if (h.dim() > 8) continue;
    auto g = h.representative(rng() % h.size({}));
    auto perturbed = g + h.random_null_homotopic(rng);
    CHECK(is_chain_map(perturbed));
    CHECK(h.class_index(perturbed) == h.class_index(g));
    auto before = try_derived_class_of(mapping_cone(g), f.cat);
    auto after = try_derived_class_of(mapping_cone(perturbed), f.cat);
    CHECK(before == after);
    ++checked;
  }
  CHECK(checked > 100);
}

TEST_CASE("ext_dim") {
  A2Fixture f(3, {2, 2});
  const auto& cat = f.cat;
  for (const auto& a : cat.entries()) {
    for (const auto& b : cat.entries()) {
      const auto x = stalk(a.id), z = stalk(b.id);
      CHECK(ext_dim(x, z, -1, cat) == 0);
      CHECK(ext_dim(x, z, -2, cat) == 0);
      CHECK(ext_dim(x, z, 0, cat) == cat.hom_dim(a.id, b.id));
      CHECK(ext_dim(x, z, 1, cat) == cat.ext1_dim(a.id, b.id));
      CHECK(ext_dim(x, z, 2, cat) == 0);
    }
  }
}

TEST_CASE("shift compatibility and finitary band") {
  A2Fixture f(2);
  const Window w{-1, 1};
  auto universe = derived_universe(f.cat, w);
  CHECK(universe.size() == 125);
  std::mt19937_64 rng(6);
  for (int trial = 0; trial < 60; ++trial) {
    const auto& x = universe[rng() % universe.size()];
    const auto& z = universe[rng() % universe.size()];
    for (int i = -(w.span() + 3); i <= w.span() + 3; ++i) {
      const auto d = ext_dim(x, z, i, f.cat);
      if (std::abs(i) > w.span() + 1) CHECK(d == 0);
      CHECK(d == ext_dim(x, z.shift(i), 0, f.cat));
      for (int k : {-1, 1}) CHECK(d == ext_dim(x.shift(k), z.shift(k), i, f.cat));
    }
  }
}

TEST_CASE("hereditary sanity: a complex and its homology share a class") {
  A2Fixture f(3, {2, 2});
  std::mt19937_64 rng(13);
  auto universe = derived_universe(f.cat, {0, 1});
  for (int trial = 0; trial < 40; ++trial) {
    const auto& x = universe[rng() % universe.size()];
    const auto& z = universe[rng() % universe.size()];
    DerivedHom h(x, z, f.cat);
    auto cone = mapping_cone(h.representative(rng() % h.size({})));
    auto hom = homology(cone);
    std::vector<Representation> terms;
    std::vector<RepMorphism> diffs;
    for (const auto& t : hom) {
      if (!terms.empty()) diffs.push_back(RepMorphism::zero(terms.back(), t.module));
      terms.push_back(t.module);
    }
    Complex flat(f.cat.quiver(), 3, cone.lo(), terms, diffs);
    CHECK(try_derived_class_of(flat, f.cat) == try_derived_class_of(cone, f.cat));
  }
}

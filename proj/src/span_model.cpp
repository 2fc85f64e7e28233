#include "hall/span_model.hpp"

#include <memory>

namespace hall {

namespace {

// Quiver whose representations are triples (a, b, f: a -> b): two copies of Q
// joined by an arrow i -> n + i at every vertex.
QuiverPtr arrow_quiver(const Quiver& q) {
  const auto n = q.vertex_count();
  std::vector<Arrow> arrows;
  for (const auto& a : q.arrows()) arrows.push_back(a);
  for (const auto& a : q.arrows()) arrows.push_back({n + a.src, n + a.dst});
  for (std::size_t i = 0; i < n; ++i) arrows.push_back({i, n + i});
  return std::make_shared<const Quiver>(2 * n, std::move(arrows));
}

Representation arrow_object(const QuiverPtr& aq, const Representation& a, const Representation& b,
                            const RepMorphism& f) {
  DimVector dims = a.dims();
  dims.insert(dims.end(), b.dims().begin(), b.dims().end());
  std::vector<fq::FqMatrix> maps = a.maps();
  maps.insert(maps.end(), b.maps().begin(), b.maps().end());
  maps.insert(maps.end(), f.components().begin(), f.components().end());
  return Representation(aq, a.modulus(), std::move(dims), std::move(maps));
}

struct CommaOrbit {
  RepMorphism f;
  std::uint64_t size;
};

// Aut(a)-orbits of Hom(a, b) under precomposition, keyed by their least member.
std::vector<CommaOrbit> comma_orbits(const Representation& a, const Representation& b,
                                     const std::vector<RepMorphism>& auts, const EnumerationLimits& limits) {
  const HomSpace hom(a, b);
  std::vector<bool> visited(hom.size(limits), false);
  std::vector<CommaOrbit> out;
  hom.for_each(limits, [&](std::uint64_t index, const RepMorphism& f) {
    if (visited[index]) return;
    std::uint64_t size = 0;
    for (const auto& g : auts) {
      const auto j = hom.index_of(compose(f, g));
      if (!visited[j]) {
        visited[j] = true;
        ++size;
      }
    }
    out.push_back({f, size});
  });
  return out;
}

}  // namespace

std::string class_component(IsoClassId id) { return "c" + std::to_string(id.value); }

SpanModel build_span_model(const Catalog& cat) {
  SpanModel span;
  span.catalog = &cat;
  const auto aq = arrow_quiver(*cat.quiver());
  const auto n = cat.size();

  std::vector<lf::Component> x0;
  std::vector<std::vector<RepMorphism>> auts(n);
  for (const auto& e : cat.entries()) {
    auts[e.id.value] = automorphisms(e.representative, cat.limits());
    x0.push_back({class_component(e.id), {auts[e.id.value].size()}});
    span.classes[class_component(e.id)] = e.id;
  }
  span.x0 = std::make_shared<const lf::LFType>(std::move(x0));
  span.x0x0 = std::make_shared<const lf::LFType>(lf::lf_product(*span.x0, *span.x0));

  std::vector<lf::Component> x1, x1_mono;
  std::map<std::string, std::string> t_map, sc_map;
  std::map<std::string, std::vector<lf::Component>> t_fiber, sc_fiber;
  std::map<std::string, std::map<std::string, std::string>> t_incl, sc_incl;

  for (const auto& ea : cat.entries()) {
    const auto& a = ea.representative;
    const auto aut_a = auts[ea.id.value].size();
    for (const auto& eb : cat.entries()) {
      const auto& b = eb.representative;
      const auto aut_b = auts[eb.id.value].size();
      const auto target = class_component(eb.id);
      const auto prefix = std::to_string(ea.id.value) + "." + std::to_string(eb.id.value) + ".";
      const auto comma = comma_orbits(a, b, auts[ea.id.value], cat.limits());

      // Group the Aut(a)-orbits into Aut(a) x Aut(b)-orbits.
      std::vector<Representation> reps;
      std::vector<std::size_t> first;
      std::vector<std::uint64_t> sizes;
      for (std::size_t k = 0; k < comma.size(); ++k) {
        auto obj = arrow_object(aq, a, b, comma[k].f);
        std::size_t orbit = reps.size();
        for (std::size_t r = 0; r < reps.size(); ++r) {
          if (is_isomorphic(obj, reps[r], cat.limits())) {
            orbit = r;
            break;
          }
        }
        if (orbit == reps.size()) {
          reps.push_back(std::move(obj));
          first.push_back(k);
          sizes.push_back(0);
        }
        sizes[orbit] += comma[k].size;
        const auto cid = "u" + prefix + std::to_string(k);
        t_fiber[target].push_back({cid, {aut_a / comma[k].size}});
        t_incl[target][cid] = "f" + prefix + std::to_string(orbit);
      }

      for (std::size_t r = 0; r < reps.size(); ++r) {
        const auto id = "f" + prefix + std::to_string(r);
        if ((aut_a * aut_b) % sizes[r] != 0) throw std::logic_error("orbit size does not divide the group order");
        const std::uint64_t stab = aut_a * aut_b / sizes[r];
        x1.push_back({id, {stab}});
        t_map[id] = target;
        const auto& f = comma[first[r]].f;
        if (!is_mono(f)) continue;
        x1_mono.push_back({id, {stab}});
        const auto y = cat.classify(kernel_cokernel(f, a, b).cokernel);
        const auto base = lf::product_id(class_component(ea.id), class_component(y));
        sc_map[id] = base;
        // Components of the fiber over (a, y) lying over f: each has pi_1 of
        // order |Hom(y, a)|, and there are |Aut a||Aut y||Hom(y, a)| / |Stab f| of them.
        std::uint64_t hom_ya = 1;
        for (std::size_t i = 0; i < cat.hom_dim(y, ea.id); ++i) hom_ya *= cat.modulus();
        const std::uint64_t total = aut_a * auts[y.value].size() * hom_ya;
        if (total % stab != 0) throw std::logic_error("extension fiber count is not integral");
        for (std::uint64_t k = 0; k < total / stab; ++k) {
          const auto eid = "e" + prefix + std::to_string(r) + "." + std::to_string(k);
          sc_fiber[base].push_back({eid, {hom_ya}});
          sc_incl[base][eid] = id;
        }
      }
    }
  }

  span.x1 = std::make_shared<const lf::LFType>(std::move(x1));
  span.x1_mono = std::make_shared<const lf::LFType>(std::move(x1_mono));
  span.t = lf::ProperMapData{span.x1, span.x0, std::move(t_map), {}};
  for (auto& [z, comps] : t_fiber) span.t.fibers[z] = lf::Fiber{lf::LFType(std::move(comps)), std::move(t_incl[z])};
  span.s_c = lf::ProperMapData{span.x1_mono, span.x0x0, std::move(sc_map), {}};
  for (auto& [b, comps] : sc_fiber) span.s_c.fibers[b] = lf::Fiber{lf::LFType(std::move(comps)), std::move(sc_incl[b])};
  span.t.validate();
  span.s_c.validate();
  return span;
}

ClassicalElement mu_span(const ClassicalElement& a, const ClassicalElement& b, const SpanModel& span) {
  const auto& cat = *span.catalog;
  lf::FiniteSupportFn fa(span.x0), fb(span.x0);
  for (const auto& [x, c] : a.terms()) fa.set(class_component(x), c);
  for (const auto& [y, c] : b.terms()) {
    fb.set(class_component(y), c);
    for (const auto& [x, unused] : a.terms()) {
      if (!dims_leq(dims_add(cat.dims(x), cat.dims(y)), cat.bound())) {
        throw OutOfUniverse("span product of classes " + std::to_string(x.value) + " and " +
                            std::to_string(y.value) + " exceeds the dimension bound");
      }
    }
  }
  const auto pulled = lf::pullback(span.s_c, lf::tensor(fa, fb, span.x0x0));
  lf::FiniteSupportFn extended(span.x1);
  for (const auto& [id, v] : pulled.values()) extended.set(id, v);
  ClassicalElement out;
  const auto pushed = lf::pushforward(span.t, extended);
  for (const auto& [id, v] : pushed.values()) out.add(span.classes.at(id), v);
  return out;
}

}  // namespace hall

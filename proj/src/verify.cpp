#include "hall/verify.hpp"

#include <array>
#include <optional>
#include <random>

#include "hall/derived_hom.hpp"
#include "hall/io.hpp"
#include "hall/span_model.hpp"

namespace hall {

using json = nlohmann::json;

namespace {

std::string label(IsoClassId id) { return class_component(id); }
std::string label(const DerivedClass& x) { return x.to_string(); }

template <class Basis>
json element_json(const HallElement<Basis>& e) {
  json out = json::array();
  for (const auto& [b, c] : e.terms()) out.push_back({{"class", label(b)}, {"coeff", format_rational(c)}});
  return out;
}

json orbit_json(const OrbitReport& r) {
  return {{"lhs", format_rational(r.lhs)},
          {"rhs", format_rational(r.rhs)},
          {"uninverted", format_rational(r.uninverted)},
          {"members", r.members},
          {"group_order", r.group_order},
          {"orbits", r.orbits},
          {"free", r.free}};
}

// Runs fn on every case (possibly in parallel); fn returns a failure record or
// nullopt. Failures are listed in case order.
template <class Case, class Fn>
json run_cases(const std::vector<Case>& cases, unsigned workers, Fn&& fn) {
  std::vector<std::optional<json>> results(cases.size());
  parallel_for(cases.size(), workers, [&](std::size_t i) {
    try {
      results[i] = fn(cases[i]);
    } catch (const OutOfUniverse& e) {
      results[i] = json{{"case", i}, {"error", e.what()}};
    }
  });
  json failures = json::array();
  for (auto& r : results)
    if (r) failures.push_back(std::move(*r));
  return {{"cases", cases.size()}, {"failures", failures}};
}

std::set<std::string> select(const VerifyConfig& config, const std::set<std::string>& known, const char* mode) {
  if (config.checks.empty()) return known;
  for (const auto& c : config.checks) {
    if (!known.count(c)) throw InvalidInput("check '" + c + "' is not available in " + mode + " mode");
  }
  return config.checks;
}

json finish(json report, json checks) {
  std::size_t failures = 0;
  for (auto& [name, c] : checks.items()) {
    const auto n = c["failures"].size();
    c["status"] = n == 0 ? "pass" : "fail";
    failures += n;
  }
  report["schema"] = 1;
  report["checks"] = std::move(checks);
  report["failures"] = failures;
  report["status"] = failures == 0 ? "pass" : "fail";
  return report;
}

template <class Basis, class Hall>
StructureTable<Basis> build_table(const Hall& hall, const std::vector<Basis>& basis, unsigned workers) {
  std::vector<std::pair<Basis, Basis>> pairs;
  for (const auto& x : basis)
    for (const auto& y : basis)
      if (hall.in_bound(x, y)) pairs.emplace_back(x, y);
  std::vector<HallElement<Basis>> products(pairs.size());
  parallel_for(pairs.size(), workers, [&](std::size_t i) { products[i] = hall.product(pairs[i].first, pairs[i].second); });
  StructureTable<Basis> table;
  for (std::size_t i = 0; i < pairs.size(); ++i) table.set_product(pairs[i].first, pairs[i].second, std::move(products[i]));
  return table;
}

template <class Basis>
std::optional<json> unit_case(const StructureTable<Basis>& table, const Basis& zero, const Basis& a) {
  const auto chi = HallElement<Basis>::basis(a);
  const auto* left = table.product(zero, a);
  const auto* right = table.product(a, zero);
  if (left && right && *left == chi && *right == chi) return std::nullopt;
  return json{{"class", label(a)},
              {"left", left ? element_json(*left) : json(nullptr)},
              {"right", right ? element_json(*right) : json(nullptr)}};
}

template <class Basis>
std::optional<json> assoc_case(const StructureTable<Basis>& table, const std::array<Basis, 3>& t) {
  const auto ca = HallElement<Basis>::basis(t[0]);
  const auto cb = HallElement<Basis>::basis(t[1]);
  const auto cc = HallElement<Basis>::basis(t[2]);
  const auto left = multiply(table, multiply(table, ca, cb), cc);
  const auto right = multiply(table, ca, multiply(table, cb, cc));
  if (left == right) return std::nullopt;
  return json{{"a", label(t[0])},
              {"b", label(t[1])},
              {"c", label(t[2])},
              {"left", element_json(left)},
              {"right", element_json(right)}};
}

// Orbit-stabilizer on every (x, y, z) with nonzero structure constant; the
// uninverted reading is logged beside the check.
template <class Basis, class Check>
json orbit_check(const StructureTable<Basis>& table, unsigned workers, Check&& check) {
  std::vector<std::array<Basis, 3>> cases;
  for (const auto& [pair, product] : table.entries())
    for (const auto& [z, c] : product.terms()) cases.push_back({pair.first, pair.second, z});
  std::vector<OrbitReport> reports(cases.size());
  auto out = run_cases(cases, workers, [&](const std::array<Basis, 3>& t) -> std::optional<json> {
    const auto i = static_cast<std::size_t>(&t - cases.data());
    reports[i] = check(t[0], t[2], t[1]);
    if (reports[i].equal) return std::nullopt;
    auto j = orbit_json(reports[i]);
    j["x"] = label(t[0]);
    j["y"] = label(t[1]);
    j["z"] = label(t[2]);
    return j;
  });
  json fails = json::array();
  std::size_t non_free = 0;
  for (std::size_t i = 0; i < cases.size(); ++i) {
    if (!reports[i].free) ++non_free;
    if (reports[i].uninverted_equal) continue;
    auto j = orbit_json(reports[i]);
    j["x"] = label(cases[i][0]);
    j["y"] = label(cases[i][1]);
    j["z"] = label(cases[i][2]);
    fails.push_back(std::move(j));
  }
  out["non_free_cases"] = non_free;
  out["uninverted_reading"] = {{"holds", cases.size() - fails.size()}, {"fails", fails.size()}, {"counterexamples", fails}};
  return out;
}

std::vector<DimVector> degree_sum(const std::vector<std::vector<DimVector>>& parts) {
  std::vector<DimVector> out = parts.front();
  for (std::size_t k = 1; k < parts.size(); ++k)
    for (std::size_t n = 0; n < out.size(); ++n) out[n] = dims_add(out[n], parts[k][n]);
  return out;
}

}  // namespace

std::set<std::string> classical_checks() { return {"unit", "assoc", "riedtmann", "span", "stalk", "orbit"}; }
std::set<std::string> derived_checks() { return {"unit", "assoc", "stalk", "orbit", "finitary", "homotopy"}; }

StructureTable<IsoClassId> classical_table(const ClassicalHall& hall, unsigned workers) {
  return build_table(hall, hall.basis(), workers);
}

StructureTable<DerivedClass> derived_table(const DerivedHall& hall, unsigned workers) {
  return build_table(hall, hall.basis(), workers);
}

json verify_classical(const ClassicalHall& hall, const VerifyConfig& config, const StructureTable<IsoClassId>* table) {
  const auto checks = select(config, classical_checks(), "classical");
  const auto& cat = hall.catalog();
  const auto basis = hall.basis();
  const auto w = config.workers;
  StructureTable<IsoClassId> computed;
  if (!table) {
    computed = classical_table(hall, w);
    table = &computed;
  }

  std::vector<std::array<IsoClassId, 3>> all_triples, bound_triples;
  std::vector<std::pair<IsoClassId, IsoClassId>> pairs;
  for (const auto& x : basis) {
    for (const auto& y : basis) {
      if (hall.in_bound(x, y)) pairs.emplace_back(x, y);
      for (const auto& z : basis) {
        all_triples.push_back({x, y, z});
        if (dims_leq(dims_add(dims_add(cat.dims(x), cat.dims(y)), cat.dims(z)), cat.bound())) {
          bound_triples.push_back({x, y, z});
        }
      }
    }
  }

  json out;
  if (checks.count("unit")) {
    out["unit"] = run_cases(basis, w, [&](IsoClassId a) { return unit_case(*table, Catalog::zero(), a); });
  }
  if (checks.count("assoc")) {
    out["assoc"] = run_cases(bound_triples, w, [&](const auto& t) { return assoc_case(*table, t); });
  }
  if (checks.count("riedtmann")) {
    out["riedtmann"] = run_cases(all_triples, w, [&](const auto& t) -> std::optional<json> {
      const auto sequences = hall.count_exact_sequences(t[0], t[1], t[2]);
      const auto g = hall.hall_number(t[0], t[1], t[2]);
      const auto expected = g * cat.aut_order(t[0]) * cat.aut_order(t[1]);
      if (sequences == expected) return std::nullopt;
      return json{{"x", label(t[0])}, {"y", label(t[1])}, {"z", label(t[2])},
                  {"exact_sequences", sequences}, {"hall_number", g}, {"expected", expected}};
    });
  }
  if (checks.count("span")) {
    const auto span = build_span_model(cat);
    out["span"] = run_cases(pairs, w, [&](const auto& p) -> std::optional<json> {
      const auto via_span = mu_span(ClassicalElement::basis(p.first), ClassicalElement::basis(p.second), span);
      const auto* direct = table->product(p.first, p.second);
      if (direct && via_span == *direct) return std::nullopt;
      return json{{"x", label(p.first)}, {"y", label(p.second)}, {"span", element_json(via_span)},
                  {"formula", direct ? element_json(*direct) : json(nullptr)}};
    });
  }
  if (checks.count("stalk")) {
    const DerivedHall derived(cat, Window{0, 0});
    std::vector<std::array<IsoClassId, 3>> cases;
    for (const auto& [x, y] : pairs)
      for (const auto& z : basis)
        if (cat.dims(z) == dims_add(cat.dims(x), cat.dims(y))) cases.push_back({x, y, z});
    out["stalk"] = run_cases(cases, w, [&](const auto& t) -> std::optional<json> {
      const Rational classical(static_cast<unsigned long>(hall.hall_number(t[0], t[1], t[2])));
      const auto d = derived.hall_number(DerivedClass::stalk(t[0]), DerivedClass::stalk(t[1]), DerivedClass::stalk(t[2]));
      if (d == classical) return std::nullopt;
      return json{{"x", label(t[0])}, {"y", label(t[1])}, {"z", label(t[2])},
                  {"classical", format_rational(classical)}, {"derived", format_rational(d)}};
    });
  }
  if (checks.count("orbit")) {
    out["orbit"] = orbit_check(*table, w, [&](IsoClassId x, IsoClassId z, IsoClassId y) {
      return hall.orbit_stabilizer_check(x, z, y);
    });
  }

  json report{{"mode", "classical"}, {"p", cat.modulus()}, {"bound", cat.bound()}, {"quiver", io::quiver_to_json(*cat.quiver())}};
  return finish(std::move(report), std::move(out));
}

json verify_derived(const DerivedHall& hall, const VerifyConfig& config, const StructureTable<DerivedClass>* table) {
  const auto checks = select(config, derived_checks(), "derived");
  const auto& cat = hall.catalog();
  const auto& win = hall.window();
  const auto& basis = hall.basis();
  const auto w = config.workers;
  StructureTable<DerivedClass> computed;
  if (!table) {
    computed = derived_table(hall, w);
    table = &computed;
  }

  json out;
  if (checks.count("unit")) {
    out["unit"] = run_cases(basis, w, [&](const DerivedClass& a) { return unit_case(*table, DerivedClass(), a); });
  }
  if (checks.count("assoc")) {
    std::vector<std::array<DerivedClass, 3>> triples;
    for (const auto& [pair, unused] : table->entries()) {
      const auto ab = degree_sum({pair.first.dims(cat, win), pair.second.dims(cat, win)});
      for (const auto& c : basis) {
        const auto abc = degree_sum({ab, c.dims(cat, win)});
        bool ok = true;
        for (const auto& d : abc) ok = ok && dims_leq(d, cat.bound());
        if (ok) triples.push_back({pair.first, pair.second, c});
      }
    }
    out["assoc"] = run_cases(triples, w, [&](const auto& t) { return assoc_case(*table, t); });
  }
  if (checks.count("stalk")) {
    std::vector<std::array<IsoClassId, 3>> cases;
    if (win.contains(0)) {
      for (const auto& x : cat.entries())
        for (const auto& y : cat.entries())
          for (const auto& z : cat.entries())
            if (hall.in_bound(DerivedClass::stalk(x.id), DerivedClass::stalk(y.id)) &&
                z.representative.dims() == dims_add(x.representative.dims(), y.representative.dims()))
              cases.push_back({x.id, y.id, z.id});
    }
    const ClassicalHall classical(cat);
    out["stalk"] = run_cases(cases, w, [&](const auto& t) -> std::optional<json> {
      const Rational c(static_cast<unsigned long>(classical.hall_number(t[0], t[1], t[2])));
      const auto d = hall.hall_number(DerivedClass::stalk(t[0]), DerivedClass::stalk(t[1]), DerivedClass::stalk(t[2]));
      if (c == d) return std::nullopt;
      return json{{"x", label(t[0])}, {"y", label(t[1])}, {"z", label(t[2])},
                  {"classical", format_rational(c)}, {"derived", format_rational(d)}};
    });
  }
  if (checks.count("orbit")) {
    out["orbit"] = orbit_check(*table, w, [&](const DerivedClass& x, const DerivedClass& z, const DerivedClass& y) {
      return hall.orbit_stabilizer_check(x, z, y);
    });
  }
  if (checks.count("finitary")) {
    // Hom_D(M[-d], N[-e][i]) = Ext^{d-e+i}(M, N) vanishes unless d - e + i is 0 or 1.
    const int reach = win.span() + 3;
    std::vector<std::pair<DerivedClass, DerivedClass>> pairs;
    for (const auto& x : basis)
      for (const auto& z : basis) pairs.emplace_back(x, z);
    auto result = run_cases(pairs, w, [&](const auto& p) -> std::optional<json> {
      const auto& [x, z] = p;
      int lo = 1, hi = 0;
      if (!x.is_zero() && !z.is_zero()) {
        lo = z.terms().front().degree - x.terms().back().degree;
        hi = z.terms().back().degree - x.terms().front().degree + 1;
      }
      json bad = json::array();
      for (int i = -reach; i <= reach; ++i) {
        if (lo <= i && i <= hi) continue;
        if (auto d = hall::ext_dim(x, z, i, cat)) bad.push_back({{"i", i}, {"dim", d}});
      }
      if (bad.empty()) return std::nullopt;
      return json{{"x", label(x)}, {"z", label(z)}, {"nonzero", bad}};
    });
    result["shifts_per_pair"] = 2 * reach + 1;
    out["finitary"] = std::move(result);
  }
  if (checks.count("homotopy")) {
    std::mt19937_64 rng(config.seed);
    json failures = json::array();
    for (std::size_t trial = 0; trial < config.homotopy_trials; ++trial) {
      const auto& x = basis[rng() % basis.size()];
      const auto& z = basis[rng() % basis.size()];
      const DerivedHom hom(x, z, cat);
      const auto f = hom.representative(rng() % hom.size(cat.limits()));
      const auto moved = f + hom.random_null_homotopic(rng);
      const auto before = try_derived_class_of(mapping_cone(f), cat);
      const auto after = try_derived_class_of(mapping_cone(moved), cat);
      if (before == after) continue;
      failures.push_back({{"trial", trial}, {"x", label(x)}, {"z", label(z)},
                          {"before", before ? label(*before) : "outside bound"},
                          {"after", after ? label(*after) : "outside bound"}});
    }
    out["homotopy"] = {{"cases", config.homotopy_trials}, {"seed", config.seed}, {"failures", failures}};
  }

  json report{{"mode", "derived"}, {"p", cat.modulus()}, {"bound", cat.bound()},
              {"window", {win.lo, win.hi}}, {"quiver", io::quiver_to_json(*cat.quiver())}};
  return finish(std::move(report), std::move(out));
}

}  // namespace hall

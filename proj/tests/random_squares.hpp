#pragma once

// Random compatible base-change squares X' -> X over Y' -> Y. X' is built as
// the pullback on components, so the g-fibers are copies of the f-fibers.

#include <memory>
#include <random>
#include <string>

#include "hall/lf_calculus.hpp"

namespace oracle {

inline std::vector<std::uint64_t> random_orders(std::mt19937_64& rng, std::uint64_t max_order) {
  std::vector<std::uint64_t> orders(rng() % 4);
  for (auto& o : orders) o = 1 + rng() % max_order;
  return orders;
}

inline std::shared_ptr<const hall::lf::LFType> random_type(std::mt19937_64& rng, const std::string& prefix,
                                                            std::size_t count, std::uint64_t max_order) {
  std::vector<hall::lf::Component> comps;
  for (std::size_t i = 0; i < count; ++i) comps.push_back({prefix + std::to_string(i), random_orders(rng, max_order)});
  return std::make_shared<const hall::lf::LFType>(std::move(comps));
}

// Random fibers over each target component covering its preimages; each
// preimage is hit by one or two fiber components.
inline void random_fibers(std::mt19937_64& rng, hall::lf::ProperMapData& m, std::uint64_t max_order) {
  for (const auto& y : m.target->components()) {
    std::vector<hall::lf::Component> comps;
    std::map<std::string, std::string> incl;
    for (const auto& x : m.source->components()) {
      if (m.component_map.at(x.id) != y.id) continue;
      const auto copies = 1 + rng() % 2;
      for (std::size_t k = 0; k < copies; ++k) {
        const auto id = "F" + y.id + "." + std::to_string(comps.size());
        comps.push_back({id, random_orders(rng, max_order)});
        incl[id] = x.id;
      }
    }
    if (!comps.empty()) m.fibers[y.id] = hall::lf::Fiber{hall::lf::LFType(std::move(comps)), std::move(incl)};
  }
}

inline hall::lf::BaseChangeSquare random_square(std::mt19937_64& rng, std::size_t max_components = 5,
                                                std::uint64_t max_order = 8) {
  using namespace hall::lf;
  while (true) {
    auto y = random_type(rng, "y", 1 + rng() % max_components, max_order);
    auto x = random_type(rng, "x", 1 + rng() % max_components, max_order);
    auto yp = random_type(rng, "w", 1 + rng() % max_components, max_order);

    ProperMapData f{x, y, {}, {}};
    for (const auto& c : x->components()) f.component_map[c.id] = y->components()[rng() % y->size()].id;
    random_fibers(rng, f, max_order);
    ProperMapData u{yp, y, {}, {}};
    for (const auto& c : yp->components()) u.component_map[c.id] = y->components()[rng() % y->size()].id;
    random_fibers(rng, u, max_order);

    std::vector<Component> xp_comps;
    std::map<std::string, std::string> to_yp, to_x;
    for (const auto& w : yp->components()) {
      for (const auto& c : x->components()) {
        if (f.component_map.at(c.id) != u.component_map.at(w.id)) continue;
        const auto id = product_id(w.id, c.id);
        xp_comps.push_back({id, random_orders(rng, max_order)});
        to_yp[id] = w.id;
        to_x[id] = c.id;
      }
    }
    if (xp_comps.size() > max_components) continue;
    auto xp = std::make_shared<const LFType>(std::move(xp_comps));

    BaseChangeSquare sq{f, u, ProperMapData{xp, yp, to_yp, {}}, ProperMapData{xp, x, to_x, {}}, {}};
    for (const auto& w : yp->components()) {
      const auto* ff = f.fiber(u.component_map.at(w.id));
      if (!ff) continue;
      std::vector<Component> comps;
      std::map<std::string, std::string> incl;
      for (const auto& c : ff->type.components()) {
        const auto id = w.id + ":" + c.id;
        comps.push_back({id, c.orders});
        incl[id] = product_id(w.id, ff->incl.at(c.id));
        sq.witness[w.id][id] = c.id;
      }
      sq.g.fibers[w.id] = Fiber{LFType(std::move(comps)), std::move(incl)};
    }
    random_fibers(rng, sq.v, max_order);
    return sq;
  }
}

}  // namespace oracle

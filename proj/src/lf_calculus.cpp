#include "hall/lf_calculus.hpp"

#include <algorithm>
#include <set>

#include "hall/error.hpp"

namespace hall::lf {

LFType::LFType(std::vector<Component> components) : components_(std::move(components)) {
  for (std::size_t i = 0; i < components_.size(); ++i) {
    const auto& c = components_[i];
    if (!index_.emplace(c.id, i).second) throw InvalidInput("duplicate component id '" + c.id + "'");
    for (auto o : c.orders) {
      if (o == 0) throw InvalidInput("component '" + c.id + "' has a homotopy group of order 0");
    }
  }
}

LFType LFType::point() { return LFType({{"pt", {}}}); }

const Component& LFType::component(const std::string& id) const {
  auto it = index_.find(id);
  if (it == index_.end()) throw InvalidInput("unknown component '" + id + "'");
  return components_[it->second];
}

Rational component_weight(const Component& c) {
  Rational w(1);
  for (std::size_t i = 0; i < c.orders.size(); ++i) {
    const Rational o(static_cast<unsigned long>(c.orders[i]));
    // orders[0] is pi_1, which enters inverted.
    if (i % 2 == 0) {
      w /= o;
    } else {
      w *= o;
    }
  }
  return w;
}

Rational LFType::weight(const std::string& id) const { return component_weight(component(id)); }

Rational LFType::cardinality() const {
  Rational total(0);
  for (const auto& c : components_) total += component_weight(c);
  return total;
}

FiniteSupportFn FiniteSupportFn::characteristic(TypePtr base, const std::string& id) {
  FiniteSupportFn f(std::move(base));
  f.set(id, 1);
  return f;
}

Rational FiniteSupportFn::operator()(const std::string& id) const {
  auto it = values_.find(id);
  return it == values_.end() ? Rational(0) : it->second;
}

void FiniteSupportFn::set(const std::string& id, const Rational& value) {
  if (!base_->contains(id)) throw InvalidInput("value for unknown component '" + id + "'");
  Rational v = value;
  v.canonicalize();
  if (v == 0) {
    values_.erase(id);
  } else {
    values_[id] = v;
  }
}

void FiniteSupportFn::add(const std::string& id, const Rational& value) { set(id, (*this)(id) + value); }

namespace {

void require_same_base(const TypePtr& a, const TypePtr& b, const char* what) {
  if (a != b && !(*a == *b)) throw InvalidInput(std::string(what) + ": function lives on a different type");
}

}  // namespace

FiniteSupportFn operator+(const FiniteSupportFn& a, const FiniteSupportFn& b) {
  require_same_base(a.base_, b.base_, "sum");
  auto out = a;
  for (const auto& [id, v] : b.values_) out.add(id, v);
  return out;
}

FiniteSupportFn operator*(const Rational& s, const FiniteSupportFn& a) {
  FiniteSupportFn out(a.base_);
  for (const auto& [id, v] : a.values_) out.set(id, s * v);
  return out;
}

bool operator==(const FiniteSupportFn& a, const FiniteSupportFn& b) {
  return (a.base_ == b.base_ || *a.base_ == *b.base_) && a.values_ == b.values_;
}

void ProperMapData::validate() const {
  if (!source || !target) throw InvalidInput("proper map without source or target");
  std::map<std::string, std::set<std::string>> preimages;
  for (const auto& c : source->components()) {
    auto it = component_map.find(c.id);
    if (it == component_map.end()) throw InvalidInput("component map misses source component '" + c.id + "'");
    if (!target->contains(it->second)) {
      throw InvalidInput("component '" + c.id + "' maps to unknown target component '" + it->second + "'");
    }
    preimages[it->second].insert(c.id);
  }
  if (component_map.size() != source->size()) throw InvalidInput("component map lists unknown source components");
  for (const auto& [y, fiber] : fibers) {
    if (!target->contains(y)) throw InvalidInput("fiber over unknown target component '" + y + "'");
    std::set<std::string> hit;
    for (const auto& c : fiber.type.components()) {
      auto it = fiber.incl.find(c.id);
      if (it == fiber.incl.end()) throw InvalidInput("fiber over '" + y + "' does not place component '" + c.id + "'");
      auto m = component_map.find(it->second);
      if (m == component_map.end() || m->second != y) {
        throw InvalidInput("fiber over '" + y + "' includes '" + it->second + "', which does not lie over it");
      }
      hit.insert(it->second);
    }
    if (fiber.incl.size() != fiber.type.size()) throw InvalidInput("fiber over '" + y + "' places unknown components");
    if (hit != preimages[y]) throw InvalidInput("fiber over '" + y + "' does not cover its preimages");
  }
  for (const auto& [y, pre] : preimages) {
    if (!pre.empty() && !fibers.count(y)) throw InvalidInput("missing fiber over '" + y + "'");
  }
}

const Fiber* ProperMapData::fiber(const std::string& target_id) const {
  auto it = fibers.find(target_id);
  return it == fibers.end() ? nullptr : &it->second;
}

ProperMapData ProperMapData::identity(TypePtr x) {
  ProperMapData f{x, x, {}, {}};
  for (const auto& c : x->components()) {
    f.component_map[c.id] = c.id;
    f.fibers[c.id] = Fiber{LFType({{c.id, {}}}), {{c.id, c.id}}};
  }
  return f;
}

ProperMapData ProperMapData::to_point(TypePtr x) {
  auto pt = std::make_shared<const LFType>(LFType::point());
  ProperMapData f{x, pt, {}, {}};
  Fiber fib{*x, {}};
  for (const auto& c : x->components()) {
    f.component_map[c.id] = "pt";
    fib.incl[c.id] = c.id;
  }
  f.fibers["pt"] = std::move(fib);
  return f;
}

FiniteSupportFn pushforward(const ProperMapData& f, const FiniteSupportFn& a) {
  require_same_base(a.base(), f.source, "pushforward");
  FiniteSupportFn out(f.target);
  for (const auto& [y, fiber] : f.fibers) {
    Rational sum(0);
    for (const auto& c : fiber.type.components()) {
      const auto value = a(fiber.incl.at(c.id));
      if (value != 0) sum += value * component_weight(c);
    }
    out.set(y, sum);
  }
  return out;
}

FiniteSupportFn pullback(const ProperMapData& f, const FiniteSupportFn& b) {
  require_same_base(b.base(), f.target, "pullback");
  FiniteSupportFn out(f.source);
  for (const auto& [x, y] : f.component_map) {
    const auto value = b(y);
    if (value != 0) out.set(x, value);
  }
  return out;
}

std::string product_id(const std::string& a, const std::string& b) { return "(" + a + "," + b + ")"; }

LFType lf_product(const LFType& x, const LFType& y) {
  std::vector<Component> comps;
  for (const auto& a : x.components()) {
    for (const auto& b : y.components()) {
      std::vector<std::uint64_t> orders(std::max(a.orders.size(), b.orders.size()), 1);
      for (std::size_t i = 0; i < orders.size(); ++i) {
        if (i < a.orders.size()) orders[i] *= a.orders[i];
        if (i < b.orders.size()) orders[i] *= b.orders[i];
      }
      comps.push_back({product_id(a.id, b.id), std::move(orders)});
    }
  }
  return LFType(std::move(comps));
}

FiniteSupportFn tensor(const FiniteSupportFn& a, const FiniteSupportFn& b, TypePtr product) {
  FiniteSupportFn out(std::move(product));
  for (const auto& [s, va] : a.values()) {
    for (const auto& [t, vb] : b.values()) out.set(product_id(s, t), va * vb);
  }
  return out;
}

BaseChangeReport check_base_change(const BaseChangeSquare& sq) {
  for (const auto* m : {&sq.f, &sq.u, &sq.g, &sq.v}) m->validate();
  require_same_base(sq.f.target, sq.u.target, "base change (Y)");
  require_same_base(sq.g.target, sq.u.source, "base change (Y')");
  require_same_base(sq.v.source, sq.g.source, "base change (X')");
  require_same_base(sq.v.target, sq.f.source, "base change (X)");

  for (const auto& c : sq.v.source->components()) {
    if (sq.f.component_map.at(sq.v.component_map.at(c.id)) != sq.u.component_map.at(sq.g.component_map.at(c.id))) {
      throw InvalidInput("base change square does not commute at '" + c.id + "'");
    }
  }
  for (const auto& yp : sq.u.source->components()) {
    const auto y = sq.u.component_map.at(yp.id);
    const auto* fg = sq.g.fiber(yp.id);
    const auto* ff = sq.f.fiber(y);
    const std::size_t ng = fg ? fg->type.size() : 0, nf = ff ? ff->type.size() : 0;
    if (ng != nf) throw InvalidInput("fibers over '" + yp.id + "' and '" + y + "' differ in size");
    if (ng == 0) continue;
    auto wit = sq.witness.find(yp.id);
    if (wit == sq.witness.end() || wit->second.size() != ng) {
      throw InvalidInput("witness over '" + yp.id + "' is missing or incomplete");
    }
    std::set<std::string> image;
    for (const auto& c : fg->type.components()) {
      auto it = wit->second.find(c.id);
      if (it == wit->second.end()) throw InvalidInput("witness over '" + yp.id + "' misses '" + c.id + "'");
      const auto& target = ff->type.component(it->second);
      if (target.orders != c.orders) {
        throw InvalidInput("witness over '" + yp.id + "' pairs components with different homotopy orders");
      }
      if (sq.v.component_map.at(fg->incl.at(c.id)) != ff->incl.at(target.id)) {
        throw InvalidInput("witness over '" + yp.id + "' is not induced by v");
      }
      image.insert(target.id);
    }
    if (image.size() != nf) throw InvalidInput("witness over '" + yp.id + "' is not a bijection");
  }

  BaseChangeReport report;
  for (const auto& x : sq.f.source->components()) {
    const auto chi = FiniteSupportFn::characteristic(sq.f.source, x.id);
    const auto lhs = pullback(sq.u, pushforward(sq.f, chi));
    const auto rhs = pushforward(sq.g, pullback(sq.v, chi));
    for (const auto& yp : sq.u.source->components()) {
      Rational dev = lhs(yp.id) - rhs(yp.id);
      if (dev < 0) dev = -dev;
      if (dev > report.max_deviation) report.max_deviation = dev;
    }
    ++report.checked;
  }
  report.equal = report.max_deviation == 0;
  return report;
}

}  // namespace hall::lf

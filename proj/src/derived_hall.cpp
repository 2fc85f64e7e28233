#include "hall/derived_hall.hpp"

#include <set>

#include "hall/derived_hom.hpp"

namespace hall {

namespace {

std::vector<long> alternating_dims(const std::vector<DimVector>& dims, const Window& w, std::size_t vertices) {
  std::vector<long> out(vertices, 0);
  for (int n = w.lo; n <= w.hi; ++n) {
    const auto& d = dims[static_cast<std::size_t>(n - w.lo)];
    for (std::size_t v = 0; v < vertices; ++v) {
      const long value = static_cast<long>(d[v]);
      out[v] += (n % 2 == 0) ? value : -value;
    }
  }
  return out;
}

}  // namespace

DerivedHall::DerivedHall(const Catalog& cat, Window window)
    : cat_(&cat), window_(window), universe_(derived_universe(cat, window)) {}

bool DerivedHall::in_universe(const DerivedClass& x) const {
  if (!x.in_window(window_)) return false;
  for (const auto& t : x.terms())
    if (t.id.value >= cat_->size()) return false;
  return true;
}

void DerivedHall::require_universe(const DerivedClass& x) const {
  if (!in_universe(x)) throw OutOfUniverse("derived class " + x.to_string() + " lies outside the universe");
}

bool DerivedHall::in_bound(const DerivedClass& x, const DerivedClass& y) const {
  const auto dx = x.dims(*cat_, window_);
  const auto dy = y.dims(*cat_, window_);
  for (std::size_t k = 0; k < dx.size(); ++k)
    if (!dims_leq(dims_add(dx[k], dy[k]), cat_->bound())) return false;
  return true;
}

std::vector<DerivedClass> DerivedHall::candidates(const DerivedClass& x, const DerivedClass& y) const {
  const auto dx = x.dims(*cat_, window_);
  const auto dy = y.dims(*cat_, window_);
  const auto vertices = cat_->quiver()->vertex_count();
  std::vector<DimVector> sum(dx.size());
  for (std::size_t k = 0; k < dx.size(); ++k) sum[k] = dims_add(dx[k], dy[k]);
  const auto target = alternating_dims(sum, window_, vertices);

  std::vector<std::vector<IsoClassId>> options(sum.size());
  for (std::size_t k = 0; k < sum.size(); ++k)
    for (const auto& e : cat_->entries())
      if (dims_leq(e.representative.dims(), sum[k])) options[k].push_back(e.id);

  std::vector<DerivedClass> out;
  std::vector<std::size_t> pick(sum.size(), 0);
  while (true) {
    std::vector<DimVector> dz;
    std::vector<DerivedClass::Term> terms;
    for (std::size_t k = 0; k < sum.size(); ++k) {
      const auto id = options[k][pick[k]];
      dz.push_back(cat_->dims(id));
      terms.push_back({window_.lo + static_cast<int>(k), id});
    }
    if (alternating_dims(dz, window_, vertices) == target) out.emplace_back(std::move(terms));
    std::size_t k = sum.size();
    while (k > 0) {
      --k;
      if (++pick[k] < options[k].size()) break;
      pick[k] = 0;
      if (k == 0) {
        std::sort(out.begin(), out.end());
        return out;
      }
    }
    if (sum.empty()) return out;
  }
}

const DerivedHall::ConeHistogram& DerivedHall::cones(const DerivedClass& x, const DerivedClass& z) const {
  const auto key = std::make_pair(x, z);
  {
    std::lock_guard lock(cache_->mutex);
    auto it = cache_->cones.find(key);
    if (it != cache_->cones.end()) return it->second;
  }
  ConeHistogram h;
  DerivedHom hom(x, z, *cat_);
  hom.for_each(cat_->limits(), [&](std::uint64_t, const ChainMap& f) {
    if (auto c = try_derived_class_of(mapping_cone(f), *cat_)) {
      ++h.counts[*c];
    } else {
      ++h.escaped;
    }
  });
  std::lock_guard lock(cache_->mutex);
  return cache_->cones.emplace(key, std::move(h)).first->second;
}

std::uint64_t DerivedHall::cone_count(const DerivedClass& x, const DerivedClass& z, const DerivedClass& y) const {
  const auto& h = cones(x, z);
  auto it = h.counts.find(y);
  return it == h.counts.end() ? 0 : it->second;
}

std::uint64_t DerivedHall::aut_order(const DerivedClass& x) const { return cone_count(x, x, DerivedClass()); }

std::size_t DerivedHall::ext_dim(const DerivedClass& x, const DerivedClass& z, int i) const {
  const auto key = std::make_tuple(x, z, i);
  {
    std::lock_guard lock(cache_->mutex);
    auto it = cache_->ext.find(key);
    if (it != cache_->ext.end()) return it->second;
  }
  const auto d = hall::ext_dim(x, z, i, *cat_);
  std::lock_guard lock(cache_->mutex);
  cache_->ext.emplace(key, d);
  return d;
}

Rational DerivedHall::hall_number(const DerivedClass& x, const DerivedClass& y, const DerivedClass& z) const {
  for (const auto* c : {&x, &y, &z}) require_universe(*c);
  const auto count = cone_count(x, z, y);
  if (count == 0) return 0;
  const Rational p(static_cast<unsigned long>(cat_->modulus()));
  // Ext^-i between classes in the window vanishes for i > span.
  long exponent = 0;
  for (int i = 1; i <= window_.span() + 1; ++i) {
    const long sign = (i % 2 == 0) ? 1 : -1;
    exponent += sign * (static_cast<long>(ext_dim(x, z, -i)) - static_cast<long>(ext_dim(x, x, -i)));
  }
  Rational g = Rational(static_cast<unsigned long>(count)) * rational_power(p, exponent) /
               Rational(static_cast<unsigned long>(aut_order(x)));
  g.canonicalize();
  return g;
}

DerivedElement DerivedHall::product(const DerivedClass& x, const DerivedClass& y) const {
  require_universe(x);
  require_universe(y);
  if (!in_bound(x, y)) {
    throw OutOfUniverse("product of " + x.to_string() + " and " + y.to_string() + " exceeds the dimension bound");
  }
  DerivedElement out;
  for (const auto& z : candidates(x, y)) {
    auto g = hall_number(x, y, z);
    if (g != 0) out.add(z, g);
  }
  return out;
}

DerivedElement DerivedHall::multiply(const DerivedElement& a, const DerivedElement& b) const {
  return multiply_with(a, b, [&](const DerivedClass& x, const DerivedClass& y) { return product(x, y); });
}

OrbitReport DerivedHall::orbit_stabilizer_check(const DerivedClass& x, const DerivedClass& z,
                                                const DerivedClass& y) const {
  const DerivedHom hxz(x, z, *cat_);
  const DerivedHom hxx(x, x, *cat_);
  std::vector<ChainMap> auts;
  hxx.for_each(cat_->limits(), [&](std::uint64_t, const ChainMap& g) {
    auto c = try_derived_class_of(mapping_cone(g), *cat_);
    if (c && c->is_zero()) auts.push_back(g);
  });
  OrbitReport r;
  r.group_order = auts.size();
  std::set<std::uint64_t> seen;
  hxz.for_each(cat_->limits(), [&](std::uint64_t index, const ChainMap& f) {
    auto c = try_derived_class_of(mapping_cone(f), *cat_);
    if (!c || *c != y) return;
    ++r.members;
    if (seen.count(index)) return;
    std::uint64_t stab = 0;
    for (const auto& g : auts) {
      const auto moved = hxz.class_index(compose(f, g));
      if (moved == index) ++stab;
      seen.insert(moved);
    }
    ++r.orbits;
    r.lhs += Rational(1, static_cast<unsigned long>(stab));
    r.uninverted += Rational(static_cast<unsigned long>(stab));
    if (stab != 1) r.free = false;
  });
  if (r.group_order) r.rhs = Rational(static_cast<unsigned long>(r.members), static_cast<unsigned long>(r.group_order));
  r.rhs.canonicalize();
  r.equal = r.lhs == r.rhs;
  r.uninverted_equal = r.uninverted == r.rhs;
  return r;
}

}  // namespace hall

#include "hall/classical_hall.hpp"

#include <set>

namespace hall {

namespace {

std::vector<fq::FqSubspace> column_spaces(const RepMorphism& f) {
  std::vector<fq::FqSubspace> out;
  for (const auto& m : f.components()) out.push_back(fq::FqSubspace::span_of_columns(m));
  return out;
}

}  // namespace

ClassicalHall::ClassicalHall(const Catalog& cat) : cat_(&cat) {}

std::vector<IsoClassId> ClassicalHall::basis() const {
  std::vector<IsoClassId> out;
  for (const auto& e : cat_->entries()) out.push_back(e.id);
  return out;
}

bool ClassicalHall::in_bound(IsoClassId x, IsoClassId y) const {
  return dims_leq(dims_add(cat_->dims(x), cat_->dims(y)), cat_->bound());
}

const ClassicalHall::Histogram& ClassicalHall::histogram(IsoClassId z) const {
  {
    std::lock_guard lock(cache_->mutex);
    auto it = cache_->subobjects.find(z.value);
    if (it != cache_->subobjects.end()) return it->second;
  }
  Histogram h;
  for (const auto& s : enumerate_subreps(cat_->representative(z), cat_->limits())) {
    ++h[{cat_->classify(s.sub).value, cat_->classify(s.quotient).value}];
  }
  std::lock_guard lock(cache_->mutex);
  return cache_->subobjects.emplace(z.value, std::move(h)).first->second;
}

std::uint64_t ClassicalHall::hall_number(IsoClassId x, IsoClassId y, IsoClassId z) const {
  if (dims_add(cat_->dims(x), cat_->dims(y)) != cat_->dims(z)) return 0;
  const auto& h = histogram(z);
  auto it = h.find({x.value, y.value});
  return it == h.end() ? 0 : it->second;
}

std::uint64_t ClassicalHall::count_exact_sequences(IsoClassId x, IsoClassId y, IsoClassId z) const {
  const auto& rx = cat_->representative(x);
  const auto& ry = cat_->representative(y);
  const auto& rz = cat_->representative(z);
  std::map<std::vector<fq::FqSubspace>, std::uint64_t> images;
  HomSpace(rx, rz).for_each(cat_->limits(), [&](std::uint64_t, const RepMorphism& i) {
    if (is_mono(i)) ++images[column_spaces(i)];
  });
  std::uint64_t total = 0;
  if (images.empty()) return 0;
  HomSpace(rz, ry).for_each(cat_->limits(), [&](std::uint64_t, const RepMorphism& p) {
    if (!is_epi(p)) return;
    auto it = images.find(column_spaces(kernel_cokernel(p, rz, ry).inclusion));
    if (it != images.end()) total += it->second;
  });
  return total;
}

ClassicalElement ClassicalHall::product(IsoClassId x, IsoClassId y) const {
  if (!in_bound(x, y)) {
    throw OutOfUniverse("product of classes " + std::to_string(x.value) + " and " + std::to_string(y.value) +
                        " exceeds the dimension bound");
  }
  const auto target = dims_add(cat_->dims(x), cat_->dims(y));
  ClassicalElement out;
  for (const auto& e : cat_->entries()) {
    if (e.representative.dims() != target) continue;
    if (auto g = hall_number(x, y, e.id)) out.add(e.id, Rational(static_cast<unsigned long>(g)));
  }
  return out;
}

ClassicalElement ClassicalHall::multiply(const ClassicalElement& a, const ClassicalElement& b) const {
  return multiply_with(a, b, [&](IsoClassId x, IsoClassId y) { return product(x, y); });
}

OrbitReport ClassicalHall::orbit_stabilizer_check(IsoClassId x, IsoClassId z, IsoClassId y) const {
  const auto& rx = cat_->representative(x);
  const auto& rz = cat_->representative(z);
  const auto auts = automorphisms(rx, cat_->limits());
  const HomSpace hom(rx, rz);
  OrbitReport r;
  r.group_order = auts.size();
  std::set<std::uint64_t> seen;
  hom.for_each(cat_->limits(), [&](std::uint64_t index, const RepMorphism& f) {
    if (!is_mono(f)) return;
    if (cat_->classify(kernel_cokernel(f, rx, rz).cokernel) != y) return;
    ++r.members;
    if (seen.count(index)) return;
    std::uint64_t stab = 0;
    for (const auto& g : auts) {
      const auto fg = compose(f, g);
      if (fg == f) ++stab;
      seen.insert(hom.index_of(fg));
    }
    ++r.orbits;
    r.lhs += Rational(1, static_cast<unsigned long>(stab));
    r.uninverted += Rational(static_cast<unsigned long>(stab));
    if (stab != 1) r.free = false;
  });
  if (r.group_order) r.rhs = Rational(static_cast<unsigned long>(r.members), static_cast<unsigned long>(r.group_order));
  r.rhs.canonicalize();
  r.lhs.canonicalize();
  r.equal = r.lhs == r.rhs;
  r.uninverted_equal = r.uninverted == r.rhs;
  return r;
}

}  // namespace hall

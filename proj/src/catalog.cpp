#include "hall/catalog.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace hall {

std::vector<DimVector> dim_vectors_below(const DimVector& bound) {
  std::vector<DimVector> out;
  DimVector v(bound.size(), 0);
  while (true) {
    out.push_back(v);
    std::size_t i = v.size();
    while (i > 0 && v[i - 1] == bound[i - 1]) v[--i] = 0;
    if (i == 0) break;
    ++v[i - 1];
  }
  std::stable_sort(out.begin(), out.end(), [](const DimVector& a, const DimVector& b) {
    const auto ta = dims_total(a), tb = dims_total(b);
    return ta != tb ? ta < tb : a < b;
  });
  return out;
}

namespace {

std::string format_dims(const DimVector& d) {
  std::string s = "(";
  for (std::size_t i = 0; i < d.size(); ++i) s += (i ? "," : "") + std::to_string(d[i]);
  return s + ")";
}

// Every arrow-matrix tuple with the given dimension vector, in lexicographic
// order of the flattened entries.
template <class Fn>
void for_each_representation(const QuiverPtr& q, fq::Elem p, const DimVector& dims,
                             const EnumerationLimits& limits, Fn&& fn) {
  std::size_t entries = 0;
  for (const auto& a : q->arrows()) entries += dims[a.dst] * dims[a.src];
  checked_power(p, entries, limits.max_candidates, "representations of dimension " + format_dims(dims));
  fq::Vector digits(entries, 0);
  while (true) {
    std::vector<fq::FqMatrix> maps;
    std::size_t k = 0;
    for (const auto& a : q->arrows()) {
      fq::FqMatrix m(dims[a.dst], dims[a.src], p);
      for (auto& e : m.data()) e = digits[k++];
      maps.push_back(std::move(m));
    }
    fn(Representation(q, p, dims, std::move(maps)));
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

}  // namespace

Catalog Catalog::build(QuiverPtr quiver, fq::Elem p, DimVector bound, EnumerationLimits limits) {
  fq::require_prime_modulus(p);
  if (!quiver) throw InvalidInput("catalog needs a quiver");
  if (bound.size() != quiver->vertex_count()) {
    throw InvalidInput("bound has " + std::to_string(bound.size()) + " entries, quiver has " +
                       std::to_string(quiver->vertex_count()) + " vertices");
  }
  Catalog cat;
  cat.quiver_ = quiver;
  cat.p_ = p;
  cat.bound_ = bound;
  cat.limits_ = limits;

  std::map<DimVector, std::vector<IsoClassId>> by_dims;
  for (const auto& dims : dim_vectors_below(bound)) {
    auto& same = by_dims[dims];
    for_each_representation(quiver, p, dims, limits, [&](Representation&& rep) {
      for (auto id : same) {
        if (is_isomorphic(cat.entries_[id.value].representative, rep, limits)) return;
      }
      IsoClassId id{cat.entries_.size()};
      same.push_back(id);
      cat.entries_.push_back({id, std::move(rep), false, {}});
    });
  }

  for (auto& e : cat.entries_) {
    const auto& d = e.representative.dims();
    if (dims_total(d) == 0) continue;
    bool split = false;
    for (std::size_t a = 1; a < e.id.value && !split; ++a) {
      const auto& ra = cat.entries_[a].representative;
      if (!dims_leq(ra.dims(), d)) continue;
      DimVector rest(d.size());
      for (std::size_t v = 0; v < d.size(); ++v) rest[v] = d[v] - ra.dim(v);
      if (dims_total(rest) == 0) continue;
      for (auto b : by_dims[rest]) {
        if (b.value < a) continue;
        if (is_isomorphic(direct_sum(ra, cat.entries_[b.value].representative), e.representative, limits)) {
          split = true;
          break;
        }
      }
    }
    e.indecomposable = !split;
    if (e.indecomposable) cat.indecomposables_.push_back(e.id);
  }

  for (auto& e : cat.entries_) {
    e.fingerprint = cat.fingerprint_of(e.representative);
    cat.buckets_[{e.representative.dims(), e.fingerprint}].push_back(e.id);
  }

  const auto n = cat.entries_.size();
  cat.hom_dim_.resize(n * n);
  cat.ext1_dim_.resize(n * n);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      const auto& x = cat.entries_[a].representative;
      const auto& y = cat.entries_[b].representative;
      cat.hom_dim_[a * n + b] = hall::hom_dim(x, y);
      cat.ext1_dim_[a * n + b] = hall::ext1_dim(x, y);
    }
  }
  return cat;
}

const CatalogEntry& Catalog::entry(IsoClassId id) const {
  if (id.value >= entries_.size()) {
    throw InvalidInput("unknown class id " + std::to_string(id.value));
  }
  return entries_[id.value];
}

std::vector<std::size_t> Catalog::fingerprint_of(const Representation& x) const {
  std::vector<std::size_t> f;
  f.reserve(indecomposables_.size());
  for (auto i : indecomposables_) f.push_back(hall::hom_dim(entries_[i.value].representative, x));
  return f;
}

std::optional<IsoClassId> Catalog::identify(const Representation& x) const {
  require_compatible(x, entries_.front().representative);
  if (!dims_leq(x.dims(), bound_)) return std::nullopt;
  auto it = buckets_.find({x.dims(), fingerprint_of(x)});
  if (it != buckets_.end()) {
    for (auto id : it->second) {
      if (is_isomorphic(entries_[id.value].representative, x, limits_)) return id;
    }
  }
  throw std::logic_error("representation of dimension " + format_dims(x.dims()) +
                         " inside the bound matches no catalog class");
}

IsoClassId Catalog::classify(const Representation& x) const {
  auto id = identify(x);
  if (!id) {
    throw OutOfUniverse("representation of dimension " + format_dims(x.dims()) +
                        " exceeds the catalog bound " + format_dims(bound_));
  }
  return *id;
}

std::optional<IsoClassId> Catalog::sum_class(IsoClassId a, IsoClassId b) const {
  if (a.value == 0) return b;
  if (b.value == 0) return a;
  return identify(direct_sum(representative(a), representative(b)));
}

std::uint64_t Catalog::aut_order(IsoClassId id) const {
  const auto& rep = representative(id);
  {
    std::lock_guard lock(aut_cache_->mutex);
    auto it = aut_cache_->orders.find(id.value);
    if (it != aut_cache_->orders.end()) return it->second;
  }
  const auto order = hall::aut_order(rep, limits_);
  std::lock_guard lock(aut_cache_->mutex);
  aut_cache_->orders.emplace(id.value, order);
  return order;
}

}  // namespace hall

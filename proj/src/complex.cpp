#include "hall/complex.hpp"

#include <algorithm>
#include <map>
#include <string>

namespace hall {

using fq::FqMatrix;

Complex::Complex(QuiverPtr quiver, fq::Elem p, int lo, std::vector<Representation> terms,
                 std::vector<RepMorphism> differentials)
    : quiver_(std::move(quiver)),
      p_(p),
      lo_(lo),
      terms_(std::move(terms)),
      differentials_(std::move(differentials)),
      zero_(Representation::zero(quiver_, p_)) {
  const auto expected = terms_.empty() ? 0 : terms_.size() - 1;
  if (differentials_.size() != expected) {
    throw InvalidInput("complex with " + std::to_string(terms_.size()) + " terms needs " +
                       std::to_string(expected) + " differentials");
  }
  for (const auto& t : terms_) require_compatible(t, zero_);
  for (std::size_t k = 0; k < differentials_.size(); ++k) {
    if (!is_intertwiner(differentials_[k], terms_[k], terms_[k + 1])) {
      throw InvalidInput("differential in degree " + std::to_string(lo_ + static_cast<int>(k)) +
                         " is not a morphism of representations");
    }
    if (k > 0 && !compose(differentials_[k], differentials_[k - 1]).is_zero()) {
      throw InvalidInput("d^2 != 0 at degree " + std::to_string(lo_ + static_cast<int>(k) - 1));
    }
  }
}

Complex Complex::zero(QuiverPtr quiver, fq::Elem p) { return Complex(std::move(quiver), p, 0, {}, {}); }

Complex Complex::stalk(const Representation& m, int degree) {
  return Complex(m.quiver(), m.modulus(), degree, {m}, {});
}

bool Complex::is_zero() const {
  return std::all_of(terms_.begin(), terms_.end(), [](const Representation& t) { return t.is_zero(); });
}

const Representation& Complex::term(int degree) const {
  if (degree < lo_ || degree > hi()) return zero_;
  return terms_[static_cast<std::size_t>(degree - lo_)];
}

RepMorphism Complex::differential(int degree) const {
  if (degree < lo_ || degree >= hi()) return RepMorphism::zero(term(degree), term(degree + 1));
  return differentials_[static_cast<std::size_t>(degree - lo_)];
}

Complex Complex::shifted(int k) const {
  auto diffs = differentials_;
  if (k % 2 != 0) {
    for (auto& d : diffs) d = -d;
  }
  return Complex(quiver_, p_, lo_ - k, terms_, std::move(diffs));
}

ChainMap::ChainMap(std::shared_ptr<const Complex> source, std::shared_ptr<const Complex> target,
                   std::vector<RepMorphism> components)
    : source_(std::move(source)), target_(std::move(target)), components_(std::move(components)) {
  const auto count = static_cast<std::size_t>(std::max(0, source_->hi() - source_->lo() + 1));
  if (components_.size() != count) throw InvalidInput("chain map needs one component per source degree");
  for (std::size_t k = 0; k < count; ++k) {
    const int n = source_->lo() + static_cast<int>(k);
    if (!is_intertwiner(components_[k], source_->term(n), target_->term(n))) {
      throw InvalidInput("chain map component in degree " + std::to_string(n) +
                         " is not a morphism of representations");
    }
  }
}

ChainMap ChainMap::zero(std::shared_ptr<const Complex> source, std::shared_ptr<const Complex> target) {
  std::vector<RepMorphism> c;
  for (int n = source->lo(); n <= source->hi(); ++n) c.push_back(RepMorphism::zero(source->term(n), target->term(n)));
  return ChainMap(source, std::move(target), std::move(c));
}

ChainMap ChainMap::identity(std::shared_ptr<const Complex> c) {
  std::vector<RepMorphism> comps;
  for (int n = c->lo(); n <= c->hi(); ++n) comps.push_back(RepMorphism::identity(c->term(n)));
  return ChainMap(c, c, std::move(comps));
}

RepMorphism ChainMap::component(int degree) const {
  if (degree < source_->lo() || degree > source_->hi()) {
    return RepMorphism::zero(source_->term(degree), target_->term(degree));
  }
  return components_[static_cast<std::size_t>(degree - source_->lo())];
}

ChainMap operator+(const ChainMap& a, const ChainMap& b) {
  if (a.components_.size() != b.components_.size()) throw InvalidInput("chain map shape mismatch");
  std::vector<RepMorphism> c;
  for (std::size_t k = 0; k < a.components_.size(); ++k) c.push_back(a.components_[k] + b.components_[k]);
  return ChainMap(a.source_, a.target_, std::move(c));
}

bool is_chain_map(const ChainMap& f) {
  const auto& s = f.source();
  const auto& t = f.target();
  for (int n = std::min(s.lo(), t.lo()) - 1; n <= std::max(s.hi(), t.hi()); ++n) {
    if (!(compose(t.differential(n), f.component(n)) == compose(f.component(n + 1), s.differential(n)))) {
      return false;
    }
  }
  return true;
}

ChainMap compose(const ChainMap& g, const ChainMap& f) {
  std::vector<RepMorphism> c;
  for (int n = f.source().lo(); n <= f.source().hi(); ++n) c.push_back(compose(g.component(n), f.component(n)));
  return ChainMap(f.source_ptr(), g.target_ptr(), std::move(c));
}

std::vector<HomologyTerm> homology(const Complex& c) {
  std::vector<HomologyTerm> out;
  for (int n = c.lo(); n <= c.hi(); ++n) {
    const auto& here = c.term(n);
    const auto kc = kernel_cokernel(c.differential(n), here, c.term(n + 1));
    const auto incoming = c.differential(n - 1);
    std::vector<FqMatrix> lift;
    for (std::size_t v = 0; v < here.dims().size(); ++v) {
      auto m = fq::solve_matrix(kc.inclusion[v], incoming[v]);
      if (!m) throw InvalidInput("d^2 != 0 at degree " + std::to_string(n - 1));
      lift.push_back(std::move(*m));
    }
    auto h = kernel_cokernel(RepMorphism(std::move(lift)), c.term(n - 1), kc.kernel);
    out.push_back({n, std::move(h.cokernel)});
  }
  return out;
}

Complex mapping_cone(const ChainMap& f) {
  if (!is_chain_map(f)) throw InvalidInput("mapping_cone: not a chain map");
  const auto& a = f.source();
  const auto& b = f.target();
  const auto p = a.modulus();
  if (a.is_zero() && b.is_zero()) return Complex::zero(a.quiver(), p);
  const int lo = std::min(a.lo() - 1, b.lo());
  const int hi = std::max(a.hi() - 1, b.hi());
  std::vector<Representation> terms;
  for (int n = lo; n <= hi; ++n) terms.push_back(direct_sum(a.term(n + 1), b.term(n)));
  std::vector<RepMorphism> diffs;
  for (int n = lo; n < hi; ++n) {
    const auto da = -a.differential(n + 1);
    const auto fn = f.component(n + 1);
    const auto db = b.differential(n);
    std::vector<FqMatrix> comps;
    for (std::size_t v = 0; v < a.quiver()->vertex_count(); ++v) {
      const auto a1 = a.term(n + 1).dim(v), a2 = a.term(n + 2).dim(v);
      const auto b0 = b.term(n).dim(v), b1 = b.term(n + 1).dim(v);
      FqMatrix m(a2 + b1, a1 + b0, p);
      m.set_block(0, 0, da[v]);
      m.set_block(a2, 0, fn[v]);
      m.set_block(a2, a1, db[v]);
      comps.push_back(std::move(m));
    }
    diffs.emplace_back(std::move(comps));
  }
  return Complex(a.quiver(), p, lo, std::move(terms), std::move(diffs));
}

DerivedClass::DerivedClass(std::vector<Term> terms) {
  for (const auto& t : terms)
    if (t.id != Catalog::zero()) terms_.push_back(t);
  std::sort(terms_.begin(), terms_.end());
  for (std::size_t k = 1; k < terms_.size(); ++k) {
    if (terms_[k].degree == terms_[k - 1].degree) {
      throw InvalidInput("derived class lists degree " + std::to_string(terms_[k].degree) +
                         " twice; combine the modules into one direct sum");
    }
  }
}

IsoClassId DerivedClass::at(int degree) const {
  for (const auto& t : terms_)
    if (t.degree == degree) return t.id;
  return Catalog::zero();
}

DerivedClass DerivedClass::shift(int k) const {
  auto t = terms_;
  for (auto& term : t) term.degree -= k;
  return DerivedClass(std::move(t));
}

bool DerivedClass::in_window(const Window& w) const {
  return std::all_of(terms_.begin(), terms_.end(), [&](const Term& t) { return w.contains(t.degree); });
}

std::vector<DimVector> DerivedClass::dims(const Catalog& cat, const Window& w) const {
  std::vector<DimVector> out(static_cast<std::size_t>(w.span() + 1),
                             DimVector(cat.quiver()->vertex_count(), 0));
  for (const auto& t : terms_) {
    if (!w.contains(t.degree)) throw OutOfUniverse("derived class " + to_string() + " leaves the shift window");
    out[static_cast<std::size_t>(t.degree - w.lo)] = cat.dims(t.id);
  }
  return out;
}

std::string DerivedClass::to_string() const {
  if (terms_.empty()) return "0";
  std::string s;
  for (const auto& t : terms_) {
    if (!s.empty()) s += " + ";
    s += "c" + std::to_string(t.id.value) + "@" + std::to_string(t.degree);
  }
  return s;
}

std::optional<DerivedClass> try_derived_class_of(const Complex& c, const Catalog& cat) {
  std::vector<DerivedClass::Term> terms;
  for (const auto& h : homology(c)) {
    if (h.module.is_zero()) continue;
    auto id = cat.identify(h.module);
    if (!id) return std::nullopt;
    terms.push_back({h.degree, *id});
  }
  return DerivedClass(std::move(terms));
}

DerivedClass derived_class_of(const Complex& c, const Catalog& cat) {
  auto d = try_derived_class_of(c, cat);
  if (!d) throw OutOfUniverse("homology of the complex exceeds the catalog bound");
  return *d;
}

namespace {

// (+)_k P_{u_k} (x) F^{m_k}; basis at v ordered by summand, path, copy.
struct FreeModule {
  const Quiver& q;
  std::vector<std::pair<std::size_t, std::size_t>> summands;  // (vertex, multiplicity)
  std::vector<std::vector<std::size_t>> offsets;               // offsets[k][v]
  DimVector dims;

  FreeModule(const Quiver& quiver, std::vector<std::pair<std::size_t, std::size_t>> s)
      : q(quiver), summands(std::move(s)), offsets(summands.size()), dims(quiver.vertex_count(), 0) {
    for (std::size_t k = 0; k < summands.size(); ++k) {
      offsets[k].resize(q.vertex_count());
      for (std::size_t v = 0; v < q.vertex_count(); ++v) {
        offsets[k][v] = dims[v];
        dims[v] += q.paths(summands[k].first, v).size() * summands[k].second;
      }
    }
  }

  std::size_t path_index(std::size_t from, std::size_t to, const std::vector<std::size_t>& path) const {
    const auto& all = q.paths(from, to);
    auto it = std::find(all.begin(), all.end(), path);
    if (it == all.end()) throw std::logic_error("path not found");
    return static_cast<std::size_t>(it - all.begin());
  }

  std::size_t index(std::size_t k, std::size_t v, std::size_t path, std::size_t copy) const {
    return offsets[k][v] + path * summands[k].second + copy;
  }

  Representation build(const QuiverPtr& qp, fq::Elem p) const {
    std::vector<FqMatrix> maps;
    for (std::size_t a = 0; a < q.arrows().size(); ++a) {
      const auto s = q.arrows()[a].src, t = q.arrows()[a].dst;
      FqMatrix m(dims[t], dims[s], p);
      for (std::size_t k = 0; k < summands.size(); ++k) {
        const auto u = summands[k].first;
        const auto& paths = q.paths(u, s);
        for (std::size_t i = 0; i < paths.size(); ++i) {
          auto extended = paths[i];
          extended.push_back(a);
          const auto j = path_index(u, t, extended);
          for (std::size_t e = 0; e < summands[k].second; ++e) m(index(k, t, j, e), index(k, s, i, e)) = 1;
        }
      }
      maps.push_back(std::move(m));
    }
    return Representation(qp, p, dims, std::move(maps));
  }
};

}  // namespace

ProjectiveResolution projective_resolution(const Representation& m) {
  const auto& qp = m.quiver();
  const auto& q = *qp;
  if (!q.is_acyclic()) throw InvalidInput("projective resolution requires an acyclic quiver");
  const auto p = m.modulus();
  const auto n = q.vertex_count();

  std::vector<std::pair<std::size_t, std::size_t>> s0, s1;
  for (std::size_t i = 0; i < n; ++i) s0.emplace_back(i, m.dim(i));
  for (const auto& a : q.arrows()) s1.emplace_back(a.dst, m.dim(a.src));
  const FreeModule f0(q, s0), f1(q, s1);
  auto p0 = f0.build(qp, p);
  auto p1 = f1.build(qp, p);

  std::vector<FqMatrix> d, eps;
  for (std::size_t v = 0; v < n; ++v) {
    FqMatrix dv(f0.dims[v], f1.dims[v], p);
    for (std::size_t k = 0; k < q.arrows().size(); ++k) {
      const auto s = q.arrows()[k].src, t = q.arrows()[k].dst;
      const auto& paths = q.paths(t, v);
      for (std::size_t i = 0; i < paths.size(); ++i) {
        std::vector<std::size_t> through{k};
        through.insert(through.end(), paths[i].begin(), paths[i].end());
        const auto j = f0.path_index(s, v, through);
        for (std::size_t e = 0; e < m.dim(s); ++e) {
          const auto col = f1.index(k, v, i, e);
          dv(f0.index(s, v, j, e), col) = fq::add_mod(dv(f0.index(s, v, j, e), col), 1, p);
          for (std::size_t r = 0; r < m.dim(t); ++r) {
            auto& entry = dv(f0.index(t, v, i, r), col);
            entry = fq::sub_mod(entry, m.map(k)(r, e), p);
          }
        }
      }
    }
    d.push_back(std::move(dv));

    FqMatrix ev(m.dim(v), f0.dims[v], p);
    for (std::size_t i = 0; i < n; ++i) {
      const auto& paths = q.paths(i, v);
      for (std::size_t j = 0; j < paths.size(); ++j) {
        auto along = FqMatrix::identity(m.dim(i), p);
        for (auto a : paths[j]) along = m.map(a) * along;
        for (std::size_t e = 0; e < m.dim(i); ++e) {
          for (std::size_t r = 0; r < m.dim(v); ++r) ev(r, f0.index(i, v, j, e)) = along(r, e);
        }
      }
    }
    eps.push_back(std::move(ev));
  }
  return {std::move(p1), std::move(p0), RepMorphism(std::move(d)), RepMorphism(std::move(eps))};
}

Complex projective_realization(const DerivedClass& x, const Catalog& cat) {
  const auto& qp = cat.quiver();
  const auto p = cat.modulus();
  if (x.is_zero()) return Complex::zero(qp, p);
  std::map<int, ProjectiveResolution> res;
  for (const auto& t : x.terms()) res.emplace(t.degree, projective_resolution(cat.representative(t.id)));
  const auto zero = Representation::zero(qp, p);
  auto p0 = [&](int d) -> const Representation& { auto it = res.find(d); return it == res.end() ? zero : it->second.p0; };
  auto p1 = [&](int d) -> const Representation& { auto it = res.find(d); return it == res.end() ? zero : it->second.p1; };

  const int lo = x.terms().front().degree - 1;
  const int hi = x.terms().back().degree;
  std::vector<Representation> terms;
  for (int n = lo; n <= hi; ++n) terms.push_back(direct_sum(p0(n), p1(n + 1)));
  std::vector<RepMorphism> diffs;
  for (int n = lo; n < hi; ++n) {
    std::vector<FqMatrix> comps;
    for (std::size_t v = 0; v < qp->vertex_count(); ++v) {
      FqMatrix m(terms[static_cast<std::size_t>(n + 1 - lo)].dim(v), terms[static_cast<std::size_t>(n - lo)].dim(v), p);
      auto it = res.find(n + 1);
      if (it != res.end()) m.set_block(0, p0(n).dim(v), it->second.differential[v]);
      comps.push_back(std::move(m));
    }
    diffs.emplace_back(std::move(comps));
  }
  return Complex(qp, p, lo, std::move(terms), std::move(diffs));
}

Complex stalk_realization(const DerivedClass& x, const Catalog& cat) {
  const auto& qp = cat.quiver();
  const auto p = cat.modulus();
  if (x.is_zero()) return Complex::zero(qp, p);
  const int lo = x.terms().front().degree;
  const int hi = x.terms().back().degree;
  std::vector<Representation> terms;
  for (int n = lo; n <= hi; ++n) terms.push_back(cat.representative(x.at(n)));
  std::vector<RepMorphism> diffs;
  for (int n = lo; n < hi; ++n) diffs.push_back(RepMorphism::zero(terms[static_cast<std::size_t>(n - lo)],
                                                                  terms[static_cast<std::size_t>(n + 1 - lo)]));
  return Complex(qp, p, lo, std::move(terms), std::move(diffs));
}

std::vector<DerivedClass> derived_universe(const Catalog& cat, const Window& w) {
  if (w.lo > w.hi) throw InvalidInput("empty shift window");
  const auto degrees = static_cast<std::size_t>(w.span() + 1);
  std::vector<std::size_t> pick(degrees, 0);
  std::vector<DerivedClass> out;
  while (true) {
    std::vector<DerivedClass::Term> terms;
    for (std::size_t k = 0; k < degrees; ++k) terms.push_back({w.lo + static_cast<int>(k), IsoClassId{pick[k]}});
    out.emplace_back(std::move(terms));
    std::size_t k = degrees;
    while (k > 0 && pick[k - 1] + 1 == cat.size()) pick[--k] = 0;
    if (k == 0) break;
    ++pick[k - 1];
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace hall

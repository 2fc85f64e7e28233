#pragma once

#include <map>
#include <string>

#include "hall/classical_hall.hpp"
#include "hall/lf_calculus.hpp"

namespace hall {

/// Groupoid data of the module category inside the catalog bound.
///   X0: one component "c<id>" per class, orders [|Aut x|].
///   X1: one component "f<a>.<b>.<k>" per Aut(a) x Aut(b)-orbit of Hom(a, b),
///       orders [|{(g, h) : h f = f g}|].
///   t:  X1 -> X0, the target; its fiber over z is the comma groupoid of arrows
///       into z, one component "u<a>.<z>.<k>" per Aut(a)-orbit of Hom(a, z).
///   s_c: X1mono -> X0 x X0, (source, cokernel) on monomorphisms.
struct SpanModel {
  const Catalog* catalog = nullptr;
  lf::TypePtr x0;
  lf::TypePtr x0x0;
  lf::TypePtr x1;
  lf::TypePtr x1_mono;
  lf::ProperMapData t;
  lf::ProperMapData s_c;
  std::map<std::string, IsoClassId> classes;
};

std::string class_component(IsoClassId id);

SpanModel build_span_model(const Catalog& cat);

/// t_! of the extension by zero of (s x c)^*(a (x) b). Throws OutOfUniverse
/// when a pair of support classes is not in bound.
ClassicalElement mu_span(const ClassicalElement& a, const ClassicalElement& b, const SpanModel& span);

}  // namespace hall

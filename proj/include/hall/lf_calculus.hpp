#pragma once

#include <cstdint>
#include <initializer_list>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "hall/rational.hpp"

namespace hall::lf {

/// A connected component with the orders of pi_1, pi_2, ..., pi_N; all
/// higher homotopy groups are trivial.
struct Component {
  std::string id;
  std::vector<std::uint64_t> orders;
  bool operator==(const Component&) const = default;
};

/// A locally finite homotopy type, recorded by its components.
class LFType {
 public:
  LFType() = default;
  /// Throws InvalidInput on duplicate ids or a zero order.
  explicit LFType(std::vector<Component> components);
  LFType(std::initializer_list<Component> components) : LFType(std::vector<Component>(components)) {}
  static LFType point();

  std::size_t size() const { return components_.size(); }
  const std::vector<Component>& components() const { return components_; }
  bool contains(const std::string& id) const { return index_.count(id) != 0; }
  /// Throws InvalidInput for an unknown id.
  const Component& component(const std::string& id) const;
  /// prod_{i>0} |pi_i|^{(-1)^i}.
  Rational weight(const std::string& id) const;
  /// Sum of the weights of all components.
  Rational cardinality() const;

  bool operator==(const LFType& o) const { return components_ == o.components_; }

 private:
  std::vector<Component> components_;
  std::map<std::string, std::size_t> index_;
};

Rational component_weight(const Component& c);

using TypePtr = std::shared_ptr<const LFType>;

/// Finitely supported rational function on the components of a base type.
class FiniteSupportFn {
 public:
  explicit FiniteSupportFn(TypePtr base) : base_(std::move(base)) {}
  static FiniteSupportFn characteristic(TypePtr base, const std::string& id);

  const TypePtr& base() const { return base_; }
  const std::map<std::string, Rational>& values() const { return values_; }
  Rational operator()(const std::string& id) const;
  /// Zero values are not stored.
  void set(const std::string& id, const Rational& value);
  void add(const std::string& id, const Rational& value);

  friend FiniteSupportFn operator+(const FiniteSupportFn& a, const FiniteSupportFn& b);
  friend FiniteSupportFn operator*(const Rational& s, const FiniteSupportFn& a);
  friend bool operator==(const FiniteSupportFn& a, const FiniteSupportFn& b);

 private:
  TypePtr base_;
  std::map<std::string, Rational> values_;
};

/// Homotopy fiber over one target component, with the map of its components
/// into the source.
struct Fiber {
  LFType type;
  std::map<std::string, std::string> incl;
};

struct ProperMapData {
  TypePtr source;
  TypePtr target;
  std::map<std::string, std::string> component_map;
  /// Keyed by target component; a missing entry is an empty fiber.
  std::map<std::string, Fiber> fibers;

  /// Throws InvalidInput unless the component map is total, every fiber sits
  /// over its target component and covers exactly its preimages.
  void validate() const;
  const Fiber* fiber(const std::string& target_id) const;

  static ProperMapData identity(TypePtr x);
  /// X -> point, with fiber X itself.
  static ProperMapData to_point(TypePtr x);
};

/// f_!(a)(y) = sum_{z in pi_0(F_y)} a(i(z)) prod_{i>0} |pi_i(F_y, z)|^{(-1)^i}.
FiniteSupportFn pushforward(const ProperMapData& f, const FiniteSupportFn& a);
/// f^*(b)(x) = b(f(x)).
FiniteSupportFn pullback(const ProperMapData& f, const FiniteSupportFn& b);

std::string product_id(const std::string& a, const std::string& b);
/// Components are pairs "(a,b)"; orders multiply degreewise, missing orders count as 1.
LFType lf_product(const LFType& x, const LFType& y);
/// (a (x) b)(s, t) = a(s) b(t) on a product type built by lf_product.
FiniteSupportFn tensor(const FiniteSupportFn& a, const FiniteSupportFn& b, TypePtr product);

/// A commutative square X' -v-> X over Y' -u-> Y with g: X' -> Y' and f: X -> Y.
/// witness[y'] maps each component of the g-fiber over y' to the component of
/// the f-fiber over u(y') it is identified with.
struct BaseChangeSquare {
  ProperMapData f;
  ProperMapData u;
  ProperMapData g;
  ProperMapData v;
  std::map<std::string, std::map<std::string, std::string>> witness;
};

struct BaseChangeReport {
  bool equal = true;
  Rational max_deviation = 0;
  /// Characteristic functions of X that were tested.
  std::size_t checked = 0;
};

/// Validates the square and the witness, then compares u^* f_! and g_! v^* on
/// the characteristic function of every component of X.
BaseChangeReport check_base_change(const BaseChangeSquare& square);

}  // namespace hall::lf

#pragma once

#include <cstddef>
#include <memory>
#include <vector>

namespace hall {

struct Arrow {
  std::size_t src;
  std::size_t dst;
  bool operator==(const Arrow&) const = default;
};

using DimVector = std::vector<std::size_t>;

/// A finite quiver. Loops and parallel arrows are allowed; derived computations
/// additionally require acyclicity.
class Quiver {
 public:
  Quiver(std::size_t vertex_count, std::vector<Arrow> arrows);

  std::size_t vertex_count() const { return vertex_count_; }
  const std::vector<Arrow>& arrows() const { return arrows_; }
  bool is_acyclic() const { return acyclic_; }

  /// Paths from `from` to `to` as arrow-index sequences, in a fixed order.
  /// Requires an acyclic quiver.
  const std::vector<std::vector<std::size_t>>& paths(std::size_t from, std::size_t to) const;

  /// Euler form <a, b> = sum_i a_i b_i - sum_{arrows i->j} a_i b_j.
  long euler_form(const DimVector& a, const DimVector& b) const;

  bool operator==(const Quiver& o) const {
    return vertex_count_ == o.vertex_count_ && arrows_ == o.arrows_;
  }

  /// The one-vertex quiver A_1 and the two-vertex quiver A_2 (arrow 0 -> 1).
  static std::shared_ptr<const Quiver> a1();
  static std::shared_ptr<const Quiver> a2();

 private:
  std::size_t vertex_count_;
  std::vector<Arrow> arrows_;
  bool acyclic_ = true;
  // paths_[from * n + to]
  std::vector<std::vector<std::vector<std::size_t>>> paths_;
};

using QuiverPtr = std::shared_ptr<const Quiver>;

bool dims_leq(const DimVector& a, const DimVector& b);
DimVector dims_add(const DimVector& a, const DimVector& b);
std::size_t dims_total(const DimVector& a);

}  // namespace hall

#include "hall/quiver.hpp"

#include <functional>
#include <numeric>
#include <string>

#include "hall/error.hpp"

namespace hall {

Quiver::Quiver(std::size_t vertex_count, std::vector<Arrow> arrows)
    : vertex_count_(vertex_count), arrows_(std::move(arrows)) {
  if (vertex_count_ == 0) throw InvalidInput("quiver needs at least one vertex");
  for (const auto& a : arrows_) {
    if (a.src >= vertex_count_ || a.dst >= vertex_count_) {
      throw InvalidInput("arrow endpoint out of range: " + std::to_string(a.src) + " -> " +
                         std::to_string(a.dst));
    }
  }
  // Kahn's algorithm decides acyclicity.
  std::vector<std::size_t> indegree(vertex_count_, 0);
  for (const auto& a : arrows_) ++indegree[a.dst];
  std::vector<std::size_t> queue;
  for (std::size_t v = 0; v < vertex_count_; ++v)
    if (indegree[v] == 0) queue.push_back(v);
  std::size_t seen = 0;
  while (!queue.empty()) {
    const auto v = queue.back();
    queue.pop_back();
    ++seen;
    for (const auto& a : arrows_) {
      if (a.src == v && --indegree[a.dst] == 0) queue.push_back(a.dst);
    }
  }
  acyclic_ = seen == vertex_count_;
  if (!acyclic_) return;

  paths_.resize(vertex_count_ * vertex_count_);
  std::vector<std::size_t> current;
  std::function<void(std::size_t, std::size_t)> walk = [&](std::size_t from, std::size_t at) {
    paths_[from * vertex_count_ + at].push_back(current);
    for (std::size_t i = 0; i < arrows_.size(); ++i) {
      if (arrows_[i].src != at) continue;
      current.push_back(i);
      walk(from, arrows_[i].dst);
      current.pop_back();
    }
  };
  for (std::size_t v = 0; v < vertex_count_; ++v) walk(v, v);
}

const std::vector<std::vector<std::size_t>>& Quiver::paths(std::size_t from, std::size_t to) const {
  if (!acyclic_) throw InvalidInput("path enumeration requires an acyclic quiver");
  return paths_.at(from * vertex_count_ + to);
}

long Quiver::euler_form(const DimVector& a, const DimVector& b) const {
  if (a.size() != vertex_count_ || b.size() != vertex_count_) {
    throw InvalidInput("euler_form: dimension vector length mismatch");
  }
  long out = 0;
  for (std::size_t i = 0; i < vertex_count_; ++i) out += static_cast<long>(a[i] * b[i]);
  for (const auto& arrow : arrows_) out -= static_cast<long>(a[arrow.src] * b[arrow.dst]);
  return out;
}

std::shared_ptr<const Quiver> Quiver::a1() { return std::make_shared<const Quiver>(1, std::vector<Arrow>{}); }

std::shared_ptr<const Quiver> Quiver::a2() {
  return std::make_shared<const Quiver>(2, std::vector<Arrow>{{0, 1}});
}

bool dims_leq(const DimVector& a, const DimVector& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

DimVector dims_add(const DimVector& a, const DimVector& b) {
  if (a.size() != b.size()) throw InvalidInput("dimension vector length mismatch");
  DimVector out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
  return out;
}

std::size_t dims_total(const DimVector& a) { return std::accumulate(a.begin(), a.end(), std::size_t{0}); }

}  // namespace hall

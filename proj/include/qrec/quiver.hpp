#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace qrec {

using Vertex = std::size_t;
using ArrowId = std::size_t;

struct Arrow {
  std::string name;
  Vertex source;
  Vertex target;
};

struct ArrowSpec {
  std::string name;
  std::string from;
  std::string to;
};

/// Finite acyclic quiver with labelled vertices and named arrows.
class Quiver {
 public:
  /// Throws ContractViolation on duplicate labels/names, unknown endpoints or cycles.
  Quiver(std::vector<std::string> vertices, const std::vector<ArrowSpec>& arrows);
  Quiver(std::vector<std::string> vertices, std::vector<Arrow> arrows);

  std::size_t vertex_count() const noexcept { return labels_.size(); }
  std::size_t arrow_count() const noexcept { return arrows_.size(); }
  const std::string& label(Vertex v) const { return labels_.at(v); }
  const std::vector<std::string>& labels() const noexcept { return labels_; }
  const Arrow& arrow(ArrowId a) const { return arrows_.at(a); }
  const std::vector<Arrow>& arrows() const noexcept { return arrows_; }
  std::optional<Vertex> find_vertex(const std::string& label) const;
  Vertex vertex(const std::string& label) const;

  const std::vector<ArrowId>& out_arrows(Vertex v) const { return out_.at(v); }
  const std::vector<ArrowId>& in_arrows(Vertex v) const { return in_.at(v); }

  /// Sources first; ties broken by declaration order.
  const std::vector<Vertex>& topological_order() const noexcept { return topo_; }

  /// Full subquiver on the given vertices (kept in ambient declaration order).
  Quiver full_subquiver(const std::vector<Vertex>& vertices) const;
  Quiver opposite() const;

  bool operator==(const Quiver& o) const;

 private:
  void validate_and_index();

  std::vector<std::string> labels_;
  std::vector<Arrow> arrows_;
  std::vector<std::vector<ArrowId>> out_;
  std::vector<std::vector<ArrowId>> in_;
  std::vector<Vertex> topo_;
};

using QuiverPtr = std::shared_ptr<const Quiver>;

inline QuiverPtr make_quiver(std::vector<std::string> vertices, const std::vector<ArrowSpec>& arrows) {
  return std::make_shared<const Quiver>(std::move(vertices), arrows);
}

/// Same quiver object or structurally identical.
bool same_quiver(const QuiverPtr& a, const QuiverPtr& b);

}  // namespace qrec

#include "qrec/quiver.hpp"

#include <algorithm>
#include <set>

#include "qrec/errors.hpp"

namespace qrec {

namespace {

std::vector<Arrow> resolve_arrows(const std::vector<std::string>& labels, const std::vector<ArrowSpec>& specs) {
  auto index_of = [&](const std::string& l) -> Vertex {
    auto it = std::find(labels.begin(), labels.end(), l);
    if (it == labels.end()) throw ContractViolation("quiver: arrow endpoint '" + l + "' is not a declared vertex");
    return static_cast<Vertex>(it - labels.begin());
  };
  std::vector<Arrow> out;
  out.reserve(specs.size());
  for (const auto& s : specs) out.push_back({s.name, index_of(s.from), index_of(s.to)});
  return out;
}

}  // namespace

Quiver::Quiver(std::vector<std::string> vertices, const std::vector<ArrowSpec>& arrows)
    : labels_(std::move(vertices)) {
  arrows_ = resolve_arrows(labels_, arrows);
  validate_and_index();
}

Quiver::Quiver(std::vector<std::string> vertices, std::vector<Arrow> arrows)
    : labels_(std::move(vertices)), arrows_(std::move(arrows)) {
  validate_and_index();
}

void Quiver::validate_and_index() {
  std::set<std::string> seen(labels_.begin(), labels_.end());
  if (seen.size() != labels_.size()) throw ContractViolation("quiver: duplicate vertex label");
  std::set<std::string> names;
  for (const auto& a : arrows_) {
    if (a.source >= labels_.size() || a.target >= labels_.size())
      throw ContractViolation("quiver: arrow '" + a.name + "' has an undeclared endpoint");
    if (!names.insert(a.name).second) throw ContractViolation("quiver: duplicate arrow name '" + a.name + "'");
  }
  out_.assign(labels_.size(), {});
  in_.assign(labels_.size(), {});
  for (ArrowId i = 0; i < arrows_.size(); ++i) {
    out_[arrows_[i].source].push_back(i);
    in_[arrows_[i].target].push_back(i);
  }
  // Kahn's algorithm, always taking the earliest-declared available vertex.
  std::vector<std::size_t> indeg(labels_.size(), 0);
  for (const auto& a : arrows_) ++indeg[a.target];
  std::set<Vertex> ready;
  for (Vertex v = 0; v < labels_.size(); ++v)
    if (indeg[v] == 0) ready.insert(v);
  topo_.clear();
  while (!ready.empty()) {
    const Vertex v = *ready.begin();
    ready.erase(ready.begin());
    topo_.push_back(v);
    for (ArrowId a : out_[v])
      if (--indeg[arrows_[a].target] == 0) ready.insert(arrows_[a].target);
  }
  if (topo_.size() != labels_.size()) throw ContractViolation("quiver: not acyclic");
}

std::optional<Vertex> Quiver::find_vertex(const std::string& label) const {
  auto it = std::find(labels_.begin(), labels_.end(), label);
  if (it == labels_.end()) return std::nullopt;
  return static_cast<Vertex>(it - labels_.begin());
}

Vertex Quiver::vertex(const std::string& label) const {
  auto v = find_vertex(label);
  if (!v) throw ContractViolation("quiver: unknown vertex '" + label + "'");
  return *v;
}

Quiver Quiver::full_subquiver(const std::vector<Vertex>& vertices) const {
  std::vector<Vertex> sorted = vertices;
  std::sort(sorted.begin(), sorted.end());
  std::vector<long> local(labels_.size(), -1);
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    local[sorted[i]] = static_cast<long>(i);
    labels.push_back(labels_.at(sorted[i]));
  }
  std::vector<Arrow> arrows;
  for (const auto& a : arrows_) {
    if (local[a.source] >= 0 && local[a.target] >= 0)
      arrows.push_back({a.name, static_cast<Vertex>(local[a.source]), static_cast<Vertex>(local[a.target])});
  }
  return Quiver(std::move(labels), std::move(arrows));
}

Quiver Quiver::opposite() const {
  std::vector<Arrow> arrows;
  for (const auto& a : arrows_) arrows.push_back({a.name, a.target, a.source});
  return Quiver(labels_, std::move(arrows));
}

bool Quiver::operator==(const Quiver& o) const {
  if (labels_ != o.labels_ || arrows_.size() != o.arrows_.size()) return false;
  for (std::size_t i = 0; i < arrows_.size(); ++i) {
    const auto& a = arrows_[i];
    const auto& b = o.arrows_[i];
    if (a.name != b.name || a.source != b.source || a.target != b.target) return false;
  }
  return true;
}

bool same_quiver(const QuiverPtr& a, const QuiverPtr& b) { return a == b || (a && b && *a == *b); }

}  // namespace qrec

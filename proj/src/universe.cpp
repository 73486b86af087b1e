#include "qrec/universe.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "closure_engine.hpp"
#include "qrec/errors.hpp"

namespace qrec {

namespace {

constexpr std::size_t kMaxTotalDim = 64;

bool is_thin(const DimVector& d) {
  return std::all_of(d.begin(), d.end(), [](std::size_t x) { return x <= 1; });
}

std::optional<std::size_t> find_iso(const std::vector<Rep>& objs, const Rep& m, const Limits& limits) {
  for (std::size_t i = 0; i < objs.size(); ++i)
    if (objs[i].dims() == m.dims() && is_isomorphic(objs[i], m, limits)) return i;
  return std::nullopt;
}

}  // namespace

std::string stacked_name(const Rep& m) {
  const auto& q = *m.quiver();
  if (m.is_zero()) return "0";
  if (!is_thin(m.dims())) {
    std::string s = "d(";
    for (Vertex v = 0; v < m.dims().size(); ++v) s += (v ? "," : "") + std::to_string(m.dim(v));
    return s + ")";
  }
  std::string s;
  for (Vertex v : q.topological_order()) {
    if (m.dim(v) == 0) continue;
    if (!s.empty()) s += "/";
    s += q.label(v);
  }
  return s;
}

Universe::Universe(QuiverPtr quiver, Prime p, std::vector<Rep> objects, bool complete, Limits limits)
    : quiver_(std::move(quiver)), p_(p), limits_(limits), complete_(complete) {
  for (const auto& o : objects) {
    if (!same_quiver(o.quiver(), quiver_) || o.p() != p_) throw ContractViolation("Universe: object on a different quiver");
    if (o.is_zero()) throw ContractViolation("Universe: the zero object is implicit and cannot be a member");
  }
  std::vector<std::size_t> order(objects.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    const Rep& x = objects[a];
    const Rep& y = objects[b];
    if (x.total_dim() != y.total_dim()) return x.total_dim() < y.total_dim();
    return x.dims() > y.dims();
  });
  for (auto i : order) objects_.push_back(objects[i]);

  const std::size_t n = objects_.size();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n && objects_[j].dims() == objects_[i].dims(); ++j)
      if (is_isomorphic(objects_[i], objects_[j], limits_))
        throw ContractViolation("Universe: members " + std::to_string(i) + " and " + std::to_string(j) +
                                " are isomorphic");

  std::map<std::string, std::size_t> seen;
  for (const auto& o : objects_) {
    std::string base = stacked_name(o);
    const std::size_t k = ++seen[base];
    names_.push_back(k == 1 ? base : base + "#" + std::to_string(k));
  }

  hom_.resize(n * n);
  ext_.resize(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      hom_[i * n + j] = hom_dim(objects_[i], objects_[j]);
      ext_[i * n + j] = ext_dim(objects_[i], objects_[j]);
    }
  }
}

Universe::~Universe() = default;

std::optional<std::size_t> Universe::find(const Rep& m) const {
  if (!same_quiver(m.quiver(), quiver_)) throw ContractViolation("Universe::find: object on a different quiver");
  return find_iso(objects_, m, limits_);
}

std::optional<std::size_t> Universe::find_by_name(const std::string& name) const {
  for (std::size_t i = 0; i < names_.size(); ++i)
    if (names_[i] == name) return i;
  return std::nullopt;
}

std::optional<std::size_t> Universe::find_by_dims(const DimVector& dims) const {
  std::optional<std::size_t> hit;
  for (std::size_t i = 0; i < objects_.size(); ++i) {
    if (objects_[i].dims() != dims) continue;
    if (hit) return std::nullopt;  // ambiguous
    hit = i;
  }
  return hit;
}

std::vector<std::size_t> Universe::locate_summands(const Rep& m) const {
  if (m.is_zero()) return {};
  const std::string key = m.key();
  {
    std::lock_guard<std::mutex> lock(cache_mutex_);
    auto it = locate_cache_.find(key);
    if (it != locate_cache_.end()) return it->second;
  }
  std::vector<std::size_t> out;
  for (const auto& s : decompose(m, limits_)) {
    auto idx = find(s);
    if (!idx)
      throw UniverseIncomplete("indecomposable summand with dimension vector " + format_dims(s.dims()) +
                               " is not in the universe");
    out.push_back(*idx);
  }
  std::sort(out.begin(), out.end());
  std::lock_guard<std::mutex> lock(cache_mutex_);
  locate_cache_.emplace(key, out);
  return out;
}

std::shared_ptr<detail::ClosureEngine> Universe::engine(std::size_t mult_cap) const {
  std::lock_guard<std::mutex> lock(cache_mutex_);
  auto& slot = engines_[mult_cap];
  if (!slot) slot = std::make_shared<detail::ClosureEngine>(*this, mult_cap);
  return slot;
}

UniversePtr all_indecomposables(const QuiverPtr& quiver, Prime p, std::size_t dim_bound, const Limits& limits) {
  if (dim_bound > kMaxTotalDim)
    throw BoundExceeded("dimension bound " + std::to_string(dim_bound) + " exceeds the supported total dimension " +
                        std::to_string(kMaxTotalDim));
  std::vector<Rep> objs;
  if (dim_bound >= 1)
    for (Vertex v = 0; v < quiver->vertex_count(); ++v) objs.push_back(Rep::simple(quiver, p, v));

  bool bound_hit = false;
  std::set<std::pair<std::size_t, std::size_t>> done;
  bool changed = true;
  while (changed) {
    changed = false;
    const std::size_t n = objs.size();
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        if (!done.insert({i, j}).second) continue;
        if (ext_dim(objs[i], objs[j]) == 0) continue;
        std::vector<Rep> fresh;
        bool split_class = true;
        for_each_middle_term(
            objs[i], objs[j],
            [&](const Rep& mid) {
              if (split_class) {
                split_class = false;
                return;
              }
              if (mid.total_dim() > dim_bound) {
                bound_hit = true;
                return;
              }
              for (const auto& s : decompose(mid, limits)) {
                if (!find_iso(objs, s, limits) && !find_iso(fresh, s, limits)) fresh.push_back(s);
              }
            },
            limits);
        for (auto& s : fresh) objs.push_back(std::move(s));
        changed = changed || !fresh.empty();
      }
    }
  }
  return std::make_shared<const Universe>(quiver, p, std::move(objs), !bound_hit, limits);
}

}  // namespace qrec

#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "qrec/hom.hpp"

namespace qrec {

namespace detail {
class ClosureEngine;
}

/// Finite list of pairwise non-isomorphic indecomposables over one quiver, in
/// canonical order, with cached dim Hom / dim Ext^1 tables.
///
/// Canonical order: total dimension ascending, then dimension vector in
/// descending lexicographic order, then the order objects were supplied.
class Universe {
 public:
  /// Throws ContractViolation when two objects are isomorphic.
  Universe(QuiverPtr quiver, Prime p, std::vector<Rep> objects, bool complete, Limits limits = {});
  ~Universe();
  Universe(const Universe&) = delete;
  Universe& operator=(const Universe&) = delete;

  const QuiverPtr& quiver() const noexcept { return quiver_; }
  Prime p() const noexcept { return p_; }
  const Limits& limits() const noexcept { return limits_; }
  /// False when generation stopped at the dimension bound before a fixpoint.
  bool complete() const noexcept { return complete_; }

  std::size_t size() const noexcept { return objects_.size(); }
  const Rep& object(std::size_t i) const { return objects_.at(i); }
  const std::vector<Rep>& objects() const noexcept { return objects_; }
  /// Stacked name ("4/1") for thin objects, "d(...)" otherwise; "#k" on collisions.
  const std::string& name(std::size_t i) const { return names_.at(i); }
  std::size_t hom(std::size_t i, std::size_t j) const { return hom_.at(i * size() + j); }
  std::size_t ext(std::size_t i, std::size_t j) const { return ext_.at(i * size() + j); }

  /// Index of the member isomorphic to an indecomposable m.
  std::optional<std::size_t> find(const Rep& m) const;
  std::optional<std::size_t> find_by_name(const std::string& name) const;
  std::optional<std::size_t> find_by_dims(const DimVector& dims) const;
  /// Sorted multiset of member indices whose sum is isomorphic to m. Throws
  /// UniverseIncomplete when a summand has no match.
  std::vector<std::size_t> locate_summands(const Rep& m) const;

  /// Shared closure machinery for a given multiplicity cap.
  std::shared_ptr<detail::ClosureEngine> engine(std::size_t mult_cap) const;

 private:
  QuiverPtr quiver_;
  Prime p_;
  Limits limits_;
  bool complete_;
  std::vector<Rep> objects_;
  std::vector<std::string> names_;
  std::vector<std::size_t> hom_;
  std::vector<std::size_t> ext_;

  mutable std::mutex cache_mutex_;
  mutable std::unordered_map<std::string, std::vector<std::size_t>> locate_cache_;
  mutable std::map<std::size_t, std::shared_ptr<detail::ClosureEngine>> engines_;
};

using UniversePtr = std::shared_ptr<const Universe>;

/// Display name for a representation using the stacked convention.
std::string stacked_name(const Rep& m);

/// Indecomposables of total dimension <= dim_bound, grown from the simples by
/// repeatedly taking middle terms of extensions between members and splitting
/// them. The result is incomplete (complete() == false) when a summand above
/// the bound was produced.
UniversePtr all_indecomposables(const QuiverPtr& quiver, Prime p, std::size_t dim_bound, const Limits& limits = {});

}  // namespace qrec

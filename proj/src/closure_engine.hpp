#pragma once

#include <cstdint>
#include <mutex>
#include <unordered_map>
#include <vector>

#include "qrec/subcat.hpp"

namespace qrec::detail {

/// Memoised per-universe answers for closure checks: for every ordered pair of
/// capped direct sums, the members occurring as summands of images, cokernels,
/// kernels and extension middle terms; surjectivity onto members; pairwise
/// brick conditions.
class ClosureEngine {
 public:
  ClosureEngine(const Universe& u, std::size_t mult_cap);

  std::size_t mult_cap() const noexcept { return cap_; }
  /// All multisets of members of size 1..mult_cap, sorted.
  const std::vector<std::vector<std::size_t>>& sums() const noexcept { return sums_; }
  std::uint64_t support(std::size_t k) const { return support_.at(k); }
  /// Indices of the sums whose support lies in mask.
  std::vector<std::size_t> sums_within(std::uint64_t mask) const;

  /// Members produced by op on sums x (source) and y (target).
  std::uint64_t produced(ClosureOp op, std::size_t x, std::size_t y);
  /// Some epimorphism sum x -> member n exists.
  bool surjects(std::size_t x, std::size_t n);

  bool brick(std::size_t i);
  /// Every nonzero morphism member i -> member j is epi (resp. mono).
  bool all_nonzero_epi(std::size_t i, std::size_t j);
  bool all_nonzero_mono(std::size_t i, std::size_t j);

 private:
  const Rep& sum_object(std::size_t k);
  std::uint64_t mask_of(const Rep& m) const;
  std::uint64_t compute(ClosureOp op, std::size_t x, std::size_t y);

  const Universe& u_;
  std::size_t cap_;
  std::vector<std::vector<std::size_t>> sums_;
  std::vector<std::uint64_t> support_;
  std::vector<std::optional<Rep>> sum_objects_;

  std::mutex mutex_;
  std::unordered_map<std::uint64_t, std::uint64_t> produced_;
  std::unordered_map<std::uint64_t, bool> surjects_;
  std::unordered_map<std::uint64_t, int> brick_;
  std::unordered_map<std::uint64_t, int> epi_;
  std::unordered_map<std::uint64_t, int> mono_;
};

}  // namespace qrec::detail

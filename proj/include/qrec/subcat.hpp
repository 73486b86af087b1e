#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "qrec/universe.hpp"

namespace qrec {

enum class ClosureOp : unsigned {
  images = 1u << 0,
  cokernels = 1u << 1,
  kernels = 1u << 2,
  extensions = 1u << 3,
  quotients = 1u << 4,
};

using OpSet = unsigned;

constexpr OpSet ops(std::initializer_list<ClosureOp> list) {
  OpSet s = 0;
  for (auto o : list) s |= static_cast<unsigned>(o);
  return s;
}

constexpr OpSet kIceOps = ops({ClosureOp::images, ClosureOp::cokernels, ClosureOp::extensions});
constexpr OpSet kTorsionOps = ops({ClosureOp::quotients, ClosureOp::extensions});
constexpr OpSet kWideOps = ops({ClosureOp::kernels, ClosureOp::cokernels, ClosureOp::extensions});

std::string op_name(ClosureOp op);

enum class Kind { ice, torsion, wide, epibrick, monobrick };

std::string kind_name(Kind k);
/// Throws ParseError on an unknown name.
Kind parse_kind(const std::string& name);
bool is_brick_kind(Kind k);

constexpr std::size_t kMaxUniverseForSubcats = 64;

/// Additively closed subcategory given by a set of universe members. The zero
/// object is implicit, so the empty member set is add{0}. The literal empty
/// category (not even containing 0) is a separate, opt-in value.
class Subcat {
 public:
  Subcat(UniversePtr universe, const std::vector<std::size_t>& members);
  static Subcat from_mask(UniversePtr universe, std::uint64_t mask);
  static Subcat empty_category(UniversePtr universe);
  static Subcat everything(UniversePtr universe);

  const UniversePtr& universe() const noexcept { return universe_; }
  std::uint64_t mask() const noexcept { return mask_; }
  std::vector<std::size_t> members() const;
  std::size_t size() const;
  bool contains(std::size_t i) const { return (mask_ >> i) & 1u; }
  bool is_empty_category() const noexcept { return empty_category_; }
  bool subset_of(const Subcat& o) const { return (mask_ & ~o.mask_) == 0; }

  bool operator==(const Subcat& o) const {
    return universe_ == o.universe_ && mask_ == o.mask_ && empty_category_ == o.empty_category_;
  }

  /// "add{4,1,4/1}", "add{0}" or "empty", members in universe order.
  std::string to_string() const;
  /// "{4/1,2}" or "{}": the member set read as a set of bricks.
  std::string to_set_string() const;

 private:
  Subcat(UniversePtr universe, std::uint64_t mask, bool empty_category);
  UniversePtr universe_;
  std::uint64_t mask_ = 0;
  bool empty_category_ = false;
};

/// One escaping object: `witness` arises from `op` applied to the capped sums
/// `source` and `target` (target is unused for quotients) but is not in the set.
struct Violation {
  ClosureOp op;
  std::vector<std::size_t> source;
  std::vector<std::size_t> target;
  std::size_t witness;

  std::string describe(const Universe& u) const;
};

/// Least superset stable under the given operations, where morphisms and
/// extensions range over direct sums of at most mult_cap members. Throws
/// ClosureInconclusive (carrying the partial member list) when a search bound
/// is hit or a computed object is missing from the universe.
Subcat close(const Subcat& s, OpSet under, std::size_t mult_cap = 2);

/// First escape found by a single saturation pass, or nothing if s is closed.
std::optional<Violation> find_violation(const Subcat& s, OpSet under, std::size_t mult_cap = 2);

bool is_closed(const Subcat& s, OpSet under, std::size_t mult_cap = 2);
bool is_ice(const Subcat& s, std::size_t mult_cap = 2);
bool is_torsion(const Subcat& s, std::size_t mult_cap = 2);
bool is_wide(const Subcat& s, std::size_t mult_cap = 2);

/// Why a member set fails to be an epibrick or monobrick.
struct BrickViolation {
  std::size_t from;
  std::size_t to;  // equal to `from` when the member is not a brick
  std::string describe(const Universe& u, Kind kind) const;
};

std::optional<BrickViolation> find_brick_violation(const Subcat& s, Kind kind);
bool is_epibrick(const Subcat& s);
bool is_monobrick(const Subcat& s);

bool satisfies(const Subcat& s, Kind kind, std::size_t mult_cap = 2);
/// Why s fails the kind predicate, or nullopt when it passes.
std::optional<std::string> kind_violation(const Subcat& s, Kind kind, std::size_t mult_cap = 2);
/// Closure operators of a closure kind (ice, torsion, wide).
OpSet kind_ops(Kind kind);

struct EnumerateOptions {
  std::size_t mult_cap = 2;
  bool include_empty = false;
  std::size_t universe_cap = 16;
  /// When set, subsets whose predicate is inconclusive are collected here
  /// instead of aborting the enumeration.
  std::vector<Subcat>* inconclusive = nullptr;
};

/// Every member set passing the kind, ordered by size and then
/// lexicographically on indices. add{0} is always listed for closure kinds;
/// include_empty adds the empty category for closure kinds and the empty
/// member set for brick kinds. Throws BoundExceeded above universe_cap.
std::vector<Subcat> enumerate(const UniversePtr& universe, Kind kind, const EnumerateOptions& opts = {});

/// Member masks of all subsets of size k, in lexicographic index order.
std::vector<std::uint64_t> subsets_of_size(std::size_t n, std::size_t k);

}  // namespace qrec

#pragma once

#include <memory>
#include <string>
#include <vector>

#include "qrec/rep.hpp"

namespace qrec {

/// The six functors. i-side = full subquiver on the complement V', j-side =
/// full subquiver on the quotient part V''.
enum class Functor { i_upper, i_lower, i_shriek, j_shriek, j_upper, j_star };

/// i^*, i_*, i^!, j_!, j^*, j_*.
std::string functor_name(Functor f);
/// Accepts "i^*", "i_upper", ... ; throws ParseError otherwise.
Functor parse_functor(const std::string& name);

enum class Side { ambient, i_side, j_side };

/// Direction of the arrows joining the two parts.
enum class Orientation { none, into_quotient, into_complement };

/// The four adjoint pairs (left, right).
enum class Adjunction { i_upper_i_lower, i_lower_i_shriek, j_shriek_j_upper, j_upper_j_star };

std::string adjunction_name(Adjunction a);

struct ExactnessReport {
  bool i_upper = false;
  bool i_shriek = false;
  bool j_shriek = false;
  bool j_star = false;
};

class Recollement;
using RecollementPtr = std::shared_ptr<const Recollement>;

/// Recollement of representation categories attached to a vertex split.
///
/// With arrows crossing from V' into V'' the left adjoint i^* is restriction
/// and j_! is extension by zero; i^! is the kernel of the unit M -> j_*j^*M
/// and j_* places, at each vertex of V', one copy of Y per path that leaves
/// V' through a single crossing arrow. The opposite crossing direction is the
/// mirror image: i^! and j_* become restriction and extension by zero.
class Recollement {
 public:
  /// Throws ContractViolation on an empty or full split, unknown labels or
  /// crossing arrows in both directions.
  static RecollementPtr build(QuiverPtr quiver, Prime p, const std::vector<std::string>& quotient_part);

  const QuiverPtr& ambient() const noexcept { return ambient_; }
  const QuiverPtr& i_quiver() const noexcept { return i_quiver_; }
  const QuiverPtr& j_quiver() const noexcept { return j_quiver_; }
  Prime p() const noexcept { return p_; }
  /// Ambient indices of the vertices of each side, ascending.
  const std::vector<Vertex>& i_vertices() const noexcept { return i_vertices_; }
  const std::vector<Vertex>& j_vertices() const noexcept { return j_vertices_; }
  const std::vector<ArrowId>& crossing_arrows() const noexcept { return crossing_; }
  Orientation orientation() const noexcept { return orientation_; }
  ExactnessReport exactness() const;
  bool is_exact(Functor f) const;

  static Side source_side(Functor f);
  static Side target_side(Functor f);
  const QuiverPtr& quiver_of(Side s) const;

  Rep apply(Functor f, const Rep& x) const;
  RepMor apply(Functor f, const RepMor& x) const;

  /// id -> right(left(x)), for x on the left functor's source side.
  RepMor unit(Adjunction a, const Rep& x) const;
  /// left(right(x)) -> id, for x on the right functor's source side.
  RepMor counit(Adjunction a, const Rep& x) const;

  /// The map j_!Y -> j_*Y matching id_Y under the adjunctions.
  RepMor gamma(const Rep& y) const;
  /// j_!*(Y) = Im gamma_Y.
  Rep intermediate_extension(const Rep& y) const;

  /// Restriction of an ambient object (or morphism) to one side; extension by zero back.
  Rep restrict_to(Side s, const Rep& m) const;
  RepMor restrict_to(Side s, const RepMor& f) const;
  Rep extend_by_zero(Side s, const Rep& x) const;
  RepMor extend_by_zero(Side s, const RepMor& f) const;

  /// Copy with i^* <-> i^! and j_! <-> j_* exchanged. Used as a negative
  /// control: the result is not a recollement, and its units are unavailable.
  RecollementPtr mutated() const;
  bool is_mutated() const noexcept { return mutated_; }

 private:
  Recollement() = default;

  // Paths of ambient arrows, first arrow first.
  using Path = std::vector<ArrowId>;
  void index_paths();

  Rep raw(Functor f, const Rep& x) const;
  RepMor raw(Functor f, const RepMor& x) const;
  Functor actual(Functor f) const;

  // j_* and j_!: one copy of Y per path leaving V' through a single crossing
  // arrow (resp. arriving in V' through one). With no such paths these are
  // extension by zero.
  Rep coinduce(const Rep& y) const;
  RepMor coinduce(const RepMor& g) const;
  Rep induce(const Rep& y) const;
  RepMor induce(const RepMor& g) const;
  RepMor coinduce_unit(const Rep& m) const;  // M -> j_*j^*M
  RepMor induce_counit(const Rep& m) const;  // j_!j^*M -> M

  // i^! = Ker of the unit above, i^* = Coker of the counit above, both
  // supported on V'. They come with the inclusion / projection.
  RepMor shriek_counit(const Rep& m) const;  // i_*i^!M -> M
  RepMor upper_unit(const Rep& m) const;     // M -> i_*i^*M
  Rep kernel_adjoint(const Rep& m) const;
  RepMor kernel_adjoint(const RepMor& f) const;
  Rep cokernel_adjoint(const Rep& m) const;
  RepMor cokernel_adjoint(const RepMor& f) const;

  std::size_t side_dim(const Rep& y, Vertex ambient_v) const;

  QuiverPtr ambient_, i_quiver_, j_quiver_;
  Prime p_ = 2;
  std::vector<Vertex> i_vertices_, j_vertices_;
  std::vector<long> local_;  // ambient vertex -> index inside its side
  std::vector<bool> in_j_;
  std::vector<ArrowId> crossing_;
  std::vector<ArrowId> i_arrows_, j_arrows_;  // ambient ids of the side arrows, in side order
  std::vector<long> arrow_local_;             // ambient arrow -> index inside its side, -1 if crossing
  Orientation orientation_ = Orientation::none;
  bool mutated_ = false;
  // For v in V', in block order: leaving paths ordered by first arrow,
  // arriving paths ordered by last arrow.
  std::vector<std::vector<Path>> leaving_;
  std::vector<std::vector<Path>> arriving_;
};

}  // namespace qrec

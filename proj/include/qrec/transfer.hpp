#pragma once

#include <string>
#include <vector>

#include "qrec/recollement.hpp"
#include "qrec/report.hpp"
#include "qrec/subcat.hpp"

namespace qrec {

/// A split together with the three generated universes.
struct SplitContext {
  RecollementPtr rec;
  UniversePtr ambient;
  UniversePtr i_side;
  UniversePtr j_side;
  std::size_t mult_cap = 2;

  const UniversePtr& universe(Side s) const;
};

SplitContext make_context(RecollementPtr rec, std::size_t dim_bound, std::size_t mult_cap = 2, const Limits& limits = {});

enum class Direction {
  from_i_side,         // C' -> add i_*(C')
  from_j_side_star,    // C'' -> add j_*(C'')
  from_j_side_shriek,  // C'' -> add j_!(C'')
  restrict_j,          // C -> add j^*(C)
  restrict_i_upper,    // C -> add i^*(C)
  restrict_i_shriek,   // C -> add i^!(C)
  preimage_j,          // W'' -> {M : j^*M in W''}
  preimage_i_upper,    // W' -> {M : i^*M in W'}
  preimage_i_shriek,   // W' -> {M : i^!M in W'}
};

std::string direction_name(Direction d);
Direction parse_direction(const std::string& name);
std::vector<Direction> all_directions();
Side direction_source(Direction d);
Side direction_target(Direction d);

/// The conclusion re-checked on the output.
struct Certificate {
  Kind kind = Kind::ice;
  bool passed = false;
  std::string detail;  // violation text when it fails
};

struct TransferResult {
  Subcat output;
  Certificate certificate;
};

/// add F(C): every indecomposable summand of F(member), located in the
/// universe of F's target side.
Subcat image_under(const SplitContext& ctx, Functor f, const Subcat& c);
/// Members M of the source universe of f with every summand of F(M) in w.
Subcat preimage_under(const SplitContext& ctx, Functor f, const Subcat& w);

/// Transfer an ICE-closed subcategory or torsion class along a direction.
/// Hypotheses (input kind, exactness, inclusions) are computed first and a
/// failure throws HypothesisFailed naming the condition and a witness.
TransferResult transfer(const SplitContext& ctx, Kind kind, Direction dir, const Subcat& c);

struct BijectionReport {
  std::vector<Subcat> ambient_side;  // ICE, containing i_*(mod A), optionally j_!j^*C in C
  std::vector<Subcat> j_side;        // ICE in mod B
  std::vector<std::size_t> forward;  // ambient_side[k] -> j_side[forward[k]] under j^*
  std::vector<std::size_t> backward; // j_side[k] -> ambient_side[backward[k]] under the preimage
  std::vector<std::string> problems;
  bool passed() const noexcept { return problems.empty(); }
};

/// With require_shriek_closed = false the j_!j^*C in C filter is dropped,
/// which is expected to break injectivity (negative control).
BijectionReport verify_bijection(const SplitContext& ctx, bool require_shriek_closed = true);

struct SubRecollementReport : CheckList {
  Subcat quotient;  // add j^*(C)
};

/// Checks that the six functors restrict to (mod A, C, add j^*C) and re-checks
/// the adjunction dimension identities on members. Throws HypothesisFailed
/// unless C is ICE-closed, contains i_*(mod A) and j_!j^*C in C.
SubRecollementReport verify_sub_recollement(const SplitContext& ctx, const Subcat& c);

enum class GlueVia { intermediate, shriek, star };
std::string via_name(GlueVia v);
GlueVia parse_via(const std::string& name);

struct GlueResult {
  Subcat output;
  Certificate certificate;
  /// dim Hom between output members (row, column in member order).
  std::vector<std::vector<std::size_t>> hom_dims;
};

/// i_*(s_i) together with F(s_j), F = j_!*, j_! or j_*. via = shriek needs
/// i^* exact, via = star needs i^! exact.
GlueResult glue_bricks(const SplitContext& ctx, const Subcat& s_i, const Subcat& s_j, Kind kind, GlueVia via);

}  // namespace qrec

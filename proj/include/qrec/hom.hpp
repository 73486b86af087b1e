#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "qrec/rep.hpp"

namespace qrec {

/// Search bounds for anything that enumerates a finite Hom space.
struct Limits {
  /// Exhaustive search only when p^dim <= this.
  std::uint64_t enumeration_threshold = std::uint64_t{1} << 20;
  /// Random draws tried before giving up on a space that is too large.
  std::size_t random_trials = 512;
  std::uint64_t seed = 0x9e3779b97f4a7c15ULL;
};

/// Linear system whose null space is Hom(m, n). Unknowns are the components
/// f_v stacked vertex by vertex, each vectorised row-major; one block row per
/// arrow a: i -> j encodes f_j m_a - n_a f_i = 0.
FpMat hom_system(const Rep& m, const Rep& n);

/// Basis of Hom(m, n), in the column order of kernel_basis(hom_system(m, n)).
std::vector<RepMor> hom_basis(const Rep& m, const Rep& n);
std::size_t hom_dim(const Rep& m, const Rep& n);

/// dim Ext^1(p, m), the cokernel dimension of hom_system(p, m) read as the map
/// from vertex data to arrow data.
std::size_t ext_dim(const Rep& p, const Rep& m);

/// Calls fn on the middle term of 0 -> m -> N -> p -> 0 for the split class
/// and one class per line of Ext^1(p, m) (scaling a class does not change N).
/// Throws ThresholdExceeded when p^dim Ext is too big.
void for_each_middle_term(const Rep& p, const Rep& m, const std::function<void(const Rep&)>& fn,
                          const Limits& limits = {});

/// Middle terms N of 0 -> m -> N -> p -> 0, one per iso-class; the split
/// extension comes first. Throws ThresholdExceeded when p^dim Ext is too big.
std::vector<Rep> ext_middle_terms(const Rep& p, const Rep& m, const Limits& limits = {});

/// <d, e> = sum_v d_v e_v - sum_{a: i -> j} d_i e_j.
long long euler_pairing(const Quiver& q, const DimVector& d, const DimVector& e);

/// p^k <= limits.enumeration_threshold: a k-dimensional space can be listed.
bool enumerable(Prime p, std::size_t k, const Limits& limits);

/// First nonzero element of span(basis) satisfying pred, up to scalars.
/// pred must be invariant under nonzero scaling (iso, epi, mono, non-iso, ...).
/// Exhaustive when p^|basis| <= threshold; otherwise random draws, and
/// ThresholdExceeded if none of them hits.
std::optional<RepMor> find_in_span(const std::vector<RepMor>& basis, const std::function<bool(const RepMor&)>& pred,
                                   const Limits& limits);

/// Throws IsoTestInconclusive when the Hom space is too large to settle.
bool is_isomorphic(const Rep& m, const Rep& n, const Limits& limits = {});

/// Krull-Schmidt summands. Throws DecomposeInconclusive when End is too large.
std::vector<Rep> decompose(const Rep& n, const Limits& limits = {});

/// Every nonzero endomorphism invertible. Zero is not a brick.
bool is_brick(const Rep& m, const Limits& limits = {});

}  // namespace qrec

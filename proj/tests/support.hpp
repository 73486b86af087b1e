#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "qrec/hom.hpp"
#include "qrec/io.hpp"
#include "qrec/transfer.hpp"
#include "qrec/universe.hpp"

#ifndef QREC_FIXTURE_DIR
#error "QREC_FIXTURE_DIR must point at tests/fixtures"
#endif

namespace qrec::test {

inline std::string fixture(const std::string& name) { return std::string(QREC_FIXTURE_DIR) + "/" + name; }

inline QuiverPtr linear_quiver(const std::vector<std::string>& labels) {
  std::vector<ArrowSpec> arrows;
  for (std::size_t k = 0; k + 1 < labels.size(); ++k)
    arrows.push_back({"a" + std::to_string(k), labels[k], labels[k + 1]});
  return make_quiver(labels, arrows);
}

/// 4 -> 1, the corner algebra of the running example.
inline QuiverPtr a2() { return linear_quiver({"4", "1"}); }
inline QuiverPtr a4() { return linear_quiver({"4", "1", "2", "3"}); }

inline Rep rep_of(const QuiverPtr& q, const DimVector& dims, const std::vector<FpMat>& mats, Prime p = 2) {
  return Rep(q, p, dims, mats);
}

inline SplitContext a4_context() {
  return make_context(load_quiver_file(fixture("a4_split.json")).recollement(), 30);
}

inline SplitContext mirrored_context() {
  return make_context(load_quiver_file(fixture("a4_mirrored_split.json")).recollement(), 30);
}

inline Subcat members(const UniversePtr& u, const std::string& list) { return parse_member_list(list, u); }

/// Calls fn on every family of component matrices v -> (n_v x m_v) over F_p.
/// Only for tiny shapes: the family count is p^(sum n_v m_v).
inline void for_each_family(const Rep& m, const Rep& n, const std::function<void(const std::vector<FpMat>&)>& fn) {
  const Prime p = m.p();
  std::size_t entries = 0;
  for (std::size_t v = 0; v < m.dims().size(); ++v) entries += m.dim(v) * n.dim(v);
  std::vector<std::uint32_t> digits(entries, 0);
  for (;;) {
    std::vector<FpMat> comps;
    std::size_t pos = 0;
    for (std::size_t v = 0; v < m.dims().size(); ++v) {
      FpMat f(p, n.dim(v), m.dim(v));
      for (std::size_t r = 0; r < f.rows(); ++r)
        for (std::size_t c = 0; c < f.cols(); ++c) f.set(r, c, digits[pos++]);
      comps.push_back(std::move(f));
    }
    fn(comps);
    std::size_t k = 0;
    while (k < entries && ++digits[k] == p) digits[k++] = 0;
    if (k == entries) break;
  }
}

inline std::size_t family_entries(const Rep& m, const Rep& n) {
  std::size_t entries = 0;
  for (std::size_t v = 0; v < m.dims().size(); ++v) entries += m.dim(v) * n.dim(v);
  return entries;
}

inline std::uint64_t ipow(std::uint64_t b, std::size_t e) {
  std::uint64_t r = 1;
  while (e--) r *= b;
  return r;
}

}  // namespace qrec::test

#include "qrec/subcat.hpp"

#include <bit>

#include "closure_engine.hpp"
#include "qrec/errors.hpp"

namespace qrec {

namespace {

constexpr ClosureOp kOpOrder[] = {ClosureOp::images, ClosureOp::cokernels, ClosureOp::kernels, ClosureOp::extensions,
                                  ClosureOp::quotients};

bool has(OpSet s, ClosureOp op) { return (s & static_cast<unsigned>(op)) != 0; }

std::uint64_t full_mask(std::size_t n) { return n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1; }

std::vector<std::size_t> bits(std::uint64_t mask) {
  std::vector<std::size_t> out;
  while (mask) {
    out.push_back(static_cast<std::size_t>(std::countr_zero(mask)));
    mask &= mask - 1;
  }
  return out;
}

std::string join_names(const Universe& u, const std::vector<std::size_t>& idx) {
  std::string s;
  for (std::size_t k = 0; k < idx.size(); ++k) s += (k ? "," : "") + u.name(idx[k]);
  return s;
}

// One saturation pass: the first escape from `mask`, if any.
std::optional<Violation> scan(detail::ClosureEngine& eng, std::uint64_t mask, OpSet under, std::size_t n) {
  const auto inside = eng.sums_within(mask);
  for (ClosureOp op : kOpOrder) {
    if (!has(under, op)) continue;
    if (op == ClosureOp::quotients) {
      for (std::size_t t = 0; t < n; ++t) {
        if ((mask >> t) & 1u) continue;
        for (auto x : inside)
          if (eng.surjects(x, t)) return Violation{op, eng.sums()[x], {}, t};
      }
      continue;
    }
    for (auto x : inside) {
      for (auto y : inside) {
        const std::uint64_t escaped = eng.produced(op, x, y) & ~mask;
        if (escaped) return Violation{op, eng.sums()[x], eng.sums()[y], static_cast<std::size_t>(std::countr_zero(escaped))};
      }
    }
  }
  return std::nullopt;
}

}  // namespace

std::string op_name(ClosureOp op) {
  switch (op) {
    case ClosureOp::images: return "image";
    case ClosureOp::cokernels: return "cokernel";
    case ClosureOp::kernels: return "kernel";
    case ClosureOp::extensions: return "extension";
    case ClosureOp::quotients: return "quotient";
  }
  return "?";
}

std::string kind_name(Kind k) {
  switch (k) {
    case Kind::ice: return "ice";
    case Kind::torsion: return "torsion";
    case Kind::wide: return "wide";
    case Kind::epibrick: return "epibrick";
    case Kind::monobrick: return "monobrick";
  }
  return "?";
}

Kind parse_kind(const std::string& name) {
  for (Kind k : {Kind::ice, Kind::torsion, Kind::wide, Kind::epibrick, Kind::monobrick})
    if (kind_name(k) == name) return k;
  throw ParseError("unknown subcategory kind '" + name + "'");
}

bool is_brick_kind(Kind k) { return k == Kind::epibrick || k == Kind::monobrick; }

Subcat::Subcat(UniversePtr universe, std::uint64_t mask, bool empty_category)
    : universe_(std::move(universe)), mask_(mask), empty_category_(empty_category) {
  if (!universe_) throw ContractViolation("Subcat: null universe");
  if (universe_->size() > kMaxUniverseForSubcats)
    throw BoundExceeded("Subcat: universe of " + std::to_string(universe_->size()) + " objects exceeds " +
                        std::to_string(kMaxUniverseForSubcats));
  if (mask_ & ~full_mask(universe_->size())) throw ContractViolation("Subcat: member index outside the universe");
}

Subcat::Subcat(UniversePtr universe, const std::vector<std::size_t>& members) : Subcat(std::move(universe), 0, false) {
  for (auto i : members) {
    if (i >= universe_->size()) throw ContractViolation("Subcat: member index outside the universe");
    mask_ |= std::uint64_t{1} << i;
  }
}

Subcat Subcat::from_mask(UniversePtr universe, std::uint64_t mask) { return Subcat(std::move(universe), mask, false); }

Subcat Subcat::empty_category(UniversePtr universe) { return Subcat(std::move(universe), 0, true); }

Subcat Subcat::everything(UniversePtr universe) {
  const auto n = universe->size();
  return Subcat(std::move(universe), full_mask(n), false);
}

std::vector<std::size_t> Subcat::members() const { return bits(mask_); }

std::size_t Subcat::size() const { return static_cast<std::size_t>(std::popcount(mask_)); }

std::string Subcat::to_string() const {
  if (empty_category_) return "empty";
  if (mask_ == 0) return "add{0}";
  return "add{" + join_names(*universe_, members()) + "}";
}

std::string Subcat::to_set_string() const { return "{" + join_names(*universe_, members()) + "}"; }

std::string Violation::describe(const Universe& u) const {
  std::string s = op_name(op) + " " + u.name(witness) + " escapes";
  if (op == ClosureOp::quotients) return s + " (quotient of " + join_names(u, source) + ")";
  if (op == ClosureOp::extensions)
    return s + " (middle term of an extension of " + join_names(u, source) + " by " + join_names(u, target) + ")";
  return s + " (from a morphism " + join_names(u, source) + " -> " + join_names(u, target) + ")";
}

Subcat close(const Subcat& s, OpSet under, std::size_t mult_cap) {
  if (s.is_empty_category()) return s;
  const Universe& u = *s.universe();
  auto eng = u.engine(mult_cap);
  std::uint64_t mask = s.mask();
  try {
    while (true) {
      std::uint64_t next = mask;
      const auto inside = eng->sums_within(mask);
      for (ClosureOp op : kOpOrder) {
        if (!has(under, op) || op == ClosureOp::quotients) continue;
        for (auto x : inside)
          for (auto y : inside) next |= eng->produced(op, x, y);
      }
      if (has(under, ClosureOp::quotients)) {
        for (std::size_t t = 0; t < u.size(); ++t) {
          if ((next >> t) & 1u) continue;
          for (auto x : inside) {
            if (eng->surjects(x, t)) {
              next |= std::uint64_t{1} << t;
              break;
            }
          }
        }
      }
      if (next == mask) break;
      mask = next;
    }
  } catch (const ClosureInconclusive&) {
    throw;
  } catch (const Inconclusive& e) {
    throw ClosureInconclusive(std::string("close: ") + e.what(), bits(mask));
  } catch (const UniverseIncomplete& e) {
    throw ClosureInconclusive(std::string("close: ") + e.what(), bits(mask));
  }
  return Subcat::from_mask(s.universe(), mask);
}

std::optional<Violation> find_violation(const Subcat& s, OpSet under, std::size_t mult_cap) {
  if (s.is_empty_category()) return std::nullopt;
  const Universe& u = *s.universe();
  auto eng = u.engine(mult_cap);
  try {
    return scan(*eng, s.mask(), under, u.size());
  } catch (const ClosureInconclusive&) {
    throw;
  } catch (const Inconclusive& e) {
    throw ClosureInconclusive(std::string("closure check: ") + e.what(), s.members());
  } catch (const UniverseIncomplete& e) {
    throw ClosureInconclusive(std::string("closure check: ") + e.what(), s.members());
  }
}

bool is_closed(const Subcat& s, OpSet under, std::size_t mult_cap) { return !find_violation(s, under, mult_cap); }
bool is_ice(const Subcat& s, std::size_t mult_cap) { return is_closed(s, kIceOps, mult_cap); }
bool is_torsion(const Subcat& s, std::size_t mult_cap) { return is_closed(s, kTorsionOps, mult_cap); }
bool is_wide(const Subcat& s, std::size_t mult_cap) { return is_closed(s, kWideOps, mult_cap); }

std::string BrickViolation::describe(const Universe& u, Kind kind) const {
  if (from == to) return u.name(from) + " is not a brick";
  return std::string("a nonzero morphism ") + u.name(from) + " -> " + u.name(to) + " is not " +
         (kind == Kind::epibrick ? "an epimorphism" : "a monomorphism");
}

std::optional<BrickViolation> find_brick_violation(const Subcat& s, Kind kind) {
  if (!is_brick_kind(kind)) throw ContractViolation("find_brick_violation: not a brick kind");
  auto eng = s.universe()->engine(1);
  const auto m = s.members();
  for (auto i : m)
    if (!eng->brick(i)) return BrickViolation{i, i};
  for (auto i : m) {
    for (auto j : m) {
      if (i == j) continue;
      const bool ok = kind == Kind::epibrick ? eng->all_nonzero_epi(i, j) : eng->all_nonzero_mono(i, j);
      if (!ok) return BrickViolation{i, j};
    }
  }
  return std::nullopt;
}

bool is_epibrick(const Subcat& s) { return !find_brick_violation(s, Kind::epibrick); }
bool is_monobrick(const Subcat& s) { return !find_brick_violation(s, Kind::monobrick); }

bool satisfies(const Subcat& s, Kind kind, std::size_t mult_cap) {
  switch (kind) {
    case Kind::ice: return is_ice(s, mult_cap);
    case Kind::torsion: return is_torsion(s, mult_cap);
    case Kind::wide: return is_wide(s, mult_cap);
    case Kind::epibrick: return is_epibrick(s);
    case Kind::monobrick: return is_monobrick(s);
  }
  return false;
}

OpSet kind_ops(Kind kind) {
  switch (kind) {
    case Kind::ice: return kIceOps;
    case Kind::torsion: return kTorsionOps;
    case Kind::wide: return kWideOps;
    default: throw ContractViolation("kind_ops: " + kind_name(kind) + " is not a closure kind");
  }
}

std::optional<std::string> kind_violation(const Subcat& s, Kind kind, std::size_t mult_cap) {
  const Universe& u = *s.universe();
  if (is_brick_kind(kind)) {
    if (auto v = find_brick_violation(s, kind)) return v->describe(u, kind);
    return std::nullopt;
  }
  if (auto v = find_violation(s, kind_ops(kind), mult_cap)) return v->describe(u);
  return std::nullopt;
}

std::vector<std::uint64_t> subsets_of_size(std::size_t n, std::size_t k) {
  std::vector<std::uint64_t> out;
  if (k > n) return out;
  std::vector<std::size_t> idx(k);
  for (std::size_t i = 0; i < k; ++i) idx[i] = i;
  while (true) {
    std::uint64_t m = 0;
    for (auto i : idx) m |= std::uint64_t{1} << i;
    out.push_back(m);
    std::size_t pos = k;
    while (pos > 0 && idx[pos - 1] == n - k + pos - 1) --pos;
    if (pos == 0) break;
    ++idx[pos - 1];
    for (std::size_t i = pos; i < k; ++i) idx[i] = idx[i - 1] + 1;
  }
  return out;
}

std::vector<Subcat> enumerate(const UniversePtr& universe, Kind kind, const EnumerateOptions& opts) {
  const std::size_t n = universe->size();
  if (n > opts.universe_cap)
    throw BoundExceeded("enumerate: universe of " + std::to_string(n) + " objects exceeds the enumeration cap " +
                        std::to_string(opts.universe_cap));
  std::vector<Subcat> out;
  const bool brick = is_brick_kind(kind);
  if (opts.include_empty && !brick) out.push_back(Subcat::empty_category(universe));
  for (std::size_t k = 0; k <= n; ++k) {
    if (k == 0 && brick && !opts.include_empty) continue;
    for (auto m : subsets_of_size(n, k)) {
      Subcat s = Subcat::from_mask(universe, m);
      bool ok = false;
      try {
        ok = satisfies(s, kind, opts.mult_cap);
      } catch (const Inconclusive&) {
        if (!opts.inconclusive) throw;
        opts.inconclusive->push_back(s);
      }
      if (ok) out.push_back(std::move(s));
    }
  }
  return out;
}

}  // namespace qrec

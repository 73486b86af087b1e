#include "closure_engine.hpp"

#include <algorithm>

#include "qrec/errors.hpp"

namespace qrec::detail {

namespace {

std::uint64_t pair_key(unsigned tag, std::size_t x, std::size_t y) {
  return (std::uint64_t{tag} << 56) | (std::uint64_t{x} << 28) | std::uint64_t{y};
}

void multisets(std::size_t n, std::size_t size, std::size_t start, std::vector<std::size_t>& cur,
               std::vector<std::vector<std::size_t>>& out) {
  if (cur.size() == size) {
    out.push_back(cur);
    return;
  }
  for (std::size_t i = start; i < n; ++i) {
    cur.push_back(i);
    multisets(n, size, i, cur, out);
    cur.pop_back();
  }
}

bool dominates(const DimVector& big, const DimVector& small) {
  for (std::size_t v = 0; v < big.size(); ++v)
    if (big[v] < small[v]) return false;
  return true;
}

}  // namespace

ClosureEngine::ClosureEngine(const Universe& u, std::size_t mult_cap) : u_(u), cap_(mult_cap) {
  if (mult_cap == 0) throw ContractViolation("mult_cap must be at least 1");
  if (u.size() > kMaxUniverseForSubcats)
    throw BoundExceeded("universe of " + std::to_string(u.size()) + " objects exceeds " +
                        std::to_string(kMaxUniverseForSubcats));
  for (std::size_t size = 1; size <= mult_cap; ++size) {
    std::vector<std::size_t> cur;
    multisets(u.size(), size, 0, cur, sums_);
  }
  for (const auto& s : sums_) {
    std::uint64_t m = 0;
    for (auto i : s) m |= std::uint64_t{1} << i;
    support_.push_back(m);
  }
  sum_objects_.resize(sums_.size());
}

std::vector<std::size_t> ClosureEngine::sums_within(std::uint64_t mask) const {
  std::vector<std::size_t> out;
  for (std::size_t k = 0; k < sums_.size(); ++k)
    if ((support_[k] & ~mask) == 0) out.push_back(k);
  return out;
}

const Rep& ClosureEngine::sum_object(std::size_t k) {
  auto& slot = sum_objects_.at(k);
  if (!slot) {
    std::vector<Rep> parts;
    for (auto i : sums_[k]) parts.push_back(u_.object(i));
    slot = direct_sum(u_.quiver(), u_.p(), parts);
  }
  return *slot;
}

std::uint64_t ClosureEngine::mask_of(const Rep& m) const {
  std::uint64_t mask = 0;
  for (auto i : u_.locate_summands(m)) mask |= std::uint64_t{1} << i;
  return mask;
}

std::uint64_t ClosureEngine::compute(ClosureOp op, std::size_t x, std::size_t y) {
  const Rep& src = sum_object(x);
  const Rep& tgt = sum_object(y);
  const Limits& limits = u_.limits();
  std::uint64_t mask = 0;
  if (op == ClosureOp::extensions) {
    bool split_class = true;
    // 0 -> tgt -> N -> src -> 0
    for_each_middle_term(
        src, tgt,
        [&](const Rep& mid) {
          if (split_class) {
            split_class = false;
            return;
          }
          mask |= mask_of(mid);
        },
        limits);
    return mask;
  }
  const auto basis = hom_basis(src, tgt);
  if (basis.empty()) return 0;
  if (!enumerable(u_.p(), basis.size(), limits))
    throw ThresholdExceeded("Hom space of dimension " + std::to_string(basis.size()) + " is too large to enumerate");
  find_in_span(
      basis,
      [&](const RepMor& f) {
        switch (op) {
          case ClosureOp::images:
            if (f.is_epi())
              mask |= support_[y];
            else if (f.is_mono())
              mask |= support_[x];
            else
              mask |= mask_of(image(f).object);
            break;
          case ClosureOp::cokernels:
            if (!f.is_epi()) mask |= mask_of(cokernel(f).object);
            break;
          case ClosureOp::kernels:
            if (!f.is_mono()) mask |= mask_of(kernel(f).object);
            break;
          default:
            break;
        }
        return false;
      },
      limits);
  return mask;
}

std::uint64_t ClosureEngine::produced(ClosureOp op, std::size_t x, std::size_t y) {
  std::lock_guard<std::mutex> lock(mutex_);
  const auto key = pair_key(static_cast<unsigned>(op), x, y);
  auto it = produced_.find(key);
  if (it != produced_.end()) return it->second;
  const std::uint64_t mask = compute(op, x, y);
  produced_.emplace(key, mask);
  return mask;
}

bool ClosureEngine::surjects(std::size_t x, std::size_t n) {
  std::lock_guard<std::mutex> lock(mutex_);
  const auto key = pair_key(0, x, n);
  auto it = surjects_.find(key);
  if (it != surjects_.end()) return it->second;
  const Rep& src = sum_object(x);
  const Rep& tgt = u_.object(n);
  bool result = false;
  if (dominates(src.dims(), tgt.dims())) {
    result = find_in_span(hom_basis(src, tgt), [](const RepMor& f) { return f.is_epi(); }, u_.limits()).has_value();
  }
  surjects_.emplace(key, result);
  return result;
}

bool ClosureEngine::brick(std::size_t i) {
  std::lock_guard<std::mutex> lock(mutex_);
  auto it = brick_.find(i);
  if (it != brick_.end()) return it->second;
  const bool b = is_brick(u_.object(i), u_.limits());
  brick_.emplace(i, b);
  return b;
}

bool ClosureEngine::all_nonzero_epi(std::size_t i, std::size_t j) {
  std::lock_guard<std::mutex> lock(mutex_);
  const auto key = pair_key(0, i, j);
  auto it = epi_.find(key);
  if (it != epi_.end()) return it->second;
  const bool ok = u_.hom(i, j) == 0 ||
                  !find_in_span(hom_basis(u_.object(i), u_.object(j)), [](const RepMor& f) { return !f.is_epi(); },
                                u_.limits())
                       .has_value();
  epi_.emplace(key, ok);
  return ok;
}

bool ClosureEngine::all_nonzero_mono(std::size_t i, std::size_t j) {
  std::lock_guard<std::mutex> lock(mutex_);
  const auto key = pair_key(0, i, j);
  auto it = mono_.find(key);
  if (it != mono_.end()) return it->second;
  const bool ok = u_.hom(i, j) == 0 ||
                  !find_in_span(hom_basis(u_.object(i), u_.object(j)), [](const RepMor& f) { return !f.is_mono(); },
                                u_.limits())
                       .has_value();
  mono_.emplace(key, ok);
  return ok;
}

}  // namespace qrec::detail

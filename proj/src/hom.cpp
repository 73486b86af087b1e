#include "qrec/hom.hpp"

#include <algorithm>
#include <random>

#include "qrec/errors.hpp"

namespace qrec {

namespace {

void require_compatible(const Rep& m, const Rep& n, const char* op) {
  if (!same_quiver(m.quiver(), n.quiver())) throw ContractViolation(std::string(op) + ": representations on different quivers");
  if (m.p() != n.p()) throw ContractViolation(std::string(op) + ": representations over different fields");
}

std::vector<std::size_t> unknown_offsets(const Rep& m, const Rep& n) {
  std::vector<std::size_t> off(m.dims().size() + 1, 0);
  for (Vertex v = 0; v < m.dims().size(); ++v) off[v + 1] = off[v] + n.dim(v) * m.dim(v);
  return off;
}

// p^k, saturating just above the threshold so callers can compare safely.
std::uint64_t bounded_power(Prime p, std::size_t k, std::uint64_t cap) {
  std::uint64_t r = 1;
  for (std::size_t i = 0; i < k; ++i) {
    if (r > cap / p) return cap + 1;
    r *= p;
  }
  return r;
}

FpMat matrix_power(const FpMat& a, std::size_t e) {
  FpMat result = FpMat::identity(a.p(), a.rows());
  FpMat base = a;
  while (e > 0) {
    if (e & 1) result = result * base;
    e >>= 1;
    if (e) base = base * base;
  }
  return result;
}

// phi^N with N the largest vertex dimension: by Fitting, source = Im ⊕ Ker of it.
RepMor fitting_power(const RepMor& phi) {
  std::size_t e = 1;
  for (auto d : phi.source().dims()) e = std::max(e, d);
  std::vector<FpMat> comps;
  for (const auto& c : phi.comps()) comps.push_back(matrix_power(c, e));
  return RepMor::trusted(phi.source(), phi.target(), std::move(comps));
}

bool splits(const RepMor& phi) {
  const RepMor f = fitting_power(phi);
  return !f.is_zero() && !f.is_iso();
}

// Calls fn on every coefficient vector whose first nonzero entry is 1, until fn
// returns true.
void for_each_projective_point(Prime p, std::size_t k,
                               const std::function<bool(const std::vector<FpMat::Entry>&)>& fn) {
  std::vector<FpMat::Entry> coef(k, 0);
  for (std::size_t lead = 0; lead < k; ++lead) {
    std::fill(coef.begin(), coef.end(), 0);
    coef[lead] = 1;
    while (true) {
      if (fn(coef)) return;
      std::size_t pos = k;
      bool wrapped = true;
      while (pos > lead + 1) {
        --pos;
        if (++coef[pos] < p) {
          wrapped = false;
          break;
        }
        coef[pos] = 0;
      }
      if (wrapped) break;
    }
  }
}

}  // namespace

FpMat hom_system(const Rep& m, const Rep& n) {
  require_compatible(m, n, "hom_system");
  const auto& q = *m.quiver();
  const auto off = unknown_offsets(m, n);
  std::size_t rows = 0;
  for (const auto& a : q.arrows()) rows += n.dim(a.target) * m.dim(a.source);
  const Prime p = m.p();
  FpMat sys(p, rows, off.back());
  std::size_t row = 0;
  for (ArrowId id = 0; id < q.arrow_count(); ++id) {
    const auto& a = q.arrow(id);
    const std::size_t i = a.source, j = a.target;
    const FpMat& ma = m.mat(id);
    const FpMat& na = n.mat(id);
    const std::size_t mi = m.dim(i), mj = m.dim(j), ni = n.dim(i), nj = n.dim(j);
    for (std::size_t r = 0; r < nj; ++r) {
      for (std::size_t c = 0; c < mi; ++c, ++row) {
        // (f_j m_a)(r, c) = sum_k f_j(r, k) m_a(k, c)
        for (std::size_t k = 0; k < mj; ++k) {
          const auto coef = ma(k, c);
          if (coef == 0) continue;
          const std::size_t col = off[j] + r * mj + k;
          sys.set(row, col, static_cast<long long>(sys(row, col)) + coef);
        }
        // - (n_a f_i)(r, c) = - sum_k n_a(r, k) f_i(k, c)
        for (std::size_t k = 0; k < ni; ++k) {
          const auto coef = na(r, k);
          if (coef == 0) continue;
          const std::size_t col = off[i] + k * mi + c;
          sys.set(row, col, static_cast<long long>(sys(row, col)) - coef);
        }
      }
    }
  }
  return sys;
}

std::vector<RepMor> hom_basis(const Rep& m, const Rep& n) {
  const FpMat ker = kernel_basis(hom_system(m, n));
  const auto off = unknown_offsets(m, n);
  std::vector<RepMor> out;
  out.reserve(ker.cols());
  for (std::size_t b = 0; b < ker.cols(); ++b) {
    std::vector<FpMat> comps;
    for (Vertex v = 0; v < m.dims().size(); ++v) {
      FpMat c(m.p(), n.dim(v), m.dim(v));
      for (std::size_t r = 0; r < n.dim(v); ++r)
        for (std::size_t k = 0; k < m.dim(v); ++k) c.set(r, k, ker(off[v] + r * m.dim(v) + k, b));
      comps.push_back(std::move(c));
    }
    out.emplace_back(m, n, std::move(comps));
  }
  return out;
}

std::size_t hom_dim(const Rep& m, const Rep& n) {
  const FpMat sys = hom_system(m, n);
  return sys.cols() - rank(sys);
}

std::size_t ext_dim(const Rep& p, const Rep& m) {
  const FpMat sys = hom_system(p, m);
  return sys.rows() - rank(sys);
}

void for_each_middle_term(const Rep& p, const Rep& m, const std::function<void(const Rep&)>& fn,
                          const Limits& limits) {
  require_compatible(p, m, "ext_middle_terms");
  const auto& q = *p.quiver();
  const Prime f = p.p();
  const FpMat delta = hom_system(p, m);
  const FpMat reps = complement_basis(delta);
  const std::size_t k = reps.cols();
  if (bounded_power(f, k, limits.enumeration_threshold) > limits.enumeration_threshold)
    throw ThresholdExceeded("ext_middle_terms: Ext^1 of dimension " + std::to_string(k) + " is too large to enumerate");

  auto middle = [&](const std::vector<FpMat::Entry>& eps) {
    std::vector<FpMat> mats;
    std::size_t row = 0;
    for (ArrowId id = 0; id < q.arrow_count(); ++id) {
      const auto& a = q.arrow(id);
      FpMat e(f, m.dim(a.target), p.dim(a.source));
      for (std::size_t r = 0; r < e.rows(); ++r)
        for (std::size_t c = 0; c < e.cols(); ++c) e.set(r, c, eps[row++]);
      mats.push_back(block({{m.mat(id), e}, {FpMat(f, p.dim(a.target), m.dim(a.source)), p.mat(id)}}));
    }
    DimVector dims;
    for (Vertex v = 0; v < q.vertex_count(); ++v) dims.push_back(m.dim(v) + p.dim(v));
    return Rep(m.quiver(), f, std::move(dims), std::move(mats));
  };

  fn(middle(std::vector<FpMat::Entry>(delta.rows(), 0)));
  for_each_projective_point(f, k, [&](const std::vector<FpMat::Entry>& coef) {
    std::vector<FpMat::Entry> eps(delta.rows(), 0);
    for (std::size_t c = 0; c < k; ++c) {
      if (coef[c] == 0) continue;
      for (std::size_t r = 0; r < reps.rows(); ++r)
        eps[r] = static_cast<FpMat::Entry>((eps[r] + std::uint64_t{coef[c]} * reps(r, c)) % f);
    }
    fn(middle(eps));
    return false;
  });
}

std::vector<Rep> ext_middle_terms(const Rep& p, const Rep& m, const Limits& limits) {
  std::vector<Rep> out;
  for_each_middle_term(
      p, m,
      [&](const Rep& n) {
        for (const auto& o : out)
          if (is_isomorphic(o, n, limits)) return;
        out.push_back(n);
      },
      limits);
  return out;
}

bool enumerable(Prime p, std::size_t k, const Limits& limits) {
  return bounded_power(p, k, limits.enumeration_threshold) <= limits.enumeration_threshold;
}

long long euler_pairing(const Quiver& q, const DimVector& d, const DimVector& e) {
  if (d.size() != q.vertex_count() || e.size() != q.vertex_count())
    throw ContractViolation("euler_pairing: dimension vector length mismatch");
  long long s = 0;
  for (Vertex v = 0; v < d.size(); ++v) s += static_cast<long long>(d[v] * e[v]);
  for (const auto& a : q.arrows()) s -= static_cast<long long>(d[a.source] * e[a.target]);
  return s;
}

std::optional<RepMor> find_in_span(const std::vector<RepMor>& basis, const std::function<bool(const RepMor&)>& pred,
                                   const Limits& limits) {
  const std::size_t k = basis.size();
  if (k == 0) return std::nullopt;
  const Rep& src = basis.front().source();
  const Rep& tgt = basis.front().target();
  const Prime p = src.p();
  const std::size_t nv = src.dims().size();

  auto combine = [&](const std::vector<FpMat::Entry>& coef) {
    std::vector<FpMat> comps;
    comps.reserve(nv);
    for (Vertex v = 0; v < nv; ++v) {
      std::vector<FpMat::Entry> acc(tgt.dim(v) * src.dim(v), 0);
      for (std::size_t b = 0; b < k; ++b) {
        if (coef[b] == 0) continue;
        const auto& e = basis[b].comp(v).entries();
        for (std::size_t t = 0; t < acc.size(); ++t)
          acc[t] = static_cast<FpMat::Entry>((acc[t] + std::uint64_t{coef[b]} * e[t]) % p);
      }
      comps.emplace_back(p, tgt.dim(v), src.dim(v), std::move(acc));
    }
    return RepMor::trusted(src, tgt, std::move(comps));
  };

  if (bounded_power(p, k, limits.enumeration_threshold) <= limits.enumeration_threshold) {
    std::optional<RepMor> hit;
    for_each_projective_point(p, k, [&](const std::vector<FpMat::Entry>& coef) {
      RepMor f = combine(coef);
      if (!pred(f)) return false;
      hit = std::move(f);
      return true;
    });
    return hit;
  }

  std::vector<FpMat::Entry> coef(k, 0);
  std::mt19937_64 rng(limits.seed);
  std::uniform_int_distribution<FpMat::Entry> draw(0, p - 1);
  for (std::size_t t = 0; t < limits.random_trials; ++t) {
    bool nonzero = false;
    for (auto& c : coef) {
      c = draw(rng);
      nonzero = nonzero || c != 0;
    }
    if (!nonzero) continue;
    RepMor f = combine(coef);
    if (pred(f)) return f;
  }
  throw ThresholdExceeded("Hom space of dimension " + std::to_string(k) + " over F_" + std::to_string(p) +
                          " is too large to enumerate and random search found nothing");
}

bool is_isomorphic(const Rep& m, const Rep& n, const Limits& limits) {
  require_compatible(m, n, "is_isomorphic");
  if (m.dims() != n.dims()) return false;
  if (m.is_zero() || m == n) return true;
  const std::size_t k = hom_dim(m, n);
  if (k == 0 || k != hom_dim(n, m) || k != hom_dim(m, m) || k != hom_dim(n, n)) return false;
  try {
    return find_in_span(hom_basis(m, n), [](const RepMor& f) { return f.is_iso(); }, limits).has_value();
  } catch (const ThresholdExceeded& e) {
    throw IsoTestInconclusive(std::string("is_isomorphic: ") + e.what());
  }
}

std::vector<Rep> decompose(const Rep& n, const Limits& limits) {
  std::vector<Rep> done;
  std::vector<Rep> work;
  if (!n.is_zero()) work.push_back(n);
  while (!work.empty()) {
    Rep x = work.back();
    work.pop_back();
    const auto basis = hom_basis(x, x);
    std::optional<RepMor> splitter;
    if (basis.size() > 1) {
      for (const auto& b : basis) {
        if (splits(b)) {
          splitter = b;
          break;
        }
      }
      if (!splitter) {
        try {
          splitter = find_in_span(basis, splits, limits);
        } catch (const ThresholdExceeded& e) {
          throw DecomposeInconclusive(std::string("decompose: ") + e.what());
        }
      }
    }
    if (!splitter) {
      done.push_back(x);
      continue;
    }
    const RepMor f = fitting_power(*splitter);
    // Pushed in reverse so the image summand is processed first.
    work.push_back(kernel(f).object);
    work.push_back(image(f).object);
  }
  return done;
}

bool is_brick(const Rep& m, const Limits& limits) {
  if (m.is_zero()) return false;
  const auto basis = hom_basis(m, m);
  if (basis.size() == 1) return true;
  return !find_in_span(basis, [](const RepMor& f) { return !f.is_iso(); }, limits).has_value();
}

}  // namespace qrec

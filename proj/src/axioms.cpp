#include "qrec/axioms.hpp"

#include <functional>

#include "qrec/errors.hpp"
#include "qrec/hom.hpp"

namespace qrec {

namespace {

std::string witness(const Rep& m) {
  std::string s = format_dims(m.dims());
  for (std::size_t a = 0; a < m.mats().size(); ++a) s += " " + m.quiver()->arrow(a).name + "=" + m.mat(a).to_string();
  return s;
}

bool supported_on_i(const Recollement& r, const Rep& m) {
  for (auto v : r.j_vertices())
    if (m.dim(v) != 0) return false;
  return true;
}

// Rank of the family of morphisms viewed as vectors.
std::size_t family_rank(Prime p, const std::vector<RepMor>& maps) {
  if (maps.empty()) return 0;
  std::vector<FpMat> cols;
  for (const auto& f : maps) {
    std::size_t len = 0;
    for (const auto& c : f.comps()) len += c.rows() * c.cols();
    FpMat col(p, len, 1);
    std::size_t k = 0;
    for (const auto& c : f.comps())
      for (std::size_t i = 0; i < c.rows(); ++i)
        for (std::size_t j = 0; j < c.cols(); ++j) col.set(k++, 0, c(i, j));
    cols.push_back(std::move(col));
  }
  if (cols.front().rows() == 0) return 0;
  return rank(block({cols}));
}

bool rank_matches(const RepMor& into, const RepMor& out_of) {
  // Im(into) = Ker(out_of) given out_of o into = 0.
  for (std::size_t v = 0; v < into.comps().size(); ++v) {
    const std::size_t mid = into.target().dim(v);
    if (rank(into.comp(v)) + rank(out_of.comp(v)) != mid) return false;
  }
  return true;
}

class Checker {
 public:
  explicit Checker(AxiomReport& report) : report_(report) {}

  void run(const std::string& name, const std::function<bool()>& body, const std::function<std::string()>& wit) {
    bool ok = false;
    std::string extra;
    try {
      ok = body();
    } catch (const Error& e) {
      extra = std::string(" [") + e.what() + "]";
    }
    report_.at(name).record(ok, ok ? std::string() : wit() + extra);
  }

 private:
  AxiomReport& report_;
};

}  // namespace

Rep random_rep(const QuiverPtr& q, Prime p, std::mt19937_64& rng, std::size_t max_dim) {
  std::uniform_int_distribution<std::size_t> dim(0, max_dim);
  std::uniform_int_distribution<FpMat::Entry> entry(0, p - 1);
  DimVector dims(q->vertex_count());
  for (auto& d : dims) d = dim(rng);
  std::vector<FpMat> mats;
  for (const auto& a : q->arrows()) {
    FpMat m(p, dims[a.target], dims[a.source]);
    for (std::size_t i = 0; i < m.rows(); ++i)
      for (std::size_t j = 0; j < m.cols(); ++j) m.set(i, j, entry(rng));
    mats.push_back(std::move(m));
  }
  return Rep(q, p, std::move(dims), std::move(mats));
}

RepMor random_morphism(const Rep& m, const Rep& n, std::mt19937_64& rng) {
  RepMor f = RepMor::zero(m, n);
  std::uniform_int_distribution<FpMat::Entry> coeff(0, m.p() - 1);
  for (const auto& b : hom_basis(m, n)) {
    const auto c = coeff(rng);
    if (c) f = f + b.scaled(c);
  }
  return f;
}

RecollementPtr random_split(std::mt19937_64& rng, std::size_t max_vertices, Prime p) {
  if (max_vertices < 2) throw ContractViolation("random_split: need at least two vertices");
  const auto n = std::uniform_int_distribution<std::size_t>(2, max_vertices)(rng);
  std::vector<bool> in_j(n);
  std::size_t nj = 0;
  do {
    nj = 0;
    for (std::size_t v = 0; v < n; ++v) {
      in_j[v] = (rng() & 1u) != 0;
      nj += in_j[v];
    }
  } while (nj == 0 || nj == n);
  bool into_j = (rng() & 1u) != 0;
  auto crossing_ok = [&](std::size_t s, std::size_t t) { return into_j ? (!in_j[s] && in_j[t]) : (in_j[s] && !in_j[t]); };
  bool any_crossing_pair = false;
  for (std::size_t s = 0; s < n; ++s)
    for (std::size_t t = s + 1; t < n; ++t) any_crossing_pair = any_crossing_pair || crossing_ok(s, t);
  if (!any_crossing_pair) into_j = !into_j;

  std::vector<std::string> labels;
  for (std::size_t v = 0; v < n; ++v) labels.push_back("v" + std::to_string(v));
  std::vector<ArrowSpec> arrows;
  auto add = [&](std::size_t s, std::size_t t) {
    arrows.push_back({"a" + std::to_string(arrows.size()), labels[s], labels[t]});
  };
  bool crossed = false;
  for (std::size_t s = 0; s < n; ++s) {
    for (std::size_t t = s + 1; t < n; ++t) {
      const bool crossing = in_j[s] != in_j[t];
      if (crossing && !crossing_ok(s, t)) continue;
      const auto roll = rng() % 10;
      const std::size_t count = roll < 3 ? 1 : roll == 3 ? 2 : 0;
      for (std::size_t k = 0; k < count; ++k) add(s, t);
      crossed = crossed || (crossing && count > 0);
    }
  }
  if (!crossed) {
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    for (std::size_t s = 0; s < n; ++s)
      for (std::size_t t = s + 1; t < n; ++t)
        if (crossing_ok(s, t)) pairs.emplace_back(s, t);
    const auto& [s, t] = pairs[rng() % pairs.size()];
    add(s, t);
  }
  std::vector<std::string> quotient;
  for (std::size_t v = 0; v < n; ++v)
    if (in_j[v]) quotient.push_back(labels[v]);
  return Recollement::build(make_quiver(labels, arrows), p, quotient);
}

AxiomReport verify_axioms(const Recollement& r, const AxiomOptions& opts) {
  AxiomReport report;
  report.samples = opts.samples;
  report.seed = opts.seed;
  Checker check(report);
  std::mt19937_64 rng(opts.seed);
  const Prime p = r.p();
  const auto& amb = r.ambient();
  const auto& iq = r.i_quiver();
  const auto& jq = r.j_quiver();
  using F = Functor;
  using A = Adjunction;

  for (std::size_t s = 0; s < opts.samples; ++s) {
    const Rep m = random_rep(amb, p, rng, opts.max_dim);
    const Rep n = random_rep(amb, p, rng, opts.max_dim);
    const Rep pp = random_rep(amb, p, rng, opts.max_dim);
    const Rep x = random_rep(iq, p, rng, opts.max_dim);
    const Rep x2 = random_rep(iq, p, rng, opts.max_dim);
    const Rep y = random_rep(jq, p, rng, opts.max_dim);
    const Rep y2 = random_rep(jq, p, rng, opts.max_dim);
    const RepMor f = random_morphism(m, n, rng);
    const RepMor g = random_morphism(n, pp, rng);
    const RepMor a = random_morphism(x, x2, rng);
    const RepMor b = random_morphism(x2, x, rng);
    const RepMor c = random_morphism(y, y2, rng);
    const RepMor d = random_morphism(y2, y, rng);
    auto wm = [&] { return "M " + witness(m); };
    auto wmx = [&] { return "M " + witness(m) + "; X " + witness(x); };
    auto wmy = [&] { return "M " + witness(m) + "; Y " + witness(y); };
    auto wx = [&] { return "X " + witness(x); };
    auto wy = [&] { return "Y " + witness(y); };
    auto wf = [&] { return "f: " + witness(m) + " -> " + witness(n); };

    check.run("adjunction (i^*, i_*)", [&] { return hom_dim(r.apply(F::i_upper, m), x) == hom_dim(m, r.apply(F::i_lower, x)); }, wmx);
    check.run("adjunction (i_*, i^!)", [&] { return hom_dim(r.apply(F::i_lower, x), m) == hom_dim(x, r.apply(F::i_shriek, m)); }, wmx);
    check.run("adjunction (j_!, j^*)", [&] { return hom_dim(r.apply(F::j_shriek, y), m) == hom_dim(y, r.apply(F::j_upper, m)); }, wmy);
    check.run("adjunction (j^*, j_*)", [&] { return hom_dim(m, r.apply(F::j_star, y)) == hom_dim(r.apply(F::j_upper, m), y); }, wmy);

    check.run("i^*i_* ~ id", [&] {
      const RepMor e = r.counit(A::i_upper_i_lower, x);
      return e.is_iso() && e.source() == r.apply(F::i_upper, r.apply(F::i_lower, x));
    }, wx);
    check.run("i^!i_* ~ id", [&] {
      const RepMor e = r.unit(A::i_lower_i_shriek, x);
      return e.is_iso() && e.target() == r.apply(F::i_shriek, r.apply(F::i_lower, x));
    }, wx);
    check.run("j^*j_! ~ id", [&] { return r.unit(A::j_shriek_j_upper, y).is_iso(); }, wy);
    check.run("j^*j_* ~ id", [&] { return r.counit(A::j_upper_j_star, y).is_iso(); }, wy);
    check.run("j^*i_* = 0", [&] { return r.apply(F::j_upper, r.apply(F::i_lower, x)).is_zero(); }, wx);

    const Rep z = r.extend_by_zero(Side::i_side, r.restrict_to(Side::i_side, m));
    for (const Rep* w : {&m, &z}) {
      check.run("Ker j^* = Im i_*", [&] {
        const bool killed = r.apply(F::j_upper, *w).is_zero();
        const RepMor e = r.counit(A::i_lower_i_shriek, *w);
        return killed == e.is_iso() && killed == supported_on_i(r, *w);
      }, [&] { return "M " + witness(*w); });
    }

    check.run("sequence i_*i^! -> id -> j_*j^*", [&] {
      const RepMor e = r.counit(A::i_lower_i_shriek, m);
      const RepMor h = r.unit(A::j_upper_j_star, m);
      return e.is_mono() && compose(h, e).is_zero() && rank_matches(e, h) && supported_on_i(r, cokernel(h).object) &&
             supported_on_i(r, e.source());
    }, wm);
    check.run("sequence j_!j^* -> id -> i_*i^*", [&] {
      const RepMor e = r.counit(A::j_shriek_j_upper, m);
      const RepMor h = r.unit(A::i_upper_i_lower, m);
      return h.is_epi() && compose(h, e).is_zero() && rank_matches(e, h) && supported_on_i(r, kernel(e).object) &&
             supported_on_i(r, h.target());
    }, wm);

    auto fully_faithful = [&](F fn, const Rep& u, const Rep& v) {
      const auto basis = hom_basis(u, v);
      std::vector<RepMor> images;
      for (const auto& h : basis) images.push_back(r.apply(fn, h));
      const Rep fu = r.apply(fn, u), fv = r.apply(fn, v);
      return hom_dim(fu, fv) == basis.size() && family_rank(p, images) == basis.size();
    };
    check.run("fully faithful i_*", [&] { return fully_faithful(F::i_lower, x, x2); }, wx);
    check.run("fully faithful j_!", [&] { return fully_faithful(F::j_shriek, y, y2); }, wy);
    check.run("fully faithful j_*", [&] { return fully_faithful(F::j_star, y, y2); }, wy);

    check.run("functoriality", [&] {
      bool ok = true;
      for (F fn : {F::i_upper, F::i_shriek, F::j_upper}) {
        ok = ok && r.apply(fn, compose(g, f)) == compose(r.apply(fn, g), r.apply(fn, f));
        ok = ok && r.apply(fn, RepMor::identity(m)) == RepMor::identity(r.apply(fn, m));
      }
      ok = ok && r.apply(F::i_lower, compose(b, a)) == compose(r.apply(F::i_lower, b), r.apply(F::i_lower, a));
      for (F fn : {F::j_shriek, F::j_star}) {
        ok = ok && r.apply(fn, compose(d, c)) == compose(r.apply(fn, d), r.apply(fn, c));
        ok = ok && r.apply(fn, RepMor::identity(y)) == RepMor::identity(r.apply(fn, y));
      }
      return ok;
    }, wf);

    check.run("naturality", [&] {
      bool ok = compose(r.unit(A::i_upper_i_lower, n), f) ==
                compose(r.apply(F::i_lower, r.apply(F::i_upper, f)), r.unit(A::i_upper_i_lower, m));
      ok = ok && compose(f, r.counit(A::i_lower_i_shriek, m)) ==
                     compose(r.counit(A::i_lower_i_shriek, n), r.apply(F::i_lower, r.apply(F::i_shriek, f)));
      ok = ok && compose(f, r.counit(A::j_shriek_j_upper, m)) ==
                     compose(r.counit(A::j_shriek_j_upper, n), r.apply(F::j_shriek, r.apply(F::j_upper, f)));
      ok = ok && compose(r.unit(A::j_upper_j_star, n), f) ==
                     compose(r.apply(F::j_star, r.apply(F::j_upper, f)), r.unit(A::j_upper_j_star, m));
      return ok;
    }, wf);

    check.run("i^*j_!* = 0", [&] { return r.apply(F::i_upper, r.intermediate_extension(y)).is_zero(); }, wy);
    check.run("i^!j_!* = 0", [&] { return r.apply(F::i_shriek, r.intermediate_extension(y)).is_zero(); }, wy);
    check.run("j^*j_!* ~ id", [&] {
      const auto im = image(r.gamma(y));
      return r.restrict_to(Side::j_side, im.mono).is_iso();
    }, wy);
  }
  return report;
}

}  // namespace qrec

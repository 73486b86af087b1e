#include "qrec/recollement.hpp"

#include <algorithm>
#include <set>

#include "qrec/errors.hpp"

namespace qrec {

namespace {

FpMat stack_rows(Prime p, std::size_t cols, const std::vector<FpMat>& parts) {
  if (parts.empty()) return FpMat(p, 0, cols);
  std::vector<std::vector<FpMat>> grid;
  for (const auto& m : parts) grid.push_back({m});
  return block(grid);
}

FpMat stack_cols(Prime p, std::size_t rows, const std::vector<FpMat>& parts) {
  if (parts.empty()) return FpMat(p, rows, 0);
  return block({parts});
}

void place_identity(FpMat& m, std::size_t row, std::size_t col, std::size_t n) {
  for (std::size_t k = 0; k < n; ++k) m.set(row + k, col + k, 1);
}

}  // namespace

std::string functor_name(Functor f) {
  switch (f) {
    case Functor::i_upper: return "i^*";
    case Functor::i_lower: return "i_*";
    case Functor::i_shriek: return "i^!";
    case Functor::j_shriek: return "j_!";
    case Functor::j_upper: return "j^*";
    case Functor::j_star: return "j_*";
  }
  return "?";
}

Functor parse_functor(const std::string& name) {
  static const std::pair<const char*, Functor> table[] = {
      {"i^*", Functor::i_upper},      {"i_upper", Functor::i_upper}, {"i_*", Functor::i_lower},
      {"i_lower", Functor::i_lower},  {"i^!", Functor::i_shriek},    {"i_shriek", Functor::i_shriek},
      {"j_!", Functor::j_shriek},     {"j_shriek", Functor::j_shriek}, {"j^*", Functor::j_upper},
      {"j_upper", Functor::j_upper},  {"j_*", Functor::j_star},      {"j_star", Functor::j_star},
  };
  for (const auto& [n, f] : table)
    if (name == n) return f;
  throw ParseError("unknown functor '" + name + "'");
}

std::string adjunction_name(Adjunction a) {
  switch (a) {
    case Adjunction::i_upper_i_lower: return "(i^*, i_*)";
    case Adjunction::i_lower_i_shriek: return "(i_*, i^!)";
    case Adjunction::j_shriek_j_upper: return "(j_!, j^*)";
    case Adjunction::j_upper_j_star: return "(j^*, j_*)";
  }
  return "?";
}

RecollementPtr Recollement::build(QuiverPtr quiver, Prime p, const std::vector<std::string>& quotient_part) {
  if (!quiver) throw ContractViolation("recollement: null quiver");
  if (!is_prime(p)) throw ContractViolation("recollement: modulus is not prime");
  const auto& q = *quiver;
  std::set<Vertex> jset;
  for (const auto& l : quotient_part) {
    const auto v = q.find_vertex(l);
    if (!v) throw ContractViolation("recollement: quotient part names unknown vertex '" + l + "'");
    if (!jset.insert(*v).second) throw ContractViolation("recollement: vertex '" + l + "' listed twice");
  }
  if (jset.empty()) throw ContractViolation("recollement: quotient part is empty");
  if (jset.size() == q.vertex_count()) throw ContractViolation("recollement: quotient part is the whole quiver");

  std::shared_ptr<Recollement> r(new Recollement());
  r->ambient_ = quiver;
  r->p_ = p;
  r->in_j_.assign(q.vertex_count(), false);
  r->local_.assign(q.vertex_count(), -1);
  for (Vertex v = 0; v < q.vertex_count(); ++v) {
    r->in_j_[v] = jset.count(v) > 0;
    auto& side = r->in_j_[v] ? r->j_vertices_ : r->i_vertices_;
    r->local_[v] = static_cast<long>(side.size());
    side.push_back(v);
  }
  bool into_j = false, into_i = false;
  r->arrow_local_.assign(q.arrow_count(), -1);
  for (ArrowId a = 0; a < q.arrow_count(); ++a) {
    const bool sj = r->in_j_[q.arrow(a).source];
    const bool tj = r->in_j_[q.arrow(a).target];
    if (sj == tj) {
      auto& list = sj ? r->j_arrows_ : r->i_arrows_;
      r->arrow_local_[a] = static_cast<long>(list.size());
      list.push_back(a);
    } else {
      r->crossing_.push_back(a);
      (tj ? into_j : into_i) = true;
    }
  }
  if (into_j && into_i)
    throw ContractViolation("recollement: arrows cross between the two parts in both directions");
  r->orientation_ = into_j ? Orientation::into_quotient : into_i ? Orientation::into_complement : Orientation::none;
  r->i_quiver_ = std::make_shared<const Quiver>(q.full_subquiver(r->i_vertices_));
  r->j_quiver_ = std::make_shared<const Quiver>(q.full_subquiver(r->j_vertices_));
  r->index_paths();
  return r;
}

void Recollement::index_paths() {
  const auto& q = *ambient_;
  leaving_.assign(q.vertex_count(), {});
  arriving_.assign(q.vertex_count(), {});
  const auto& topo = q.topological_order();
  for (auto it = topo.rbegin(); it != topo.rend(); ++it) {
    const Vertex v = *it;
    if (in_j_[v]) continue;
    for (ArrowId b : q.out_arrows(v)) {
      const Vertex t = q.arrow(b).target;
      if (in_j_[t]) {
        leaving_[v].push_back({b});
      } else {
        for (const auto& rest : leaving_[t]) {
          Path path{b};
          path.insert(path.end(), rest.begin(), rest.end());
          leaving_[v].push_back(std::move(path));
        }
      }
    }
  }
  for (const Vertex v : topo) {
    if (in_j_[v]) continue;
    for (ArrowId b : q.in_arrows(v)) {
      const Vertex s = q.arrow(b).source;
      if (in_j_[s]) {
        arriving_[v].push_back({b});
      } else {
        for (const auto& head : arriving_[s]) {
          Path path = head;
          path.push_back(b);
          arriving_[v].push_back(std::move(path));
        }
      }
    }
  }
}

ExactnessReport Recollement::exactness() const {
  ExactnessReport r;
  r.i_upper = orientation_ != Orientation::into_complement;
  r.j_shriek = r.i_upper;
  r.i_shriek = orientation_ != Orientation::into_quotient;
  r.j_star = r.i_shriek;
  if (mutated_) {
    std::swap(r.i_upper, r.i_shriek);
    std::swap(r.j_shriek, r.j_star);
  }
  return r;
}

bool Recollement::is_exact(Functor f) const {
  const auto r = exactness();
  switch (f) {
    case Functor::i_upper: return r.i_upper;
    case Functor::i_shriek: return r.i_shriek;
    case Functor::j_shriek: return r.j_shriek;
    case Functor::j_star: return r.j_star;
    case Functor::i_lower:
    case Functor::j_upper: return true;
  }
  return false;
}

Side Recollement::source_side(Functor f) {
  switch (f) {
    case Functor::i_lower: return Side::i_side;
    case Functor::j_shriek:
    case Functor::j_star: return Side::j_side;
    default: return Side::ambient;
  }
}

Side Recollement::target_side(Functor f) {
  switch (f) {
    case Functor::i_upper:
    case Functor::i_shriek: return Side::i_side;
    case Functor::j_upper: return Side::j_side;
    default: return Side::ambient;
  }
}

const QuiverPtr& Recollement::quiver_of(Side s) const {
  switch (s) {
    case Side::i_side: return i_quiver_;
    case Side::j_side: return j_quiver_;
    default: return ambient_;
  }
}

std::size_t Recollement::side_dim(const Rep& y, Vertex ambient_v) const {
  return y.dim(static_cast<Vertex>(local_[ambient_v]));
}

Rep Recollement::restrict_to(Side s, const Rep& m) const {
  if (s == Side::ambient) return m;
  if (!same_quiver(m.quiver(), ambient_)) throw ContractViolation("restrict: object is not on the ambient quiver");
  const auto& verts = s == Side::i_side ? i_vertices_ : j_vertices_;
  const auto& arrows = s == Side::i_side ? i_arrows_ : j_arrows_;
  DimVector dims;
  for (auto v : verts) dims.push_back(m.dim(v));
  std::vector<FpMat> mats;
  for (auto a : arrows) mats.push_back(m.mat(a));
  return Rep(quiver_of(s), p_, std::move(dims), std::move(mats));
}

RepMor Recollement::restrict_to(Side s, const RepMor& f) const {
  if (s == Side::ambient) return f;
  const auto& verts = s == Side::i_side ? i_vertices_ : j_vertices_;
  std::vector<FpMat> comps;
  for (auto v : verts) comps.push_back(f.comp(v));
  return RepMor::trusted(restrict_to(s, f.source()), restrict_to(s, f.target()), std::move(comps));
}

Rep Recollement::extend_by_zero(Side s, const Rep& x) const {
  if (s == Side::ambient) return x;
  if (!same_quiver(x.quiver(), quiver_of(s))) throw ContractViolation("extend_by_zero: object is on the wrong side");
  const auto& q = *ambient_;
  const bool want_j = s == Side::j_side;
  DimVector dims(q.vertex_count(), 0);
  for (Vertex v = 0; v < q.vertex_count(); ++v)
    if (in_j_[v] == want_j) dims[v] = side_dim(x, v);
  std::vector<FpMat> mats;
  for (ArrowId a = 0; a < q.arrow_count(); ++a) {
    const auto& arr = q.arrow(a);
    if (arrow_local_[a] >= 0 && in_j_[arr.source] == want_j)
      mats.push_back(x.mat(static_cast<ArrowId>(arrow_local_[a])));
    else
      mats.emplace_back(p_, dims[arr.target], dims[arr.source]);
  }
  return Rep(ambient_, p_, std::move(dims), std::move(mats));
}

RepMor Recollement::extend_by_zero(Side s, const RepMor& f) const {
  if (s == Side::ambient) return f;
  const Rep src = extend_by_zero(s, f.source());
  const Rep tgt = extend_by_zero(s, f.target());
  const bool want_j = s == Side::j_side;
  std::vector<FpMat> comps;
  for (Vertex v = 0; v < ambient_->vertex_count(); ++v) {
    if (in_j_[v] == want_j)
      comps.push_back(f.comp(static_cast<Vertex>(local_[v])));
    else
      comps.emplace_back(p_, 0, 0);
  }
  return RepMor::trusted(src, tgt, std::move(comps));
}

Rep Recollement::coinduce(const Rep& y) const {
  if (!same_quiver(y.quiver(), j_quiver_)) throw ContractViolation("j_*: object is not on the j-side");
  const auto& q = *ambient_;
  auto end_dim = [&](const Path& path) { return side_dim(y, q.arrow(path.back()).target); };
  DimVector dims(q.vertex_count(), 0);
  std::vector<std::vector<std::size_t>> offs(q.vertex_count());
  for (Vertex v = 0; v < q.vertex_count(); ++v) {
    if (in_j_[v]) {
      dims[v] = side_dim(y, v);
      continue;
    }
    for (const auto& path : leaving_[v]) {
      offs[v].push_back(dims[v]);
      dims[v] += end_dim(path);
    }
  }
  std::vector<FpMat> mats;
  for (ArrowId a = 0; a < q.arrow_count(); ++a) {
    const auto& arr = q.arrow(a);
    const Vertex s = arr.source, t = arr.target;
    if (in_j_[s] && in_j_[t]) {
      mats.push_back(y.mat(static_cast<ArrowId>(arrow_local_[a])));
      continue;
    }
    FpMat m(p_, dims[t], dims[s]);
    if (!in_j_[s] && in_j_[t]) {
      const auto& ps = leaving_[s];
      const auto r = static_cast<std::size_t>(std::find(ps.begin(), ps.end(), Path{a}) - ps.begin());
      place_identity(m, 0, offs[s][r], dims[t]);
    } else if (!in_j_[s] && !in_j_[t]) {
      const auto& ps = leaving_[s];
      for (std::size_t k = 0; k < leaving_[t].size(); ++k) {
        Path path{a};
        path.insert(path.end(), leaving_[t][k].begin(), leaving_[t][k].end());
        const auto r = static_cast<std::size_t>(std::find(ps.begin(), ps.end(), path) - ps.begin());
        place_identity(m, offs[t][k], offs[s][r], end_dim(path));
      }
    }
    mats.push_back(std::move(m));
  }
  return Rep(ambient_, p_, std::move(dims), std::move(mats));
}

RepMor Recollement::coinduce(const RepMor& g) const {
  const auto& q = *ambient_;
  std::vector<FpMat> comps;
  for (Vertex v = 0; v < q.vertex_count(); ++v) {
    if (in_j_[v]) {
      comps.push_back(g.comp(static_cast<Vertex>(local_[v])));
      continue;
    }
    std::vector<FpMat> blocks;
    for (const auto& path : leaving_[v]) blocks.push_back(g.comp(static_cast<Vertex>(local_[q.arrow(path.back()).target])));
    comps.push_back(block_diagonal(p_, blocks));
  }
  return RepMor::trusted(coinduce(g.source()), coinduce(g.target()), std::move(comps));
}

Rep Recollement::induce(const Rep& y) const {
  if (!same_quiver(y.quiver(), j_quiver_)) throw ContractViolation("j_!: object is not on the j-side");
  const auto& q = *ambient_;
  auto start_dim = [&](const Path& path) { return side_dim(y, q.arrow(path.front()).source); };
  DimVector dims(q.vertex_count(), 0);
  std::vector<std::vector<std::size_t>> offs(q.vertex_count());
  for (Vertex v = 0; v < q.vertex_count(); ++v) {
    if (in_j_[v]) {
      dims[v] = side_dim(y, v);
      continue;
    }
    for (const auto& path : arriving_[v]) {
      offs[v].push_back(dims[v]);
      dims[v] += start_dim(path);
    }
  }
  std::vector<FpMat> mats;
  for (ArrowId a = 0; a < q.arrow_count(); ++a) {
    const auto& arr = q.arrow(a);
    const Vertex s = arr.source, t = arr.target;
    if (in_j_[s] && in_j_[t]) {
      mats.push_back(y.mat(static_cast<ArrowId>(arrow_local_[a])));
      continue;
    }
    FpMat m(p_, dims[t], dims[s]);
    if (in_j_[s] && !in_j_[t]) {
      const auto& pt = arriving_[t];
      const auto r = static_cast<std::size_t>(std::find(pt.begin(), pt.end(), Path{a}) - pt.begin());
      place_identity(m, offs[t][r], 0, dims[s]);
    } else if (!in_j_[s] && !in_j_[t]) {
      const auto& pt = arriving_[t];
      for (std::size_t k = 0; k < arriving_[s].size(); ++k) {
        Path path = arriving_[s][k];
        path.push_back(a);
        const auto r = static_cast<std::size_t>(std::find(pt.begin(), pt.end(), path) - pt.begin());
        place_identity(m, offs[t][r], offs[s][k], start_dim(path));
      }
    }
    mats.push_back(std::move(m));
  }
  return Rep(ambient_, p_, std::move(dims), std::move(mats));
}

RepMor Recollement::induce(const RepMor& g) const {
  const auto& q = *ambient_;
  std::vector<FpMat> comps;
  for (Vertex v = 0; v < q.vertex_count(); ++v) {
    if (in_j_[v]) {
      comps.push_back(g.comp(static_cast<Vertex>(local_[v])));
      continue;
    }
    std::vector<FpMat> blocks;
    for (const auto& path : arriving_[v])
      blocks.push_back(g.comp(static_cast<Vertex>(local_[q.arrow(path.front()).source])));
    comps.push_back(block_diagonal(p_, blocks));
  }
  return RepMor::trusted(induce(g.source()), induce(g.target()), std::move(comps));
}

RepMor Recollement::coinduce_unit(const Rep& m) const {
  const auto& q = *ambient_;
  std::vector<FpMat> comps;
  for (Vertex v = 0; v < q.vertex_count(); ++v) {
    if (in_j_[v]) {
      comps.push_back(FpMat::identity(p_, m.dim(v)));
      continue;
    }
    std::vector<FpMat> rows;
    for (const auto& path : leaving_[v]) rows.push_back(path_matrix(m, path));
    comps.push_back(stack_rows(p_, m.dim(v), rows));
  }
  return RepMor(m, coinduce(restrict_to(Side::j_side, m)), std::move(comps));
}

RepMor Recollement::induce_counit(const Rep& m) const {
  const auto& q = *ambient_;
  std::vector<FpMat> comps;
  for (Vertex v = 0; v < q.vertex_count(); ++v) {
    if (in_j_[v]) {
      comps.push_back(FpMat::identity(p_, m.dim(v)));
      continue;
    }
    std::vector<FpMat> cols;
    for (const auto& path : arriving_[v]) cols.push_back(path_matrix(m, path));
    comps.push_back(stack_cols(p_, m.dim(v), cols));
  }
  return RepMor(induce(restrict_to(Side::j_side, m)), m, std::move(comps));
}

RepMor Recollement::shriek_counit(const Rep& m) const {
  const auto k = kernel(coinduce_unit(m));
  return RepMor(extend_by_zero(Side::i_side, restrict_to(Side::i_side, k.object)), m, k.inclusion.comps());
}

RepMor Recollement::upper_unit(const Rep& m) const {
  const auto c = cokernel(induce_counit(m));
  return RepMor(m, extend_by_zero(Side::i_side, restrict_to(Side::i_side, c.object)), c.projection.comps());
}

Rep Recollement::kernel_adjoint(const Rep& m) const {
  return restrict_to(Side::i_side, kernel(coinduce_unit(m)).object);
}

RepMor Recollement::kernel_adjoint(const RepMor& f) const {
  const RepMor em = shriek_counit(f.source());
  const RepMor en = shriek_counit(f.target());
  return restrict_to(Side::i_side, factor_through_mono(en, compose(f, em)));
}

Rep Recollement::cokernel_adjoint(const Rep& m) const {
  return restrict_to(Side::i_side, cokernel(induce_counit(m)).object);
}

RepMor Recollement::cokernel_adjoint(const RepMor& f) const {
  const RepMor hm = upper_unit(f.source());
  const RepMor hn = upper_unit(f.target());
  return restrict_to(Side::i_side, factor_through_epi(hm, compose(hn, f)));
}

Functor Recollement::actual(Functor f) const {
  if (!mutated_) return f;
  switch (f) {
    case Functor::i_upper: return Functor::i_shriek;
    case Functor::i_shriek: return Functor::i_upper;
    case Functor::j_shriek: return Functor::j_star;
    case Functor::j_star: return Functor::j_shriek;
    default: return f;
  }
}

Rep Recollement::raw(Functor f, const Rep& x) const {
  switch (f) {
    case Functor::i_upper: return cokernel_adjoint(x);
    case Functor::i_lower: return extend_by_zero(Side::i_side, x);
    case Functor::i_shriek: return kernel_adjoint(x);
    case Functor::j_shriek: return induce(x);
    case Functor::j_upper: return restrict_to(Side::j_side, x);
    case Functor::j_star: return coinduce(x);
  }
  throw ContractViolation("unknown functor");
}

RepMor Recollement::raw(Functor f, const RepMor& x) const {
  switch (f) {
    case Functor::i_upper: return cokernel_adjoint(x);
    case Functor::i_lower: return extend_by_zero(Side::i_side, x);
    case Functor::i_shriek: return kernel_adjoint(x);
    case Functor::j_shriek: return induce(x);
    case Functor::j_upper: return restrict_to(Side::j_side, x);
    case Functor::j_star: return coinduce(x);
  }
  throw ContractViolation("unknown functor");
}

Rep Recollement::apply(Functor f, const Rep& x) const {
  if (!same_quiver(x.quiver(), quiver_of(source_side(f))) || x.p() != p_)
    throw ContractViolation(functor_name(f) + ": input lives in the wrong category");
  return raw(actual(f), x);
}

RepMor Recollement::apply(Functor f, const RepMor& x) const {
  if (!same_quiver(x.source().quiver(), quiver_of(source_side(f))) || x.source().p() != p_)
    throw ContractViolation(functor_name(f) + ": input lives in the wrong category");
  return raw(actual(f), x);
}

RepMor Recollement::unit(Adjunction a, const Rep& x) const {
  if (mutated_) throw ContractViolation("units are unavailable for a mutated functor table");
  switch (a) {
    case Adjunction::i_upper_i_lower:
      return upper_unit(x);
    case Adjunction::i_lower_i_shriek: {
      const Rep ix = extend_by_zero(Side::i_side, x);
      return restrict_to(Side::i_side, factor_through_mono(shriek_counit(ix), RepMor::identity(ix)));
    }
    case Adjunction::j_shriek_j_upper: {
      const Rep back = restrict_to(Side::j_side, induce(x));
      if (!(back == x)) throw ContractViolation("j^*j_! is not the identity on the nose");
      return RepMor::identity(x);
    }
    case Adjunction::j_upper_j_star:
      return coinduce_unit(x);
  }
  throw ContractViolation("unknown adjunction");
}

RepMor Recollement::counit(Adjunction a, const Rep& x) const {
  if (mutated_) throw ContractViolation("counits are unavailable for a mutated functor table");
  switch (a) {
    case Adjunction::i_upper_i_lower: {
      const Rep ix = extend_by_zero(Side::i_side, x);
      return restrict_to(Side::i_side, factor_through_epi(upper_unit(ix), RepMor::identity(ix)));
    }
    case Adjunction::i_lower_i_shriek:
      return shriek_counit(x);
    case Adjunction::j_shriek_j_upper:
      return induce_counit(x);
    case Adjunction::j_upper_j_star: {
      const Rep back = restrict_to(Side::j_side, coinduce(x));
      if (!(back == x)) throw ContractViolation("j^*j_* is not the identity on the nose");
      return RepMor::identity(x);
    }
  }
  throw ContractViolation("unknown adjunction");
}

RepMor Recollement::gamma(const Rep& y) const {
  if (mutated_) throw ContractViolation("gamma is unavailable for a mutated functor table");
  const RepMor u = coinduce_unit(induce(y));
  return RepMor(u.source(), coinduce(y), u.comps());
}

Rep Recollement::intermediate_extension(const Rep& y) const { return image(gamma(y)).object; }

RecollementPtr Recollement::mutated() const {
  std::shared_ptr<Recollement> r(new Recollement(*this));
  r->mutated_ = !mutated_;
  return r;
}

}  // namespace qrec

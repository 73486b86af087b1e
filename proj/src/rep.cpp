#include "qrec/rep.hpp"

#include <sstream>

#include "qrec/errors.hpp"

namespace qrec {

Rep::Rep(QuiverPtr quiver, Prime p, DimVector dims, std::vector<FpMat> mats) {
  if (!quiver) throw ContractViolation("Rep: null quiver");
  if (!is_prime(p)) throw ContractViolation("Rep: modulus is not prime");
  if (dims.size() != quiver->vertex_count()) throw ContractViolation("Rep: dimension vector length mismatch");
  if (mats.size() != quiver->arrow_count()) throw ContractViolation("Rep: one matrix per arrow required");
  for (ArrowId a = 0; a < mats.size(); ++a) {
    const auto& arr = quiver->arrow(a);
    if (mats[a].p() != p) throw ContractViolation("Rep: matrix over wrong field on arrow " + arr.name);
    if (mats[a].rows() != dims[arr.target] || mats[a].cols() != dims[arr.source])
      throw ContractViolation("Rep: matrix on arrow '" + arr.name + "' has shape " + std::to_string(mats[a].rows()) +
                              "x" + std::to_string(mats[a].cols()) + ", expected " +
                              std::to_string(dims[arr.target]) + "x" + std::to_string(dims[arr.source]));
  }
  std::size_t total = 0;
  for (auto d : dims) total += d;
  data_ = std::make_shared<const Data>(Data{std::move(quiver), p, std::move(dims), std::move(mats), total});
}

Rep Rep::zero(QuiverPtr quiver, Prime p) {
  const std::size_t n = quiver->vertex_count();
  std::vector<FpMat> mats;
  for (std::size_t a = 0; a < quiver->arrow_count(); ++a) mats.emplace_back(p, 0, 0);
  return Rep(std::move(quiver), p, DimVector(n, 0), std::move(mats));
}

Rep Rep::simple(QuiverPtr quiver, Prime p, Vertex v) {
  DimVector dims(quiver->vertex_count(), 0);
  dims.at(v) = 1;
  std::vector<FpMat> mats;
  for (const auto& a : quiver->arrows()) mats.emplace_back(p, dims[a.target], dims[a.source]);
  return Rep(std::move(quiver), p, std::move(dims), std::move(mats));
}

bool Rep::operator==(const Rep& o) const {
  if (data_ == o.data_) return true;
  return same_quiver(quiver(), o.quiver()) && p() == o.p() && dims() == o.dims() && mats() == o.mats();
}

std::string Rep::key() const {
  std::string k;
  k.reserve(8 + total_dim() * 4);
  for (auto d : dims()) {
    k.push_back(static_cast<char>(d & 0xff));
    k.push_back(static_cast<char>((d >> 8) & 0xff));
  }
  k.push_back('|');
  for (const auto& m : mats()) {
    for (auto e : m.entries()) {
      k.push_back(static_cast<char>(e & 0xff));
      k.push_back(static_cast<char>((e >> 8) & 0xff));
    }
  }
  return k;
}

bool commutes(const Rep& source, const Rep& target, const std::vector<FpMat>& comps) {
  const auto& q = *source.quiver();
  for (ArrowId a = 0; a < q.arrow_count(); ++a) {
    const auto& arr = q.arrow(a);
    if (comps[arr.target] * source.mat(a) != target.mat(a) * comps[arr.source]) return false;
  }
  return true;
}

RepMor::RepMor(Rep source, Rep target, std::vector<FpMat> comps)
    : source_(std::move(source)), target_(std::move(target)), comps_(std::move(comps)) {
  if (!same_quiver(source_.quiver(), target_.quiver())) throw ContractViolation("RepMor: quivers differ");
  if (source_.p() != target_.p()) throw ContractViolation("RepMor: fields differ");
  const std::size_t n = source_.quiver()->vertex_count();
  if (comps_.size() != n) throw ContractViolation("RepMor: one component per vertex required");
  for (Vertex v = 0; v < n; ++v) {
    if (comps_[v].rows() != target_.dim(v) || comps_[v].cols() != source_.dim(v) || comps_[v].p() != source_.p())
      throw ContractViolation("RepMor: component at vertex '" + source_.quiver()->label(v) + "' has wrong shape");
  }
  if (!commutes(source_, target_, comps_)) throw ContractViolation("RepMor: commuting square fails");
}

RepMor::RepMor(Unchecked, Rep source, Rep target, std::vector<FpMat> comps)
    : source_(std::move(source)), target_(std::move(target)), comps_(std::move(comps)) {}

RepMor RepMor::trusted(Rep source, Rep target, std::vector<FpMat> comps) {
  return RepMor(Unchecked{}, std::move(source), std::move(target), std::move(comps));
}

RepMor RepMor::identity(const Rep& m) {
  std::vector<FpMat> comps;
  for (auto d : m.dims()) comps.push_back(FpMat::identity(m.p(), d));
  return RepMor(Unchecked{}, m, m, std::move(comps));
}

RepMor RepMor::zero(const Rep& source, const Rep& target) {
  if (!same_quiver(source.quiver(), target.quiver())) throw ContractViolation("RepMor::zero: quivers differ");
  std::vector<FpMat> comps;
  for (Vertex v = 0; v < source.dims().size(); ++v) comps.emplace_back(source.p(), target.dim(v), source.dim(v));
  return RepMor(Unchecked{}, source, target, std::move(comps));
}

bool RepMor::is_zero() const {
  for (const auto& c : comps_)
    if (!c.is_zero()) return false;
  return true;
}

bool RepMor::is_mono() const {
  for (const auto& c : comps_)
    if (rank(c) != c.cols()) return false;
  return true;
}

bool RepMor::is_epi() const {
  for (const auto& c : comps_)
    if (rank(c) != c.rows()) return false;
  return true;
}

bool RepMor::is_iso() const {
  for (const auto& c : comps_)
    if (!is_invertible(c)) return false;
  return true;
}

RepMor RepMor::operator+(const RepMor& o) const {
  if (!(source_.dims() == o.source_.dims()) || !(target_.dims() == o.target_.dims()))
    throw ContractViolation("RepMor +: different hom spaces");
  std::vector<FpMat> comps;
  for (std::size_t v = 0; v < comps_.size(); ++v) comps.push_back(comps_[v] + o.comps_[v]);
  return RepMor(Unchecked{}, source_, target_, std::move(comps));
}

RepMor RepMor::scaled(FpMat::Entry k) const {
  std::vector<FpMat> comps;
  for (const auto& c : comps_) comps.push_back(c.scaled(k));
  return RepMor(Unchecked{}, source_, target_, std::move(comps));
}

bool RepMor::operator==(const RepMor& o) const {
  return source_ == o.source_ && target_ == o.target_ && comps_ == o.comps_;
}

RepMor compose(const RepMor& g, const RepMor& f) {
  if (!(f.target().dims() == g.source().dims()) || !same_quiver(f.target().quiver(), g.source().quiver()))
    throw ContractViolation("compose: morphisms are not composable");
  std::vector<FpMat> comps;
  for (std::size_t v = 0; v < f.comps().size(); ++v) comps.push_back(g.comp(v) * f.comp(v));
  return RepMor(RepMor::Unchecked{}, f.source(), g.target(), std::move(comps));
}

KernelResult kernel(const RepMor& f) {
  const Rep& m = f.source();
  const auto& q = *m.quiver();
  std::vector<FpMat> bases;
  DimVector dims;
  for (Vertex v = 0; v < q.vertex_count(); ++v) {
    bases.push_back(kernel_basis(f.comp(v)));
    dims.push_back(bases.back().cols());
  }
  std::vector<FpMat> mats;
  for (ArrowId a = 0; a < q.arrow_count(); ++a) {
    const auto& arr = q.arrow(a);
    auto x = solve(bases[arr.target], m.mat(a) * bases[arr.source]);
    if (!x) throw ContractViolation("kernel: arrow map does not restrict (input is not a morphism)");
    mats.push_back(std::move(*x));
  }
  Rep obj(m.quiver(), m.p(), std::move(dims), std::move(mats));
  return {obj, RepMor(obj, m, std::move(bases))};
}

CokernelResult cokernel(const RepMor& f) {
  const Rep& n = f.target();
  const auto& q = *n.quiver();
  std::vector<FpMat> projections, sections;
  DimVector dims;
  for (Vertex v = 0; v < q.vertex_count(); ++v) {
    const FpMat im = image_basis(f.comp(v));
    const FpMat comp = complement_basis(f.comp(v));
    const FpMat change = inverse(block({{im, comp}}));
    projections.push_back(change.row_range(im.cols(), comp.cols()));
    sections.push_back(comp);
    dims.push_back(comp.cols());
  }
  std::vector<FpMat> mats;
  for (ArrowId a = 0; a < q.arrow_count(); ++a) {
    const auto& arr = q.arrow(a);
    mats.push_back(projections[arr.target] * n.mat(a) * sections[arr.source]);
  }
  Rep obj(n.quiver(), n.p(), std::move(dims), std::move(mats));
  return {obj, RepMor(n, obj, std::move(projections))};
}

ImageResult image(const RepMor& f) {
  const Rep& n = f.target();
  const auto& q = *n.quiver();
  std::vector<FpMat> bases, epis;
  DimVector dims;
  for (Vertex v = 0; v < q.vertex_count(); ++v) {
    bases.push_back(image_basis(f.comp(v)));
    dims.push_back(bases.back().cols());
    epis.push_back(*solve(bases.back(), f.comp(v)));
  }
  std::vector<FpMat> mats;
  for (ArrowId a = 0; a < q.arrow_count(); ++a) {
    const auto& arr = q.arrow(a);
    auto x = solve(bases[arr.target], n.mat(a) * bases[arr.source]);
    if (!x) throw ContractViolation("image: arrow map does not restrict (input is not a morphism)");
    mats.push_back(std::move(*x));
  }
  Rep obj(n.quiver(), n.p(), std::move(dims), std::move(mats));
  return {obj, RepMor(obj, n, std::move(bases)), RepMor(f.source(), obj, std::move(epis))};
}

DirectSum direct_sum_with_maps(const QuiverPtr& quiver, Prime p, const std::vector<Rep>& summands) {
  const auto& q = *quiver;
  for (const auto& s : summands)
    if (!same_quiver(s.quiver(), quiver) || s.p() != p) throw ContractViolation("direct_sum: summand on a different quiver");
  DimVector dims(q.vertex_count(), 0);
  for (const auto& s : summands)
    for (Vertex v = 0; v < dims.size(); ++v) dims[v] += s.dim(v);
  std::vector<FpMat> mats;
  for (ArrowId a = 0; a < q.arrow_count(); ++a) {
    std::vector<FpMat> blocks;
    for (const auto& s : summands) blocks.push_back(s.mat(a));
    mats.push_back(block_diagonal(p, blocks));
  }
  Rep sum(quiver, p, dims, std::move(mats));
  DirectSum out{sum, {}, {}};
  DimVector offset(q.vertex_count(), 0);
  for (const auto& s : summands) {
    std::vector<FpMat> inj, proj;
    for (Vertex v = 0; v < dims.size(); ++v) {
      FpMat i(p, dims[v], s.dim(v));
      for (std::size_t k = 0; k < s.dim(v); ++k) i.set(offset[v] + k, k, 1);
      proj.push_back(i.transpose());
      inj.push_back(std::move(i));
      offset[v] += s.dim(v);
    }
    out.injections.emplace_back(s, sum, std::move(inj));
    out.projections.emplace_back(sum, s, std::move(proj));
  }
  return out;
}

Rep direct_sum(const QuiverPtr& quiver, Prime p, const std::vector<Rep>& summands) {
  if (summands.size() == 1) return summands.front();
  return direct_sum_with_maps(quiver, p, summands).object;
}

RepMor factor_through_mono(const RepMor& mono, const RepMor& f) {
  std::vector<FpMat> comps;
  for (Vertex v = 0; v < f.comps().size(); ++v) {
    auto x = solve(mono.comp(v), f.comp(v));
    if (!x) throw ContractViolation("factor_through_mono: morphism does not factor");
    comps.push_back(std::move(*x));
  }
  return RepMor(f.source(), mono.source(), std::move(comps));
}

RepMor factor_through_epi(const RepMor& epi, const RepMor& f) {
  std::vector<FpMat> comps;
  for (Vertex v = 0; v < f.comps().size(); ++v) {
    auto x = solve(epi.comp(v).transpose(), f.comp(v).transpose());
    if (!x) throw ContractViolation("factor_through_epi: morphism does not factor");
    comps.push_back(x->transpose());
  }
  return RepMor(epi.target(), f.target(), std::move(comps));
}

FpMat path_matrix(const Rep& m, const std::vector<ArrowId>& path) {
  if (path.empty()) throw ContractViolation("path_matrix: empty path");
  FpMat acc = m.mat(path.front());
  for (std::size_t k = 1; k < path.size(); ++k) acc = m.mat(path[k]) * acc;
  return acc;
}

std::string format_dims(const DimVector& d) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < d.size(); ++i) os << (i ? "," : "") << d[i];
  os << ')';
  return os.str();
}

}  // namespace qrec

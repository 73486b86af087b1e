#include "qrec/transfer.hpp"

#include <algorithm>

#include "qrec/errors.hpp"
#include "qrec/hom.hpp"

namespace qrec {

namespace {

struct DirectionInfo {
  Direction dir;
  const char* name;
  Functor functor;
  bool preimage;
};

constexpr DirectionInfo kDirections[] = {
    {Direction::from_i_side, "from_i_side", Functor::i_lower, false},
    {Direction::from_j_side_star, "from_j_side_star", Functor::j_star, false},
    {Direction::from_j_side_shriek, "from_j_side_shriek", Functor::j_shriek, false},
    {Direction::restrict_j, "restrict_j", Functor::j_upper, false},
    {Direction::restrict_i_upper, "restrict_i_upper", Functor::i_upper, false},
    {Direction::restrict_i_shriek, "restrict_i_shriek", Functor::i_shriek, false},
    {Direction::preimage_j, "preimage_j", Functor::j_upper, true},
    {Direction::preimage_i_upper, "preimage_i_upper", Functor::i_upper, true},
    {Direction::preimage_i_shriek, "preimage_i_shriek", Functor::i_shriek, true},
};

const DirectionInfo& info(Direction d) {
  for (const auto& i : kDirections)
    if (i.dir == d) return i;
  throw ContractViolation("unknown direction");
}

std::string side_label(Side s) {
  switch (s) {
    case Side::i_side: return "the i-side";
    case Side::j_side: return "the j-side";
    default: return "the ambient category";
  }
}

void require_universe(const Subcat& c, const UniversePtr& u, const std::string& what) {
  if (c.universe() != u) throw ContractViolation(what + ": subcategory lives in the wrong universe");
}

void require_kind(const Subcat& c, Kind kind, std::size_t cap, Side side) {
  if (auto v = kind_violation(c, kind, cap))
    throw HypothesisFailed("input is not " + kind_name(kind) + " in " + side_label(side), *v);
}

void require_exact(const Recollement& r, Functor f) {
  if (!r.is_exact(f))
    throw HypothesisFailed(functor_name(f) + " is exact",
                           r.crossing_arrows().empty() ? "no crossing arrows"
                                                       : "crossing arrow " +
                                                             r.ambient()->arrow(r.crossing_arrows().front()).name +
                                                             " points the other way");
}

// First member of `inner` missing from `outer`, by name.
std::optional<std::string> first_missing(const Subcat& inner, const Subcat& outer) {
  for (auto i : inner.members())
    if (!outer.contains(i)) return inner.universe()->name(i);
  return std::nullopt;
}

void require_subset(const Subcat& inner, const Subcat& outer, const std::string& condition) {
  if (auto w = first_missing(inner, outer)) throw HypothesisFailed(condition, *w);
}

Subcat i_image_of_everything(const SplitContext& ctx) {
  return image_under(ctx, Functor::i_lower, Subcat::everything(ctx.i_side));
}

}  // namespace

const UniversePtr& SplitContext::universe(Side s) const {
  switch (s) {
    case Side::i_side: return i_side;
    case Side::j_side: return j_side;
    default: return ambient;
  }
}

SplitContext make_context(RecollementPtr rec, std::size_t dim_bound, std::size_t mult_cap, const Limits& limits) {
  SplitContext ctx;
  ctx.ambient = all_indecomposables(rec->ambient(), rec->p(), dim_bound, limits);
  ctx.i_side = all_indecomposables(rec->i_quiver(), rec->p(), dim_bound, limits);
  ctx.j_side = all_indecomposables(rec->j_quiver(), rec->p(), dim_bound, limits);
  ctx.rec = std::move(rec);
  ctx.mult_cap = mult_cap;
  return ctx;
}

std::string direction_name(Direction d) { return info(d).name; }

Direction parse_direction(const std::string& name) {
  for (const auto& i : kDirections)
    if (name == i.name) return i.dir;
  throw ParseError("unknown direction '" + name + "'");
}

std::vector<Direction> all_directions() {
  std::vector<Direction> out;
  for (const auto& i : kDirections) out.push_back(i.dir);
  return out;
}

Side direction_source(Direction d) {
  const auto& i = info(d);
  return i.preimage ? Recollement::target_side(i.functor) : Recollement::source_side(i.functor);
}

Side direction_target(Direction d) {
  const auto& i = info(d);
  return i.preimage ? Recollement::source_side(i.functor) : Recollement::target_side(i.functor);
}

Subcat image_under(const SplitContext& ctx, Functor f, const Subcat& c) {
  require_universe(c, ctx.universe(Recollement::source_side(f)), "image_under " + functor_name(f));
  const Universe& src = *c.universe();
  const UniversePtr& tgt = ctx.universe(Recollement::target_side(f));
  std::vector<std::size_t> members;
  for (auto i : c.members())
    for (auto k : tgt->locate_summands(ctx.rec->apply(f, src.object(i)))) members.push_back(k);
  return Subcat(tgt, members);
}

Subcat preimage_under(const SplitContext& ctx, Functor f, const Subcat& w) {
  require_universe(w, ctx.universe(Recollement::target_side(f)), "preimage_under " + functor_name(f));
  const UniversePtr& src = ctx.universe(Recollement::source_side(f));
  std::vector<std::size_t> members;
  for (std::size_t i = 0; i < src->size(); ++i) {
    const auto parts = w.universe()->locate_summands(ctx.rec->apply(f, src->object(i)));
    if (std::all_of(parts.begin(), parts.end(), [&](std::size_t k) { return w.contains(k); })) members.push_back(i);
  }
  return Subcat(src, members);
}

TransferResult transfer(const SplitContext& ctx, Kind kind, Direction dir, const Subcat& c) {
  if (kind != Kind::ice && kind != Kind::torsion)
    throw ContractViolation("transfer: kind must be ice or torsion, got " + kind_name(kind));
  const Recollement& r = *ctx.rec;
  const auto& di = info(dir);
  const Side source = direction_source(dir);
  require_universe(c, ctx.universe(source), "transfer " + direction_name(dir));
  const std::size_t cap = ctx.mult_cap;
  const bool ice = kind == Kind::ice;

  switch (dir) {
    case Direction::from_i_side:
      require_kind(c, kind, cap, source);
      break;
    case Direction::from_j_side_star:
      require_exact(r, ice ? Functor::j_star : Functor::i_shriek);
      require_kind(c, kind, cap, source);
      break;
    case Direction::from_j_side_shriek:
      require_exact(r, ice ? Functor::j_shriek : Functor::i_upper);
      require_kind(c, kind, cap, source);
      break;
    case Direction::restrict_j: {
      require_kind(c, kind, cap, source);
      require_subset(i_image_of_everything(ctx), c, "i_*(mod A) is contained in C");
      if (!r.is_exact(Functor::j_star)) {
        const Subcat back = image_under(ctx, Functor::j_shriek, image_under(ctx, Functor::j_upper, c));
        require_subset(back, c, "j_!j^*(C) is contained in C (j_* is not exact)");
      }
      break;
    }
    case Direction::restrict_i_upper:
    case Direction::restrict_i_shriek: {
      require_kind(c, kind, cap, source);
      const Subcat back = image_under(ctx, Functor::i_lower, image_under(ctx, di.functor, c));
      require_subset(back, c, "i_*" + functor_name(di.functor) + "(C) is contained in C");
      break;
    }
    case Direction::preimage_j:
      require_kind(c, kind, cap, source);
      break;
    case Direction::preimage_i_upper:
    case Direction::preimage_i_shriek:
      require_exact(r, di.functor);
      require_kind(c, kind, cap, source);
      break;
  }

  Subcat out = di.preimage ? preimage_under(ctx, di.functor, c) : image_under(ctx, di.functor, c);
  Certificate cert;
  cert.kind = kind;
  if (auto v = kind_violation(out, kind, cap)) {
    cert.detail = *v;
  } else if (dir == Direction::preimage_j) {
    if (auto w = first_missing(i_image_of_everything(ctx), out)) cert.detail = "i_*(mod A) not contained: " + *w;
  }
  cert.passed = cert.detail.empty();
  return {std::move(out), std::move(cert)};
}

BijectionReport verify_bijection(const SplitContext& ctx, bool require_shriek_closed) {
  BijectionReport rep;
  EnumerateOptions opts;
  opts.mult_cap = ctx.mult_cap;
  const Subcat base = i_image_of_everything(ctx);
  for (auto& c : enumerate(ctx.ambient, Kind::ice, opts)) {
    if (!base.subset_of(c)) continue;
    if (require_shriek_closed &&
        !image_under(ctx, Functor::j_shriek, image_under(ctx, Functor::j_upper, c)).subset_of(c))
      continue;
    rep.ambient_side.push_back(std::move(c));
  }
  rep.j_side = enumerate(ctx.j_side, Kind::ice, opts);

  auto index_of = [](const std::vector<Subcat>& list, const Subcat& s) -> std::optional<std::size_t> {
    for (std::size_t k = 0; k < list.size(); ++k)
      if (list[k] == s) return k;
    return std::nullopt;
  };
  const std::size_t none = static_cast<std::size_t>(-1);
  for (const auto& c : rep.ambient_side) {
    const Subcat w = image_under(ctx, Functor::j_upper, c);
    const auto k = index_of(rep.j_side, w);
    if (!k) rep.problems.push_back("j^*" + c.to_string() + " = " + w.to_string() + " is not ICE-closed in mod B");
    rep.forward.push_back(k.value_or(none));
  }
  for (const auto& w : rep.j_side) {
    const Subcat c = preimage_under(ctx, Functor::j_upper, w);
    const auto k = index_of(rep.ambient_side, c);
    if (!k) rep.problems.push_back("preimage of " + w.to_string() + " = " + c.to_string() + " is not on the ambient list");
    rep.backward.push_back(k.value_or(none));
  }
  for (std::size_t a = 0; a < rep.forward.size(); ++a) {
    for (std::size_t b = a + 1; b < rep.forward.size(); ++b)
      if (rep.forward[a] != none && rep.forward[a] == rep.forward[b])
        rep.problems.push_back("j^* identifies " + rep.ambient_side[a].to_string() + " and " +
                               rep.ambient_side[b].to_string());
    if (rep.forward[a] != none && rep.backward[rep.forward[a]] != a)
      rep.problems.push_back("preimage of j^*" + rep.ambient_side[a].to_string() + " differs from it");
  }
  for (std::size_t k = 0; k < rep.backward.size(); ++k)
    if (rep.backward[k] != none && rep.forward[rep.backward[k]] != k)
      rep.problems.push_back("j^* of the preimage of " + rep.j_side[k].to_string() + " differs from it");
  if (rep.ambient_side.size() != rep.j_side.size())
    rep.problems.push_back("list sizes differ: " + std::to_string(rep.ambient_side.size()) + " vs " +
                           std::to_string(rep.j_side.size()));
  return rep;
}

SubRecollementReport verify_sub_recollement(const SplitContext& ctx, const Subcat& c) {
  require_universe(c, ctx.ambient, "verify_sub_recollement");
  const Recollement& r = *ctx.rec;
  require_kind(c, Kind::ice, ctx.mult_cap, Side::ambient);
  const Subcat base = i_image_of_everything(ctx);
  require_subset(base, c, "i_*(mod A) is contained in C");
  const Subcat quotient = image_under(ctx, Functor::j_upper, c);
  require_subset(image_under(ctx, Functor::j_shriek, quotient), c, "j_!j^*(C) is contained in C");

  SubRecollementReport rep{{}, quotient};
  auto record_subset = [&](const std::string& name, const Subcat& inner, const Subcat& outer) {
    const auto w = first_missing(inner, outer);
    rep.at(name).record(!w, w.value_or(""));
  };
  record_subset("i_* maps mod A into C", base, c);
  record_subset("j_! maps j^*C into C", image_under(ctx, Functor::j_shriek, quotient), c);
  record_subset("j_* maps j^*C into C", image_under(ctx, Functor::j_star, quotient), c);
  record_subset("i_*i^* maps C into C", image_under(ctx, Functor::i_lower, image_under(ctx, Functor::i_upper, c)), c);
  record_subset("i_*i^! maps C into C", image_under(ctx, Functor::i_lower, image_under(ctx, Functor::i_shriek, c)), c);
  {
    const auto v = kind_violation(quotient, Kind::ice, ctx.mult_cap);
    rep.at("j^*C is ICE-closed").record(!v, v.value_or(""));
  }

  const Universe& amb = *ctx.ambient;
  for (auto m_idx : c.members()) {
    const Rep& m = amb.object(m_idx);
    for (std::size_t x_idx = 0; x_idx < ctx.i_side->size(); ++x_idx) {
      const Rep& x = ctx.i_side->object(x_idx);
      const std::string w = amb.name(m_idx) + ", " + ctx.i_side->name(x_idx);
      rep.at("adjunction (i^*, i_*) on C")
          .record(hom_dim(r.apply(Functor::i_upper, m), x) == hom_dim(m, r.apply(Functor::i_lower, x)), w);
      rep.at("adjunction (i_*, i^!) on C")
          .record(hom_dim(r.apply(Functor::i_lower, x), m) == hom_dim(x, r.apply(Functor::i_shriek, m)), w);
    }
    for (auto y_idx : quotient.members()) {
      const Rep& y = ctx.j_side->object(y_idx);
      const std::string w = amb.name(m_idx) + ", " + ctx.j_side->name(y_idx);
      rep.at("adjunction (j_!, j^*) on C")
          .record(hom_dim(r.apply(Functor::j_shriek, y), m) == hom_dim(y, r.apply(Functor::j_upper, m)), w);
      rep.at("adjunction (j^*, j_*) on C")
          .record(hom_dim(m, r.apply(Functor::j_star, y)) == hom_dim(r.apply(Functor::j_upper, m), y), w);
    }
  }
  return rep;
}

std::string via_name(GlueVia v) {
  switch (v) {
    case GlueVia::intermediate: return "intermediate";
    case GlueVia::shriek: return "shriek";
    case GlueVia::star: return "star";
  }
  return "?";
}

GlueVia parse_via(const std::string& name) {
  for (GlueVia v : {GlueVia::intermediate, GlueVia::shriek, GlueVia::star})
    if (via_name(v) == name) return v;
  throw ParseError("unknown gluing functor '" + name + "'");
}

GlueResult glue_bricks(const SplitContext& ctx, const Subcat& s_i, const Subcat& s_j, Kind kind, GlueVia via) {
  if (!is_brick_kind(kind)) throw ContractViolation("glue_bricks: kind must be epibrick or monobrick");
  require_universe(s_i, ctx.i_side, "glue_bricks");
  require_universe(s_j, ctx.j_side, "glue_bricks");
  const Recollement& r = *ctx.rec;
  if (via == GlueVia::shriek) require_exact(r, Functor::i_upper);
  if (via == GlueVia::star) require_exact(r, Functor::i_shriek);
  require_kind(s_i, kind, ctx.mult_cap, Side::i_side);
  require_kind(s_j, kind, ctx.mult_cap, Side::j_side);

  std::vector<std::size_t> members = image_under(ctx, Functor::i_lower, s_i).members();
  for (auto y : s_j.members()) {
    const Rep& obj = ctx.j_side->object(y);
    const Rep glued = via == GlueVia::intermediate ? r.intermediate_extension(obj)
                      : via == GlueVia::shriek     ? r.apply(Functor::j_shriek, obj)
                                                   : r.apply(Functor::j_star, obj);
    for (auto k : ctx.ambient->locate_summands(glued)) members.push_back(k);
  }
  GlueResult res{Subcat(ctx.ambient, members), {}, {}};
  res.certificate.kind = kind;
  if (auto v = kind_violation(res.output, kind, ctx.mult_cap)) res.certificate.detail = *v;
  res.certificate.passed = res.certificate.detail.empty();
  const auto m = res.output.members();
  for (auto a : m) {
    std::vector<std::size_t> row;
    for (auto b : m) row.push_back(ctx.ambient->hom(a, b));
    res.hom_dims.push_back(std::move(row));
  }
  return res;
}

}  // namespace qrec

#include "qrec/cli.hpp"

#include <cstdlib>
#include <fstream>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "qrec/axioms.hpp"
#include "qrec/errors.hpp"
#include "qrec/io.hpp"
#include "qrec/tables.hpp"

namespace qrec {

using nlohmann::json;

namespace {

constexpr std::uint64_t kDefaultSeed = 42;

struct Common {
  std::string file;
  std::string format = "text";
  std::string side = "ambient";
  long dim_bound = -1;
  long mult_cap = -1;
  std::uint64_t enum_threshold = Limits{}.enumeration_threshold;

  Limits limits() const {
    Limits l;
    l.enumeration_threshold = enum_threshold;
    return l;
  }
};

void add_common(CLI::App* sub, Common& c, bool with_side) {
  sub->add_option("file", c.file, "quiver description (JSON)")->required();
  sub->add_option("--format", c.format, "text, json or csv")->check(CLI::IsMember({"text", "json", "csv"}));
  sub->add_option("--dim-bound", c.dim_bound, "total-dimension bound for generated universes");
  sub->add_option("--mult-cap", c.mult_cap, "summand cap for closure checks");
  sub->add_option("--enum-threshold", c.enum_threshold, "largest Hom space (element count) searched exhaustively");
  if (with_side) sub->add_option("--side", c.side, "ambient, i or j")->check(CLI::IsMember({"ambient", "i", "j"}));
}

QuiverFile load(const Common& c) {
  QuiverFile f = load_quiver_file(c.file);
  if (c.dim_bound >= 0) f.dim_bound = static_cast<std::size_t>(c.dim_bound);
  if (c.mult_cap >= 0) {
    if (c.mult_cap == 0) throw ParseError("--mult-cap must be at least 1");
    f.mult_cap = static_cast<std::size_t>(c.mult_cap);
  }
  return f;
}

QuiverPtr side_quiver(const QuiverFile& f, const std::string& side) {
  if (side == "ambient") return f.quiver();
  const auto r = f.recollement();
  return side == "i" ? r->i_quiver() : r->j_quiver();
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"") == std::string::npos) return s;
  std::string q = "\"";
  for (char ch : s) q += ch == '"' ? std::string("\"\"") : std::string(1, ch);
  return q + "\"";
}

json names_json(const Subcat& s) {
  json a = json::array();
  for (auto i : s.members()) a.push_back(s.universe()->name(i));
  return a;
}

json checks_json(const CheckList& list) {
  json a = json::array();
  for (const auto& c : list.checks)
    a.push_back({{"name", c.name}, {"runs", c.runs}, {"failures", c.failures}, {"witnesses", c.witnesses}});
  return a;
}

void print_checks(std::ostream& out, const CheckList& list) {
  for (const auto& c : list.checks) {
    out << (c.passed() ? "PASS " : "FAIL ") << c.name << " (" << c.runs - c.failures << "/" << c.runs << ")\n";
    for (const auto& w : c.witnesses) out << "  witness: " << w << "\n";
  }
}

std::uint64_t default_seed() {
  const char* env = std::getenv("QREC_SEED");
  if (!env || !*env) return kDefaultSeed;
  try {
    std::size_t used = 0;
    const auto v = std::stoull(env, &used);
    if (env[used] != '\0') throw std::invalid_argument("trailing characters");
    return v;
  } catch (const std::exception&) {
    throw ParseError(std::string("QREC_SEED is not an unsigned integer: '") + env + "'");
  }
}

// Hasse diagram of the inclusion order.
std::string hasse_dot(const std::vector<Subcat>& list) {
  std::string dot = "digraph subcategories {\n  rankdir=BT;\n";
  for (std::size_t k = 0; k < list.size(); ++k)
    dot += "  n" + std::to_string(k) + " [label=\"" + list[k].to_string() + "\"];\n";
  auto below = [&](std::size_t a, std::size_t b) {
    if (list[a].is_empty_category()) return !list[b].is_empty_category();
    if (list[b].is_empty_category()) return false;
    return list[a].subset_of(list[b]) && !(list[a] == list[b]);
  };
  for (std::size_t a = 0; a < list.size(); ++a) {
    for (std::size_t b = 0; b < list.size(); ++b) {
      if (!below(a, b)) continue;
      bool covered = true;
      for (std::size_t c = 0; c < list.size() && covered; ++c)
        if (below(a, c) && below(c, b)) covered = false;
      if (covered) dot += "  n" + std::to_string(a) + " -> n" + std::to_string(b) + ";\n";
    }
  }
  return dot + "}\n";
}

int cmd_indec(const Common& c, std::ostream& out, std::ostream& err) {
  const QuiverFile f = load(c);
  const QuiverPtr q = side_quiver(f, c.side);
  const UniversePtr u = all_indecomposables(q, f.p, f.dim_bound, c.limits());
  if (c.format == "json") {
    json j;
    j["side"] = c.side;
    j["p"] = f.p;
    j["vertices"] = q->labels();
    j["complete"] = u->complete();
    j["objects"] = json::array();
    for (std::size_t i = 0; i < u->size(); ++i)
      j["objects"].push_back({{"name", u->name(i)}, {"dims", u->object(i).dims()}, {"rep", json::parse(rep_json(u->object(i)))}});
    out << j.dump(2) << "\n";
  } else if (c.format == "csv") {
    out << "name";
    for (const auto& l : q->labels()) out << "," << csv_field(l);
    out << "\n";
    for (std::size_t i = 0; i < u->size(); ++i) {
      out << csv_field(u->name(i));
      for (auto d : u->object(i).dims()) out << "," << d;
      out << "\n";
    }
  } else {
    for (std::size_t i = 0; i < u->size(); ++i) out << u->name(i) << "\t" << format_dims(u->object(i).dims()) << "\n";
  }
  if (!u->complete()) {
    err << "dimension bound " << f.dim_bound << " reached before the universe closed up\n";
    return kExitBound;
  }
  return kExitOk;
}

int cmd_subcats(const Common& c, const std::string& kind_s, bool include_empty, const std::string& dot_path,
                std::size_t universe_cap, std::ostream& out, std::ostream& err) {
  const QuiverFile f = load(c);
  const Kind kind = parse_kind(kind_s);
  const UniversePtr u = all_indecomposables(side_quiver(f, c.side), f.p, f.dim_bound, c.limits());
  std::vector<Subcat> inconclusive;
  EnumerateOptions opts;
  opts.mult_cap = f.mult_cap;
  opts.include_empty = include_empty;
  opts.universe_cap = universe_cap;
  opts.inconclusive = &inconclusive;
  const auto list = enumerate(u, kind, opts);
  const bool brick = is_brick_kind(kind);
  auto text = [&](const Subcat& s) { return brick ? s.to_set_string() : s.to_string(); };
  if (c.format == "json") {
    json j;
    j["kind"] = kind_s;
    j["side"] = c.side;
    j["count"] = list.size();
    j["subcategories"] = json::array();
    for (const auto& s : list)
      j["subcategories"].push_back({{"text", text(s)}, {"members", names_json(s)}, {"empty", s.is_empty_category()}});
    j["inconclusive"] = json::array();
    for (const auto& s : inconclusive) j["inconclusive"].push_back(text(s));
    out << j.dump(2) << "\n";
  } else if (c.format == "csv") {
    out << "index,size,subcategory\n";
    for (std::size_t k = 0; k < list.size(); ++k)
      out << k << "," << list[k].size() << "," << csv_field(text(list[k])) << "\n";
    for (const auto& s : inconclusive) out << "inconclusive," << s.size() << "," << csv_field(text(s)) << "\n";
  } else {
    for (const auto& s : list) out << text(s) << "\n";
    for (const auto& s : inconclusive) out << "inconclusive: " << text(s) << "\n";
  }
  if (!dot_path.empty()) {
    std::ofstream dot(dot_path);
    if (!dot) throw ParseError("cannot write '" + dot_path + "'");
    dot << hasse_dot(list);
  }
  if (!u->complete()) {
    err << "dimension bound " << f.dim_bound << " reached before the universe closed up\n";
    return kExitBound;
  }
  if (!inconclusive.empty()) {
    err << inconclusive.size() << " subsets could not be decided\n";
    return kExitInconclusive;
  }
  return kExitOk;
}

int cmd_transfer(const Common& c, const std::string& map, const std::string& kind_s, const std::string& subcat_path,
                 const std::string& members, std::ostream& out) {
  const QuiverFile f = load(c);
  const Direction dir = parse_direction(map);
  const Kind kind = parse_kind(kind_s);
  const SplitContext ctx = make_context(f.recollement(), f.dim_bound, f.mult_cap, c.limits());
  const UniversePtr& src = ctx.universe(direction_source(dir));
  if (subcat_path.empty() == members.empty()) throw ParseError("give exactly one of --subcat and --members");
  const Subcat in = subcat_path.empty() ? parse_member_list(members, src) : load_subcat_file(subcat_path, src);
  const TransferResult res = transfer(ctx, kind, dir, in);
  if (c.format == "json") {
    json j{{"map", map},
           {"kind", kind_s},
           {"input", names_json(in)},
           {"output", names_json(res.output)},
           {"certificate", {{"passed", res.certificate.passed}, {"detail", res.certificate.detail}}}};
    out << j.dump(2) << "\n";
  } else if (c.format == "csv") {
    out << "map,input,output,certificate\n"
        << map << "," << csv_field(in.to_string()) << "," << csv_field(res.output.to_string()) << ","
        << (res.certificate.passed ? "pass" : "fail") << "\n";
  } else {
    out << in.to_string() << " -> " << res.output.to_string() << "\n";
    out << "certificate (" << kind_s << "): " << (res.certificate.passed ? "pass" : "fail");
    if (!res.certificate.passed) out << " (" << res.certificate.detail << ")";
    out << "\n";
  }
  return res.certificate.passed ? kExitOk : kExitFailure;
}

CheckList bricks_suite(const SplitContext& ctx) {
  CheckList list;
  const Recollement& r = *ctx.rec;
  std::vector<GlueVia> vias{GlueVia::intermediate};
  if (r.is_exact(Functor::i_upper)) vias.push_back(GlueVia::shriek);
  if (r.is_exact(Functor::i_shriek)) vias.push_back(GlueVia::star);
  EnumerateOptions opts;
  opts.include_empty = true;
  opts.mult_cap = ctx.mult_cap;
  for (Kind kind : {Kind::epibrick, Kind::monobrick}) {
    const auto li = enumerate(ctx.i_side, kind, opts);
    const auto lj = enumerate(ctx.j_side, kind, opts);
    for (GlueVia via : vias) {
      auto& check = list.at("glue " + kind_name(kind) + " via " + via_name(via));
      for (const auto& a : li)
        for (const auto& b : lj) {
          const auto g = glue_bricks(ctx, a, b, kind, via);
          check.record(g.certificate.passed, a.to_set_string() + " + " + b.to_set_string() + " -> " +
                                                 g.output.to_set_string() + ": " + g.certificate.detail);
        }
    }
  }
  for (std::size_t y = 0; y < ctx.j_side->size(); ++y) {
    const Rep e = r.intermediate_extension(ctx.j_side->object(y));
    list.at("i^*j_!* = 0").record(r.apply(Functor::i_upper, e).is_zero(), ctx.j_side->name(y));
    list.at("i^!j_!* = 0").record(r.apply(Functor::i_shriek, e).is_zero(), ctx.j_side->name(y));
  }
  return list;
}

int cmd_verify(const Common& c, const std::string& suite, std::size_t samples, std::optional<std::uint64_t> seed,
               std::size_t max_dim, const std::string& subcat_path, const std::string& members, std::ostream& out) {
  const QuiverFile f = load(c);
  const RecollementPtr rec = f.recollement();
  json j;
  j["suite"] = suite;
  bool ok = true;

  if (suite == "axioms") {
    AxiomOptions opts;
    opts.samples = samples;
    opts.seed = seed ? *seed : default_seed();
    opts.max_dim = max_dim;
    const AxiomReport rep = verify_axioms(*rec, opts);
    ok = rep.all_passed();
    j["samples"] = rep.samples;
    j["seed"] = rep.seed;
    j["checks"] = checks_json(rep);
    if (c.format != "json") print_checks(out, rep);
  } else {
    const SplitContext ctx = make_context(rec, f.dim_bound, f.mult_cap, c.limits());
    if (suite == "bijection") {
      const BijectionReport rep = verify_bijection(ctx);
      ok = rep.passed();
      j["ambient_side"] = json::array();
      for (const auto& s : rep.ambient_side) j["ambient_side"].push_back(s.to_string());
      j["j_side"] = json::array();
      for (const auto& s : rep.j_side) j["j_side"].push_back(s.to_string());
      j["forward"] = rep.forward;
      j["backward"] = rep.backward;
      j["problems"] = rep.problems;
      if (c.format != "json") {
        out << rep.ambient_side.size() << " ambient subcategories, " << rep.j_side.size() << " on the j-side\n";
        for (std::size_t k = 0; k < rep.ambient_side.size(); ++k) {
          out << rep.ambient_side[k].to_string() << " <-> ";
          out << (rep.forward[k] < rep.j_side.size() ? rep.j_side[rep.forward[k]].to_string() : "?") << "\n";
        }
        for (const auto& p : rep.problems) out << "problem: " << p << "\n";
      }
    } else if (suite == "subrecollement") {
      std::vector<Subcat> inputs;
      if (!subcat_path.empty())
        inputs.push_back(load_subcat_file(subcat_path, ctx.ambient));
      else if (!members.empty())
        inputs.push_back(parse_member_list(members, ctx.ambient));
      else
        inputs = verify_bijection(ctx).ambient_side;
      j["subcategories"] = json::array();
      for (const auto& s : inputs) {
        const SubRecollementReport rep = verify_sub_recollement(ctx, s);
        ok = ok && rep.all_passed();
        j["subcategories"].push_back(
            {{"C", s.to_string()}, {"quotient", rep.quotient.to_string()}, {"checks", checks_json(rep)}});
        if (c.format != "json") {
          out << "C = " << s.to_string() << ", j^*C = " << rep.quotient.to_string() << "\n";
          print_checks(out, rep);
        }
      }
    } else {
      const CheckList rep = bricks_suite(ctx);
      ok = rep.all_passed();
      j["checks"] = checks_json(rep);
      if (c.format != "json") print_checks(out, rep);
    }
  }
  j["passed"] = ok;
  if (c.format == "json")
    out << j.dump(2) << "\n";
  else
    out << (ok ? "all checks passed" : "some checks failed") << "\n";
  return ok ? kExitOk : kExitFailure;
}

int cmd_reproduce(const Common& c, const std::string& golden, std::ostream& out, std::ostream& err) {
  const QuiverFile f = load(c);
  const SplitContext ctx = make_context(f.recollement(), f.dim_bound, f.mult_cap, c.limits());
  const auto tables = example_tables(ctx);
  const std::string text = format_tables(tables);
  int code = kExitOk;
  if (c.format == "json") {
    json j = json::array();
    for (const auto& t : tables) {
      json rows = json::array();
      for (const auto& r : t.rows)
        rows.push_back({{"input", r.input.to_string()}, {"output", r.output.to_string()}, {"certified", r.certificate.passed}});
      j.push_back({{"direction", direction_name(t.direction)}, {"rows", rows}});
    }
    out << j.dump(2) << "\n";
  } else if (c.format == "csv") {
    out << "table,direction,input,output\n";
    for (std::size_t k = 0; k < tables.size(); ++k)
      for (const auto& r : tables[k].rows)
        out << k + 1 << "," << direction_name(tables[k].direction) << "," << csv_field(r.input.to_string()) << ","
            << csv_field(r.output.to_string()) << "\n";
  } else {
    out << text;
  }
  for (const auto& t : tables)
    for (const auto& r : t.rows)
      if (!r.certificate.passed) {
        err << direction_name(t.direction) << ": certificate failed for " << r.input.to_string() << ": "
            << r.certificate.detail << "\n";
        code = kExitFailure;
      }
  if (!golden.empty()) {
    const std::string expected = read_text_file(golden);
    if (expected != text) {
      err << "output differs from " << golden << "\n";
      std::istringstream a(text), b(expected);
      std::string la, lb;
      for (std::size_t line = 1;; ++line) {
        const bool ha = static_cast<bool>(std::getline(a, la));
        const bool hb = static_cast<bool>(std::getline(b, lb));
        if (!ha && !hb) break;
        if (!ha || !hb || la != lb) {
          err << "line " << line << ": got '" << (ha ? la : "<end>") << "', expected '" << (hb ? lb : "<end>") << "'\n";
          break;
        }
      }
      code = kExitFailure;
    }
  }
  return code;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Quiver representations, recollements and ICE-closed subcategories over F_p", "qrec"};
  app.require_subcommand(1);

  Common c_indec, c_sub, c_tr, c_ver, c_rep;
  auto* indec = app.add_subcommand("indec", "list the indecomposables");
  add_common(indec, c_indec, true);

  auto* subcats = app.add_subcommand("subcats", "enumerate subcategories of a kind");
  add_common(subcats, c_sub, true);
  std::string kind_sub;
  bool include_empty = false;
  std::string dot_path;
  std::size_t universe_cap = 16;
  subcats->add_option("--kind", kind_sub, "ice, torsion, wide, epibrick or monobrick")
      ->required()
      ->check(CLI::IsMember({"ice", "torsion", "wide", "epibrick", "monobrick"}));
  subcats->add_flag("--include-empty", include_empty, "also list the empty subcategory");
  subcats->add_option("--dot", dot_path, "write the inclusion Hasse diagram (DOT) to this path");
  subcats->add_option("--universe-cap", universe_cap, "largest universe to enumerate subsets of");

  auto* tr = app.add_subcommand("transfer", "move a subcategory along the recollement");
  add_common(tr, c_tr, false);
  std::string map, kind_tr = "ice", subcat_tr, members_tr;
  std::vector<std::string> dir_names;
  for (auto d : all_directions()) dir_names.push_back(direction_name(d));
  tr->add_option("--map", map, "direction")->required()->check(CLI::IsMember(dir_names));
  tr->add_option("--kind", kind_tr, "ice or torsion")->check(CLI::IsMember({"ice", "torsion"}));
  tr->add_option("--subcat", subcat_tr, "subcategory file (JSON)");
  tr->add_option("--members", members_tr, "comma-separated member names");

  auto* ver = app.add_subcommand("verify", "run a verification suite");
  add_common(ver, c_ver, false);
  std::string suite = "axioms", subcat_ver, members_ver;
  std::size_t samples = 50, max_dim = 2;
  std::optional<std::uint64_t> seed;
  ver->add_option("--suite", suite, "axioms, bijection, subrecollement or bricks")
      ->check(CLI::IsMember({"axioms", "bijection", "subrecollement", "bricks"}));
  ver->add_option("--samples", samples, "sampled objects for the axiom suite");
  ver->add_option("--seed", seed, "random seed (default: QREC_SEED or 42)");
  ver->add_option("--max-dim", max_dim, "per-vertex dimension of sampled objects");
  ver->add_option("--subcat", subcat_ver, "subcategory file for the subrecollement suite");
  ver->add_option("--members", members_ver, "comma-separated members for the subrecollement suite");

  auto* rep = app.add_subcommand("reproduce", "regenerate the four correspondence tables");
  add_common(rep, c_rep, false);
  std::string example = "tables", golden;
  rep->add_option("--example", example, "which example to reproduce")->check(CLI::IsMember({"tables"}));
  rep->add_option("--golden", golden, "compare the text output with this file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitParse;
  }

  try {
    if (*indec) return cmd_indec(c_indec, out, err);
    if (*subcats) return cmd_subcats(c_sub, kind_sub, include_empty, dot_path, universe_cap, out, err);
    if (*tr) return cmd_transfer(c_tr, map, kind_tr, subcat_tr, members_tr, out);
    if (*ver) return cmd_verify(c_ver, suite, samples, seed, max_dim, subcat_ver, members_ver, out);
    return cmd_reproduce(c_rep, golden, out, err);
  } catch (const HypothesisFailed& e) {
    err << "hypothesis failed: " << e.condition() << "\nwitness: " << e.witness() << "\n";
    return kExitHypothesis;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitParse;
  } catch (const BoundExceeded& e) {
    err << "bound exceeded: " << e.what() << "\n";
    return kExitBound;
  } catch (const Inconclusive& e) {
    err << "inconclusive: " << e.what() << "\n";
    return kExitInconclusive;
  } catch (const UniverseIncomplete& e) {
    err << "inconclusive: " << e.what() << "\n";
    return kExitInconclusive;
  } catch (const ContractViolation& e) {
    err << "error: " << e.what() << "\n";
    return kExitParse;
  }
}

}  // namespace qrec

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "qrec/axioms.hpp"
#include "qrec/cli.hpp"
#include "qrec/errors.hpp"
#include "qrec/io.hpp"
#include "qrec/tables.hpp"
#include "qrec/transfer.hpp"

namespace py = pybind11;
using namespace qrec;

namespace {

// pybind11 holders must be non-const; nothing reachable from Python mutates these.
template <class T>
std::shared_ptr<T> held(const std::shared_ptr<const T>& p) {
  return std::const_pointer_cast<T>(p);
}

using QuiverH = std::shared_ptr<Quiver>;
using UniverseH = std::shared_ptr<Universe>;
using RecollementH = std::shared_ptr<Recollement>;

std::vector<std::vector<long long>> mat_rows(const FpMat& m) {
  std::vector<std::vector<long long>> rows(m.rows(), std::vector<long long>(m.cols()));
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) rows[r][c] = m(r, c);
  return rows;
}

Rep make_rep(const QuiverH& q, Prime p, const DimVector& dims,
             const std::map<std::string, std::vector<std::vector<long long>>>& arrows) {
  std::vector<FpMat> mats;
  for (const auto& a : q->arrows()) {
    FpMat m(p, dims.at(a.target), dims.at(a.source));
    const auto it = arrows.find(a.name);
    if (it != arrows.end() && !m.empty()) m = FpMat::from_rows(p, it->second);
    mats.push_back(std::move(m));
  }
  return Rep(q, p, dims, std::move(mats));
}

py::dict checks_dict(const CheckList& list) {
  py::dict d;
  for (const auto& c : list.checks)
    d[py::str(c.name)] = py::dict(py::arg("runs") = c.runs, py::arg("failures") = c.failures,
                                  py::arg("witnesses") = c.witnesses);
  return d;
}

Subcat subcat_of(const UniversePtr& u, const std::vector<std::string>& names) {
  std::string list;
  for (const auto& n : names) list += (list.empty() ? "" : ",") + n;
  return parse_member_list(list, u);
}

}  // namespace

PYBIND11_MODULE(_qrec, m) {
  m.doc() = "Quiver representations over F_p, vertex-split recollements and ICE-closed subcategories";

  auto base = py::register_exception<Error>(m, "Error", PyExc_RuntimeError);
  py::register_exception<ContractViolation>(m, "ContractViolation", base.ptr());
  py::register_exception<ParseError>(m, "ParseError", base.ptr());
  py::register_exception<BoundExceeded>(m, "BoundExceeded", base.ptr());
  py::register_exception<UniverseIncomplete>(m, "UniverseIncomplete", base.ptr());
  py::register_exception<Inconclusive>(m, "Inconclusive", base.ptr());
  py::register_exception<HypothesisFailed>(m, "HypothesisFailed", base.ptr());

  py::class_<Quiver, QuiverH>(m, "Quiver")
      .def(py::init([](std::vector<std::string> vertices, const std::vector<std::tuple<std::string, std::string, std::string>>& arrows) {
             std::vector<ArrowSpec> specs;
             for (const auto& [name, from, to] : arrows) specs.push_back({name, from, to});
             return held(make_quiver(std::move(vertices), specs));
           }),
           py::arg("vertices"), py::arg("arrows") = std::vector<std::tuple<std::string, std::string, std::string>>{})
      .def_property_readonly("vertices", &Quiver::labels)
      .def_property_readonly("arrows",
                             [](const Quiver& q) {
                               std::vector<std::tuple<std::string, std::string, std::string>> out;
                               for (const auto& a : q.arrows()) out.emplace_back(a.name, q.label(a.source), q.label(a.target));
                               return out;
                             })
      .def("__repr__", [](const Quiver& q) { return "<Quiver with " + std::to_string(q.vertex_count()) + " vertices>"; });

  py::class_<Rep>(m, "Rep")
      .def(py::init(&make_rep), py::arg("quiver"), py::arg("p"), py::arg("dims"),
           py::arg("arrows") = std::map<std::string, std::vector<std::vector<long long>>>{},
           "Representation from a dimension vector and arrow matrices (rows, dim(target) x dim(source)).")
      .def_static("simple", [](const QuiverH& q, Prime p, const std::string& v) { return Rep::simple(q, p, q->vertex(v)); })
      .def_property_readonly("dims", &Rep::dims)
      .def_property_readonly("p", &Rep::p)
      .def_property_readonly("quiver", [](const Rep& r) { return held(r.quiver()); })
      .def_property_readonly("total_dim", &Rep::total_dim)
      .def("matrix",
           [](const Rep& r, const std::string& arrow) {
             const auto& arrows = r.quiver()->arrows();
             for (std::size_t a = 0; a < arrows.size(); ++a)
               if (arrows[a].name == arrow) return mat_rows(r.mat(a));
             throw ContractViolation("no arrow named '" + arrow + "'");
           })
      .def("is_zero", &Rep::is_zero)
      .def("to_json", &rep_json)
      .def("__repr__", [](const Rep& r) { return "<Rep " + stacked_name(r) + " " + format_dims(r.dims()) + ">"; });

  m.def("direct_sum", [](const std::vector<Rep>& parts) {
    if (parts.empty()) throw ContractViolation("direct_sum: give at least one summand");
    return direct_sum(parts[0].quiver(), parts[0].p(), parts);
  });
  m.def("hom_dim", &hom_dim);
  m.def("ext_dim", &ext_dim);
  m.def("euler_pairing", [](const QuiverH& q, const DimVector& d, const DimVector& e) { return euler_pairing(*q, d, e); });
  m.def("is_isomorphic", [](const Rep& a, const Rep& b) { return is_isomorphic(a, b); });
  m.def("is_brick", [](const Rep& a) { return is_brick(a); });
  m.def("decompose", [](const Rep& a) { return decompose(a); });
  m.def("ext_middle_terms", [](const Rep& p, const Rep& mm) { return ext_middle_terms(p, mm); });

  py::class_<Universe, UniverseH>(m, "Universe")
      .def("__len__", &Universe::size)
      .def("name", &Universe::name)
      .def("object", &Universe::object)
      .def_property_readonly("names",
                             [](const Universe& u) {
                               std::vector<std::string> out;
                               for (std::size_t i = 0; i < u.size(); ++i) out.push_back(u.name(i));
                               return out;
                             })
      .def_property_readonly("complete", &Universe::complete)
      .def_property_readonly("quiver", [](const Universe& u) { return held(u.quiver()); })
      .def("hom", &Universe::hom)
      .def("ext", &Universe::ext)
      .def("find", [](const Universe& u, const Rep& r) { return u.find(r); })
      .def("locate_summands", &Universe::locate_summands);

  m.def("all_indecomposables", [](const QuiverH& q, Prime p, std::size_t dim_bound) { return held(all_indecomposables(q, p, dim_bound)); },
        py::arg("quiver"), py::arg("p") = 2, py::arg("dim_bound") = 30);

  py::class_<Subcat>(m, "Subcat")
      .def(py::init([](const UniverseH& u, const std::vector<std::string>& names) { return subcat_of(u, names); }),
           py::arg("universe"), py::arg("members"))
      .def_property_readonly("members",
                             [](const Subcat& s) {
                               std::vector<std::string> out;
                               for (auto i : s.members()) out.push_back(s.universe()->name(i));
                               return out;
                             })
      .def("__len__", &Subcat::size)
      .def("__eq__", &Subcat::operator==)
      .def("__str__", &Subcat::to_string)
      .def("__repr__", [](const Subcat& s) { return "<Subcat " + s.to_string() + ">"; })
      .def("to_set_string", &Subcat::to_set_string)
      .def("is_ice", [](const Subcat& s, std::size_t cap) { return is_ice(s, cap); }, py::arg("mult_cap") = 2)
      .def("is_torsion", [](const Subcat& s, std::size_t cap) { return is_torsion(s, cap); }, py::arg("mult_cap") = 2)
      .def("is_wide", [](const Subcat& s, std::size_t cap) { return is_wide(s, cap); }, py::arg("mult_cap") = 2)
      .def("is_epibrick", &is_epibrick)
      .def("is_monobrick", &is_monobrick)
      .def("violation", [](const Subcat& s, const std::string& kind) { return kind_violation(s, parse_kind(kind)); });

  m.def(
      "enumerate_subcats",
      [](const UniverseH& u, const std::string& kind, bool include_empty, std::size_t mult_cap) {
        EnumerateOptions o;
        o.include_empty = include_empty;
        o.mult_cap = mult_cap;
        return enumerate(u, parse_kind(kind), o);
      },
      py::arg("universe"), py::arg("kind"), py::arg("include_empty") = false, py::arg("mult_cap") = 2);

  py::class_<Recollement, RecollementH>(m, "Recollement")
      .def_static(
          "build",
          [](const QuiverH& q, Prime p, const std::vector<std::string>& part) { return held(Recollement::build(q, p, part)); },
          py::arg("quiver"), py::arg("p"), py::arg("quotient_part"))
      .def_property_readonly("ambient", [](const Recollement& r) { return held(r.ambient()); })
      .def_property_readonly("i_quiver", [](const Recollement& r) { return held(r.i_quiver()); })
      .def_property_readonly("j_quiver", [](const Recollement& r) { return held(r.j_quiver()); })
      .def("exactness",
           [](const Recollement& r) {
             const auto e = r.exactness();
             py::dict d;
             d["i^*"] = e.i_upper;
             d["i^!"] = e.i_shriek;
             d["j_!"] = e.j_shriek;
             d["j_*"] = e.j_star;
             return d;
           })
      .def("apply", [](const Recollement& r, const std::string& f, const Rep& x) { return r.apply(parse_functor(f), x); })
      .def("intermediate_extension", &Recollement::intermediate_extension)
      .def("mutated", [](const Recollement& r) { return held(r.mutated()); })
      .def(
          "verify_axioms",
          [](const Recollement& r, std::size_t samples, std::uint64_t seed, std::size_t max_dim) {
            return checks_dict(verify_axioms(r, {samples, seed, max_dim}));
          },
          py::arg("samples") = 50, py::arg("seed") = 42, py::arg("max_dim") = 2);

  py::class_<SplitContext>(m, "SplitContext")
      .def(py::init([](const RecollementH& r, std::size_t dim_bound, std::size_t mult_cap) {
             return make_context(r, dim_bound, mult_cap);
           }),
           py::arg("recollement"), py::arg("dim_bound") = 30, py::arg("mult_cap") = 2)
      .def_property_readonly("recollement", [](const SplitContext& c) { return held(c.rec); })
      .def_property_readonly("ambient", [](const SplitContext& c) { return held(c.ambient); })
      .def_property_readonly("i_side", [](const SplitContext& c) { return held(c.i_side); })
      .def_property_readonly("j_side", [](const SplitContext& c) { return held(c.j_side); })
      .def(
          "transfer",
          [](const SplitContext& ctx, const std::string& direction, const std::vector<std::string>& members,
             const std::string& kind) {
            const Direction d = parse_direction(direction);
            const auto res = transfer(ctx, parse_kind(kind), d, subcat_of(ctx.universe(direction_source(d)), members));
            return py::make_tuple(res.output, res.certificate.passed, res.certificate.detail);
          },
          py::arg("direction"), py::arg("members"), py::arg("kind") = "ice")
      .def("verify_bijection",
           [](const SplitContext& ctx, bool require_shriek_closed) {
             const auto rep = verify_bijection(ctx, require_shriek_closed);
             py::dict d;
             d["ambient_side"] = rep.ambient_side;
             d["j_side"] = rep.j_side;
             d["forward"] = rep.forward;
             d["backward"] = rep.backward;
             d["problems"] = rep.problems;
             d["passed"] = rep.passed();
             return d;
           },
           py::arg("require_shriek_closed") = true)
      .def("glue_bricks",
           [](const SplitContext& ctx, const std::vector<std::string>& s_i, const std::vector<std::string>& s_j,
              const std::string& kind, const std::string& via) {
             const auto g = glue_bricks(ctx, subcat_of(ctx.i_side, s_i), subcat_of(ctx.j_side, s_j), parse_kind(kind),
                                        parse_via(via));
             return py::make_tuple(g.output, g.certificate.passed, g.hom_dims);
           },
           py::arg("s_i"), py::arg("s_j"), py::arg("kind"), py::arg("via") = "intermediate")
      .def("example_tables", [](const SplitContext& ctx) { return format_tables(example_tables(ctx)); });

  m.def("load_split", [](const std::string& path) { return held(load_quiver_file(path).recollement()); },
        "Recollement from a quiver description file with a split.");
  m.def("load_quiver", [](const std::string& path) { return held(load_quiver_file(path).quiver()); });

  m.def(
      "run_cli",
      [](std::vector<std::string> args) {
        args.insert(args.begin(), "qrec");
        std::vector<const char*> argv;
        for (const auto& a : args) argv.push_back(a.c_str());
        std::ostringstream out, err;
        const int code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
        return py::make_tuple(code, out.str(), err.str());
      },
      "Run the command-line tool in process; returns (exit_code, stdout, stderr).");
}

#include "qrec/io.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"
#include "qrec/errors.hpp"
#include "qrec/universe.hpp"

namespace qrec {

using nlohmann::json;

namespace {

json parse_json(const std::string& text, const std::string& what) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(what + ": " + e.what());
  }
}

template <class T>
T get_field(const json& j, const char* key, const std::string& what) {
  if (!j.contains(key)) throw ParseError(what + ": missing field '" + key + "'");
  try {
    return j.at(key).get<T>();
  } catch (const json::exception& e) {
    throw ParseError(what + ": field '" + key + "' has the wrong type");
  }
}

json mat_json(const FpMat& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(m(i, j));
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace

QuiverPtr QuiverFile::quiver() const {
  try {
    return make_quiver(vertices, arrows);
  } catch (const ContractViolation& e) {
    throw ParseError(std::string("quiver file: ") + e.what());
  }
}

RecollementPtr QuiverFile::recollement() const {
  if (!quotient_part) throw ParseError("quiver file: no split given");
  try {
    return Recollement::build(quiver(), p, *quotient_part);
  } catch (const ContractViolation& e) {
    throw ParseError(std::string("quiver file: ") + e.what());
  }
}

QuiverFile parse_quiver_file(const std::string& json_text) {
  const std::string what = "quiver file";
  const json j = parse_json(json_text, what);
  if (!j.is_object()) throw ParseError(what + ": top level must be an object");
  QuiverFile f;
  if (j.contains("p")) f.p = get_field<Prime>(j, "p", what);
  if (!is_prime(f.p) || f.p >= (1u << 16)) throw ParseError(what + ": p must be a prime below 65536");
  f.vertices = get_field<std::vector<std::string>>(j, "vertices", what);
  if (j.contains("arrows")) {
    if (!j["arrows"].is_array()) throw ParseError(what + ": 'arrows' must be an array");
    for (const auto& a : j["arrows"])
      f.arrows.push_back({get_field<std::string>(a, "name", what), get_field<std::string>(a, "from", what),
                          get_field<std::string>(a, "to", what)});
  }
  if (j.contains("split")) f.quotient_part = get_field<std::vector<std::string>>(j["split"], "quotient_part", what);
  if (j.contains("dim_bound")) f.dim_bound = get_field<std::size_t>(j, "dim_bound", what);
  if (j.contains("mult_cap")) f.mult_cap = get_field<std::size_t>(j, "mult_cap", what);
  if (f.mult_cap == 0) throw ParseError(what + ": mult_cap must be at least 1");
  f.quiver();  // validate now
  if (f.quotient_part) f.recollement();
  return f;
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

QuiverFile load_quiver_file(const std::string& path) { return parse_quiver_file(read_text_file(path)); }

std::string quiver_file_json(const QuiverFile& f) {
  json j;
  j["p"] = f.p;
  j["vertices"] = f.vertices;
  j["arrows"] = json::array();
  for (const auto& a : f.arrows) j["arrows"].push_back({{"name", a.name}, {"from", a.from}, {"to", a.to}});
  if (f.quotient_part) j["split"] = {{"quotient_part", *f.quotient_part}};
  j["dim_bound"] = f.dim_bound;
  j["mult_cap"] = f.mult_cap;
  return j.dump(2);
}

Subcat parse_subcat_file(const std::string& json_text, const UniversePtr& universe) {
  const std::string what = "subcategory file";
  const json j = parse_json(json_text, what);
  if (!j.is_object() || !j.contains("members") || !j["members"].is_array())
    throw ParseError(what + ": expected {\"members\": [...]}");
  std::vector<std::size_t> members;
  for (const auto& m : j["members"]) {
    if (m.is_string()) {
      const auto name = m.get<std::string>();
      if (name == "0") continue;
      const auto hit = universe->find_by_name(name);
      if (!hit) throw ParseError(what + ": no indecomposable named '" + name + "'");
      members.push_back(*hit);
    } else if (m.is_object() && m.contains("dim")) {
      const auto dims = get_field<DimVector>(m, "dim", what);
      if (dims.size() != universe->quiver()->vertex_count())
        throw ParseError(what + ": dimension vector has the wrong length");
      const auto hit = universe->find_by_dims(dims);
      if (!hit) throw ParseError(what + ": dimension vector " + format_dims(dims) + " matches no unique member");
      members.push_back(*hit);
    } else {
      throw ParseError(what + ": members must be names or {\"dim\": [...]}");
    }
  }
  return Subcat(universe, members);
}

Subcat load_subcat_file(const std::string& path, const UniversePtr& universe) {
  return parse_subcat_file(read_text_file(path), universe);
}

Subcat parse_member_list(const std::string& list, const UniversePtr& universe) {
  std::vector<std::size_t> members;
  std::stringstream ss(list);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const auto b = item.find_first_not_of(' ');
    if (b == std::string::npos) continue;
    item = item.substr(b, item.find_last_not_of(' ') - b + 1);
    if (item == "0") continue;
    const auto hit = universe->find_by_name(item);
    if (!hit) throw ParseError("no indecomposable named '" + item + "'");
    members.push_back(*hit);
  }
  return Subcat(universe, members);
}

std::string subcat_json(const Subcat& s) {
  json j;
  j["members"] = json::array();
  for (auto i : s.members()) j["members"].push_back(s.universe()->name(i));
  return j.dump();
}

std::string rep_json(const Rep& m) {
  json j;
  j["dims"] = m.dims();
  j["arrows"] = json::object();
  for (std::size_t a = 0; a < m.mats().size(); ++a) j["arrows"][m.quiver()->arrow(a).name] = mat_json(m.mat(a));
  return j.dump();
}

Rep parse_rep_json(const std::string& json_text, const QuiverPtr& quiver, Prime p) {
  const std::string what = "representation";
  const json j = parse_json(json_text, what);
  const auto dims = get_field<DimVector>(j, "dims", what);
  if (dims.size() != quiver->vertex_count()) throw ParseError(what + ": dimension vector has the wrong length");
  std::vector<FpMat> mats;
  for (const auto& a : quiver->arrows()) {
    FpMat m(p, dims[a.target], dims[a.source]);
    const json rows = j.contains("arrows") && j["arrows"].contains(a.name) ? j["arrows"][a.name] : json::array();
    if (m.rows() > 0 && m.cols() > 0) {
      if (rows.size() != m.rows()) throw ParseError(what + ": arrow '" + a.name + "' has the wrong shape");
      for (std::size_t r = 0; r < m.rows(); ++r) {
        if (rows[r].size() != m.cols()) throw ParseError(what + ": arrow '" + a.name + "' has the wrong shape");
        for (std::size_t c = 0; c < m.cols(); ++c) m.set(r, c, rows[r][c].get<long long>());
      }
    }
    mats.push_back(std::move(m));
  }
  try {
    return Rep(quiver, p, dims, std::move(mats));
  } catch (const ContractViolation& e) {
    throw ParseError(what + ": " + e.what());
  }
}

}  // namespace qrec

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qrec/recollement.hpp"
#include "qrec/subcat.hpp"

namespace qrec {

/// Quiver description file:
///   {"p": 2, "vertices": ["4","1"], "arrows": [{"name":"a","from":"4","to":"1"}],
///    "split": {"quotient_part": ["1"]}, "dim_bound": 30, "mult_cap": 2}
/// p, split, dim_bound and mult_cap are optional.
struct QuiverFile {
  Prime p = 2;
  std::vector<std::string> vertices;
  std::vector<ArrowSpec> arrows;
  std::optional<std::vector<std::string>> quotient_part;
  std::size_t dim_bound = 30;
  std::size_t mult_cap = 2;

  QuiverPtr quiver() const;
  /// Throws ParseError when the file has no split.
  RecollementPtr recollement() const;
};

/// Throws ParseError on malformed JSON, missing fields or an invalid quiver.
QuiverFile parse_quiver_file(const std::string& json_text);
QuiverFile load_quiver_file(const std::string& path);
std::string quiver_file_json(const QuiverFile& f);

/// Subcategory file: {"members": ["4/1", {"dim": [1,0]}]}. Names are matched
/// against the universe's display names ("0" is the zero object and adds
/// nothing); a dimension vector must pick out exactly one member.
Subcat parse_subcat_file(const std::string& json_text, const UniversePtr& universe);
Subcat load_subcat_file(const std::string& path, const UniversePtr& universe);
/// Comma-separated member names, e.g. "4,4/1". Empty string or "0" gives add{0}.
Subcat parse_member_list(const std::string& list, const UniversePtr& universe);
std::string subcat_json(const Subcat& s);

/// {"dims": [...], "arrows": {"a": [[...]], ...}} on a known quiver.
std::string rep_json(const Rep& m);
Rep parse_rep_json(const std::string& json_text, const QuiverPtr& quiver, Prime p);

std::string read_text_file(const std::string& path);

}  // namespace qrec

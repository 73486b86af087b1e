#include "qrec/tables.hpp"

namespace qrec {

std::vector<Table> example_tables(const SplitContext& ctx) {
  const Recollement& r = *ctx.rec;
  const Direction i_pre = r.is_exact(Functor::i_shriek) ? Direction::preimage_i_shriek : Direction::preimage_i_upper;
  const Direction j_img = r.is_exact(Functor::j_star) ? Direction::from_j_side_star : Direction::from_j_side_shriek;
  EnumerateOptions opts;
  opts.mult_cap = ctx.mult_cap;
  const auto i_ice = enumerate(ctx.i_side, Kind::ice, opts);
  const auto j_ice = enumerate(ctx.j_side, Kind::ice, opts);

  std::vector<Table> tables;
  auto build = [&](Direction d, const std::vector<Subcat>& inputs) {
    Table t{d, {}};
    for (const auto& s : inputs) {
      auto res = transfer(ctx, Kind::ice, d, s);
      t.rows.push_back({s, std::move(res.output), std::move(res.certificate)});
    }
    tables.push_back(std::move(t));
  };
  build(Direction::from_i_side, i_ice);
  build(i_pre, i_ice);
  build(j_img, j_ice);
  build(Direction::preimage_j, j_ice);
  return tables;
}

std::string format_tables(const std::vector<Table>& tables) {
  std::string out;
  for (std::size_t k = 0; k < tables.size(); ++k) {
    if (k) out += "\n";
    out += "table " + std::to_string(k + 1) + ": " + direction_name(tables[k].direction) + "\n";
    for (const auto& row : tables[k].rows) out += row.input.to_string() + " -> " + row.output.to_string() + "\n";
  }
  return out;
}

}  // namespace qrec

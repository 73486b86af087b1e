#pragma once

#include <string>
#include <vector>

#include "qrec/transfer.hpp"

namespace qrec {

struct TableRow {
  Subcat input;
  Subcat output;
  Certificate certificate;
};

struct Table {
  Direction direction;
  std::vector<TableRow> rows;
};

/// The four correspondences of a split, each over every ICE-closed input in
/// canonical order:
///   1. i_* on mod A,
///   2. preimage under the exact one of i^! / i^* (i^! when both are),
///   3. j_* or j_!, whichever is exact (j_* when both are), on mod B,
///   4. preimage under j^*.
std::vector<Table> example_tables(const SplitContext& ctx);

/// "table N: <direction>" followed by one "input -> output" line per row;
/// tables separated by a blank line.
std::string format_tables(const std::vector<Table>& tables);

}  // namespace qrec

#pragma once

#include <string>
#include <vector>

#include "qstir/stirling.hpp"

namespace qstir {

/// Table kinds exposed by the CLI; polynomial tables render entries in
/// canonical term order, count tables as integers.
enum class TableKind { S_q, c_q, S_qt, s_qt, a, d, bell };

TableKind parse_table_kind(const std::string& name);  // throws on bad name

/// Triangular row/column layout: rows indexed by n, columns by
/// k with empty cells above the diagonal; the count tables carry their
/// row-sum columns (a(n), b(n) resp. r(n), n!).
struct RenderedTable {
  std::string title;
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;  // rows[n][c], "" = empty cell
};

RenderedTable make_table(TableKind kind, int n_max);

std::string to_text(const RenderedTable& table);
std::string to_csv(const RenderedTable& table);

}  // namespace qstir

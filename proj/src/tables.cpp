#include "qstir/tables.hpp"

#include <iomanip>
#include <sstream>
#include <stdexcept>

namespace qstir {

TableKind parse_table_kind(const std::string& name) {
  if (name == "S_q") return TableKind::S_q;
  if (name == "c_q") return TableKind::c_q;
  if (name == "S_qt") return TableKind::S_qt;
  if (name == "s_qt") return TableKind::s_qt;
  if (name == "a") return TableKind::a;
  if (name == "d") return TableKind::d;
  if (name == "bell") return TableKind::bell;
  throw std::invalid_argument("unknown table kind: " + name);
}

namespace {

RenderedTable poly_layout(const std::string& title, const PolyTable& t) {
  RenderedTable out;
  out.title = title;
  out.header.push_back("n\\k");
  for (int k = 0; k <= t.n_max(); ++k) out.header.push_back(std::to_string(k));
  for (int n = 0; n <= t.n_max(); ++n) {
    std::vector<std::string> row{std::to_string(n)};
    for (int k = 0; k <= t.n_max(); ++k)
      row.push_back(k <= n ? t.at(n, k).str() : "");
    out.rows.push_back(std::move(row));
  }
  return out;
}

RenderedTable count_layout(const std::string& title, const CountTable& t,
                           const std::string& sum_name,
                           const std::string& extra_name,
                           const std::vector<Int>& extra) {
  RenderedTable out;
  out.title = title;
  out.header.push_back("n\\k");
  for (int k = 0; k <= t.n_max(); ++k) out.header.push_back(std::to_string(k));
  out.header.push_back(sum_name);
  out.header.push_back(extra_name);
  for (int n = 0; n <= t.n_max(); ++n) {
    std::vector<std::string> row{std::to_string(n)};
    for (int k = 0; k <= t.n_max(); ++k)
      row.push_back(k <= n ? t.at(n, k).str() : "");
    row.push_back(t.row_sum(n).str());
    row.push_back(extra[n].str());
    out.rows.push_back(std::move(row));
  }
  return out;
}

}  // namespace

RenderedTable make_table(TableKind kind, int n_max) {
  switch (kind) {
    case TableKind::S_q:
      return poly_layout("q-Stirling numbers of the second kind S_q[n,k]",
                         stirling2_q_table(n_max));
    case TableKind::c_q:
      return poly_layout("unsigned q-Stirling numbers of the first kind c_q[n,k]",
                         stirling1_q_table(n_max));
    case TableKind::S_qt:
      return poly_layout("(q,t)-Stirling numbers of the second kind",
                         stirling2_qt_table(n_max));
    case TableKind::s_qt:
      return poly_layout("signed (q,t)-Stirling numbers of the first kind",
                         stirling1_qt_table(n_max));
    case TableKind::a: {
      std::vector<Int> bells(n_max + 1);
      for (int n = 0; n <= n_max; ++n) bells[n] = classical_bell(n);
      return count_layout("allowable Stirling numbers of the second kind a(n,k)",
                          allowable_count_second_table(n_max), "a(n)", "b(n)",
                          bells);
    }
    case TableKind::d: {
      std::vector<Int> factorials(n_max + 1);
      factorials[0] = 1;
      for (int n = 1; n <= n_max; ++n) factorials[n] = factorials[n - 1] * n;
      return count_layout("allowable Stirling numbers of the first kind d(n,k)",
                          allowable_count_first_table(n_max), "r(n)", "n!",
                          factorials);
    }
    case TableKind::bell: {
      RenderedTable out;
      out.title = "allowable and classical Bell numbers";
      out.header = {"n", "a(n)", "b(n)"};
      for (int n = 0; n <= n_max; ++n)
        out.rows.push_back({std::to_string(n), allowable_bell(n).str(),
                            classical_bell(n).str()});
      return out;
    }
  }
  throw std::logic_error("make_table: unhandled kind");
}

std::string to_text(const RenderedTable& table) {
  std::vector<std::size_t> width(table.header.size(), 0);
  auto widen = [&](const std::vector<std::string>& row) {
    for (std::size_t c = 0; c < row.size(); ++c)
      width[c] = std::max(width[c], row[c].size());
  };
  widen(table.header);
  for (const auto& row : table.rows) widen(row);

  std::ostringstream os;
  os << table.title << "\n";
  auto emit = [&](const std::vector<std::string>& row) {
    for (std::size_t c = 0; c < row.size(); ++c)
      os << (c ? "  " : "") << std::left << std::setw(static_cast<int>(width[c]))
         << row[c];
    os << "\n";
  };
  emit(table.header);
  for (const auto& row : table.rows) emit(row);
  return os.str();
}

std::string to_csv(const RenderedTable& table) {
  std::ostringstream os;
  auto emit = [&](const std::vector<std::string>& row) {
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (c) os << ",";
      os << row[c];
    }
    os << "\n";
  };
  emit(table.header);
  for (const auto& row : table.rows) emit(row);
  return os.str();
}

}  // namespace qstir

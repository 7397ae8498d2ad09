// qstir: tables, enumerations, poset exports, homology reports and
// verification sweeps for the q- and (q,t)-Stirling structures.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "qstir/homology.hpp"
#include "qstir/json.hpp"
#include "qstir/orthogonal.hpp"
#include "qstir/poset.hpp"
#include "qstir/tables.hpp"
#include "qstir/verify.hpp"

namespace {

using nlohmann::json;
using namespace qstir;

std::size_t element_ceiling() {
  if (const char* env = std::getenv("QSTIR_MAX_ELEMENTS")) {
    const long long v = std::atoll(env);
    if (v > 0) return static_cast<std::size_t>(v);
  }
  return kDefaultMaxElements;
}

void write_output(const std::string& path, const std::string& content) {
  if (path.empty()) {
    std::cout << content;
    return;
  }
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open output file: " + path);
  out << content;
}

int print_report(const Report& rep, bool as_json, const std::string& out_path) {
  if (as_json) {
    write_output(out_path, json(rep).dump(2) + "\n");
  } else {
    std::ostringstream os;
    os << rep.title << "\n";
    for (const Check& c : rep.checks) {
      os << (c.pass ? "  [PASS] " : "  [FAIL] ") << c.name;
      if (!c.detail.empty()) os << " -- " << c.detail;
      os << "\n";
    }
    os << (rep.all_pass() ? "all checks passed" : "FAILURES PRESENT") << "\n";
    write_output(out_path, os.str());
  }
  return rep.all_pass() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"q- and (q,t)-Stirling numbers: exact tables, Stirling posets, "
               "Morse matchings, homology and orthogonality"};
  app.require_subcommand(1);

  std::string out_path;
  app.add_option("-o,--output", out_path, "write output to a file instead of stdout");

  // table
  auto* cmd_table = app.add_subcommand("table", "render a paper-layout table");
  std::string table_kind;
  int table_n_max = 10;
  std::string table_format = "text";
  cmd_table->add_option("kind", table_kind,
                        "one of S_q, c_q, S_qt, s_qt, a, d, bell")
      ->required();
  cmd_table->add_option("--n-max", table_n_max, "largest n (default 10)");
  cmd_table->add_option("--format", table_format, "text, csv or json")
      ->check(CLI::IsMember({"text", "csv", "json"}));

  // enumerate
  auto* cmd_enum = app.add_subcommand("enumerate", "list words or placements");
  std::string enum_what;
  int enum_a = 0, enum_b = 0;
  bool enum_json = false;
  cmd_enum->add_option("what", enum_what,
                       "rg, allowable, rooks or allowable-rooks")
      ->required()
      ->check(CLI::IsMember({"rg", "allowable", "rooks", "allowable-rooks"}));
  cmd_enum->add_option("a", enum_a, "n (words) or board length m (rooks)")
      ->required();
  cmd_enum->add_option("b", enum_b, "k (words) or rook count n (rooks)")
      ->required();
  cmd_enum->add_flag("--json", enum_json, "emit a JSON array");

  // poset
  auto* cmd_poset = app.add_subcommand("poset", "build and export a Stirling poset");
  std::string poset_which;
  int poset_a = 0, poset_b = 0;
  bool poset_match = false, poset_decompose = false;
  bool poset_dot = false, poset_json = false;
  cmd_poset->add_option("which", poset_which, "pi or gamma")
      ->required()
      ->check(CLI::IsMember({"pi", "gamma"}));
  cmd_poset->add_option("a", poset_a, "n (pi) or board length m (gamma)")->required();
  cmd_poset->add_option("b", poset_b, "k (pi) or rook count n (gamma)")->required();
  cmd_poset->add_flag("--match", poset_match, "include the Morse matching");
  cmd_poset->add_flag("--decompose", poset_decompose,
                      "include the Boolean decomposition");
  cmd_poset->add_flag("--dot", poset_dot, "DOT output");
  cmd_poset->add_flag("--json", poset_json, "JSON output");

  // homology
  auto* cmd_hom = app.add_subcommand("homology", "integer homology of a complex");
  std::string hom_which;
  int hom_a = 0, hom_b = 0;
  bool hom_json = false, hom_matrices = false;
  cmd_hom->add_option("which", hom_which, "pi or gamma")
      ->required()
      ->check(CLI::IsMember({"pi", "gamma"}));
  cmd_hom->add_option("a", hom_a, "n (pi) or board length m (gamma)")->required();
  cmd_hom->add_option("b", hom_b, "k (pi) or rook count n (gamma)")->required();
  cmd_hom->add_flag("--json", hom_json, "JSON report");
  cmd_hom->add_flag("--dump-matrices", hom_matrices,
                    "include boundary matrices as (row,col,value) triples");

  // verify
  auto* cmd_verify = app.add_subcommand("verify", "run a verification suite");
  std::string suite;
  int verify_n_max = -1;
  bool verify_json = false;
  cmd_verify->add_option("suite", suite,
                         "statistics, posets, homology, orthogonality, "
                         "identities or all")
      ->required()
      ->check(CLI::IsMember({"statistics", "posets", "homology",
                             "orthogonality", "identities", "all"}));
  cmd_verify->add_option("--n-max", verify_n_max,
                         "sweep depth (per-suite default when omitted)");
  cmd_verify->add_flag("--json", verify_json, "JSON report");

  CLI11_PARSE(app, argc, argv);

  try {
    const std::size_t ceiling = element_ceiling();

    if (*cmd_table) {
      const RenderedTable table = make_table(parse_table_kind(table_kind), table_n_max);
      if (table_format == "csv")
        write_output(out_path, to_csv(table));
      else if (table_format == "json")
        write_output(out_path, json(table).dump(2) + "\n");
      else
        write_output(out_path, to_text(table));
      return 0;
    }

    if (*cmd_enum) {
      std::ostringstream os;
      json arr = json::array();
      if (enum_what == "rg" || enum_what == "allowable") {
        const auto words = enum_what == "rg" ? enumerate_rg(enum_a, enum_b)
                                             : enumerate_allowable(enum_a, enum_b);
        for (const RGWord& w : words) {
          const BiPoly weight = enum_what == "rg" ? wt(w) : wt_prime(w);
          if (enum_json)
            arr.push_back({{"word", w.str()},
                           {"partition", word_to_partition(w).str()},
                           {"weight", weight}});
          else
            os << w.str() << "  " << word_to_partition(w).str() << "  "
               << weight.str() << "\n";
        }
        if (!enum_json) os << words.size() << " words\n";
      } else {
        const auto placements =
            enum_what == "rooks" ? enumerate_rooks(enum_a, enum_b)
                                 : enumerate_allowable_rooks(enum_a, enum_b);
        for (const RookPlacement& t : placements) {
          if (enum_json) {
            json entry = t;
            entry["below"] = below(t);
            entry["nrow"] = nrow(t);
            if (is_allowable(t)) entry["weight"] = wt_rook(t);
            arr.push_back(std::move(entry));
          } else {
            os << t.str() << "  below=" << below(t) << " nrow=" << nrow(t)
               << "\n"
               << render_board(t);
          }
        }
        if (!enum_json) os << placements.size() << " placements\n";
      }
      write_output(out_path, enum_json ? arr.dump(2) + "\n" : os.str());
      return 0;
    }

    if (*cmd_poset) {
      const GradedPoset poset = poset_which == "pi"
                                    ? build_pi(poset_a, poset_b, ceiling)
                                    : build_gamma(poset_a, poset_b, ceiling);
      Matching matching;
      BooleanDecomposition decomposition;
      const bool want_match = poset_match || poset_dot;  // DOT always shows it
      if (want_match)
        matching = poset_which == "pi" ? match_pi(poset) : match_gamma(poset);
      if (poset_decompose)
        decomposition =
            poset_which == "pi" ? decompose_pi(poset) : decompose_gamma(poset);
      if (poset_dot) {
        std::ostringstream os;
        export_dot(os, poset, &matching,
                   poset_decompose ? &decomposition : nullptr);
        write_output(out_path, os.str());
      } else if (poset_json) {
        write_output(out_path,
                     poset_to_json(poset, poset_match ? &matching : nullptr,
                                   poset_decompose ? &decomposition : nullptr)
                             .dump(2) +
                         "\n");
      } else {
        std::ostringstream os;
        os << (poset_which == "pi" ? "Pi(" : "Gamma(") << poset_a << ","
           << poset_b << "): " << poset.size() << " elements, top rank "
           << poset.top_rank << "\n"
           << "rank gen fn: " << poset.rank_genfn().str() << "\n";
        if (poset_match) {
          os << "matched pairs: " << matching.pairs.size() << ", unmatched:";
          for (int u : matching.unmatched) os << " " << poset.label(u);
          os << "\nunmatched gen fn: "
             << unmatched_genfn(poset, matching).str() << "\n";
        }
        if (poset_decompose)
          os << "decomposition: " << decomposition.intervals.size()
             << " Boolean intervals, weight "
             << decomposition_genfn(poset, decomposition).str() << "\n";
        write_output(out_path, os.str());
      }
      return 0;
    }

    if (*cmd_hom) {
      const GradedPoset poset = hom_which == "pi"
                                    ? build_pi(hom_a, hom_b, ceiling)
                                    : build_gamma(hom_a, hom_b, ceiling);
      const ChainComplex complex = build_complex(poset);
      const HomologyResult result = homology(complex);
      if (hom_json) {
        write_output(out_path,
                     homology_to_json(complex, result, hom_matrices).dump(2) + "\n");
      } else {
        std::ostringstream os;
        os << (hom_which == "pi" ? "Pi(" : "Gamma(") << hom_a << "," << hom_b
           << ") homology:\n";
        for (std::size_t r = 0; r < result.dims.size(); ++r) {
          os << "  H_" << r << ": dim " << result.dims[r];
          if (!result.torsion[r].empty()) {
            os << ", torsion";
            for (const Int& f : result.torsion[r]) os << " Z/" << f.str();
          }
          if (!result.basis[r].empty()) {
            os << ", basis:";
            for (int x : result.basis[r]) os << " " << poset.label(x);
          }
          os << "\n";
        }
        os << "basis verified: " << (result.basis_verified ? "yes" : "NO")
           << "\n";
        write_output(out_path, os.str());
      }
      return 0;
    }

    if (*cmd_verify) {
      Report rep;
      if (suite == "statistics")
        rep = verify_statistics(verify_n_max < 0 ? 9 : verify_n_max);
      else if (suite == "posets")
        rep = verify_posets(verify_n_max < 0 ? 7 : verify_n_max, ceiling);
      else if (suite == "homology")
        rep = verify_homology(verify_n_max < 0 ? 7 : verify_n_max, ceiling);
      else if (suite == "orthogonality")
        rep = verify_orthogonality(verify_n_max < 0 ? 8 : verify_n_max);
      else if (suite == "identities")
        rep = verify_identities(verify_n_max < 0 ? 8 : verify_n_max);
      else
        rep = verify_all(verify_n_max, ceiling);
      return print_report(rep, verify_json, out_path);
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}

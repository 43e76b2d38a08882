#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <map>
#include <string>
#include <vector>

#include <json.hpp>

#include "finfish/cache.hpp"
#include "finfish/closed_forms.hpp"
#include "finfish/errors.hpp"
#include "finfish/fish_grammar.hpp"
#include "finfish/fish_surface.hpp"
#include "finfish/json_io.hpp"
#include "finfish/render.hpp"
#include "finfish/series_catalog.hpp"
#include "finfish/ternary_trees.hpp"
#include "finfish/validation.hpp"

namespace {

using namespace finfish;

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!out) throw UsageError("cannot open output file: " + out_path);
  out << text;
}

std::string fish_table_csv(int max_size) {
  std::string csv = "size,tails,rsize,lsize,fin,count\n";
  for (const auto& [k, c] : joint_distribution(max_size)) {
    csv += std::to_string(k[0]);
    for (int i = 1; i < 5; ++i) csv += "," + std::to_string(k[i]);
    csv += "," + c.str() + "\n";
  }
  return csv;
}

std::string tree_table_csv(int max_nodes) {
  std::string csv = "nodes,rightBranches,nonRootEven,oddNodes,core,count\n";
  for (const auto& [k, c] : joint_distribution_trees(max_nodes)) {
    csv += std::to_string(k[0]);
    for (int i = 1; i < 5; ++i) csv += "," + std::to_string(k[i]);
    csv += "," + c.str() + "\n";
  }
  return csv;
}

struct Specialization {
  bool y = false, a = false, b = false, u = false;
};

Specialization parse_specialize(const std::string& text) {
  Specialization s;
  if (text.empty()) return s;
  size_t pos = 0;
  while (pos <= text.size()) {
    size_t comma = text.find(',', pos);
    std::string item = text.substr(pos, comma == std::string::npos ? comma : comma - pos);
    if (item.size() != 3 || item[1] != '=' || item[2] != '1')
      throw UsageError("bad --specialize item '" + item + "'; expected var=1");
    switch (item[0]) {
      case 'y': s.y = true; break;
      case 'a': s.a = true; break;
      case 'b': s.b = true; break;
      case 'u': s.u = true; break;
      default: throw UsageError("unknown variable in --specialize: " + item);
    }
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  return s;
}

std::string series_lines(const MSeries& s) {
  std::string out;
  for (int k = 0; k <= s.order(); ++k)
    for (const auto& [e, c] : s.coeff(k)) {
      out += "t^" + std::to_string(k) + " y^" + std::to_string(e[0]) + " a^" +
             std::to_string(e[1]) + " b^" + std::to_string(e[2]) + " u^" +
             std::to_string(e[3]) + " : " + c.str() + "\n";
    }
  return out;
}

SuiteReport run_check(const std::string& suite, int max) {
  if (suite == "formulas") return check_formulas(max < 0 ? 9 : max);
  if (suite == "series") return check_series_vs_enum(max < 0 ? 8 : max);
  if (suite == "oracle") return check_oracle(max < 0 ? 6 : max);
  if (suite == "fincore") return check_fincore(max < 0 ? 10 : max);
  if (suite == "conjecture") return check_conjecture(max < 0 ? 9 : max);
  if (suite == "identities") return check_identities(max < 0 ? 10 : max);
  if (suite == "area") return area_report(max < 0 ? 10 : max).report;
  throw UsageError("unknown suite: " + suite);
}

const std::vector<std::string> kAllSuites = {"formulas",   "series",     "oracle", "fincore",
                                             "conjecture", "identities", "area"};

std::string area_csv(const AreaSummary& s) {
  std::string csv = "size,fish,totalArea,meanArea,meanAreaPerSize,slopeEstimate\n";
  char slope[32];
  for (const AreaRow& row : s.rows) {
    csv += std::to_string(row.size) + "," + row.fish.str() + "," + row.total_area.str() + "," +
           row.mean_area.str() + "," + row.mean_per_size.str() + ",";
    if (row.size > s.rows.front().size) {
      std::snprintf(slope, sizeof slope, "%.6f", row.slope);
      csv += slope;
    }
    csv += "\n";
  }
  return csv;
}

int run(int argc, char** argv) {
  CLI::App app{"exact combinatorics laboratory for fighting fish"};
  app.require_subcommand(1);
  int exit_code = 0;

  // fish
  auto* fish = app.add_subcommand("fish", "enumerate, grow, and tabulate fish");
  fish->require_subcommand(1);

  int fe_max_size = 4;
  std::string fe_format = "jsonl";
  auto* fish_enum = fish->add_subcommand("enum", "stream every fish up to a size");
  fish_enum->add_option("--max-size", fe_max_size, "largest size to enumerate")
      ->check(CLI::Range(2, 13));
  fish_enum->add_option("--format", fe_format, "output format")
      ->check(CLI::IsMember({"jsonl"}));
  fish_enum->callback([&] {
    for_each_term(fe_max_size, [](const TermPtr&, const FishComplex& f) {
      std::cout << fish_to_json(f) << "\n";
    });
  });

  int fo_max_area = 4;
  auto* fish_oracle = fish->add_subcommand("oracle", "grow all fish up to an area; one canonical code per line");
  fish_oracle->add_option("--max-area", fo_max_area, "largest area to grow")
      ->check(CLI::Range(1, 9));
  fish_oracle->callback([&] {
    for (const std::string& code : enumerate_by_area(fo_max_area)) std::cout << code << "\n";
  });

  int ft_max_size = 9;
  std::string ft_format = "csv";
  auto* fish_table = fish->add_subcommand("table", "joint statistics table");
  fish_table->add_option("--max-size", ft_max_size, "largest size")->check(CLI::Range(2, 13));
  fish_table->add_option("--format", ft_format, "output format")->check(CLI::IsMember({"csv"}));
  fish_table->callback([&] {
    std::string key =
        make_cache_key("fish table", "max-size=" + std::to_string(ft_max_size));
    std::cout << cached(key, [&] { return fish_table_csv(ft_max_size); });
  });

  // trees
  auto* trees = app.add_subcommand("trees", "enumerate and tabulate ternary trees");
  trees->require_subcommand(1);

  int te_j = 0, te_max_nodes = 4;
  auto* trees_enum = trees->add_subcommand("enum", "stream every j-positive tree up to a node count");
  trees_enum->add_option("--j", te_j, "root abscissa floor")->check(CLI::Range(0, 8));
  trees_enum->add_option("--max-nodes", te_max_nodes, "largest node count")
      ->check(CLI::Range(1, 10));
  trees_enum->callback([&] {
    for_each_tree(te_j, te_max_nodes, [&](const TernaryTree& t) {
      TreeStats st = tree_stats(t, te_j);
      nlohmann::json j{{"tree", tree_to_string(t)},
                       {"nodes", st.nodes},
                       {"core", st.core},
                       {"rightBranches", st.right_branches},
                       {"nonRootEven", st.non_root_even},
                       {"oddNodes", st.odd}};
      std::cout << j.dump() << "\n";
    });
  });

  int tt_max_nodes = 8;
  auto* trees_table = trees->add_subcommand("table", "joint statistics table for 0-positive trees");
  trees_table->add_option("--max-nodes", tt_max_nodes, "largest node count")
      ->check(CLI::Range(1, 12));
  trees_table->callback([&] {
    std::string key =
        make_cache_key("trees table", "max-nodes=" + std::to_string(tt_max_nodes));
    std::cout << cached(key, [&] { return tree_table_csv(tt_max_nodes); });
  });

  // series
  auto* series = app.add_subcommand("series", "exact generating series");
  series->require_subcommand(1);

  std::string se_name = "P1", se_specialize;
  int se_order = 8;
  auto* series_eval = series->add_subcommand("eval", "print the coefficients of a named series");
  series_eval->add_option("--name", se_name,
                          "series name (see `series names`)");
  series_eval->add_option("--order", se_order, "truncation order in t")->check(CLI::Range(1, 16));
  series_eval->add_option("--specialize", se_specialize, "comma list of var=1 with var in y,a,b,u");
  series_eval->callback([&] {
    Specialization sp = parse_specialize(se_specialize);
    SeriesCatalog cat(se_order);
    std::cout << series_lines(cat.get(se_name).specialize(sp.y, sp.a, sp.b, sp.u));
  });

  auto* series_names = series->add_subcommand("names", "list the catalog names");
  series_names->callback([&] {
    for (const std::string& n : SeriesCatalog::names()) std::cout << n << "\n";
  });

  // formulas
  std::string fm_name = "fish";
  int fm_max = 9;
  bool fm_bfile = false;
  auto* formulas = app.add_subcommand("formulas", "closed-form counting values");
  formulas->add_option("--name", fm_name, "fish, fish-ij, or tails")
      ->check(CLI::IsMember({"fish", "fish-ij", "tails"}));
  formulas->add_option("--max", fm_max, "bound: n for fish, i+j-1 for the tables")
      ->check(CLI::Range(1, 64));
  formulas->add_flag("--bfile", fm_bfile, "b-file lines `n a(n)` (fish only)");
  formulas->callback([&] {
    if (fm_name == "fish") {
      for (int n = 1; n <= fm_max; ++n)
        std::cout << n << " " << fish_count(n).str() << "\n";
      return;
    }
    if (fm_bfile) throw UsageError("--bfile applies to --name fish only");
    std::cout << "i,j,count\n";
    for (int i = 1; i <= fm_max; ++i)
      for (int j = 1; i + j <= fm_max + 1; ++j) {
        Int v = fm_name == "fish-ij" ? fish_count_ij(i, j) : marked_tail_count(i, j);
        std::cout << i << "," << j << "," << v.str() << "\n";
      }
  });

  // check
  std::vector<std::string> ck_suites;
  int ck_max = -1;
  auto* check = app.add_subcommand("check", "run validation suites; one JSON report per line");
  check->add_option("suites", ck_suites, "suite names, or `all`")->required();
  check->add_option("--max", ck_max, "override the suite's budget parameter");
  check->callback([&] {
    std::vector<std::string> todo;
    for (const std::string& s : ck_suites) {
      if (s == "all")
        todo.insert(todo.end(), kAllSuites.begin(), kAllSuites.end());
      else
        todo.push_back(s);
    }
    for (const std::string& s : todo) {
      SuiteReport rep = run_check(s, ck_max);
      std::cout << rep.to_json() << "\n";
      if (!rep.pass) exit_code = 1;
    }
  });

  // render
  std::string rd_code, rd_format = "svg", rd_out;
  auto* render = app.add_subcommand("render", "draw a fish from its canonical code");
  render->add_option("--code", rd_code, "canonical code")->required();
  render->add_option("--format", rd_format, "svg or ascii")
      ->check(CLI::IsMember({"svg", "ascii"}));
  render->add_option("--out", rd_out, "output file (default stdout)");
  render->callback([&] {
    FishComplex f = parse_canonical_code(rd_code);
    emit(rd_format == "svg" ? render_svg(f) : render_ascii(f), rd_out);
  });

  // report
  auto* report = app.add_subcommand("report", "diagnostic reports");
  report->require_subcommand(1);
  int ra_max_size = 10;
  auto* report_area = report->add_subcommand("area", "exact mean areas by size with slope estimates");
  report_area->add_option("--max-size", ra_max_size, "largest size")->check(CLI::Range(2, 13));
  report_area->callback([&] {
    AreaSummary s = area_report(ra_max_size);
    std::cout << area_csv(s) << s.report.to_json() << "\n";
    if (!s.report.pass) exit_code = 1;
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }
  return exit_code;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const BudgetError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}

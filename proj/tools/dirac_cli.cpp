// Command-line surface for the Dirac-series combinatorics library:
// involution census, candidate sieve, dataset verification, string counts.

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "dirac/levi.hpp"
#include "dirac/rational.hpp"
#include "dirac/rootsystem.hpp"
#include "dirac/sieve.hpp"
#include "dirac/spinnorm.hpp"
#include "dirac/strings.hpp"
#include "dirac/tables.hpp"
#include "dirac/weylgroup.hpp"

namespace {

using namespace dirac;

struct RunConfig {
  std::string group = "E7";
  std::string bound;  // empty: per-group default
  int workers = 1;
  std::string data;
  std::string format = "tsv";
  std::string output;
};

Rat default_bound(const RootDatum& d) {
  if (d.type_label == "E7") return Rat(464);
  return norm_sq(d, scale(2, d.rho));  // conservative default ||2 rho||^2
}

Rat resolve_bound(const RunConfig& cfg, const RootDatum& d) {
  if (cfg.bound.empty()) return default_bound(d);
  Rat b = parse_rational(cfg.bound);
  if (b <= Rat(0)) throw UsageError("--bound must be positive");
  return b;
}

std::string resolve_data_dir(const RunConfig& cfg) {
  if (!cfg.data.empty()) return cfg.data;
  if (const char* env = std::getenv("DIRAC_SIEVE_DATA")) return env;
  return "";
}

std::ostream& open_output(const RunConfig& cfg, std::ofstream& file) {
  if (cfg.output.empty()) return std::cout;
  file.open(cfg.output);
  if (!file) throw ConfigError("cannot open output file: " + cfg.output);
  return file;
}

std::vector<int> parse_word(const std::string& text) {
  std::vector<int> w;
  std::stringstream in(text);
  std::string tok;
  while (std::getline(in, tok, ','))
    if (!tok.empty()) w.push_back(std::stoi(tok));
  return w;
}

int cmd_involutions(const RunConfig& cfg) {
  RootDatum d = build_root_datum(cfg.group);
  auto records = enumerate_involutions(d);
  size_t empty_is = 0;
  for (const auto& r : records) empty_is += r.fixed_set.empty() ? 1 : 0;
  if (!cfg.output.empty()) {
    std::ofstream file;
    write_census_tsv(open_output(cfg, file), records);
  }
  std::cout << records.size() << " total, " << empty_is
            << " with empty I(s)\n";
  return 0;
}

int cmd_sieve(const RunConfig& cfg, const std::string& srho_text,
              const std::string& word_text, bool have_word) {
  RootDatum d = build_root_datum(cfg.group);
  WeylElement s;
  if (!srho_text.empty() && have_word)
    throw UsageError("give exactly one of --srho and --word");
  if (!srho_text.empty()) {
    s = from_regular_image(d, parse_weight(srho_text));
  } else if (have_word) {
    s = from_word(d, parse_word(word_text));
  } else {
    throw UsageError("an involution selector (--srho or --word) is required");
  }
  if (!is_involution(s)) throw UsageError("selector is not an involution");
  InvolutionRecord rec = make_involution_record(d, s);
  if (!rec.fixed_set.empty()) {
    std::ostringstream msg;
    msg << "I(s) is nonempty (nodes";
    for (int i : rec.fixed_set) msg << ' ' << i;
    msg << "); the scattered sieve is inapplicable";
    throw UsageError(msg.str());
  }
  PencilCache pencils;
  SieveReport report = enumerate_candidates(d, rec, resolve_bound(cfg, d),
                                            pencils);
  std::ofstream file;
  std::ostream& out = open_output(cfg, file);
  if (cfg.format == "json") {
    out << report_to_json(report).dump() << '\n';
  } else {
    out << "lambda2\tlkt\n";
    for (const auto& c : report.candidates) {
      Weight lkt(c.lkt.size());
      for (size_t i = 0; i < lkt.size(); ++i) lkt[i] = c.lkt[i] / 2;
      out << format_doubled(c.lambda) << '\t' << format_doubled(lkt) << '\n';
    }
  }
  std::cerr << report.candidates.size() << " candidates\n";
  return 0;
}

int cmd_verify(const RunConfig& cfg, const std::string& group_flag) {
  std::vector<std::string> groups;
  if (!group_flag.empty())
    groups = {group_flag};
  else
    groups = {"A6", "D6", "E7"};
  std::string data_dir = resolve_data_dir(cfg);
  int total = 0, passed = 0;
  nlohmann::json all = nlohmann::json::array();
  for (const auto& g : groups) {
    RootDatum d = build_root_datum(g);
    auto rows = load_dataset(g, data_dir);
    auto unfolded = unfold(d, rows);
    PencilCache pencils;
    VerifySummary summary =
        verify_group(d, rows, pencils, default_bound(d),
                     /*sieve_cross_check=*/g == "E7", cfg.workers);
    summary.unfolded_counts[g] = static_cast<int>(unfolded.size());
    std::cout << g << ": " << rows.size() << " rows, unfold="
              << unfolded.size() << '\n';
    total += summary.total;
    passed += summary.passed;
    all.push_back(summary_to_json(summary));
  }
  if (!cfg.output.empty() || cfg.format == "json") {
    std::ofstream file;
    std::ostream& out = open_output(cfg, file);
    out << all.dump(2) << '\n';
  }
  std::cout << passed << '/' << total << " rows pass\n";
  return passed == total ? 0 : 1;
}

int cmd_strings(const RunConfig& cfg, bool coefficients) {
  RootDatum d = build_root_datum("E7");
  std::string dir = resolve_data_dir(cfg);
  if (dir.empty()) dir = "data";
  StringConstants constants =
      load_string_constants(dir + "/string_constants.json");
  StringCounts counts = count_strings(d, constants);
  std::ofstream file;
  std::ostream& out = open_output(cfg, file);
  for (size_t i = 0; i < counts.n.size(); ++i) {
    if (i) out << ' ';
    out << counts.n[i];
  }
  out << " | total " << counts.total << '\n';
  if (coefficients) {
    // Multiset ordering matching the counting formulas: larger types first
    // (E > D > A at equal rank), lower multiplicity of the leading type
    // first.
    auto subsets = classify_levi_subsets(d);
    std::map<int, std::map<std::vector<std::pair<std::pair<int, int>, int>>,
                           std::pair<std::string, long long>>>
        table;
    for (const auto& l : subsets) {
      if (l.nodes.empty()) continue;
      std::map<std::string, int> mult;
      for (const auto& c : l.components) ++mult[c.type_label];
      std::vector<std::pair<std::pair<int, int>, int>> key;
      for (const auto& [t, m] : mult) key.emplace_back(detail::type_key(t), m);
      std::sort(key.begin(), key.end());
      auto& cell = table[static_cast<int>(l.nodes.size())][key];
      cell.first = component_multiset_label(l);
      ++cell.second;
    }
    for (const auto& [size, entries] : table) {
      out << "size " << size << ':';
      for (const auto& [key, cell] : entries)
        out << ' ' << cell.first << ':' << cell.second;
      out << '\n';
    }
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact combinatorics of the Dirac series of complex E7"};
  app.require_subcommand(1);
  RunConfig cfg;
  std::string srho_text, word_text, group_flag;
  bool coefficients = false;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--workers", cfg.workers, "worker thread count");
    sub->add_option("--data", cfg.data, "dataset directory override");
    sub->add_option("--format", cfg.format, "output format: tsv|json")
        ->check(CLI::IsMember({"tsv", "json"}));
    sub->add_option("--output", cfg.output, "output file path");
    sub->add_option("--bound", cfg.bound, "sieve bound override (p or p/q)");
  };

  CLI::App* inv = app.add_subcommand("involutions", "involution census");
  inv->add_option("--group", cfg.group, "group type label");
  add_common(inv);

  CLI::App* sieve = app.add_subcommand("sieve", "candidate sieve for one involution");
  sieve->add_option("--group", cfg.group, "group type label");
  auto* word_opt =
      sieve->add_option("--word", word_text, "involution as a word");
  sieve->add_option("--srho", srho_text, "involution as its s.rho vector");
  add_common(sieve);

  CLI::App* verify = app.add_subcommand("verify", "verify the table datasets");
  verify->add_option("--group", group_flag, "restrict to one group");
  add_common(verify);

  CLI::App* strings = app.add_subcommand("strings", "string counting");
  strings->add_flag("--coefficients", coefficients,
                    "emit the Levi-classification coefficient table");
  add_common(strings);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << e.what() << '\n';
    return 2;
  }

  try {
    if (app.got_subcommand(inv)) return cmd_involutions(cfg);
    if (app.got_subcommand(sieve))
      return cmd_sieve(cfg, srho_text, word_text, word_opt->count() > 0);
    if (app.got_subcommand(verify)) return cmd_verify(cfg, group_flag);
    if (app.got_subcommand(strings)) return cmd_strings(cfg, coefficients);
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return 2;
  } catch (const ConfigError& e) {
    std::cerr << "configuration error: " << e.what() << '\n';
    return 2;
  } catch (const NotInOrbitError& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return 2;
  } catch (const DataError& e) {
    std::cerr << "data error: " << e.what() << '\n';
    return 1;
  }
  return 2;
}

// Command-line front end: test words for pseudo powers, profile the
// periodicity vectors, generate morphic prefixes, run the prefix-tree
// search, and decompose involutions.
//
// Exit codes: 0 success (test: free; search: exhausted), 1 test found a
// hit, 2 usage or parse error, 3 search halted by its budget.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "ppfree/detect.hpp"
#include "ppfree/involution.hpp"
#include "ppfree/morphism.hpp"
#include "ppfree/periodicity.hpp"
#include "ppfree/search.hpp"

namespace {

using nlohmann::json;
using namespace ppfree;

constexpr int exit_ok = 0;
constexpr int exit_hit = 1;
constexpr int exit_usage = 2;
constexpr int exit_budget = 3;

Alphabet alphabet_from_flag(const std::string& text) {
  std::vector<std::string> symbols;
  if (text.find(',') != std::string::npos) {
    std::stringstream in(text);
    std::string token;
    while (std::getline(in, token, ',')) symbols.push_back(token);
  } else {
    for (char c : text) symbols.emplace_back(1, c);
  }
  return Alphabet(symbols);
}

struct WordSource {
  std::string alphabet_flag;
  std::string inline_word;
  std::string word_file;
  std::string builtin;
  std::size_t length = 0;

  void attach(CLI::App* cmd, bool with_len) {
    cmd->add_option("--alphabet", alphabet_flag,
                    "Letters in order, e.g. 012 or ACGT (comma-separated for "
                    "multi-character symbols)");
    cmd->add_option("--word", inline_word, "Input word, one character per letter");
    cmd->add_option("--word-file", word_file,
                    "File with whitespace-separated letter tokens");
    cmd->add_option("--builtin", builtin,
                    "Builtin morphism whose fixed-point prefix is the input: "
                    "leech_l, dekking_d3, dekking_d4, tm_sep_t, thue_morse");
    if (with_len)
      cmd->add_option("--len", length, "Prefix length for --builtin");
  }

  // Resolves the alphabet and word. The builtin source implies its own
  // alphabet; --alphabet may restate it but must then agree.
  std::pair<Alphabet, Word> resolve() const {
    const int sources = (!inline_word.empty() ? 1 : 0) +
                        (!word_file.empty() ? 1 : 0) + (!builtin.empty() ? 1 : 0);
    if (sources != 1)
      throw TextParseError("need exactly one of --word, --word-file, --builtin");
    if (!builtin.empty()) {
      if (length == 0) throw TextParseError("--builtin needs --len at least 1");
      Morphism h = builtin_morphism(builtin);
      if (!alphabet_flag.empty() &&
          !(alphabet_from_flag(alphabet_flag) == h.alphabet()))
        throw TextParseError("--alphabet disagrees with the builtin morphism");
      Word w = fixed_point_prefix(h, 0, length).prefix(length);
      return {h.alphabet(), std::move(w)};
    }
    if (alphabet_flag.empty()) throw TextParseError("--alphabet is required");
    Alphabet alphabet = alphabet_from_flag(alphabet_flag);
    if (!inline_word.empty()) return {alphabet, Word::parse(alphabet, inline_word)};
    std::ifstream in(word_file);
    if (!in) throw TextParseError("cannot open word file '" + word_file + "'");
    std::stringstream buf;
    buf << in.rdbuf();
    return {alphabet, Word::parse_tokens(alphabet, buf.str())};
  }
};

json hit_to_json(const PseudoPowerHit& hit) {
  json tags = json::array();
  for (BlockTag t : hit.pattern)
    tags.push_back(t == BlockTag::same ? "same" : "phi");
  return {{"start", hit.start},
          {"block_len", hit.block_len},
          {"k", hit.exponent},
          {"pattern", tags}};
}

std::string hit_to_text(const PseudoPowerHit& hit) {
  std::string out = "start=" + std::to_string(hit.start) +
                    " block_len=" + std::to_string(hit.block_len) +
                    " k=" + std::to_string(hit.exponent) + " pattern=";
  for (std::size_t i = 0; i < hit.pattern.size(); ++i) {
    if (i) out += ',';
    out += hit.pattern[i] == BlockTag::same ? "same" : "phi";
  }
  return out;
}

json vector_to_json(const std::vector<std::uint32_t>& v) {
  json arr = json::array();
  for (std::uint32_t x : v) {
    if (x == period_infinity)
      arr.push_back(nullptr);
    else
      arr.push_back(x);
  }
  return arr;
}

Algorithm algorithm_from_name(const std::string& name) {
  if (name == "auto") return Algorithm::automatic;
  if (name == "naive") return Algorithm::naive;
  if (name == "matrix") return Algorithm::matrix;
  if (name == "linear") return Algorithm::linear;
  if (name == "quadratic") return Algorithm::quadratic;
  throw TextParseError("unknown algorithm '" + name + "'");
}

int run_test(const WordSource& source, const std::string& involution_text, int k,
             const std::string& algorithm_name, bool all, bool as_json) {
  auto [alphabet, word] = source.resolve();
  Involution phi = parse_involution(alphabet, involution_text);
  Algorithm algo = algorithm_from_name(algorithm_name);
  if (k < 2) throw BadExponentError("--k must be at least 2");
  if (algo == Algorithm::linear && k != 2)
    throw TextParseError("--algorithm linear needs --k 2");
  if (algo == Algorithm::quadratic && k != 3)
    throw TextParseError("--algorithm quadratic needs --k 3");
  if (all && (algo == Algorithm::linear || algo == Algorithm::quadratic))
    throw TextParseError("--all needs an enumerating algorithm (naive, matrix, auto)");

  std::vector<PseudoPowerHit> hits;
  std::optional<PseudoPowerHit> first;
  if (all) {
    hits = find_all(word, phi, k, algo);
    if (!hits.empty()) first = hits.front();
  } else {
    first = find_first(word, phi, k, algo);
  }

  if (as_json) {
    json out{{"command", "test"},
             {"k", k},
             {"word_length", word.size()},
             {"verdict", first ? "hit" : "free"}};
    if (first) out["hit"] = hit_to_json(*first);
    if (all) {
      json list = json::array();
      for (const auto& h : hits) list.push_back(hit_to_json(h));
      out["hits"] = list;
    }
    std::cout << out.dump(2) << '\n';
  } else {
    std::cout << "verdict: " << (first ? "hit" : "free") << '\n';
    if (all) {
      for (const auto& h : hits) std::cout << "hit: " << hit_to_text(h) << '\n';
    } else if (first) {
      std::cout << "hit: " << hit_to_text(*first) << '\n';
    }
  }
  return first ? exit_hit : exit_ok;
}

int run_profile(const WordSource& source, const std::string& involution_text,
                bool as_json) {
  auto [alphabet, word] = source.resolve();
  Involution phi = parse_involution(alphabet, involution_text);
  PeriodicityProfile profile = compute_profile(word, phi);
  if (as_json) {
    json out{{"command", "profile"},
             {"length", profile.word_len},
             {"rmp", vector_to_json(profile.rmp)},
             {"lmp", vector_to_json(profile.lmp)},
             {"cmp", vector_to_json(profile.cmp)}};
    std::cout << out.dump(2) << '\n';
  } else {
    auto line = [](const char* name, const std::vector<std::uint32_t>& v) {
      std::cout << name << ":";
      for (std::uint32_t x : v) {
        if (x == period_infinity)
          std::cout << " inf";
        else
          std::cout << ' ' << x;
      }
      std::cout << '\n';
    };
    std::cout << "length: " << profile.word_len << '\n';
    line("rmp", profile.rmp);
    line("lmp", profile.lmp);
    line("cmp", profile.cmp);
  }
  return exit_ok;
}

int run_generate(const std::string& builtin, std::size_t length) {
  if (length == 0) throw TextParseError("--len must be at least 1");
  Morphism h = builtin_morphism(builtin);
  std::cout << fixed_point_prefix(h, 0, length).prefix(length).str() << '\n';
  return exit_ok;
}

int run_search(const std::string& alphabet_flag, const std::string& involution_text,
               int k, std::size_t max_depth, std::uint64_t max_nodes, unsigned jobs,
               bool as_json) {
  if (alphabet_flag.empty()) throw TextParseError("--alphabet is required");
  if (k < 2) throw BadExponentError("--k must be at least 2");
  Alphabet alphabet = alphabet_from_flag(alphabet_flag);
  Involution phi = parse_involution(alphabet, involution_text);
  SearchBudget budget;
  if (max_depth) budget.max_depth = max_depth;
  if (max_nodes) budget.max_nodes = max_nodes;
  SearchReport report = dfs_search(alphabet, phi, k, budget, jobs);

  if (as_json) {
    json longest = json::array();
    for (const Word& w : report.longest_free_words) longest.push_back(w.str());
    json out{{"nodes", report.total_nodes},
             {"leaves", report.leaf_nodes},
             {"depth", report.depth},
             {"longest", longest},
             {"exhausted", report.exhausted}};
    std::cout << out.dump(2) << '\n';
  } else {
    std::cout << "nodes: " << report.total_nodes << '\n'
              << "leaves: " << report.leaf_nodes << '\n'
              << "depth: " << report.depth << '\n'
              << "exhausted: " << (report.exhausted ? "true" : "false") << '\n';
    for (const Word& w : report.longest_free_words)
      std::cout << "longest: " << w.str() << '\n';
  }
  return report.exhausted ? exit_ok : exit_budget;
}

int run_decompose(const std::string& alphabet_flag, const std::string& involution_text,
                  bool as_json) {
  if (alphabet_flag.empty()) throw TextParseError("--alphabet is required");
  Alphabet alphabet = alphabet_from_flag(alphabet_flag);
  Involution phi = parse_involution(alphabet, involution_text);
  Decomposition d = phi.decompose();
  Classification c = phi.classify();
  const bool identity_ok = c.idt.size() + 2 * c.trn.size() == alphabet.size();

  auto symbols = [&](const std::vector<Letter>& ids) {
    std::string out;
    for (std::size_t i = 0; i < ids.size(); ++i) {
      if (i) out += ',';
      out += alphabet.symbol(ids[i]);
    }
    return out;
  };

  if (as_json) {
    json pairs = json::array();
    for (auto [a, b] : d.transpositions)
      pairs.push_back({alphabet.symbol(a), alphabet.symbol(b)});
    json idt = json::array(), trn = json::array();
    for (Letter a : c.idt) idt.push_back(alphabet.symbol(a));
    for (Letter a : c.trn) trn.push_back(alphabet.symbol(a));
    json out{{"command", "decompose"},
             {"involution", format_involution(phi)},
             {"transpositions", pairs},
             {"idt", idt},
             {"trn", trn},
             {"alphabet_size", alphabet.size()},
             {"letter_count_identity", identity_ok}};
    std::cout << out.dump(2) << '\n';
  } else {
    std::cout << format_involution(phi) << "  Idt={" << symbols(c.idt) << "} Trn={"
              << symbols(c.trn) << "}\n";
    std::cout << "letter counts: " << c.idt.size() << " + 2*" << c.trn.size()
              << " = " << alphabet.size() << (identity_ok ? " ok" : " MISMATCH")
              << '\n';
  }
  return identity_ok ? exit_ok : exit_usage;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"pseudo-power toolkit: detect pseudo k-th powers under "
               "antimorphic involutions, generate morphic words, and search "
               "the tree of free words"};
  app.require_subcommand(1);

  std::string involution_text = "mir";
  std::string algorithm_name = "auto";
  std::string output_mode = "text";
  int k = 2;
  bool all = false;

  WordSource test_source;
  auto* cmd_test = app.add_subcommand("test", "Test a word for pseudo k-th powers");
  test_source.attach(cmd_test, true);
  cmd_test->add_option("--involution", involution_text,
                       "Involution, e.g. mir, (0,1).mir, (A,T),(C,G).mir");
  cmd_test->add_option("--k", k, "Power exponent (>= 2)");
  cmd_test->add_option("--algorithm", algorithm_name,
                       "auto, naive, matrix, linear (k=2), quadratic (k=3)");
  cmd_test->add_flag("--all", all, "List every hit (naive or matrix path)");
  cmd_test->add_option("--output", output_mode, "text or json");

  WordSource profile_source;
  std::string profile_involution = "mir";
  std::string profile_output = "json";
  auto* cmd_profile =
      app.add_subcommand("profile", "Emit the rmp/lmp/cmp periodicity vectors");
  profile_source.attach(cmd_profile, true);
  cmd_profile->add_option("--involution", profile_involution, "Involution text");
  cmd_profile->add_option("--output", profile_output, "json (default) or text");

  std::string gen_builtin;
  std::size_t gen_len = 0;
  auto* cmd_generate =
      app.add_subcommand("generate", "Print a prefix of a builtin fixed point");
  cmd_generate->add_option("--builtin", gen_builtin, "Builtin morphism name")
      ->required();
  cmd_generate->add_option("--len", gen_len, "Prefix length")->required();

  std::string search_alphabet;
  std::string search_involution = "mir";
  int search_k = 2;
  std::size_t search_depth = 0;
  std::uint64_t search_nodes = 0;
  unsigned search_jobs = 1;
  std::string search_output = "json";
  auto* cmd_search = app.add_subcommand(
      "search", "Exhaustive prefix-tree search of pseudo-power-free words");
  cmd_search->add_option("--alphabet", search_alphabet, "Letters in order")->required();
  cmd_search->add_option("--involution", search_involution, "Involution text");
  cmd_search->add_option("--k", search_k, "Power exponent (>= 2)");
  cmd_search->add_option("--max-depth", search_depth, "Stop expanding at this length");
  cmd_search->add_option("--max-nodes", search_nodes, "Stop after this many nodes");
  cmd_search->add_option("--jobs", search_jobs, "Worker threads (default 1)");
  cmd_search->add_option("--output", search_output, "json (default) or text");

  std::string dec_alphabet;
  std::string dec_involution;
  std::string dec_output = "text";
  auto* cmd_decompose = app.add_subcommand(
      "decompose", "Show the transposition pairs and letter classes of an involution");
  cmd_decompose->add_option("--alphabet", dec_alphabet, "Letters in order")->required();
  cmd_decompose->add_option("--involution", dec_involution, "Involution text")
      ->required();
  cmd_decompose->add_option("--output", dec_output, "text (default) or json");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return exit_usage;
  }

  try {
    if (app.got_subcommand(cmd_test))
      return run_test(test_source, involution_text, k, algorithm_name, all,
                      output_mode == "json");
    if (app.got_subcommand(cmd_profile))
      return run_profile(profile_source, profile_involution,
                         profile_output == "json");
    if (app.got_subcommand(cmd_generate)) return run_generate(gen_builtin, gen_len);
    if (app.got_subcommand(cmd_search))
      return run_search(search_alphabet, search_involution, search_k, search_depth,
                        search_nodes, search_jobs, search_output == "json");
    if (app.got_subcommand(cmd_decompose))
      return run_decompose(dec_alphabet, dec_involution, dec_output == "json");
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return exit_usage;
  }
  return exit_usage;
}

// braidforge command-line tool.
//
// Exit codes: 0 success, 1 verification failure, 2 input error, 3 resource
// cap exceeded.

#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "braidforge/braidforge.hpp"

using namespace braidforge;

namespace {

constexpr int kVerifyFailed = 1;
constexpr int kInputError = 2;
constexpr int kResourceError = 3;

struct Options {
  bool json = false;
  int state_sum_cap = kDefaultStateSumCap;
};

// `arg` is "-" for stdin, a readable file, or the object text itself.
std::string read_input(const std::string& arg) {
  if (arg == "-")
    return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
  std::ifstream in(arg);
  if (in)
    return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
  return arg;
}

int env_int(const char* name, int fallback) {
  const char* v = std::getenv(name);
  if (!v || !*v)
    return fallback;
  try {
    std::size_t used = 0;
    const int n = std::stoi(v, &used);
    if (used != std::string(v).size() || n < 0)
      throw std::invalid_argument(v);
    return n;
  } catch (const std::logic_error&) {
    throw InputError(std::string(name) + " must be a non-negative integer");
  }
}

void row(std::ostream& out, const std::string& key, const std::string& value) {
  out << std::left << std::setw(20) << key << value << '\n';
}

std::string compact(const json& j) { return j.dump(); }

void print_record(std::ostream& out, const InvariantRecord& r, bool jones) {
  row(out, "components", std::to_string(r.components));
  row(out, "writhe", std::to_string(r.writhe));
  row(out, "normalized_bracket", r.normalized_bracket.to_string());
  if (jones)
    row(out, "jones_t", jones_in_t(r.normalized_bracket));
  row(out, "linking_matrix", compact(r.linking_matrix));
  row(out, "seifert_circles", std::to_string(r.seifert_circles));
}

std::string record_line(const InvariantRecord& r) {
  return "components=" + std::to_string(r.components) +
         " bracket=" + r.normalized_bracket.to_string() +
         " linking=" + compact(r.linking_matrix);
}

PDCode to_pd(const DiagramObject& obj) {
  struct Visitor {
    PDCode operator()(const GridDiagram& g) const { return grid_to_pd(g); }
    PDCode operator()(const BraidWord& w) const { return braid_closure_to_pd(w); }
    PDCode operator()(const PDCode& pd) const { return pd; }
  };
  return std::visit(Visitor{}, obj);
}

const char* kind_name(const DiagramObject& obj) {
  constexpr const char* names[] = {"grid", "braid", "pd"};
  return names[obj.index()];
}

GridDiagram require_grid(const DiagramObject& obj) {
  if (auto g = std::get_if<GridDiagram>(&obj))
    return *g;
  throw InputError(std::string("expected a grid diagram, got a ") + kind_name(obj));
}

BraidWord require_braid(const DiagramObject& obj) {
  if (auto w = std::get_if<BraidWord>(&obj))
    return *w;
  throw InputError(std::string("expected a braid word, got a ") + kind_name(obj));
}

int cmd_validate(const Options& opt, const std::string& input) {
  const DiagramObject obj = parse_object(read_input(input));
  const PDCode pd = to_pd(obj);
  validate(pd);
  json j{{"valid", true}, {"kind", kind_name(obj)}, {"components", component_count(pd)}};
  std::string detail;
  if (auto g = std::get_if<GridDiagram>(&obj)) {
    j["size"] = g->size();
    detail = "grid of size " + std::to_string(g->size());
  } else if (auto w = std::get_if<BraidWord>(&obj)) {
    j["strands"] = w->strands();
    j["length"] = w->length();
    detail = "braid word on " + std::to_string(w->strands()) + " strands, length " +
             std::to_string(w->length());
  } else {
    j["crossings"] = pd.crossings.size();
    detail = "PD code with " + std::to_string(pd.crossings.size()) + " crossings";
  }
  if (opt.json)
    std::cout << j.dump(2) << '\n';
  else
    std::cout << "valid " << detail << ", " << component_count(pd) << " component(s)\n";
  return 0;
}

int cmd_braid(const Options& opt, const std::string& input, bool trace, bool check) {
  const GridDiagram g = require_grid(parse_object(read_input(input)));
  const BraidingResult b = braid_from_grid(g);
  std::optional<BraidingCheck> chk;
  if (check)
    chk = check_braiding(g, opt.state_sum_cap);

  if (opt.json) {
    json j{{"word", to_text(b.word)}, {"braid", to_json(b.word)}};
    if (trace)
      j["trace"] = to_json(b.trace);
    if (chk)
      j["check"] = {{"grid", to_json(chk->grid_record)},
                    {"braid", to_json(chk->braid_record)},
                    {"agree", chk->agree}};
    std::cout << j.dump(2) << '\n';
  } else {
    std::cout << to_text(b.word) << '\n';
    if (trace)
      std::cout << to_json(b.trace).dump(2) << '\n';
    if (chk) {
      row(std::cout, "grid", record_line(chk->grid_record));
      row(std::cout, "closure", record_line(chk->braid_record));
      row(std::cout, "check", chk->agree ? "pass" : "FAIL");
    }
  }
  return chk && !chk->agree ? kVerifyFailed : 0;
}

int cmd_invariants(const Options& opt, const std::string& input, bool jones) {
  const InvariantRecord r = invariant_record(to_pd(parse_object(read_input(input))),
                                             opt.state_sum_cap);
  if (opt.json) {
    json j = to_json(r);
    if (jones)
      j["jones_t"] = jones_in_t(r.normalized_bracket);
    std::cout << j.dump(2) << '\n';
  } else {
    print_record(std::cout, r, jones);
  }
  return 0;
}

int cmd_markov(const Options& opt, const std::string& input, const std::string& moves_file,
               int random_length, std::uint64_t seed, const WordCaps& caps) {
  const BraidWord start = require_braid(parse_object(read_input(input)));
  std::vector<MarkovMove> path;
  if (!moves_file.empty()) {
    const std::string text = read_input(moves_file);
    path = moves_from_json(detail::json_guard([&] { return json::parse(text); }));
  } else {
    path = random_markov_sequence(start, random_length, caps, seed).moves;
  }

  const InvariantRecord ref = closure_record(start, opt.state_sum_cap);
  BraidWord w = start;
  bool all_ok = true;
  json steps = json::array();
  std::ostringstream text;
  row(text, "start", to_text(w));
  for (std::size_t k = 0; k < path.size(); ++k) {
    const MarkovMove& m = path[k];
    try {
      w = apply_move(w, m);
    } catch (const InapplicableMove& e) {
      throw InapplicableMove("move " + std::to_string(k + 1) + " (" + move_name(m) +
                             "): " + e.what());
    }
    const bool ok = invariants_agree(ref, closure_record(w, opt.state_sum_cap));
    all_ok = all_ok && ok;
    steps.push_back({{"move", to_json(m)}, {"word", to_text(w)}, {"invariants_preserved", ok}});
    row(text, "step " + std::to_string(k + 1),
        to_text(w) + "  " + compact(to_json(m)) + (ok ? "  ok" : "  FAIL"));
  }
  if (opt.json) {
    std::cout << json{{"start", to_text(start)},
                      {"steps", steps},
                      {"result", to_text(w)},
                      {"moves", to_json(path)},
                      {"invariants", to_json(ref)},
                      {"invariants_preserved", all_ok}}
                     .dump(2)
              << '\n';
  } else {
    std::cout << text.str();
    row(std::cout, "result", to_text(w));
    row(std::cout, "check", all_ok ? "pass" : "FAIL");
  }
  return all_ok ? 0 : kVerifyFailed;
}

int cmd_fuzz(const Options& opt, FuzzConfig cfg, bool corrupt) {
  cfg.state_sum_cap = opt.state_sum_cap;
  if (corrupt) {
    // test fixture: conjugators of equal sign do not keep the closure
    cfg.table.over = {+1, +1, +1};
    cfg.table.under = {-1, -1, -1};
  }
  const FuzzReport report = fuzz(cfg);
  if (opt.json) {
    json j{{"cases", report.cases_run}, {"seed", cfg.seed}, {"failed", bool(report.failure)}};
    if (report.failure) {
      const Counterexample& c = *report.failure;
      j["counterexample"] = {{"case", c.case_index},
                             {"before", to_text(c.before)},
                             {"move", to_json(c.move)},
                             {"after", to_text(c.after)},
                             {"before_invariants", to_json(c.before_record)},
                             {"after_invariants", to_json(c.after_record)}};
    }
    std::cout << j.dump(2) << '\n';
  } else {
    row(std::cout, "cases", std::to_string(report.cases_run));
    row(std::cout, "seed", std::to_string(cfg.seed));
    if (report.failure) {
      const Counterexample& c = *report.failure;
      row(std::cout, "counterexample", "case " + std::to_string(c.case_index));
      row(std::cout, "before", to_text(c.before));
      row(std::cout, "move", compact(to_json(c.move)));
      row(std::cout, "after", to_text(c.after));
      row(std::cout, "before invariants", record_line(c.before_record));
      row(std::cout, "after invariants", record_line(c.after_record));
    } else {
      row(std::cout, "failures", "0");
    }
  }
  return report.failure ? kVerifyFailed : 0;
}

int cmd_search(const Options& opt, const std::string& a, const std::string& b,
               const SearchCaps& caps) {
  const BraidWord w1 = require_braid(parse_object(read_input(a)));
  const BraidWord w2 = require_braid(parse_object(read_input(b)));
  const SearchResult r = bounded_equivalence_search(w1, w2, caps);
  if (opt.json) {
    json j{{"found", bool(r.path)}, {"states", r.states}, {"truncated", r.truncated}};
    if (r.path)
      j["path"] = to_json(*r.path);
    std::cout << j.dump(2) << '\n';
  } else if (r.path) {
    row(std::cout, "found", std::to_string(r.path->size()) + " move(s)");
    for (std::size_t k = 0; k < r.path->size(); ++k)
      row(std::cout, "move " + std::to_string(k + 1), compact(to_json((*r.path)[k])));
    row(std::cout, "states", std::to_string(r.states));
  } else {
    std::cout << "not found within caps\n";
    row(std::cout, "states", std::to_string(r.states));
    if (r.truncated)
      row(std::cout, "truncated", "state cap reached");
  }
  return 0;
}

int cmd_convert(const Options& opt, const std::string& input, const std::string& to) {
  const DiagramObject obj = parse_object(read_input(input));
  if (to == "grid") {
    const GridDiagram g = require_grid(obj);
    std::cout << (opt.json ? to_json(g).dump(2) : to_text(g)) << '\n';
    return 0;
  }
  if (std::holds_alternative<PDCode>(obj))
    throw InputError("conversion from a PD code to " + to + " is not supported");
  PDCode pd;
  if (to == "pd") {
    pd = to_pd(obj);
  } else {
    // braid-closure-pd: a grid is braided first
    const BraidWord w = std::holds_alternative<GridDiagram>(obj)
                            ? braid_from_grid(std::get<GridDiagram>(obj)).word
                            : std::get<BraidWord>(obj);
    pd = braid_closure_to_pd(w);
  }
  std::cout << to_json(pd).dump(opt.json ? 2 : -1) << '\n';
  return 0;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"Grid diagrams, braid words and Markov moves with invariant checks"};
  app.require_subcommand(1);
  Options opt;
  app.add_flag("--json", opt.json, "Emit JSON instead of aligned text");
  std::optional<int> cap_flag;
  app.add_option("--state-sum-cap", cap_flag,
                 "Largest crossing count for the bracket state sum "
                 "(env BRAIDFORGE_STATE_SUM_CAP)")
      ->check(CLI::NonNegativeNumber);

  std::string input, input2, moves_file, to;
  bool trace = false, check = false, jones = false, corrupt = false;
  int random_length = -1;
  std::uint64_t seed = 1;
  WordCaps word_caps;
  FuzzConfig fuzz_cfg;
  SearchCaps search_caps;
  std::optional<std::size_t> max_states;

  auto* validate_cmd = app.add_subcommand("validate", "Parse and check a grid, braid or PD code");
  validate_cmd->add_option("input", input, "File, '-' for stdin, or the object text")->required();

  auto* braid_cmd = app.add_subcommand("braid", "Braid a grid diagram");
  braid_cmd->add_option("input", input, "Grid: file, '-' or text")->required();
  braid_cmd->add_flag("--trace", trace, "Emit the braiding trace");
  braid_cmd->add_flag("--check", check, "Compare grid and closure invariants");

  auto* inv_cmd = app.add_subcommand("invariants", "Invariant record of a diagram");
  inv_cmd->add_option("input", input, "Grid, braid or PD: file, '-' or text")->required();
  inv_cmd->add_flag("--jones-t", jones, "Also show the bracket with A = t^(-1/4)");

  auto* markov_cmd = app.add_subcommand("markov", "Apply moves to a braid word");
  markov_cmd->add_option("input", input, "Braid word: file, '-' or text")->required();
  auto* moves_opt = markov_cmd->add_option("--moves", moves_file, "JSON move list to replay");
  auto* random_opt = markov_cmd->add_option("--random", random_length, "Random sequence length")
                         ->check(CLI::NonNegativeNumber);
  moves_opt->excludes(random_opt);
  markov_cmd->add_option("--seed", seed, "Seed for --random");
  markov_cmd->add_option("--max-strands", word_caps.max_strands, "Strand cap for --random");
  markov_cmd->add_option("--max-length", word_caps.max_length, "Length cap for --random");

  auto* fuzz_cmd = app.add_subcommand("fuzz", "Random move sequences against the oracle");
  fuzz_cmd->add_option("--cases", fuzz_cfg.cases, "Number of cases")
      ->check(CLI::NonNegativeNumber);
  fuzz_cmd->add_option("--seed", fuzz_cfg.seed, "Seed");
  fuzz_cmd->add_option("--steps", fuzz_cfg.steps, "Moves per case")
      ->check(CLI::NonNegativeNumber);
  fuzz_cmd->add_option("--max-strands", fuzz_cfg.caps.max_strands, "Strand cap")
      ->check(CLI::PositiveNumber);
  fuzz_cmd->add_option("--max-length", fuzz_cfg.caps.max_length, "Word length cap");
  fuzz_cmd->add_flag("--corrupt-l-move-table", corrupt)->group("");

  auto* search_cmd = app.add_subcommand("search", "Bounded search for a move path");
  search_cmd->add_option("from", input, "Braid word")->required();
  search_cmd->add_option("to", input2, "Braid word")->required();
  search_cmd->add_option("--depth", search_caps.depth, "Move depth")
      ->check(CLI::NonNegativeNumber);
  search_cmd->add_option("--max-strands", search_caps.max_strands, "Strand cap");
  search_cmd->add_option("--max-length", search_caps.max_length, "Word length cap");
  search_cmd->add_option("--max-states", max_states,
                         "Visited state cap (env BRAIDFORGE_SEARCH_CAP)");

  auto* convert_cmd = app.add_subcommand("convert", "Convert between representations");
  convert_cmd->add_option("input", input, "Grid or braid: file, '-' or text")->required();
  convert_cmd->add_option("--to", to, "Target representation")
      ->required()
      ->check(CLI::IsMember({"grid", "pd", "braid-closure-pd"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kInputError;
  }

  try {
    opt.state_sum_cap =
        cap_flag ? *cap_flag : env_int("BRAIDFORGE_STATE_SUM_CAP", kDefaultStateSumCap);
    search_caps.max_states =
        max_states ? *max_states
                   : static_cast<std::size_t>(env_int(
                         "BRAIDFORGE_SEARCH_CAP", static_cast<int>(search_caps.max_states)));

    if (*validate_cmd)
      return cmd_validate(opt, input);
    if (*braid_cmd)
      return cmd_braid(opt, input, trace, check);
    if (*inv_cmd)
      return cmd_invariants(opt, input, jones);
    if (*markov_cmd) {
      if (moves_file.empty() && random_length < 0)
        throw InputError("markov needs --moves or --random");
      return cmd_markov(opt, input, moves_file, random_length, seed, word_caps);
    }
    if (*fuzz_cmd)
      return cmd_fuzz(opt, fuzz_cfg, corrupt);
    if (*search_cmd)
      return cmd_search(opt, input, input2, search_caps);
    if (*convert_cmd)
      return cmd_convert(opt, input, to);
  } catch (const ResourceError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kResourceError;
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInputError;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return kVerifyFailed;
  }
  return 0;
}

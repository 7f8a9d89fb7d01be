#pragma once

// Command-line front end. Exit codes: 0 valid / success, 1 invalid or
// negative verdict, 2 usage, parse or I/O error.

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "pbtd/pbtd.hpp"

namespace pbtd::cli {

inline constexpr int kOk = 0;
inline constexpr int kNegative = 1;
inline constexpr int kFailure = 2;

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::Precondition, "cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorKind::Precondition, "cannot write '" + path + "'");
  out << text;
}

inline void explain(std::ostream& out, int n) {
  out << "# PBTD(n): n x (2n-1) array of pairs over V = {0..2n-1}\n"
      << "#   C0 all cells hold distinct pairs; n(2n-1) cells = C(2n,2)";
  if (n > 0) out << " = " << pair_count(2 * n);
  out << " pairs\n"
      << "#   C1 every element exactly once in each column\n"
      << "#   C2 every element at most twice in each row\n"
      << "#   C3 first n columns of each row contain all 2n elements\n"
      << "#   C4 last n columns of each row contain all 2n elements\n"
      << "# Howell H(s,v): s x s array, cells empty or a pair over v elements\n"
      << "#   H1 cells hold pairs over V\n"
      << "#   H2 every element exactly once in each row and each column\n"
      << "#   H3 no pair occurs twice\n"
      << "# Almost disjoint H(n,2n) pair: identical last columns, pair sets meet\n"
      << "#   exactly in that column, and their union is all C(2n,2) pairs\n";
}

inline void print_report(std::ostream& out, const VerificationReport& rep, const std::string& label) {
  out << (rep.valid() ? "VALID " : "INVALID ") << label;
  if (rep.pairs_expected) out << " (pairs expected: " << rep.pairs_expected << ")";
  out << '\n';
  for (const auto& v : rep.violations) out << "  " << format_violation(v) << '\n';
}

struct Streams {
  std::ostream& out;
  std::ostream& err;
};

inline int run_verify(const std::string& file, const std::string& kind, bool explain_flag, const std::string& format,
                      Streams io) {
  auto docs = parse_all(read_file(file));
  if (docs.empty()) throw Error(ErrorKind::Parse, "no document in '" + file + "'");
  std::vector<std::pair<std::string, VerificationReport>> reports;
  std::vector<HowellGrid> howells;
  int side = 0;
  for (std::size_t i = 0; i < docs.size(); ++i) {
    const auto& d = docs[i];
    std::string label = std::string(to_string(d.kind)) + " #" + std::to_string(i + 1);
    if (d.kind == DocumentKind::PBTD && (kind.empty() || kind == "pbtd")) {
      PBTDesign t = to_design(d);
      side = t.n();
      reports.emplace_back("pbtd n=" + std::to_string(t.n()), verify_pbtd(t));
    } else if (d.kind == DocumentKind::HOWELL && (kind.empty() || kind == "howell")) {
      HowellGrid h = to_howell(d);
      side = h.s();
      reports.emplace_back("howell s=" + std::to_string(h.s()) + " v=" + std::to_string(h.v()), verify_howell(h));
      howells.push_back(std::move(h));
    } else {
      throw Error(ErrorKind::Parse, label + " does not match --kind " + kind);
    }
  }
  if (howells.size() == 2 && howells[0].s() == howells[1].s() && howells[0].v() == 2 * howells[0].s() &&
      howells[1].v() == 2 * howells[1].s()) {
    reports.emplace_back("almost-disjoint pair", check_almost_disjoint(howells[0], howells[1]));
  }
  bool all_valid = true;
  for (const auto& [_, r] : reports) all_valid = all_valid && r.valid();

  if (format == "json") {
    nlohmann::json j;
    j["valid"] = all_valid;
    j["reports"] = nlohmann::json::array();
    for (const auto& [label, r] : reports) {
      auto jr = to_json(r);
      jr["label"] = label;
      j["reports"].push_back(std::move(jr));
    }
    io.out << j.dump(2) << '\n';
  } else {
    if (explain_flag) explain(io.out, side);
    for (const auto& [label, r] : reports) print_report(io.out, r, label);
  }
  return all_valid ? kOk : kNegative;
}

inline int run_pair(const std::string& left_file, const std::string& right_file, const std::string& output, Streams io) {
  HowellGrid h1 = to_howell(parse(read_file(left_file)));
  HowellGrid h2 = to_howell(parse(read_file(right_file)));
  auto r1 = verify_howell(h1);
  auto r2 = verify_howell(h2);
  if (h1.s() != h2.s() || h1.v() != 2 * h1.s() || h2.v() != 2 * h2.s()) {
    throw Error(ErrorKind::Shape, "pair needs two H(n, 2n) of equal side");
  }
  auto ad = check_almost_disjoint(h1, h2);
  if (!r1.valid() || !r2.valid() || !ad.valid()) {
    print_report(io.out, r1, "left howell");
    print_report(io.out, r2, "right howell");
    print_report(io.out, ad, "almost-disjoint pair");
    return kNegative;
  }
  std::string text = serialize(to_document(assemble_from_howell_pair(h1, h2)));
  if (output.empty()) {
    io.out << text;
  } else {
    write_file(output, text);
  }
  return kOk;
}

inline TemplatePair load_templates(const std::string& spec, int n) {
  if (spec == "sigma") return {sigma_template(n), sigma_template(n)};
  if (spec == "tau") {
    if (n != 7) throw Error(ErrorKind::Precondition, "the tau templates are defined for n = 7");
    return tau_templates_n7();
  }
  auto docs = parse_all(read_file(spec));
  if (docs.empty() || docs.size() > 2) throw Error(ErrorKind::Parse, "template file must hold one or two TEMPLATE documents");
  OrbitTemplate left = to_template(docs.front());
  OrbitTemplate right = docs.size() == 2 ? to_template(docs.back()) : left;
  return {std::move(left), std::move(right)};
}

struct SearchArgs {
  int n = 0;
  std::string template_spec;
  std::size_t limit = 1;
  std::uint64_t seed = 0;
  std::uint64_t budget = 1'000'000'000;
  double time_limit = 0;
  bool no_symmetry_break = false;
  int jobs = 1;
  int split_depth = -1;
  std::string checkpoint;
  std::string resume;
};

inline void fill_common(SearchConfig& cfg, const SearchArgs& a, Streams io) {
  cfg.limit = a.limit;
  cfg.seed = a.seed;
  cfg.node_budget = a.budget;
  cfg.symmetry_break = !a.no_symmetry_break;
  cfg.jobs = a.jobs;
  cfg.split_depth = a.split_depth >= 0 ? a.split_depth : (a.jobs > 1 ? 3 : 0);
  if (a.time_limit > 0) cfg.time_budget = std::chrono::milliseconds(static_cast<std::int64_t>(a.time_limit * 1000));
  cfg.progress = [&err = io.err](std::uint64_t nodes) { err << "# progress: " << nodes << " nodes\n"; };
}

inline int finish_search(const SearchOutcome& outcome, const SearchConfig& cfg, const SearchArgs& a,
                         std::uint64_t prior_nodes, Streams io) {
  std::vector<DesignDocument> docs;
  for (const auto& s : outcome.solutions) docs.push_back(to_document(s));
  io.out << serialize(docs);
  io.err << "# status=" << to_string(outcome.status) << " solutions=" << outcome.solutions.size()
         << " nodes=" << outcome.nodes << " prunes=" << outcome.prunes << " elapsed_ms="
         << std::chrono::duration_cast<std::chrono::milliseconds>(outcome.elapsed).count() << '\n';
  for (const auto& r : outcome.reductions) io.err << "# reduction: " << r << '\n';
  if (outcome.status == SearchStatus::BudgetExhausted && !a.checkpoint.empty()) {
    Checkpoint cp{cfg.n, cfg.mode, cfg.symmetry_break, cfg.seed, prior_nodes + outcome.nodes, outcome.frontier};
    write_file(a.checkpoint, serialize(to_document(cp)));
    io.err << "# checkpoint written to " << a.checkpoint << " (" << cp.frontier.size() << " subtrees)\n";
  }
  return outcome.solutions.empty() ? kNegative : kOk;
}

inline std::uint64_t apply_resume(SearchConfig& cfg, const SearchArgs& a) {
  if (a.resume.empty()) return 0;
  Checkpoint cp = to_checkpoint(parse(read_file(a.resume)));
  if (cp.n != cfg.n || cp.mode != cfg.mode || cp.symmetry_break != cfg.symmetry_break || cp.seed != cfg.seed) {
    throw Error(ErrorKind::Precondition, "checkpoint was written by a different search configuration");
  }
  cfg.resume = cp.frontier;
  if (cfg.resume.empty()) cfg.resume.push_back({});
  return cp.nodes;
}

inline int run_search(const SearchArgs& a, Streams io) {
  SearchConfig cfg;
  cfg.n = a.n;
  fill_common(cfg, a, io);
  if (!a.template_spec.empty()) {
    cfg.mode = SearchMode::Template;
    cfg.templates = load_templates(a.template_spec, a.n);
  }
  std::uint64_t prior = apply_resume(cfg, a);
  return finish_search(search_pbtd(cfg), cfg, a, prior, io);
}

inline int run_mate(const std::string& left_file, const SearchArgs& a, Streams io) {
  DesignDocument d = parse(read_file(left_file));
  HowellGrid left = d.kind == DocumentKind::PBTD ? left_howell(to_design(d)) : to_howell(d);
  SearchConfig cfg;
  cfg.n = left.s();
  fill_common(cfg, a, io);
  cfg.mode = SearchMode::Mate;
  cfg.fixed_left = left;
  std::uint64_t prior = apply_resume(cfg, a);
  return finish_search(search_pbtd(cfg), cfg, a, prior, io);
}

inline int run_nonexist(int n, std::uint64_t budget, double time_limit, Streams io) {
  std::optional<std::chrono::milliseconds> tb;
  if (time_limit > 0) tb = std::chrono::milliseconds(static_cast<std::int64_t>(time_limit * 1000));
  auto res = prove_nonexistence(n, budget, tb);
  io.out << to_string(res.verdict) << '\n';
  io.out << "# n=" << n << " nodes=" << res.outcome.nodes << " status=" << to_string(res.outcome.status) << '\n';
  for (const auto& r : res.outcome.reductions) io.out << "# reduction: " << r << '\n';
  if (res.witness) io.out << serialize(to_document(*res.witness));
  return kOk;
}

inline int run_normalize(const std::string& file, Streams io) {
  PBTDesign t = to_design(parse(read_file(file)));
  try {
    auto norm = normalize_center(t);
    io.out << "# relabel: " << norm.relabel.to_cycle_string() << '\n';
    io.out << serialize(to_document(norm.design));
    return kOk;
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::InvalidCenter) throw;
    io.out << "INVALID " << e.what() << '\n';
    return kNegative;
  }
}

inline int run_isomorphic(const std::string& fa, const std::string& fb, std::uint64_t budget, Streams io) {
  PBTDesign a = to_design(parse(read_file(fa)));
  PBTDesign b = to_design(parse(read_file(fb)));
  if (a.n() != b.n()) {
    io.out << "NOT-ISOMORPHIC\n# sides differ\n";
    return kNegative;
  }
  auto res = are_isomorphic(a, b, budget);
  switch (res.verdict) {
    case IsoVerdict::Yes:
      io.out << "ISOMORPHIC\n";
      for (const auto& op : res.witness) io.out << "# op: " << describe(op) << '\n';
      return kOk;
    case IsoVerdict::No: io.out << "NOT-ISOMORPHIC\n"; break;
    case IsoVerdict::Inconclusive: io.out << "INCONCLUSIVE\n"; break;
  }
  io.out << "# nodes=" << res.nodes << '\n';
  return kNegative;
}

inline int run_fixtures(bool list, const std::string& name, Streams io) {
  if (list || name.empty()) {
    for (const auto& f : kFixtures) {
      io.out << f.name << "  PBTD(" << f.n << ")  from an almost disjoint pair of H(" << f.n << "," << 2 * f.n
             << ")  [also " << f.name << ".howell, " << f.name << ".left, " << f.name << ".right]\n";
    }
    return kOk;
  }
  std::string base = name.substr(0, name.find('.'));
  std::string suffix = name.size() > base.size() ? name.substr(base.size() + 1) : "";
  const Fixture& f = fixture(base);
  if (suffix.empty()) {
    io.out << serialize(to_document(fixture_design(f.name)));
  } else if (suffix == "howell") {
    io.out << serialize(std::vector<DesignDocument>{to_document(fixture_left(f.name)), to_document(fixture_right(f.name))});
  } else if (suffix == "left") {
    io.out << serialize(to_document(fixture_left(f.name)));
  } else if (suffix == "right") {
    io.out << serialize(to_document(fixture_right(f.name)));
  } else {
    throw Error(ErrorKind::Precondition, "unknown fixture variant '" + suffix + "'");
  }
  return kOk;
}

inline int run_template(const std::string& which, int n, Streams io) {
  TemplatePair tp = load_templates(which == "sigma" || which == "tau" ? which : "?", which == "tau" ? 7 : n);
  io.out << serialize(std::vector<DesignDocument>{to_document(tp.left), to_document(tp.right)});
  return kOk;
}

inline void add_search_options(CLI::App* cmd, SearchArgs& a) {
  cmd->add_option("--limit", a.limit, "Maximum number of solutions")->check(CLI::PositiveNumber);
  cmd->add_option("--seed", a.seed, "Value-ordering seed (0 = lexicographic)");
  cmd->add_option("--budget", a.budget, "Node budget")->check(CLI::PositiveNumber);
  cmd->add_option("--time-limit", a.time_limit, "Wall-clock budget in seconds");
  cmd->add_flag("--no-symmetry-break", a.no_symmetry_break, "Disable symmetry reductions");
  cmd->add_option("--jobs", a.jobs, "Worker threads")->check(CLI::PositiveNumber);
  cmd->add_option("--split-depth", a.split_depth, "Subtree cut depth for parallel runs and checkpoints");
  cmd->add_option("--checkpoint", a.checkpoint, "Write the unexplored frontier here if the budget runs out");
  cmd->add_option("--resume", a.resume, "Resume from a checkpoint file");
}

inline int cli_main(int argc, const char* const* argv, std::ostream& out = std::cout, std::ostream& err = std::cerr) {
  Streams io{out, err};
  CLI::App app{"Verify, normalize and search partitioned balanced tournament designs and Howell designs"};
  app.name("pbtd");
  app.require_subcommand(1);

  std::string file;
  std::string kind;
  std::string format = "text";
  bool explain_flag = false;
  auto* verify = app.add_subcommand("verify", "Check a PBTD or Howell document");
  verify->add_option("file", file, "Document file")->required();
  verify->add_option("--kind", kind, "Expected document kind")->check(CLI::IsMember({"pbtd", "howell"}));
  verify->add_flag("--explain", explain_flag, "Print the checked conditions");
  verify->add_option("--format", format, "Report format")->check(CLI::IsMember({"text", "json"}));

  std::string left_file;
  std::string right_file;
  std::string output;
  auto* pair = app.add_subcommand("pair", "Assemble a PBTD from an almost disjoint Howell pair");
  pair->add_option("left", left_file, "First Howell document")->required();
  pair->add_option("right", right_file, "Second Howell document")->required();
  pair->add_option("-o,--output", output, "Output file (default: standard output)");

  SearchArgs sargs;
  auto* search = app.add_subcommand("search", "Backtracking search for PBTD(n)");
  search->add_option("--n", sargs.n, "Side")->required()->check(CLI::Range(1, kMaxSide));
  search->add_option("--template", sargs.template_spec, "sigma, tau, or a TEMPLATE file");
  add_search_options(search, sargs);

  SearchArgs margs;
  std::string mate_left;
  auto* mate = app.add_subcommand("mate", "Search right halves for a fixed left Howell half");
  mate->add_option("--left", mate_left, "HOWELL (or PBTD) document supplying T^L and T^C")->required();
  add_search_options(mate, margs);

  int nonexist_n = 0;
  std::uint64_t nonexist_budget = 1'000'000'000;
  double nonexist_time = 0;
  auto* nonexist = app.add_subcommand("nonexist", "Exhaustive existence check for small n");
  nonexist->add_option("--n", nonexist_n, "Side")->required()->check(CLI::Range(1, kMaxSide));
  nonexist->add_option("--budget", nonexist_budget, "Node budget")->check(CLI::PositiveNumber);
  nonexist->add_option("--time-limit", nonexist_time, "Wall-clock budget in seconds");

  std::string norm_file;
  auto* normalize = app.add_subcommand("normalize", "Relabel so the center column is {0,1},{2,3},...");
  normalize->add_option("file", norm_file, "PBTD document")->required();

  std::string iso_a;
  std::string iso_b;
  std::uint64_t iso_budget = 10'000'000;
  auto* iso = app.add_subcommand("isomorphic", "Search for an isomorphism between two PBTDs");
  iso->add_option("a", iso_a, "First PBTD document")->required();
  iso->add_option("b", iso_b, "Second PBTD document")->required();
  iso->add_option("--budget", iso_budget, "Node budget")->check(CLI::PositiveNumber);

  bool fx_list = false;
  std::string fx_name;
  auto* fixtures = app.add_subcommand("fixtures", "Embedded published designs");
  fixtures->add_flag("--list", fx_list, "List fixture names");
  fixtures->add_option("--emit", fx_name, "Print a fixture (f1, f1.howell, f1.left, f1.right, ...)");

  std::string tmpl_which;
  int tmpl_n = 5;
  auto* tmpl = app.add_subcommand("template", "Print built-in orbit templates");
  tmpl->add_option("which", tmpl_which, "sigma or tau")->required()->check(CLI::IsMember({"sigma", "tau"}));
  tmpl->add_option("--n", tmpl_n, "Side (sigma only)")->check(CLI::Range(1, kMaxSide));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kFailure;
  }

  try {
    if (*verify) return run_verify(file, kind, explain_flag, format, io);
    if (*pair) return run_pair(left_file, right_file, output, io);
    if (*search) return run_search(sargs, io);
    if (*mate) return run_mate(mate_left, margs, io);
    if (*nonexist) return run_nonexist(nonexist_n, nonexist_budget, nonexist_time, io);
    if (*normalize) return run_normalize(norm_file, io);
    if (*iso) return run_isomorphic(iso_a, iso_b, iso_budget, io);
    if (*fixtures) return run_fixtures(fx_list, fx_name, io);
    if (*tmpl) return run_template(tmpl_which, tmpl_n, io);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kFailure;
  }
  return kFailure;
}

}  // namespace pbtd::cli

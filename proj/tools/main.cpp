// Command-line front end: normal forms, automorphism application, orbits and
// the verification suites.

#include "mennicke/collector.hpp"
#include "mennicke/ggroup.hpp"
#include "mennicke/mendo.hpp"
#include "mennicke/pgroup.hpp"
#include "mennicke/verify.hpp"
#include "mennicke/vgroup.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <iostream>
#include <set>
#include <sstream>

namespace {

using namespace mennicke;

constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

GroupId group_from(const std::string& name) {
  auto g = parse_group_id(name);
  if (!g) throw UsageError("unknown group '" + name + "' (expected M, V, G or P)");
  return *g;
}

Word parse_or_usage(const std::string& text, GroupId group) {
  try {
    return parse_word(text, group);
  } catch (const ParseError& e) {
    throw UsageError(std::string(group_name(group)) + " word: " + e.what());
  }
}

int cmd_nf(const std::string& group, const std::string& text) {
  const GroupId g = group_from(group);
  std::cout << to_string(collect(parse_or_usage(text, g), g)) << '\n';
  return 0;
}

// Splits off a trailing named token ("Psi") from an automorphism spec.
std::pair<std::string, bool> strip_named(std::string spec, const std::string& name) {
  std::istringstream in(spec);
  std::vector<std::string> tokens;
  for (std::string t; in >> t;) tokens.push_back(t);
  bool found = false;
  if (!tokens.empty() && tokens.back() == name) {
    tokens.pop_back();
    found = true;
  }
  std::string rest;
  for (const auto& t : tokens) rest += (rest.empty() ? "" : " ") + t;
  return {rest, found};
}

GElem g_spec(const std::string& spec) {
  if (spec == "theta") return GElem::D();
  return eval_g(parse_or_usage(spec, GroupId::G));
}

int cmd_apply(const std::string& group, const std::string& aut, const std::string& to) {
  const GroupId g = group_from(group);
  switch (g) {
    case GroupId::M: {
      const MEndo e = semantic(g_spec(aut));
      std::cout << to_string(apply(e, eval_m(parse_or_usage(to, GroupId::M)))) << '\n';
      return 0;
    }
    case GroupId::V: {
      const auto [rest, with_psi] = strip_named(aut, "Psi");
      const VAutElem a{rest.empty() ? GElem::identity() : g_spec(rest), with_psi};
      const MElem m = eval_m(v_to_m_word(parse_or_usage(to, GroupId::V)));
      std::cout << to_string(vapply(act(a), VElem(m))) << '\n';
      return 0;
    }
    case GroupId::G: {
      const PElem p = eval_p(parse_or_usage(aut == "theta" ? "D" : aut, GroupId::P));
      std::cout << to_string(act(p, eval_g(parse_or_usage(to, GroupId::G)))) << '\n';
      return 0;
    }
    case GroupId::P: throw UsageError("apply: P acts by conjugation; use --group G");
  }
  return kExitUsage;
}

int cmd_orbits() {
  const std::vector<MEndo> gens = {theta(), a_endo(), b_endo(), c_endo(),
                                   inner(MElem::x()), inner(MElem::y()), inner(MElem::z())};
  std::cout << to_string(orbits(gens)) << '\n';
  return 0;
}

int cmd_list() {
  for (const auto& c : check_registry())
    std::cout << c.id << "  section " << c.section << "  " << c.description << '\n';
  return 0;
}

nlohmann::json result_json(const CheckResult& r, bool timing) {
  return {{"check_id", r.check_id},
          {"section", r.section},
          {"status", r.pass ? "pass" : "fail"},
          {"detail", r.detail},
          {"elapsed_ms", timing ? r.elapsed_ms : 0}};
}

int cmd_verify(const std::vector<int>& sections, bool all, const RunOptions& opts,
               const std::string& format, bool timing, bool verbose) {
  if (all == !sections.empty()) throw UsageError("verify: give --all or at least one --section");
  for (int s : sections)
    if (s < kFirstSection || s > kLastSection)
      throw UsageError("verify: section " + std::to_string(s) + " outside " +
                       std::to_string(kFirstSection) + ".." + std::to_string(kLastSection));
  const auto results = run_checks(sections, opts);
  std::size_t failed = 0;
  for (const auto& r : results) failed += r.pass ? 0 : 1;
  if (format == "json") {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& r : results) arr.push_back(result_json(r, timing));
    std::cout << arr.dump(2) << '\n';
  } else if (format == "jsonl") {
    for (const auto& r : results) std::cout << result_json(r, timing).dump() << '\n';
  } else {
    for (const auto& r : results) {
      std::cout << (r.pass ? "PASS " : "FAIL ") << r.check_id;
      if (timing) std::cout << " (" << r.elapsed_ms << " ms)";
      std::cout << ": " << r.report.summary().substr(0, r.report.summary().find(';')) << '\n';
      for (const auto& line : r.report.lines())
        if (verbose || !line.ok)
          std::cout << (line.ok ? "    ok   " : "    FAIL ") << line.label
                    << (line.detail.empty() ? "" : ": " + line.detail) << '\n';
      if (verbose)
        for (const auto& n : r.report.notes()) std::cout << "    note " << n << '\n';
      if (r.report.lines().empty() && !r.pass) std::cout << "    " << r.detail << '\n';
    }
    std::cout << results.size() - failed << "/" << results.size() << " checks passed\n";
  }
  return failed == 0 ? 0 : kExitFail;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact arithmetic and verification for the Mennicke group M(-1,-1,-1) and its automorphism tower"};
  app.require_subcommand(1);

  std::string group = "M", word_text, aut, to, format = "text";
  std::vector<int> sections;
  bool all = false, list = false, no_timing = false, verbose = false;
  RunOptions opts;

  auto* nf = app.add_subcommand("nf", "Print the normal form of a word");
  nf->add_option("--group", group, "M, V, G or P")->capture_default_str();
  nf->add_option("word", word_text, "Word such as \"x y^-2 z\"; empty for 1");

  auto* ap = app.add_subcommand("apply", "Apply an automorphism to an element");
  ap->add_option("--group", group, "M (G acts), V (Aut(V) acts), G (P acts)")->capture_default_str();
  ap->add_option("--aut", aut, "Normal-form word, or theta, A, Psi, E")->required();
  ap->add_option("--to", to, "Element to map")->required();

  app.add_subcommand("orbits", "Print the Aut(M)-orbits of M/M^2");

  auto* ve = app.add_subcommand("verify", "Run verification suites");
  ve->add_option("--section", sections, "Section number, repeatable");
  ve->add_flag("--all", all, "Run every section");
  ve->add_flag("--list", list, "List registered checks");
  ve->add_option("--seed", opts.seed, "Random seed")->capture_default_str();
  ve->add_option("--samples", opts.samples, "Samples per randomized property")->capture_default_str();
  ve->add_option("--format", format, "text, json or jsonl")
      ->check(CLI::IsMember({"text", "json", "jsonl"}))
      ->capture_default_str();
  ve->add_flag("--no-timing", no_timing, "Report elapsed_ms as 0 for reproducible output");
  ve->add_flag("--verbose", verbose, "Print every check line");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    if (*nf) return cmd_nf(group, word_text);
    if (*ap) return cmd_apply(group, aut, to);
    if (app.got_subcommand("orbits")) return cmd_orbits();
    if (*ve) return list ? cmd_list() : cmd_verify(sections, all, opts, format, !no_timing, verbose);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

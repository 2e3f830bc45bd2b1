// One pass/fail line per acceptance criterion. Thresholds are fixed here.
#include <sys/wait.h>

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "mennicke/checks.hpp"
#include "mennicke/collector.hpp"
#include "mennicke/f2quot.hpp"
#include "mennicke/ggroup.hpp"
#include "mennicke/mgroup.hpp"
#include "mennicke/pgroup.hpp"
#include "mennicke/vgroup.hpp"

using namespace mennicke;

namespace {

constexpr std::uint64_t kSeed = 20;
constexpr std::size_t kOraclePairs = 100000;
constexpr double kOracleSeconds = 10.0;
constexpr std::size_t kPropertySamples = 10000;
constexpr std::size_t kTauSamples = 1000;
constexpr std::size_t kThetaSamples = 1000;
constexpr double kScanSeconds = 60.0;
constexpr long kVBox = 10;
constexpr long kGBox = 6;
constexpr double kVerifySeconds = 300.0;

struct Outcome {
  bool pass = false;
  std::string detail;
};

class Timer {
 public:
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

std::string fixed(double v, int digits = 2) {
  std::ostringstream os;
  os.setf(std::ios::fixed);
  os.precision(digits);
  os << v;
  return os.str();
}

// Folds several reports into one outcome; the detail lists failing labels.
Outcome all_of(const std::vector<std::pair<std::string, Report>>& reports) {
  Outcome o{true, {}};
  std::size_t lines = 0;
  for (const auto& [name, rep] : reports) {
    lines += rep.lines().size();
    for (const auto& l : rep.lines()) {
      if (l.ok) continue;
      o.pass = false;
      if (!o.detail.empty()) o.detail += "; ";
      o.detail += name + ": " + l.label + (l.detail.empty() ? "" : " (" + l.detail + ")");
    }
  }
  if (o.pass) o.detail = std::to_string(lines) + " checks";
  return o;
}

const ReportLine* find_line(const Report& rep, const std::string& label) {
  for (const auto& l : rep.lines())
    if (l.label == label) return &l;
  return nullptr;
}

Outcome oracle_agreement() {
  Timer t;
  std::size_t mismatches = 0;
  for (std::size_t n = 0; n < kOraclePairs; ++n) {
    Word a = random_word(kSeed * 1000003 + 2 * n, GroupId::M, 64, 8);
    Word b = random_word(kSeed * 1000003 + 2 * n + 1, GroupId::M, 64, 8);
    if (from_normal_word(collect(a * b, GroupId::M)) != mul(eval_m(a), eval_m(b))) ++mismatches;
  }
  double s = t.seconds();
  return {mismatches == 0 && s < kOracleSeconds,
          std::to_string(kOraclePairs) + " pairs, " + std::to_string(mismatches) + " mismatches, " +
              fixed(s) + " s (limit " + fixed(kOracleSeconds, 0) + " s)"};
}

Outcome section18_cases() {
  Lattice3 m2 = Lattice3::full();
  Lattice3 four = Lattice3::span({IntVec3{2, 0, 0}, IntVec3{0, 2, 0}, IntVec3{0, 0, 2}});
  GElem X = GElem::X(), Y = GElem::Y(), Z = GElem::Z();
  GElem A = GElem::A(), B = GElem::B(), C = GElem::C();
  Lattice3 xb = commutator_lattice({gmul(X, B), gmul(Y, C), gmul(Z, A)});
  Lattice3 xa = commutator_lattice({gmul(X, A), gmul(Y, B), gmul(Z, C)});
  Report rep;
  rep.check("[<XB,YC,ZA>M^2] = <X^4,Y^4,Z^4>", xb == four, to_string(xb));
  rep.check("[<XA,YB,ZC>M^2] = M^2", xa == m2, to_string(xa));
  Report scan = orbit_of_M_scan();
  const ReportLine* exact = find_line(scan, "survivors are exactly {M, M^E}");
  rep.check("orbit scan outputs exactly {M, M^E}", exact && exact->ok, exact ? exact->detail : "missing");
  return all_of({{"s18", rep}});
}

Outcome chain_19_20() {
  PElem X = PElem::of(GElem::X()), E = PElem::E();
  Report direct;
  direct.check("[X,E] = A by collection",
               to_string(collect(parse_word("X^-1 E^-1 X E", GroupId::P), GroupId::P)) == "A");
  direct.check("E^2 = ABC", pmul(E, E) == PElem::of(gmul(GElem::A(), GElem::B(), GElem::C())));
  direct.check("[X,E] = A in pmul", pcomm(X, E) == PElem::of(GElem::A()));
  return all_of({{"direct", direct},
                 {"chain", section20_chain_check()},
                 {"e_action", e_action_relations_check(kSeed, 2000)},
                 {"e_not_inner", e_not_inner_check(kSeed, 2000)},
                 {"g_center", g_center_check(kGBox)}});
}

Outcome centers() {
  Report zm = center_gamma_check(kSeed, 1000, 8);
  Report m_only;
  for (const auto& l : zm.lines())
    if (l.label.rfind("Z(M)", 0) == 0 || l.label.rfind("box search", 0) == 0)
      m_only.check(l.label, l.ok, l.detail);
  return all_of({{"Z(M)", m_only},
                 {"Z(V)", v_center_check(kVBox)},
                 {"Z(G)", g_center_check(kGBox)},
                 {"Z(P)", p_center_check(kGBox)}});
}

Outcome end_to_end(const std::string& cli) {
  if (cli.empty()) return {false, "no --cli path given"};
  std::string cmd = "\"" + cli + "\" verify --all --no-timing > /dev/null 2>&1";
  Timer t;
  int status = std::system(cmd.c_str());
  double s = t.seconds();
  int code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return {code == 0 && s < kVerifySeconds,
          "exit code " + std::to_string(code) + ", " + fixed(s, 1) + " s (limit " +
              fixed(kVerifySeconds, 0) + " s)"};
}

struct Criterion {
  int id;
  std::string name;
  std::function<Outcome()> run;
};

std::vector<Criterion> criteria(const std::string& cli) {
  std::size_t n = kPropertySamples;
  return {
      {1, "oracle agreement", oracle_agreement},
      {2, "torsion theorem", [n] { return all_of({{"torsion", torsion_check(kSeed, n)}}); }},
      {3, "orbit partition", [] { return all_of({{"orbits", orbit_partition_check()}}); }},
      {4, "kernel structure", [n] { return all_of({{"kernel", kernel_structure_check(kSeed, n)}}); }},
      {5, "G presentation",
       [n] {
         return all_of({{"relations", consequence_relations_check()},
                        {"arithmetic", g_arithmetic_check(kSeed, n)}});
       }},
      {6, "V suite",
       [n] {
         return all_of({{"presentation", v_presentation_check()},
                        {"psi", psi_check(kSeed, n)},
                        {"gamma", gamma_injectivity_check(kSeed, n)}});
       }},
      {7, "tau witness",
       [] { return all_of({{"tau", inn_m_not_characteristic_witness(kSeed, kTauSamples)}}); }},
      {8, "R uniqueness",
       [] {
         Timer t;
         Outcome o = all_of({{"scan", r_uniqueness_scan()}});
         double s = t.seconds();
         o.pass = o.pass && s < kScanSeconds;
         o.detail += ", " + fixed(s) + " s (limit " + fixed(kScanSeconds, 0) + " s)";
         return o;
       }},
      {9, "quotient invariants",
       [] { return all_of({{"quotients", quotient_invariants()},
                           {"materialize", materialize_check(kSeed, 2000)}}); }},
      {10, "orbit of M", section18_cases},
      {11, "P chain and Burnside hypotheses", chain_19_20},
      {12, "Omega correspondence",
       [] { return all_of({{"omega", omega_correspondence(kSeed, kThetaSamples)}}); }},
      {13, "centers", centers},
      {14, "verify --all", [cli] { return end_to_end(cli); }},
  };
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Acceptance criteria"};
  std::vector<int> selected;
  std::string cli;
  app.add_option("--criterion", selected, "Criterion number (repeatable); all when omitted")
      ->check(CLI::Range(1, 14));
  app.add_option("--cli", cli, "Path to the mennicke executable");
  CLI11_PARSE(app, argc, argv);

  int failed = 0;
  for (const auto& c : criteria(cli)) {
    if (!selected.empty() && std::find(selected.begin(), selected.end(), c.id) == selected.end())
      continue;
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    char id[8];
    std::snprintf(id, sizeof id, "AC%02d", c.id);
    std::cout << id << ' ' << (o.pass ? "PASS" : "FAIL") << "  " << c.name << ": " << o.detail
              << std::endl;
    if (!o.pass) ++failed;
  }
  return failed == 0 ? 0 : 1;
}

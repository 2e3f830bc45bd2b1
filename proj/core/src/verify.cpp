#include "mennicke/verify.hpp"

#include "mennicke/checks.hpp"
#include "mennicke/f2quot.hpp"
#include "mennicke/ggroup.hpp"
#include "mennicke/pgroup.hpp"
#include "mennicke/vgroup.hpp"

#include <algorithm>
#include <chrono>

namespace mennicke {

namespace {

Report burnside_hypotheses() {
  Report rep;
  const Report zg = g_center_check(6);
  const Report chain = section20_chain_check();
  rep.check("Z(G) = 1", zg.passed(), zg.summary());
  bool characteristic = false;
  for (const auto& line : chain.lines())
    if (line.label == "G characteristic in P") characteristic = line.ok;
  rep.check("G characteristic in P", characteristic);
  rep.note("then Aut(G) is complete by Burnside's criterion");
  return rep;
}

std::vector<CheckSpec> build_registry() {
  using O = const RunOptions&;
  std::vector<CheckSpec> r = {
      {"s02.m2_structure", 2, "[M,M] = M^2, M/M^2 of order 8",
       [](O o) { return m2_structure_check(o.seed, o.samples); }},
      {"s03.normal_form", 3, "closed-form multiplication against the collector; f1, f2, f3",
       [](O o) { return normal_form_check(o.seed, o.samples); }},
      {"s04.center_gamma", 4, "Z(M) = 1 and the lower central series",
       [](O o) { return center_gamma_check(o.seed, o.samples, 6); }},
      {"s05.torsion", 5, "torsion lies in xyzM^2 and has order 2",
       [](O o) { return torsion_check(o.seed, o.samples); }},
      {"s06.conjugation", 6, "conjugation formulas", [](O o) { return conjugation_formulas_check(o.seed, o.samples); }},
      {"s07.lambda", 7, "induced action on M/M^2", [](O o) { return lambda_check(o.seed, o.samples); }},
      {"s08.orbits", 8, "Aut(M)-orbits of M/M^2", [](O) { return orbit_partition_check(); }},
      {"s09.kernel", 9, "kernel of Lambda modulo Inn(M)",
       [](O o) { return kernel_structure_check(o.seed, o.samples); }},
      {"s10.presentation", 10, "presentation and normal form of G",
       [](O o) { return g_arithmetic_check(o.seed, o.samples); }},
      {"s11.v_center", 11, "Z(V) = 1", [](O) { return v_center_check(10); }},
      {"s11.v_index2", 11, "index-2 subgroups of M", [](O) { return index2_subgroups_check(); }},
      {"s11.v_presentation", 11, "presentation of V", [](O) { return v_presentation_check(); }},
      {"s12.gamma", 12, "restriction to V is injective",
       [](O o) { return gamma_injectivity_check(o.seed, o.samples); }},
      {"s13.psi", 13, "Psi, Pi and the pair arithmetic of Aut(V)",
       [](O o) { return psi_check(o.seed, std::min<std::size_t>(o.samples, 2000)); }},
      {"s14.tau_witness", 14, "Inn(M) is not characteristic in G",
       [](O o) { return inn_m_not_characteristic_witness(o.seed, std::min<std::size_t>(o.samples, 1000)); }},
      {"s15.centralizer", 15, "trivial centralizer of Aut(M) in Aut(V)",
       [](O o) { return centralizer_triviality_check(o.seed, std::min<std::size_t>(o.samples, 2000)); }},
      {"s15.g_center", 15, "Z(G) = 1", [](O) { return g_center_check(6); }},
      {"s16.omega", 16, "Aut(V) and Aut(G) through h0",
       [](O o) { return omega_correspondence(o.seed, std::min<std::size_t>(o.samples, 1000)); }},
      {"s17.materialize", 17, "finite quotient tables",
       [](O o) { return materialize_check(o.seed, std::min<std::size_t>(o.samples, 2000)); }},
      {"s17.quotient_invariants", 17, "orders and structure of the quotients of G",
       [](O) { return quotient_invariants(); }},
      {"s17.r_uniqueness", 17, "R is the only normal abelian subgroup of its type",
       [](O) { return r_uniqueness_scan(); }},
      {"s18.cases", 18, "commutator subgroups of the candidate subgroups",
       [](O) { return section18_case_checks(); }},
      {"s18.e_action", 18, "E is an automorphism of G with E^2 = ABC",
       [](O o) { return e_action_relations_check(o.seed, std::min<std::size_t>(o.samples, 2000)); }},
      {"s18.orbit_of_m", 18, "Aut(G)-orbit of M", [](O) { return orbit_of_M_scan(); }},
      {"s19.aut_g", 19, "tau against Inn(G)<E>", [](O) { return aut_g_closure_check(); }},
      {"s19.e_not_inner", 19, "E is not inner",
       [](O o) { return e_not_inner_check(o.seed, std::min<std::size_t>(o.samples, 2000)); }},
      {"s20.burnside", 20, "Burnside hypotheses", [](O) { return burnside_hypotheses(); }},
      {"s20.chain", 20, "[P,P], index-2 subgroups, G characteristic in P",
       [](O) { return section20_chain_check(); }},
      {"s20.p_center", 20, "Z(P) = 1", [](O) { return p_center_check(6); }},
  };
  std::sort(r.begin(), r.end(), [](const CheckSpec& a, const CheckSpec& b) { return a.id < b.id; });
  return r;
}

}  // namespace

const std::vector<CheckSpec>& check_registry() {
  static const std::vector<CheckSpec> registry = build_registry();
  return registry;
}

std::vector<CheckResult> run_checks(const std::vector<int>& sections, const RunOptions& options) {
  std::vector<CheckResult> out;
  for (const auto& spec : check_registry()) {
    if (!sections.empty() && std::find(sections.begin(), sections.end(), spec.section) == sections.end())
      continue;
    const auto start = std::chrono::steady_clock::now();
    CheckResult res;
    res.check_id = spec.id;
    res.section = spec.section;
    try {
      res.report = spec.run(options);
      res.pass = res.report.passed();
      res.detail = res.report.summary();
    } catch (const std::exception& e) {
      res.pass = false;
      res.detail = std::string("exception: ") + e.what();
    }
    res.elapsed_ms = static_cast<long>(std::chrono::duration_cast<std::chrono::milliseconds>(
                                           std::chrono::steady_clock::now() - start)
                                           .count());
    out.push_back(std::move(res));
  }
  return out;
}

}  // namespace mennicke

#pragma once

#include "mennicke/report.hpp"

#include <cstddef>
#include <cstdint>

namespace mennicke {

// Property suites for M, its endomorphisms and G. Sample counts apply to
// each randomized property separately.
Report m2_structure_check(std::uint64_t seed, std::size_t samples);
// Closed-form multiplication against the collector on random word pairs of
// length up to 64 with exponents up to 8, plus group axioms and f1, f2, f3.
Report normal_form_check(std::uint64_t seed, std::size_t samples);
Report center_gamma_check(std::uint64_t seed, std::size_t samples, long box);
Report torsion_check(std::uint64_t seed, std::size_t samples);
Report conjugation_formulas_check(std::uint64_t seed, std::size_t samples);
Report lambda_check(std::uint64_t seed, std::size_t samples);
Report orbit_partition_check();
Report kernel_structure_check(std::uint64_t seed, std::size_t samples);
Report g_arithmetic_check(std::uint64_t seed, std::size_t samples);

}  // namespace mennicke

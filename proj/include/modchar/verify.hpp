#pragma once

#include <cstdint>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "modchar/reps.hpp"

namespace modchar::verify {

enum class Profile { quick, full };

struct SuiteResult {
  int criterion = 0;
  std::string name;
  bool passed = true;
  std::size_t checks = 0;
  std::vector<std::string> failures;  // first few only
  double seconds = 0;
};

inline constexpr int kCriteria = 10;

std::string criterion_name(int criterion);
SuiteResult run_criterion(int criterion, Profile profile);
/// Runs 1..kCriteria in order, reporting each result as it finishes.
std::vector<SuiteResult> run_all(Profile profile, const std::function<void(const SuiteResult&)>& on_result = {});

// Independent oracles.

/// C(m, k) mod p from exact factorials.
Residue binomial_oracle(std::uint64_t p, std::uint64_t m, std::uint64_t k);
/// Smallest m with s_p(m) = s, by exhaustion over the last digit.
std::uint64_t min_m_oracle(std::uint64_t p, std::uint64_t s);
/// -Σ_c (Σ_i c_i images_i)^k over c in F_p^n: χ_{y^k} of ρ_{F_p^n} pulled back along the
/// linear forms `images`, expanded term by term.
MultiPoly pulled_back_power_sum_oracle(std::uint64_t p, const std::vector<MultiPoly>& images, std::uint64_t k);

/// A random valid representation of F_p^rank with dim <= max_dim (max_dim >= 1), built by
/// recursively combining the library constructions, some under a random change of basis.
Rep random_rep(std::mt19937_64& rng, const Field& field, std::size_t max_dim, std::size_t rank);

}  // namespace modchar::verify

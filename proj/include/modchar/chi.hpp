#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "modchar/mono.hpp"

namespace modchar {

/// χ_α evaluated on the basic representation of the rank-n group F_q^n.
struct ChiQuery {
  CohContext ctx;
  Monomial alpha;
  std::size_t n = 1;
};

/// χ_α(ρ_{F_q^n}): the iterated coproduct Δ^{n-1}(α) with every term that has a
/// degree-0 factor removed, times (-1)^{n-1}. Zero when deg α = 0.
TensorClass chi_basic(const ChiQuery& query);

/// The coefficient of the term x^{A_1}y^{B_1} × ... × x^{A_n}y^{B_n} in χ_α(ρ_{F_q^n}),
/// computed directly from multinomials and the shuffle sign; nullopt when the factors
/// are not an admissible splitting of α (wrong sums, a non-invariant or unit factor).
std::optional<Residue> term_coefficient(const ChiQuery& query, const std::vector<Monomial>& factors);

/// One admissible splitting with nonzero coefficient, if any exists. The search works on
/// digit units: each base-p digit of b_k (and each x_k) is a pool of interchangeable
/// units whose weight class is p^{(k + position) mod r}, so only per-class counts
/// matter. Memoized on (remaining counts, factors left).
std::optional<std::vector<Monomial>> find_nonzero_term(const ChiQuery& query);

bool is_chi_nonzero(const ChiQuery& query);

/// s_p(m).
std::uint64_t digit_sum(std::uint64_t p, std::uint64_t m);

/// Smallest m with s_p(m) = s: (d + 1) p^c - 1 where s = c(p - 1) + d, 0 <= d < p - 1.
std::uint64_t min_m_for_digit_sum(std::uint64_t p, std::uint64_t s);

enum class R1Kind { y, xy };
enum class R1Status { nonzero_nonnilpotent, nonzero, zero, undefined };

std::string to_string(R1Status s);

/// Digit-sum classification of χ_{y^m}(ρ_{F_p^n}) and χ_{xy^m}(ρ_{F_p^n}) for r = 1.
/// `undefined` when y^m (resp. x y^m) is not an invariant monomial.
/// Throws std::invalid_argument for kind xy with p = 2.
R1Status r1_predicate(std::uint64_t p, R1Kind kind, std::uint64_t m, std::size_t n);

enum class WitnessKind { y_power, mixed };

/// (y_0⋯y_{r-1})^{p^n-1}, or x_0⋯x_{r-1}(y_0⋯y_{r-1})^{p^n-p^{n-1}-1} (p odd only).
Monomial witness_alpha(std::uint64_t p, unsigned r, std::size_t n, WitnessKind kind);

/// The explicit splitting that shows the witness class is nonzero on ρ_{F_q^n}:
/// y-power: B_i = p^{i-1}(p-1)·(1,…,1).
/// mixed: A_1 = (1,…,1), B_1 = (p-2)·(1,…,1); B_i = p^{i-2}((p-2)p+1)·(1,…,1) for i > 1.
std::vector<Monomial> witness_splitting(std::uint64_t p, unsigned r, std::size_t n, WitnessKind kind);

/// Closed-form degree of the witness. For odd p this is 2r(p^n-1) for the y-power kind and
/// r(2p^n-2p^{n-1}-1) for the mixed kind; for p = 2 it is r(2^n-1).
std::uint64_t witness_degree(std::uint64_t p, unsigned r, std::size_t n, WitnessKind kind);

enum class ClassStatus { nonzero, non_nilpotent };

std::string to_string(ClassStatus s);

struct DegreeTableRow {
  std::uint64_t N;
  Monomial alpha;
  std::uint64_t degree;
  ClassStatus status;
};

/// Rows (N, α, degree, status) for every 2 <= N <= p^n and each witness class; for r = 1
/// and a digit bound, also every χ_{y^d}, χ_{xy^d} with d <= bound that the digit-sum
/// criteria declare nonzero. Each α is confirmed nonzero on ρ_{F_q^n} by the term search.
std::vector<DegreeTableRow> universal_table(std::uint64_t p, unsigned r, std::size_t n,
                                            std::optional<std::uint64_t> digit_bound = std::nullopt);

struct TupleCertificate {
  std::vector<std::uint64_t> parts;
  std::uint64_t homology_degree;
};

/// Non-decreasing tuples (B_1, …, B_n) of positive multiples of p - 1 whose base-p sum is
/// carry-free and at most max_total, ordered by total then lexicographically. The
/// homology degree is 2B (B for p = 2).
std::vector<TupleCertificate> indecomposable_tuples(std::uint64_t p, std::size_t n, std::uint64_t max_total);

/// χ_α(ρ_{a+b}) == -Σ_{Δ(α)} χ_{α'}(ρ_a) × χ_{α''}(ρ_b), classes of degree-0 factors being zero.
bool wedge_split_check(const CohContext& ctx, const Monomial& alpha, std::size_t a, std::size_t b);

}  // namespace modchar

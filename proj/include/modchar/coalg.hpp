#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "modchar/mono.hpp"

namespace modchar {

/// Base-p digits of m, least significant first.
std::vector<std::uint64_t> digits(std::uint64_t p, std::uint64_t m);

/// C(m, k) mod p by Lucas' theorem; 0 when k > m.
Residue lucas_binomial(std::uint64_t p, std::uint64_t m, std::uint64_t k);

/// A family of naturals to be added in base p.
struct CarryProfile {
  std::uint64_t p;
  std::vector<std::uint64_t> parts;
};

/// True iff adding the parts in base p produces no carry in any digit position.
bool no_carry(const CarryProfile& cp);

/// (sum parts; parts) mod p, as a product of binomials each reduced by Lucas.
Residue multinomial_mod_p(std::uint64_t p, std::span<const std::uint64_t> parts);

/// The sign of the graded shuffle that distributes the exterior generators
/// x_0 ... x_{r-1} (ascending) over the factors: (-1)^{#{i < j : owner(i) > owner(j)}}
/// where owner(k) is the factor receiving x_k. Always +1 when p = 2.
Residue shuffle_sign(const CohContext& ctx, std::span<const Monomial> factors);

/// Δ(x^A y^B) on an invariant monomial: all splittings A = A' + A'', B = B' + B'' with
/// x^{A'}y^{B'} invariant, coefficient shuffle sign times prod_k C(b_k, b'_k) mod p.
/// Splittings with vanishing binomials are never generated. Throws NotInvariant.
TensorClass coproduct(const Monomial& m, const CohContext& ctx);

/// Applies Δ to the factor at `position` of every term, raising the arity by one.
TensorClass apply_coproduct_at(const TensorClass& t, std::size_t position);

/// Δ^{n-1}(m), left-nested: (Δ ⊗ id^{n-2}) ∘ Δ^{n-2}. n = 1 gives m itself.
TensorClass iterated_coproduct(const Monomial& m, const CohContext& ctx, std::size_t n);

/// Coefficient of the degree-0 monomial.
Residue counit(const CohClass& c);

/// Gaussian binomial (a choose b)_q as the Grassmannian point count
/// prod_{i=1}^{b} (q^{a-i+1} - 1) / (q^i - 1), exactly.
boost::multiprecision::cpp_int gaussian_binomial(std::uint64_t q, unsigned a, unsigned b);

}  // namespace modchar

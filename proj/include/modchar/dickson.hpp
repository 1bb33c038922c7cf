#pragma once

#include <cstdint>
#include <vector>

#include "modchar/mono.hpp"
#include "modchar/poly.hpp"

namespace modchar {

/// All p^n linear forms c_1 z_1 + ... + c_n z_n, zero form first, coefficient
/// vectors in base-p counting order.
std::vector<MultiPoly> all_linear_forms(std::uint64_t p, unsigned n);

/// Σ_z z^k over the dual vectors of F_p^n, by repeated squaring of each form. k >= 1.
MultiPoly power_sum(std::uint64_t p, unsigned n, std::uint64_t k);

/// power_sum for every 1 <= k <= kmax at once (entry k - 1), multiplying each form
/// into a running power instead of squaring.
std::vector<MultiPoly> power_sums(std::uint64_t p, unsigned n, unsigned kmax);

/// χ_{y^k}(ρ_{F_p^n}) = -Σ_z z^k.
MultiPoly chi_via_power_sum(std::uint64_t p, unsigned n, std::uint64_t k);

/// A degree-truncated formal series: homogeneous components 0..dmax.
struct TotalClass {
  std::uint64_t p;
  unsigned nvars;
  unsigned dmax;
  std::vector<MultiPoly> components;

  static TotalClass zero(std::uint64_t p, unsigned nvars, unsigned dmax);
  const MultiPoly& operator[](unsigned d) const { return components.at(d); }
  friend bool operator==(const TotalClass&, const TotalClass&) = default;
};

/// Π_z (1 + z) over F_p^n (the zero form contributes 1), so component k is the Dickson
/// invariant D_k. Truncated at p^n - 1, its top degree.
TotalClass dickson_total(std::uint64_t p, unsigned n);

/// Σ_{k=1}^{dmax} (-1)^k χ_{y^k}(ρ_{F_p^n}).
TotalClass total_A(std::uint64_t p, unsigned n, unsigned dmax);

/// Product truncated to min(x.dmax, y.dmax).
TotalClass multiply(const TotalClass& x, const TotalClass& y);

/// Re-truncates (or zero-extends) to dmax.
TotalClass with_dmax(const TotalClass& x, unsigned dmax);

/// Formal inverse up to dmax. Throws std::invalid_argument unless component 0 is 1.
TotalClass series_inverse(const TotalClass& d, unsigned dmax);

/// -D_{p^n-1} · D^{-1}, truncated at dmax.
TotalClass a_from_inverse(std::uint64_t p, unsigned n, unsigned dmax);

/// D · A truncated at dmax equals the single component -D_{p^n-1}. Requires dmax >= p^n - 1.
bool newton_check(std::uint64_t p, unsigned n, unsigned dmax);

/// k = 2p^n - p^i - 1.
std::uint64_t product_identity_degree(std::uint64_t p, unsigned n, unsigned i);

/// The sign s with χ_{y^k} = s · D_{p^n-1} D_{p^n-p^i}, k = 2p^n - p^i - 1 (+1 when p = 2).
/// Throws std::logic_error if neither sign matches.
int product_identity_check(std::uint64_t p, unsigned n, unsigned i);

/// Every k in [1, kmax] with χ_{y^k}(ρ_{F_p^n}) != 0.
std::vector<std::uint64_t> nonzero_power_sum_degrees(std::uint64_t p, unsigned n, unsigned kmax);

/// y^{b_1} ⊗ ... ⊗ y^{b_n} ↦ z_1^{b_1} ⋯ z_n^{b_n}. Requires r = 1 and no exterior factors.
MultiPoly tensor_to_poly(const TensorClass& t);

struct IndependenceWitness {
  std::vector<MultiPoly> generators;
  std::size_t products;
  std::size_t rank;
  bool independent() const { return rank == products; }
};

/// Generators D_{p^n-1} and D_{p^n-1} D_{p^n-p^i} (1 <= i <= n-1); the rank of the
/// coefficient matrix of all their products of total degree <= max_degree.
IndependenceWitness algebraic_independence_witness(std::uint64_t p, unsigned n, unsigned max_degree = 3);

}  // namespace modchar

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "modchar/ff.hpp"
#include "modchar/poly.hpp"

namespace modchar {

/// A representation of the elementary abelian group F_p^s, s = generators.size(),
/// on F_q^dim: generator j is the image of the j-th standard basis vector.
struct Rep {
  Field field;
  std::size_t dim = 0;
  std::vector<Matrix> generators;

  std::size_t rank() const { return generators.size(); }
  friend bool operator==(const Rep&, const Rep&) = default;
};

/// A representation with a chosen nonzero fixed vector.
struct PointedRep {
  Rep rep;
  Vector basepoint;

  friend bool operator==(const PointedRep&, const PointedRep&) = default;
};

struct Violation {
  std::string kind;  // shape, singular, order, commute, basepoint
  std::vector<std::size_t> generators;
  std::string message;
};

std::vector<Violation> validate(const Rep& rep);
std::vector<Violation> validate(const PointedRep& rep);
/// Throws ValidationError carrying the first violation.
void require_valid(const Rep& rep);
void require_valid(const PointedRep& rep);

/// The common fixed vectors J_0.
Subspace fixed_space(const Rep& rep);
bool is_invariant_subspace(const Rep& rep, const Subspace& s);

/// The action on S in the echelon basis of S. Throws NotInvariant.
Rep restrict(const Rep& rep, const Subspace& s);

struct Quotient {
  Rep rep;
  /// (dim - dim S) x dim matrix of the projection onto the coordinates outside the
  /// pivot columns of S.
  Matrix projection;
};

/// The action on F_q^dim / S, with coset basis given by the unit vectors at the
/// non-pivot columns of S. Throws NotInvariant.
Quotient quotient(const Rep& rep, const Subspace& s);

/// J_0 ⊊ J_1 ⊊ ... ⊊ J_top = everything, by iterating "preimage of the fixed space of
/// the quotient". A zero-dimensional rep yields the single (zero) stage.
std::vector<Subspace> j_filtration(const Rep& rep);

/// The same chain computed as annihilators of the row spaces spanned by all
/// (i+1)-fold products of the (g_j - I).
std::vector<Subspace> j_filtration_augmentation(const Rep& rep);

/// Stage i of a filtration, saturating at the full space.
const Subspace& stage(const std::vector<Subspace>& filtration, std::size_t i);

Rep trivial_rep(const Field& field, std::size_t dim, std::size_t rank);

/// ρ_{F_q^n}: F_q ⊕ (F_q^n)^*, generators I + t^l E_{0,j+1} ordered j-major, then l;
/// basepoint e_0.
PointedRep basic_rep(std::uint64_t p, unsigned r, std::size_t n);
PointedRep basic_rep(const Field& field, std::size_t n);

/// ξ_{F_q} = Sym^{p-1}(F_q^2) on e_1^{p-1-j} e_2^j; generator l acts by e_2 ↦ e_2 + t^l e_1.
Rep sym_power_rep(std::uint64_t p, unsigned r);
Rep sym_power_rep(const Field& field);

/// The n-fold external tensor power of ξ_{F_q}; dimension p^n.
Rep big_rep(std::uint64_t p, unsigned r, std::size_t n);

/// External tensor product: generators g ⊗ I followed by I ⊗ h.
Rep tensor_rep(const Rep& a, const Rep& b);
/// External direct sum: generators g ⊕ I followed by I ⊕ h.
Rep direct_sum(const Rep& a, const Rep& b);
/// Same group acting on both factors: g_j ⊕ h_j.
Rep diagonal_sum(const Rep& a, const Rep& b);
/// Same group acting on both factors: g_j ⊗ h_j.
Rep diagonal_tensor(const Rep& a, const Rep& b);

/// External direct sum modulo the line spanned by v_0 - w_0; basepoint the image of v_0.
PointedRep wedge_sum(const PointedRep& a, const PointedRep& b);

/// g ↦ (g^{-1})^T.
Rep dual_rep(const Rep& rep);

/// Translation action of F_p^n on functions F_p^n → F_p; the basis vector of x has index
/// Σ x_i p^i. r = 1 only.
Rep regular_rep(std::uint64_t p, std::size_t n);

/// Precompose with the homomorphism F_p^{s'} → F_p^s whose k-th column is the image of
/// the k-th new generator: new generator k = Π_j g_j^{phi(j, k)}. phi has s rows.
Rep pullback(const Rep& rep, const std::vector<std::vector<std::uint64_t>>& phi);

/// T g T^{-1} for every generator.
Rep conjugate(const Rep& rep, const Matrix& t);

enum class Verdict { zero, reduced };

struct ChiReduction {
  Verdict verdict;
  std::vector<std::size_t> j_dims;
  std::size_t dim_j0 = 0;
  /// m = s - dim B.
  std::size_t quotient_rank = 0;
  /// m x s matrix over F_p of π: F_p^s → F_p^s / B in reduced echelon form.
  std::optional<Matrix> projection;
  /// ρ_{F_p^m} (r = 1 only).
  std::optional<PointedRep> basic_model;
  /// Conjugates the J_1 action of the section generators onto basic_model (r = 1 only).
  std::optional<Matrix> conjugator;
};

/// dim J_0 >= 2 gives zero. Otherwise B is the subgroup acting trivially on J_1 and
/// χ_α(rep) is pulled back along π from the basic representation of F_p^s / B.
ChiReduction classify(const Rep& rep);

/// For a faithful rep with dim J_0 = 1, J_1 everything and rank = r (dim - 1): T with
/// T g_k T^{-1} equal to the k-th generator of basic_rep. Throws std::invalid_argument
/// naming the failed precondition.
Matrix iso_to_basic(const Rep& rep);

/// χ_{y^k}(rep) ∈ F_p[z_1..z_s], r = 1 only: zero or the pullback along π of
/// chi_via_power_sum(p, m, k).
MultiPoly chi_of_rep(const Rep& rep, std::uint64_t k);

/// J_i(a ⊗ b) == Σ_{u+v=i} J_u(a) ⊗ J_v(b).
bool j_tensor_check(const Rep& a, const Rep& b, std::size_t i);

}  // namespace modchar

#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "modchar/modp.hpp"

namespace modchar {

using modp::Residue;

/// The coefficient context of H*(F_q): characteristic p and q = p^r.
struct CohContext {
  std::uint64_t p;
  unsigned r;

  /// Validates p prime and 1 <= r <= 8.
  static CohContext make(std::uint64_t p, unsigned r);
  std::uint64_t q() const;
  friend bool operator==(const CohContext&, const CohContext&) = default;
};

/// x^A y^B = prod_k x_k^{a_k} y_k^{b_k} in H*(F_{p^r}); a_k in {0, 1}.
struct Monomial {
  std::vector<std::uint8_t> a;
  std::vector<std::uint64_t> b;

  static Monomial unit(unsigned r) { return {std::vector<std::uint8_t>(r, 0), std::vector<std::uint64_t>(r, 0)}; }
  /// y_0^e (r = 1 shorthand y^e).
  static Monomial y_power(unsigned r, std::uint64_t e);

  bool is_unit() const;
  /// sum(a) + 2 sum(b): the degree for odd p, and twice it for p = 2 (where a = 0),
  /// so it orders monomials by degree in every characteristic.
  std::uint64_t sort_key() const;

  friend bool operator==(const Monomial&, const Monomial&) = default;
  /// Canonical order: degree first, then lexicographic on (A, B).
  friend std::strong_ordering operator<=>(const Monomial& x, const Monomial& y);
};

/// Throws std::invalid_argument if m does not belong to H*(F_{p^r}).
void validate(const Monomial& m, const CohContext& ctx);

std::uint64_t degree(const Monomial& m, std::uint64_t p);
std::uint64_t weight(const Monomial& m, std::uint64_t p);
/// (q - 1) divides the weight: m spans part of the image of H*(GL_2 F_q).
bool is_invariant(const Monomial& m, const CohContext& ctx);
void require_invariant(const Monomial& m, const CohContext& ctx);

/// Invariant basis monomials of degree d, in canonical order.
std::vector<Monomial> enumerate_invariant_basis(const CohContext& ctx, std::uint64_t d);

/// Grammar: whitespace- or '*'-separated factors `x<k>`, `y<k>` or `y<k>^<e>`; `1` for the
/// unit. For r = 1 the index may be omitted (`x y^4`).
Monomial parse_monomial(std::string_view text, const CohContext& ctx);
/// ASCII rendering accepted by parse_monomial.
std::string format(const Monomial& m, const CohContext& ctx);
/// Unicode rendering with sub/superscripts, e.g. x₀y₀²; "1" for the unit.
std::string pretty(const Monomial& m, const CohContext& ctx);

/// Sparse F_p-linear combination of monomials.
struct CohClass {
  CohContext ctx;
  std::map<Monomial, Residue> terms;

  static CohClass of(const CohContext& ctx, const Monomial& m, Residue c = 1);
  void add_term(const Monomial& m, Residue c);
  bool is_zero() const { return terms.empty(); }

  friend bool operator==(const CohClass&, const CohClass&) = default;
};

CohClass operator+(const CohClass& x, const CohClass& y);
CohClass operator-(const CohClass& x);
CohClass scale(Residue c, const CohClass& x);

/// Sparse F_p-linear combination of n-fold tensors (or cross products) of monomials.
struct TensorClass {
  using Tuple = std::vector<Monomial>;

  CohContext ctx;
  std::size_t arity = 0;
  std::map<Tuple, Residue> terms;

  static TensorClass zero(const CohContext& ctx, std::size_t arity) { return {ctx, arity, {}}; }
  static TensorClass of(const CohContext& ctx, Tuple tuple, Residue c = 1);
  void add_term(const Tuple& tuple, Residue c);
  bool is_zero() const { return terms.empty(); }
  Residue coefficient(const Tuple& tuple) const;

  friend bool operator==(const TensorClass&, const TensorClass&) = default;
};

TensorClass operator+(const TensorClass& x, const TensorClass& y);
TensorClass operator-(const TensorClass& x, const TensorClass& y);
TensorClass operator-(const TensorClass& x);
TensorClass scale(Residue c, const TensorClass& x);
/// x ⊗ y flattened to arity x.arity + y.arity by concatenating tuples.
TensorClass tensor(const TensorClass& x, const TensorClass& y);

/// Terms joined by " + ", factors by "⊗", coefficients other than 1 prefixed as "c·".
std::string pretty(const TensorClass& t);
/// ASCII: factors joined by " (x) ".
std::string format(const TensorClass& t);

}  // namespace modchar

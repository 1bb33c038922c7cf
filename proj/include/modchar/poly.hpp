#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "modchar/modp.hpp"

namespace modchar {

using modp::Residue;

inline constexpr unsigned kMaxPolyVars = 8;

/// Exponent vector of a monomial z_1^{e_1} ... z_n^{e_n}; unused slots stay zero.
using Exponents = std::array<std::uint16_t, kMaxPolyVars>;

unsigned total_degree(const Exponents& e);

/// Graded order: total degree ascending, then lexicographically descending, so that
/// z1^2 z2 precedes z1 z2^2.
struct GradedLex {
  bool operator()(const Exponents& x, const Exponents& y) const;
};

/// Sparse polynomial over F_p in at most kMaxPolyVars variables.
class MultiPoly {
 public:
  using Terms = std::map<Exponents, Residue, GradedLex>;

  MultiPoly(std::uint64_t p, unsigned nvars);

  static MultiPoly constant(std::uint64_t p, unsigned nvars, Residue c);
  static MultiPoly variable(std::uint64_t p, unsigned nvars, unsigned i);
  /// c_1 z_1 + ... + c_n z_n.
  static MultiPoly linear_form(std::uint64_t p, const std::vector<Residue>& coeffs);

  std::uint64_t p() const { return p_; }
  unsigned nvars() const { return nvars_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  void add_term(const Exponents& e, Residue c);
  Residue coefficient(const Exponents& e) const;
  /// Sum of the terms of total degree d.
  MultiPoly component(unsigned d) const;
  bool is_homogeneous() const;
  /// Highest total degree present; 0 for the zero polynomial.
  unsigned degree() const;

  friend bool operator==(const MultiPoly&, const MultiPoly&) = default;

 private:
  std::uint64_t p_;
  unsigned nvars_;
  Terms terms_;
};

MultiPoly operator+(const MultiPoly& x, const MultiPoly& y);
MultiPoly operator-(const MultiPoly& x, const MultiPoly& y);
MultiPoly operator-(const MultiPoly& x);
MultiPoly operator*(const MultiPoly& x, const MultiPoly& y);
MultiPoly scale(Residue c, const MultiPoly& x);
MultiPoly pow(const MultiPoly& x, std::uint64_t e);
/// Product with every term of total degree above max_degree dropped.
MultiPoly multiply_truncated(const MultiPoly& x, const MultiPoly& y, unsigned max_degree);

/// Replaces z_j by images[j]; all images share one variable count.
MultiPoly substitute(const MultiPoly& f, const std::vector<MultiPoly>& images);

/// "z1^2 z2 + 2 z1 z2^2"; a single variable prints as z; "0" for the zero polynomial.
std::string format(const MultiPoly& f);

}  // namespace modchar

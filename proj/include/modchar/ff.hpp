#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace modchar {

inline constexpr unsigned kMaxExtensionDegree = 8;

bool is_prime(std::uint64_t n);

/// Lexicographically smallest monic irreducible polynomial of degree r over F_p,
/// compared on the coefficient tuple with the constant term most significant.
/// Coefficients are returned constant term first (r + 1 entries). For r = 1 the
/// result is the polynomial t.
std::vector<std::uint64_t> find_irreducible(std::uint64_t p, unsigned r);

/// Trial division against every monic polynomial of degree <= deg/2.
bool is_irreducible(std::uint64_t p, std::span<const std::uint64_t> monic);

/// An element of F_{p^r} in the power basis 1, t, ..., t^{r-1}. Coordinates past
/// the field's extension degree are always zero.
struct FF {
  std::array<std::uint64_t, kMaxExtensionDegree> coeffs{};

  friend bool operator==(const FF&, const FF&) = default;
  friend auto operator<=>(const FF&, const FF&) = default;
};

using Vector = std::vector<FF>;

/// F_{p^r} presented as F_p[t]/(modulus). Cheap to copy.
class Field {
 public:
  /// Uses the deterministic modulus from find_irreducible.
  Field(std::uint64_t p, unsigned r);
  Field(std::uint64_t p, unsigned r, std::span<const std::uint64_t> modulus);

  static Field prime(std::uint64_t p) { return Field(p, 1); }

  std::uint64_t p() const { return p_; }
  unsigned r() const { return r_; }
  /// p^r; throws std::overflow_error if it does not fit in 64 bits.
  std::uint64_t q() const;
  std::vector<std::uint64_t> modulus() const;

  FF zero() const { return {}; }
  FF one() const;
  FF from_int(std::int64_t v) const;
  FF from_coeffs(std::span<const std::uint64_t> coeffs) const;
  /// t^l, the l-th element of the power basis reduced into the field.
  FF basis_element(unsigned l) const;
  /// Elements enumerated by reading coefficients as base-p digits.
  std::uint64_t index(const FF& a) const;
  FF element(std::uint64_t index) const;

  bool is_zero(const FF& a) const { return a == FF{}; }
  bool is_one(const FF& a) const { return a == one(); }
  FF add(const FF& a, const FF& b) const;
  FF sub(const FF& a, const FF& b) const;
  FF neg(const FF& a) const;
  FF mul(const FF& a, const FF& b) const;
  FF inv(const FF& a) const;
  FF div(const FF& a, const FF& b) const;
  FF pow(FF a, std::uint64_t e) const;
  FF scale(std::uint64_t c, const FF& a) const;

  /// r = 1: the residue. Otherwise a polynomial in t, e.g. "t^2+2t+1".
  std::string format(const FF& a) const;

  friend bool operator==(const Field&, const Field&) = default;

 private:
  std::uint64_t p_;
  unsigned r_;
  std::array<std::uint64_t, kMaxExtensionDegree + 1> modulus_{};
};

void require_same_field(const Field& a, const Field& b);

class Matrix {
 public:
  Matrix(Field field, std::size_t rows, std::size_t cols);

  static Matrix identity(const Field& field, std::size_t n);
  static Matrix from_rows(const Field& field, std::size_t cols, const std::vector<Vector>& rows);
  static Matrix from_ints(const Field& field, const std::vector<std::vector<std::int64_t>>& rows);

  const Field& field() const { return field_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  FF& operator()(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }
  const FF& operator()(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }

  Vector row(std::size_t i) const;
  Vector col(std::size_t j) const;
  Vector apply(const Vector& v) const;
  Matrix transpose() const;
  bool is_identity() const;
  bool is_zero() const;

  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend Matrix operator+(const Matrix& a, const Matrix& b);
  friend Matrix operator-(const Matrix& a, const Matrix& b);
  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  Field field_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<FF> entries_;
};

Matrix pow(const Matrix& m, std::uint64_t e);
Matrix kron(const Matrix& a, const Matrix& b);
Matrix block_diag(const Matrix& a, const Matrix& b);
/// Rows of `top` followed by rows of `bottom`.
Matrix vstack(const Matrix& top, const Matrix& bottom);

std::size_t rank(const Matrix& m);
std::optional<Matrix> inverse(const Matrix& m);
/// One solution of m x = b, or nothing.
std::optional<Vector> solve(const Matrix& m, const Vector& b);

/// Reduced row-echelon form in place; returns the pivot columns. Zero rows are dropped.
std::vector<std::size_t> rref(const Field& field, std::size_t cols, std::vector<Vector>& rows);

/// A subspace of F_q^n stored by its reduced row-echelon basis, so equality is structural.
class Subspace {
 public:
  static Subspace zero(const Field& field, std::size_t n);
  static Subspace full(const Field& field, std::size_t n);
  static Subspace span(const Field& field, std::size_t n, std::vector<Vector> vectors);

  const Field& field() const { return field_; }
  std::size_t ambient_dim() const { return ambient_; }
  std::size_t dim() const { return basis_.size(); }
  const std::vector<Vector>& basis() const { return basis_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }

  bool contains(const Vector& v) const;
  /// v minus its projection along the basis; zero exactly at the pivot columns.
  Vector reduce(const Vector& v) const;
  /// Coordinates of v in the echelon basis. Requires contains(v).
  Vector coordinates(const Vector& v) const;
  bool is_canonical() const;
  bool is_full() const { return dim() == ambient_; }

  friend bool operator==(const Subspace&, const Subspace&) = default;

 private:
  Subspace(Field field, std::size_t n) : field_(std::move(field)), ambient_(n) {}

  Field field_;
  std::size_t ambient_;
  std::vector<Vector> basis_;
  std::vector<std::size_t> pivots_;
};

Subspace kernel(const Matrix& m);
/// Column space.
Subspace image(const Matrix& m);
/// {v : m v in s}.
Subspace preimage(const Matrix& m, const Subspace& s);
Subspace intersect(const Subspace& a, const Subspace& b);
Subspace sum(const Subspace& a, const Subspace& b);
/// {w : w . v = 0 for all v in s} under the standard bilinear pairing.
Subspace annihilator(const Subspace& s);

Vector zero_vector(const Field& field, std::size_t n);
Vector unit_vector(const Field& field, std::size_t n, std::size_t i);
bool is_zero(const Vector& v);

}  // namespace modchar

#include "modchar/ff.hpp"

#include <algorithm>
#include <stdexcept>

#include "modchar/error.hpp"
#include "modchar/modp.hpp"

namespace modchar {

namespace {

using Poly = std::vector<std::uint64_t>;  // constant term first

void trim(Poly& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

// Remainder of f modulo a monic g.
Poly poly_mod(Poly f, const Poly& g, std::uint64_t p) {
  const std::size_t dg = g.size() - 1;
  trim(f);
  while (f.size() > dg) {
    const std::uint64_t lead = f.back();
    const std::size_t shift = f.size() - 1 - dg;
    for (std::size_t j = 0; j <= dg; ++j) {
      f[shift + j] = modp::sub(f[shift + j], modp::mul(lead, g[j], p), p);
    }
    trim(f);
  }
  return f;
}

// Quotient and remainder of f by g (g nonzero, any leading coefficient).
std::pair<Poly, Poly> poly_divmod(Poly f, const Poly& g, std::uint64_t p) {
  const std::size_t dg = g.size() - 1;
  const std::uint64_t lead_inv = modp::inv(g.back(), p);
  trim(f);
  Poly quot(f.size() > dg ? f.size() - dg : 1, 0);
  while (!f.empty() && f.size() > dg) {
    const std::uint64_t c = modp::mul(f.back(), lead_inv, p);
    const std::size_t shift = f.size() - 1 - dg;
    quot[shift] = c;
    for (std::size_t j = 0; j <= dg; ++j) {
      f[shift + j] = modp::sub(f[shift + j], modp::mul(c, g[j], p), p);
    }
    trim(f);
  }
  trim(quot);
  return {quot, f};
}

Poly poly_mul(const Poly& a, const Poly& b, std::uint64_t p) {
  if (a.empty() || b.empty()) return {};
  Poly out(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) {
      out[i + j] = modp::add(out[i + j], modp::mul(a[i], b[j], p), p);
    }
  }
  trim(out);
  return out;
}

Poly poly_sub(Poly a, const Poly& b, std::uint64_t p) {
  if (a.size() < b.size()) a.resize(b.size(), 0);
  for (std::size_t i = 0; i < b.size(); ++i) a[i] = modp::sub(a[i], b[i], p);
  trim(a);
  return a;
}

void check_prime(std::uint64_t p) {
  if (p >= (std::uint64_t{1} << 63)) throw std::invalid_argument("p must be below 2^63");
  if (!is_prime(p)) throw std::invalid_argument("p = " + std::to_string(p) + " is not prime");
}

void check_degree(unsigned r) {
  if (r < 1 || r > kMaxExtensionDegree) {
    throw std::invalid_argument("extension degree r = " + std::to_string(r) +
                                " outside supported range 1.." + std::to_string(kMaxExtensionDegree));
  }
}

}  // namespace

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t small : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    if (n % small == 0) return n == small;
  }
  std::uint64_t d = n - 1;
  unsigned s = 0;
  while ((d & 1U) == 0) {
    d >>= 1U;
    ++s;
  }
  // Deterministic for all 64-bit n with these bases.
  for (std::uint64_t a : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    std::uint64_t x = modp::pow(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (unsigned i = 1; i < s; ++i) {
      x = modp::mul(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

bool is_irreducible(std::uint64_t p, std::span<const std::uint64_t> monic) {
  Poly f(monic.begin(), monic.end());
  trim(f);
  if (f.size() < 2 || f.back() != 1) throw std::invalid_argument("polynomial must be monic of degree >= 1");
  const std::size_t deg = f.size() - 1;
  if (deg == 1) return true;
  for (std::size_t d = 1; d <= deg / 2; ++d) {
    // Enumerate monic divisors of degree d by their lower coefficients.
    Poly g(d + 1, 0);
    g[d] = 1;
    while (true) {
      if (poly_mod(f, g, p).empty()) return false;
      std::size_t i = 0;
      while (i < d && ++g[i] == p) g[i++] = 0;
      if (i == d) break;
    }
  }
  return true;
}

std::vector<std::uint64_t> find_irreducible(std::uint64_t p, unsigned r) {
  check_prime(p);
  check_degree(r);
  if (r == 1) return {0, 1};
  // Candidate (c_0, ..., c_{r-1}) with c_0 most significant, so c_{r-1} runs fastest.
  Poly f(r + 1, 0);
  f[r] = 1;
  while (true) {
    if (is_irreducible(p, f)) return f;
    int i = static_cast<int>(r) - 1;
    while (i >= 0 && ++f[static_cast<std::size_t>(i)] == p) f[static_cast<std::size_t>(i--)] = 0;
    if (i < 0) break;
  }
  throw std::logic_error("no irreducible polynomial found");
}

Field::Field(std::uint64_t p, unsigned r) : p_(p), r_(r) {
  const auto m = find_irreducible(p, r);
  std::copy(m.begin(), m.end(), modulus_.begin());
}

Field::Field(std::uint64_t p, unsigned r, std::span<const std::uint64_t> modulus) : p_(p), r_(r) {
  check_prime(p);
  check_degree(r);
  if (modulus.size() != r + 1 || modulus[r] != 1) {
    throw std::invalid_argument("modulus must be monic with " + std::to_string(r + 1) + " coefficients");
  }
  for (auto c : modulus) {
    if (c >= p) throw std::invalid_argument("modulus coefficient out of range [0, p)");
  }
  if (r == 1 && modulus[0] != 0) throw std::invalid_argument("for r = 1 the modulus must be t");
  if (!is_irreducible(p, modulus)) throw std::invalid_argument("modulus is reducible over F_p");
  std::copy(modulus.begin(), modulus.end(), modulus_.begin());
}

std::uint64_t Field::q() const {
  std::uint64_t q = 1;
  for (unsigned i = 0; i < r_; ++i) {
    if (q > UINT64_MAX / p_) throw std::overflow_error("q = p^r does not fit in 64 bits");
    q *= p_;
  }
  return q;
}

std::vector<std::uint64_t> Field::modulus() const {
  return {modulus_.begin(), modulus_.begin() + r_ + 1};
}

FF Field::one() const {
  FF a;
  a.coeffs[0] = 1 % p_;
  return a;
}

FF Field::from_int(std::int64_t v) const {
  FF a;
  a.coeffs[0] = modp::reduce(v, p_);
  return a;
}

FF Field::from_coeffs(std::span<const std::uint64_t> coeffs) const {
  if (coeffs.size() != r_) throw std::invalid_argument("element needs exactly r coefficients");
  FF a;
  for (unsigned i = 0; i < r_; ++i) {
    if (coeffs[i] >= p_) throw std::invalid_argument("element coefficient out of range [0, p)");
    a.coeffs[i] = coeffs[i];
  }
  return a;
}

FF Field::basis_element(unsigned l) const {
  FF t;
  if (r_ == 1) return one();
  t.coeffs[1] = 1;
  return pow(t, l);
}

std::uint64_t Field::index(const FF& a) const {
  std::uint64_t idx = 0;
  for (unsigned i = r_; i-- > 0;) idx = idx * p_ + a.coeffs[i];
  return idx;
}

FF Field::element(std::uint64_t index) const {
  FF a;
  for (unsigned i = 0; i < r_; ++i) {
    a.coeffs[i] = index % p_;
    index /= p_;
  }
  return a;
}

FF Field::add(const FF& a, const FF& b) const {
  FF c;
  for (unsigned i = 0; i < r_; ++i) c.coeffs[i] = modp::add(a.coeffs[i], b.coeffs[i], p_);
  return c;
}

FF Field::sub(const FF& a, const FF& b) const {
  FF c;
  for (unsigned i = 0; i < r_; ++i) c.coeffs[i] = modp::sub(a.coeffs[i], b.coeffs[i], p_);
  return c;
}

FF Field::neg(const FF& a) const {
  FF c;
  for (unsigned i = 0; i < r_; ++i) c.coeffs[i] = modp::neg(a.coeffs[i], p_);
  return c;
}

FF Field::scale(std::uint64_t c, const FF& a) const {
  FF out;
  c %= p_;
  for (unsigned i = 0; i < r_; ++i) out.coeffs[i] = modp::mul(c, a.coeffs[i], p_);
  return out;
}

FF Field::mul(const FF& a, const FF& b) const {
  if (r_ == 1) {
    FF c;
    c.coeffs[0] = modp::mul(a.coeffs[0], b.coeffs[0], p_);
    return c;
  }
  std::array<std::uint64_t, 2 * kMaxExtensionDegree> prod{};
  for (unsigned i = 0; i < r_; ++i) {
    if (a.coeffs[i] == 0) continue;
    for (unsigned j = 0; j < r_; ++j) {
      prod[i + j] = modp::add(prod[i + j], modp::mul(a.coeffs[i], b.coeffs[j], p_), p_);
    }
  }
  for (unsigned i = 2 * r_ - 2; i >= r_; --i) {
    const std::uint64_t lead = prod[i];
    if (lead == 0) continue;
    prod[i] = 0;
    for (unsigned j = 0; j < r_; ++j) {
      prod[i - r_ + j] = modp::sub(prod[i - r_ + j], modp::mul(lead, modulus_[j], p_), p_);
    }
  }
  FF c;
  std::copy(prod.begin(), prod.begin() + r_, c.coeffs.begin());
  return c;
}

FF Field::inv(const FF& a) const {
  if (is_zero(a)) throw ZeroDivisionError("inverse of zero in F_" + std::to_string(p_) + "^" + std::to_string(r_));
  if (r_ == 1) {
    FF c;
    c.coeffs[0] = modp::inv(a.coeffs[0], p_);
    return c;
  }
  // Extended Euclid: track s with s * a == r (mod modulus).
  Poly r0 = modulus();
  Poly r1(a.coeffs.begin(), a.coeffs.begin() + r_);
  trim(r1);
  Poly s0;
  Poly s1{1};
  while (!r1.empty()) {
    auto [quot, rem] = poly_divmod(r0, r1, p_);
    Poly s2 = poly_sub(s0, poly_mul(quot, s1, p_), p_);
    r0 = std::move(r1);
    r1 = std::move(rem);
    s0 = std::move(s1);
    s1 = std::move(s2);
  }
  // r0 is a nonzero constant since the modulus is irreducible.
  const std::uint64_t scale_inv = modp::inv(r0[0], p_);
  FF c;
  for (std::size_t i = 0; i < s0.size() && i < r_; ++i) c.coeffs[i] = modp::mul(s0[i], scale_inv, p_);
  return c;
}

FF Field::div(const FF& a, const FF& b) const { return mul(a, inv(b)); }

FF Field::pow(FF a, std::uint64_t e) const {
  FF result = one();
  while (e > 0) {
    if (e & 1U) result = mul(result, a);
    a = mul(a, a);
    e >>= 1U;
  }
  return result;
}

std::string Field::format(const FF& a) const {
  if (r_ == 1) return std::to_string(a.coeffs[0]);
  std::string out;
  for (unsigned i = r_; i-- > 0;) {
    const auto c = a.coeffs[i];
    if (c == 0) continue;
    if (!out.empty()) out += "+";
    if (i == 0 || c != 1) out += std::to_string(c);
    if (i >= 1) out += "t";
    if (i >= 2) out += "^" + std::to_string(i);
  }
  return out.empty() ? "0" : out;
}

void require_same_field(const Field& a, const Field& b) {
  if (!(a == b)) throw ContextMismatch("operands belong to different fields");
}

// ---------------------------------------------------------------------------
// Matrix

Matrix::Matrix(Field field, std::size_t rows, std::size_t cols)
    : field_(std::move(field)), rows_(rows), cols_(cols), entries_(rows * cols) {}

Matrix Matrix::identity(const Field& field, std::size_t n) {
  Matrix m(field, n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = field.one();
  return m;
}

Matrix Matrix::from_rows(const Field& field, std::size_t cols, const std::vector<Vector>& rows) {
  Matrix m(field, rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != cols) throw DimensionMismatch("row length differs from column count");
    std::copy(rows[i].begin(), rows[i].end(), m.entries_.begin() + static_cast<std::ptrdiff_t>(i * cols));
  }
  return m;
}

Matrix Matrix::from_ints(const Field& field, const std::vector<std::vector<std::int64_t>>& rows) {
  const std::size_t cols = rows.empty() ? 0 : rows.front().size();
  Matrix m(field, rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != cols) throw DimensionMismatch("ragged integer matrix");
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = field.from_int(rows[i][j]);
  }
  return m;
}

Vector Matrix::row(std::size_t i) const {
  return {entries_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
          entries_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_)};
}

Vector Matrix::col(std::size_t j) const {
  Vector v(rows_);
  for (std::size_t i = 0; i < rows_; ++i) v[i] = (*this)(i, j);
  return v;
}

Vector Matrix::apply(const Vector& v) const {
  if (v.size() != cols_) throw DimensionMismatch("vector length differs from column count");
  Vector out(rows_);
  for (std::size_t i = 0; i < rows_; ++i) {
    FF acc;
    for (std::size_t j = 0; j < cols_; ++j) acc = field_.add(acc, field_.mul((*this)(i, j), v[j]));
    out[i] = acc;
  }
  return out;
}

Matrix Matrix::transpose() const {
  Matrix t(field_, cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

bool Matrix::is_identity() const {
  if (rows_ != cols_) return false;
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j)
      if ((*this)(i, j) != (i == j ? field_.one() : FF{})) return false;
  return true;
}

bool Matrix::is_zero() const {
  return std::all_of(entries_.begin(), entries_.end(), [](const FF& a) { return a == FF{}; });
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  require_same_field(a.field_, b.field_);
  if (a.cols_ != b.rows_) throw DimensionMismatch("matrix product dimension mismatch");
  const Field& f = a.field_;
  Matrix c(f, a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i) {
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const FF& aik = a(i, k);
      if (f.is_zero(aik)) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) c(i, j) = f.add(c(i, j), f.mul(aik, b(k, j)));
    }
  }
  return c;
}

Matrix operator+(const Matrix& a, const Matrix& b) {
  require_same_field(a.field_, b.field_);
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw DimensionMismatch("matrix sum dimension mismatch");
  Matrix c = a;
  for (std::size_t i = 0; i < c.entries_.size(); ++i) c.entries_[i] = a.field_.add(a.entries_[i], b.entries_[i]);
  return c;
}

Matrix operator-(const Matrix& a, const Matrix& b) {
  require_same_field(a.field_, b.field_);
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw DimensionMismatch("matrix difference dimension mismatch");
  Matrix c = a;
  for (std::size_t i = 0; i < c.entries_.size(); ++i) c.entries_[i] = a.field_.sub(a.entries_[i], b.entries_[i]);
  return c;
}

Matrix pow(const Matrix& m, std::uint64_t e) {
  if (m.rows() != m.cols()) throw DimensionMismatch("power of a non-square matrix");
  Matrix result = Matrix::identity(m.field(), m.rows());
  Matrix base = m;
  while (e > 0) {
    if (e & 1U) result = result * base;
    e >>= 1U;
    if (e > 0) base = base * base;
  }
  return result;
}

Matrix kron(const Matrix& a, const Matrix& b) {
  require_same_field(a.field(), b.field());
  const Field& f = a.field();
  Matrix c(f, a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      for (std::size_t k = 0; k < b.rows(); ++k)
        for (std::size_t l = 0; l < b.cols(); ++l)
          c(i * b.rows() + k, j * b.cols() + l) = f.mul(a(i, j), b(k, l));
  return c;
}

Matrix block_diag(const Matrix& a, const Matrix& b) {
  require_same_field(a.field(), b.field());
  Matrix c(a.field(), a.rows() + b.rows(), a.cols() + b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) c(i, j) = a(i, j);
  for (std::size_t i = 0; i < b.rows(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j) c(a.rows() + i, a.cols() + j) = b(i, j);
  return c;
}

Matrix vstack(const Matrix& top, const Matrix& bottom) {
  require_same_field(top.field(), bottom.field());
  if (top.cols() != bottom.cols()) throw DimensionMismatch("vstack column mismatch");
  Matrix c(top.field(), top.rows() + bottom.rows(), top.cols());
  for (std::size_t i = 0; i < top.rows(); ++i)
    for (std::size_t j = 0; j < top.cols(); ++j) c(i, j) = top(i, j);
  for (std::size_t i = 0; i < bottom.rows(); ++i)
    for (std::size_t j = 0; j < top.cols(); ++j) c(top.rows() + i, j) = bottom(i, j);
  return c;
}

std::vector<std::size_t> rref(const Field& f, std::size_t cols, std::vector<Vector>& rows) {
  std::vector<std::size_t> pivots;
  std::size_t lead = 0;
  for (std::size_t c = 0; c < cols && lead < rows.size(); ++c) {
    std::size_t sel = lead;
    while (sel < rows.size() && f.is_zero(rows[sel][c])) ++sel;
    if (sel == rows.size()) continue;
    std::swap(rows[lead], rows[sel]);
    const FF scale = f.inv(rows[lead][c]);
    for (auto& x : rows[lead]) x = f.mul(x, scale);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == lead || f.is_zero(rows[i][c])) continue;
      const FF factor = rows[i][c];
      for (std::size_t j = 0; j < cols; ++j) rows[i][j] = f.sub(rows[i][j], f.mul(factor, rows[lead][j]));
    }
    pivots.push_back(c);
    ++lead;
  }
  rows.resize(lead);
  return pivots;
}

namespace {

std::vector<Vector> rows_of(const Matrix& m) {
  std::vector<Vector> rows;
  rows.reserve(m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i) rows.push_back(m.row(i));
  return rows;
}

}  // namespace

std::size_t rank(const Matrix& m) {
  auto rows = rows_of(m);
  return rref(m.field(), m.cols(), rows).size();
}

std::optional<Matrix> inverse(const Matrix& m) {
  if (m.rows() != m.cols()) throw DimensionMismatch("inverse of a non-square matrix");
  const Field& f = m.field();
  const std::size_t n = m.rows();
  std::vector<Vector> rows;
  for (std::size_t i = 0; i < n; ++i) {
    Vector row = m.row(i);
    row.resize(2 * n);
    row[n + i] = f.one();
    rows.push_back(std::move(row));
  }
  const auto piv = rref(f, 2 * n, rows);
  if (piv.size() < n || piv[n - 1] != n - 1) return std::nullopt;
  Matrix inv(f, n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv(i, j) = rows[i][n + j];
  return inv;
}

std::optional<Vector> solve(const Matrix& m, const Vector& b) {
  if (b.size() != m.rows()) throw DimensionMismatch("right-hand side length differs from row count");
  const Field& f = m.field();
  std::vector<Vector> rows;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Vector row = m.row(i);
    row.push_back(b[i]);
    rows.push_back(std::move(row));
  }
  const auto piv = rref(f, m.cols() + 1, rows);
  if (!piv.empty() && piv.back() == m.cols()) return std::nullopt;
  Vector x(m.cols());
  for (std::size_t i = 0; i < piv.size(); ++i) x[piv[i]] = rows[i][m.cols()];
  return x;
}

// ---------------------------------------------------------------------------
// Subspace

Subspace Subspace::zero(const Field& field, std::size_t n) { return Subspace(field, n); }

Subspace Subspace::full(const Field& field, std::size_t n) {
  Subspace s(field, n);
  for (std::size_t i = 0; i < n; ++i) {
    s.basis_.push_back(unit_vector(field, n, i));
    s.pivots_.push_back(i);
  }
  return s;
}

Subspace Subspace::span(const Field& field, std::size_t n, std::vector<Vector> vectors) {
  for (const auto& v : vectors) {
    if (v.size() != n) throw DimensionMismatch("spanning vector has wrong length");
  }
  Subspace s(field, n);
  s.pivots_ = rref(field, n, vectors);
  s.basis_ = std::move(vectors);
  return s;
}

Vector Subspace::reduce(const Vector& v) const {
  if (v.size() != ambient_) throw DimensionMismatch("vector length differs from ambient dimension");
  Vector w = v;
  for (std::size_t i = 0; i < basis_.size(); ++i) {
    const FF c = w[pivots_[i]];
    if (field_.is_zero(c)) continue;
    for (std::size_t j = 0; j < ambient_; ++j) w[j] = field_.sub(w[j], field_.mul(c, basis_[i][j]));
  }
  return w;
}

bool Subspace::contains(const Vector& v) const { return is_zero(reduce(v)); }

Vector Subspace::coordinates(const Vector& v) const {
  if (!contains(v)) throw std::invalid_argument("vector does not lie in the subspace");
  Vector c(basis_.size());
  for (std::size_t i = 0; i < basis_.size(); ++i) c[i] = v[pivots_[i]];
  return c;
}

bool Subspace::is_canonical() const {
  auto copy = basis_;
  const auto piv = rref(field_, ambient_, copy);
  return piv == pivots_ && copy == basis_;
}

Subspace kernel(const Matrix& m) {
  const Field& f = m.field();
  auto rows = rows_of(m);
  const auto piv = rref(f, m.cols(), rows);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto c : piv) is_pivot[c] = true;
  std::vector<Vector> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    Vector v = zero_vector(f, m.cols());
    v[free] = f.one();
    for (std::size_t i = 0; i < piv.size(); ++i) v[piv[i]] = f.neg(rows[i][free]);
    basis.push_back(std::move(v));
  }
  return Subspace::span(f, m.cols(), std::move(basis));
}

Subspace image(const Matrix& m) {
  std::vector<Vector> cols;
  for (std::size_t j = 0; j < m.cols(); ++j) cols.push_back(m.col(j));
  return Subspace::span(m.field(), m.rows(), std::move(cols));
}

Subspace annihilator(const Subspace& s) {
  return kernel(Matrix::from_rows(s.field(), s.ambient_dim(), s.basis()));
}

Subspace preimage(const Matrix& m, const Subspace& s) {
  require_same_field(m.field(), s.field());
  if (s.ambient_dim() != m.rows()) throw DimensionMismatch("preimage: subspace lives in the wrong space");
  const Subspace ann = annihilator(s);
  if (ann.dim() == 0) return Subspace::full(m.field(), m.cols());
  const Matrix constraints = Matrix::from_rows(m.field(), m.rows(), ann.basis()) * m;
  return kernel(constraints);
}

Subspace intersect(const Subspace& a, const Subspace& b) {
  require_same_field(a.field(), b.field());
  if (a.ambient_dim() != b.ambient_dim()) throw DimensionMismatch("intersect: ambient dimensions differ");
  const Field& f = a.field();
  const std::size_t n = a.ambient_dim();
  // Columns: basis of a, then negated basis of b; kernel vectors give sum a_i u_i = sum b_j w_j.
  Matrix stacked(f, n, a.dim() + b.dim());
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t k = 0; k < n; ++k) stacked(k, i) = a.basis()[i][k];
  for (std::size_t j = 0; j < b.dim(); ++j)
    for (std::size_t k = 0; k < n; ++k) stacked(k, a.dim() + j) = f.neg(b.basis()[j][k]);
  const Subspace rel = kernel(stacked);
  std::vector<Vector> vectors;
  for (const auto& coeffs : rel.basis()) {
    Vector v = zero_vector(f, n);
    for (std::size_t i = 0; i < a.dim(); ++i) {
      if (f.is_zero(coeffs[i])) continue;
      for (std::size_t k = 0; k < n; ++k) v[k] = f.add(v[k], f.mul(coeffs[i], a.basis()[i][k]));
    }
    vectors.push_back(std::move(v));
  }
  return Subspace::span(f, n, std::move(vectors));
}

Subspace sum(const Subspace& a, const Subspace& b) {
  require_same_field(a.field(), b.field());
  if (a.ambient_dim() != b.ambient_dim()) throw DimensionMismatch("sum: ambient dimensions differ");
  auto vectors = a.basis();
  vectors.insert(vectors.end(), b.basis().begin(), b.basis().end());
  return Subspace::span(a.field(), a.ambient_dim(), std::move(vectors));
}

Vector zero_vector(const Field&, std::size_t n) { return Vector(n); }

Vector unit_vector(const Field& field, std::size_t n, std::size_t i) {
  Vector v(n);
  v[i] = field.one();
  return v;
}

bool is_zero(const Vector& v) {
  return std::all_of(v.begin(), v.end(), [](const FF& a) { return a == FF{}; });
}

}  // namespace modchar

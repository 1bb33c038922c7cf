#include "modchar/reps.hpp"

#include <algorithm>
#include <stdexcept>

#include "modchar/dickson.hpp"
#include "modchar/error.hpp"

namespace modchar {

namespace {

std::string gen_name(std::size_t j) { return "generators[" + std::to_string(j) + "]"; }

bool square_of(const Matrix& g, const Rep& rep) {
  return g.rows() == rep.dim && g.cols() == rep.dim && g.field() == rep.field;
}

Matrix minus_identity(const Matrix& g) { return g - Matrix::identity(g.field(), g.rows()); }

// Row space of the functionals w ↦ w·m for w in s.
Subspace right_multiply(const Subspace& s, const Matrix& m) {
  std::vector<Vector> rows;
  rows.reserve(s.dim());
  const Matrix mt = m.transpose();
  for (const auto& w : s.basis()) rows.push_back(mt.apply(w));
  return Subspace::span(s.field(), m.cols(), std::move(rows));
}

Vector kron_vector(const Field& f, const Vector& v, const Vector& w) {
  Vector out;
  out.reserve(v.size() * w.size());
  for (const auto& a : v)
    for (const auto& b : w) out.push_back(f.mul(a, b));
  return out;
}

}  // namespace

std::vector<Violation> validate(const Rep& rep) {
  std::vector<Violation> out;
  const Matrix id = Matrix::identity(rep.field, rep.dim);
  std::vector<bool> usable(rep.generators.size(), false);
  for (std::size_t j = 0; j < rep.generators.size(); ++j) {
    const Matrix& g = rep.generators[j];
    if (!square_of(g, rep)) {
      out.push_back({"shape", {j}, gen_name(j) + " is not a " + std::to_string(rep.dim) + "x" +
                                       std::to_string(rep.dim) + " matrix over the representation field"});
      continue;
    }
    usable[j] = true;
    if (!inverse(g)) out.push_back({"singular", {j}, gen_name(j) + " is not invertible"});
    if (!(pow(g, rep.field.p()) == id))
      out.push_back({"order", {j}, gen_name(j) + " does not satisfy g^" + std::to_string(rep.field.p()) + " = I"});
  }
  for (std::size_t i = 0; i < rep.generators.size(); ++i)
    for (std::size_t j = i + 1; j < rep.generators.size(); ++j) {
      if (!usable[i] || !usable[j]) continue;
      const Matrix& a = rep.generators[i];
      const Matrix& b = rep.generators[j];
      if (!(a * b == b * a)) out.push_back({"commute", {i, j}, gen_name(i) + " and " + gen_name(j) + " do not commute"});
    }
  return out;
}

std::vector<Violation> validate(const PointedRep& pr) {
  auto out = validate(pr.rep);
  if (pr.basepoint.size() != pr.rep.dim) {
    out.push_back({"basepoint", {}, "basepoint length differs from the dimension"});
    return out;
  }
  if (is_zero(pr.basepoint)) out.push_back({"basepoint", {}, "basepoint is zero"});
  for (std::size_t j = 0; j < pr.rep.generators.size(); ++j) {
    const Matrix& g = pr.rep.generators[j];
    if (square_of(g, pr.rep) && g.apply(pr.basepoint) != pr.basepoint)
      out.push_back({"basepoint", {j}, "basepoint is not fixed by " + gen_name(j)});
  }
  return out;
}

void require_valid(const Rep& rep) {
  const auto v = validate(rep);
  if (!v.empty()) throw ValidationError(v.front().message);
}

void require_valid(const PointedRep& rep) {
  const auto v = validate(rep);
  if (!v.empty()) throw ValidationError(v.front().message);
}

Subspace fixed_space(const Rep& rep) {
  if (rep.generators.empty()) return Subspace::full(rep.field, rep.dim);
  Matrix stacked = minus_identity(rep.generators.front());
  for (std::size_t j = 1; j < rep.generators.size(); ++j) stacked = vstack(stacked, minus_identity(rep.generators[j]));
  return kernel(stacked);
}

bool is_invariant_subspace(const Rep& rep, const Subspace& s) {
  for (const auto& g : rep.generators)
    for (const auto& v : s.basis())
      if (!s.contains(g.apply(v))) return false;
  return true;
}

Rep restrict(const Rep& rep, const Subspace& s) {
  if (s.ambient_dim() != rep.dim) throw DimensionMismatch("restrict: subspace lives in the wrong space");
  if (!is_invariant_subspace(rep, s)) throw NotInvariant("restrict: subspace is not invariant");
  Rep out{rep.field, s.dim(), {}};
  for (const auto& g : rep.generators) {
    Matrix m(rep.field, s.dim(), s.dim());
    for (std::size_t i = 0; i < s.dim(); ++i) {
      const Vector c = s.coordinates(g.apply(s.basis()[i]));
      for (std::size_t k = 0; k < s.dim(); ++k) m(k, i) = c[k];
    }
    out.generators.push_back(std::move(m));
  }
  return out;
}

Quotient quotient(const Rep& rep, const Subspace& s) {
  if (s.ambient_dim() != rep.dim) throw DimensionMismatch("quotient: subspace lives in the wrong space");
  if (!is_invariant_subspace(rep, s)) throw NotInvariant("quotient: subspace is not invariant");
  std::vector<std::size_t> complement;
  for (std::size_t c = 0, k = 0; c < rep.dim; ++c) {
    if (k < s.pivots().size() && s.pivots()[k] == c) {
      ++k;
    } else {
      complement.push_back(c);
    }
  }
  const std::size_t m = complement.size();
  Matrix proj(rep.field, m, rep.dim);
  for (std::size_t c = 0; c < rep.dim; ++c) {
    const Vector w = s.reduce(unit_vector(rep.field, rep.dim, c));
    for (std::size_t i = 0; i < m; ++i) proj(i, c) = w[complement[i]];
  }
  Quotient out{{rep.field, m, {}}, proj};
  for (const auto& g : rep.generators) {
    Matrix gq(rep.field, m, m);
    for (std::size_t i = 0; i < m; ++i) {
      const Vector image = proj.apply(g.col(complement[i]));
      for (std::size_t k = 0; k < m; ++k) gq(k, i) = image[k];
    }
    out.rep.generators.push_back(std::move(gq));
  }
  return out;
}

std::vector<Subspace> j_filtration(const Rep& rep) {
  std::vector<Subspace> chain{fixed_space(rep)};
  while (!chain.back().is_full()) {
    const Quotient q = quotient(rep, chain.back());
    Subspace next = preimage(q.projection, fixed_space(q.rep));
    if (next.dim() <= chain.back().dim()) throw std::logic_error("J-filtration stalled; the action is not unipotent");
    chain.push_back(std::move(next));
  }
  return chain;
}

std::vector<Subspace> j_filtration_augmentation(const Rep& rep) {
  std::vector<Matrix> aug;
  for (const auto& g : rep.generators) aug.push_back(minus_identity(g));
  // R_0 = Σ_j rows(g_j - I); R_{i+1} = Σ_j R_i (g_j - I).
  Subspace rows = Subspace::zero(rep.field, rep.dim);
  for (const auto& n : aug) rows = sum(rows, image(n.transpose()));
  std::vector<Subspace> chain{annihilator(rows)};
  while (!chain.back().is_full()) {
    Subspace next_rows = Subspace::zero(rep.field, rep.dim);
    for (const auto& n : aug) next_rows = sum(next_rows, right_multiply(rows, n));
    rows = std::move(next_rows);
    Subspace next = annihilator(rows);
    if (next.dim() <= chain.back().dim()) throw std::logic_error("J-filtration stalled; the action is not unipotent");
    chain.push_back(std::move(next));
  }
  return chain;
}

const Subspace& stage(const std::vector<Subspace>& filtration, std::size_t i) {
  if (filtration.empty()) throw std::invalid_argument("empty filtration");
  return filtration[std::min(i, filtration.size() - 1)];
}

Rep trivial_rep(const Field& field, std::size_t dim, std::size_t rank) {
  return {field, dim, std::vector<Matrix>(rank, Matrix::identity(field, dim))};
}

PointedRep basic_rep(const Field& field, std::size_t n) {
  if (n == 0) throw std::invalid_argument("basic representation needs n >= 1");
  Rep rep{field, n + 1, {}};
  for (std::size_t j = 0; j < n; ++j)
    for (unsigned l = 0; l < field.r(); ++l) {
      Matrix g = Matrix::identity(field, n + 1);
      g(0, j + 1) = field.basis_element(l);
      rep.generators.push_back(std::move(g));
    }
  return {rep, unit_vector(field, n + 1, 0)};
}

PointedRep basic_rep(std::uint64_t p, unsigned r, std::size_t n) { return basic_rep(Field(p, r), n); }

Rep sym_power_rep(const Field& field) {
  const std::size_t d = field.p();
  // Pascal's triangle mod p, C(j, i) for i, j < p.
  std::vector<std::vector<FF>> binom(d, std::vector<FF>(d, field.zero()));
  for (std::size_t j = 0; j < d; ++j) {
    binom[j][0] = field.one();
    for (std::size_t i = 1; i <= j; ++i) binom[j][i] = field.add(binom[j - 1][i - 1], i < j ? binom[j - 1][i] : field.zero());
  }
  Rep rep{field, d, {}};
  for (unsigned l = 0; l < field.r(); ++l) {
    const FF a = field.basis_element(l);
    Matrix g(field, d, d);
    for (std::size_t j = 0; j < d; ++j)
      for (std::size_t i = 0; i <= j; ++i) g(i, j) = field.mul(binom[j][i], field.pow(a, j - i));
    rep.generators.push_back(std::move(g));
  }
  return rep;
}

Rep sym_power_rep(std::uint64_t p, unsigned r) { return sym_power_rep(Field(p, r)); }

Rep big_rep(std::uint64_t p, unsigned r, std::size_t n) {
  if (n == 0) throw std::invalid_argument("big representation needs n >= 1");
  const Rep xi = sym_power_rep(p, r);
  Rep out = xi;
  for (std::size_t k = 1; k < n; ++k) out = tensor_rep(out, xi);
  return out;
}

Rep tensor_rep(const Rep& a, const Rep& b) {
  require_same_field(a.field, b.field);
  Rep out{a.field, a.dim * b.dim, {}};
  const Matrix ia = Matrix::identity(a.field, a.dim);
  const Matrix ib = Matrix::identity(b.field, b.dim);
  for (const auto& g : a.generators) out.generators.push_back(kron(g, ib));
  for (const auto& h : b.generators) out.generators.push_back(kron(ia, h));
  return out;
}

Rep direct_sum(const Rep& a, const Rep& b) {
  require_same_field(a.field, b.field);
  Rep out{a.field, a.dim + b.dim, {}};
  const Matrix ia = Matrix::identity(a.field, a.dim);
  const Matrix ib = Matrix::identity(b.field, b.dim);
  for (const auto& g : a.generators) out.generators.push_back(block_diag(g, ib));
  for (const auto& h : b.generators) out.generators.push_back(block_diag(ia, h));
  return out;
}

Rep diagonal_sum(const Rep& a, const Rep& b) {
  require_same_field(a.field, b.field);
  if (a.rank() != b.rank()) throw DimensionMismatch("diagonal sum needs equal generator counts");
  Rep out{a.field, a.dim + b.dim, {}};
  for (std::size_t j = 0; j < a.rank(); ++j) out.generators.push_back(block_diag(a.generators[j], b.generators[j]));
  return out;
}

Rep diagonal_tensor(const Rep& a, const Rep& b) {
  require_same_field(a.field, b.field);
  if (a.rank() != b.rank()) throw DimensionMismatch("diagonal tensor needs equal generator counts");
  Rep out{a.field, a.dim * b.dim, {}};
  for (std::size_t j = 0; j < a.rank(); ++j) out.generators.push_back(kron(a.generators[j], b.generators[j]));
  return out;
}

PointedRep wedge_sum(const PointedRep& a, const PointedRep& b) {
  require_valid(a);
  require_valid(b);
  require_same_field(a.rep.field, b.rep.field);
  const Field& f = a.rep.field;
  const Rep sum_rep = direct_sum(a.rep, b.rep);
  Vector diff = a.basepoint;
  for (const auto& w : b.basepoint) diff.push_back(f.neg(w));
  const Quotient q = quotient(sum_rep, Subspace::span(f, sum_rep.dim, {diff}));
  Vector v0 = a.basepoint;
  v0.resize(sum_rep.dim, f.zero());
  return {q.rep, q.projection.apply(v0)};
}

Rep dual_rep(const Rep& rep) {
  Rep out{rep.field, rep.dim, {}};
  for (std::size_t j = 0; j < rep.rank(); ++j) {
    auto inv = inverse(rep.generators[j]);
    if (!inv) throw ValidationError(gen_name(j) + " is not invertible");
    out.generators.push_back(inv->transpose());
  }
  return out;
}

Rep regular_rep(std::uint64_t p, std::size_t n) {
  const Field field = Field::prime(p);
  std::size_t size = 1;
  for (std::size_t i = 0; i < n; ++i) {
    if (size > 4096 / p) throw std::invalid_argument("regular representation too large");
    size *= p;
  }
  Rep rep{field, size, {}};
  std::size_t place = 1;
  for (std::size_t j = 0; j < n; ++j, place *= p) {
    Matrix g(field, size, size);
    for (std::size_t x = 0; x < size; ++x) {
      const std::size_t digit = (x / place) % p;
      const std::size_t y = digit + 1 == p ? x - digit * place : x + place;
      g(y, x) = field.one();
    }
    rep.generators.push_back(std::move(g));
  }
  return rep;
}

Rep pullback(const Rep& rep, const std::vector<std::vector<std::uint64_t>>& phi) {
  if (phi.size() != rep.rank()) throw DimensionMismatch("pullback map needs one row per generator");
  const std::size_t s_new = phi.empty() ? 0 : phi.front().size();
  Rep out{rep.field, rep.dim, {}};
  for (std::size_t k = 0; k < s_new; ++k) {
    Matrix g = Matrix::identity(rep.field, rep.dim);
    for (std::size_t j = 0; j < rep.rank(); ++j) {
      if (phi[j].size() != s_new) throw DimensionMismatch("pullback map rows differ in length");
      const std::uint64_t e = phi[j][k] % rep.field.p();
      if (e) g = g * pow(rep.generators[j], e);
    }
    out.generators.push_back(std::move(g));
  }
  return out;
}

Rep conjugate(const Rep& rep, const Matrix& t) {
  auto inv = inverse(t);
  if (!inv) throw std::invalid_argument("conjugating matrix is singular");
  Rep out{rep.field, rep.dim, {}};
  for (const auto& g : rep.generators) out.generators.push_back(t * g * *inv);
  return out;
}

Matrix iso_to_basic(const Rep& rep) {
  require_valid(rep);
  const Field& f = rep.field;
  const unsigned r = f.r();
  const auto chain = j_filtration(rep);
  if (chain.front().dim() != 1) throw std::invalid_argument("iso_to_basic: fixed space is not a line");
  if (chain.size() > 2) throw std::invalid_argument("iso_to_basic: J_1 is a proper subspace");
  if (rep.rank() % r != 0 || rep.dim != rep.rank() / r + 1)
    throw std::invalid_argument("iso_to_basic: dimension does not match the generator count");
  const std::size_t n = rep.dim - 1;
  const std::size_t piv = chain.front().pivots().front();

  // Each (g - I) maps into the fixed line spanned by f_0 with f_0[piv] = 1, so its
  // row piv is the pairing functional of that generator.
  Matrix t(f, rep.dim, rep.dim);
  t(0, piv) = f.one();
  for (std::size_t j = 0; j < n; ++j) {
    const Matrix nj = minus_identity(rep.generators[j * r]);
    for (std::size_t c = 0; c < rep.dim; ++c) t(j + 1, c) = nj(piv, c);
  }
  if (!inverse(t)) throw std::invalid_argument("iso_to_basic: the action is not faithful");
  const PointedRep model = basic_rep(f, n);
  if (conjugate(rep, t) != model.rep) throw std::invalid_argument("iso_to_basic: the action is not faithful");
  return t;
}

ChiReduction classify(const Rep& rep) {
  require_valid(rep);
  const Field& f = rep.field;
  const std::uint64_t p = f.p();
  const unsigned r = f.r();
  const std::size_t s = rep.rank();
  const auto chain = j_filtration(rep);
  ChiReduction out{Verdict::zero, {}, chain.front().dim(), 0, std::nullopt, std::nullopt, std::nullopt};
  for (const auto& j : chain) out.j_dims.push_back(j.dim());
  if (out.dim_j0 != 1) return out;
  out.verdict = Verdict::reduced;

  const Subspace& j1 = stage(chain, 1);
  const Rep h = restrict(rep, j1);
  const std::size_t d1 = h.dim;
  const Field fp = Field::prime(p);

  // a ↦ Σ a_j (h_j - I) with every F_q entry spelled out in F_p coordinates.
  Matrix linear(fp, d1 * d1 * r, s);
  for (std::size_t j = 0; j < s; ++j) {
    const Matrix nj = minus_identity(h.generators[j]);
    for (std::size_t a = 0; a < d1; ++a)
      for (std::size_t b = 0; b < d1; ++b)
        for (unsigned l = 0; l < r; ++l)
          linear((a * d1 + b) * r + l, j) = fp.from_int(static_cast<std::int64_t>(nj(a, b).coeffs[l]));
  }
  const Subspace kernel_b = kernel(linear);
  const Subspace quotient_dual = annihilator(kernel_b);
  out.quotient_rank = quotient_dual.dim();
  out.projection = Matrix::from_rows(fp, s, quotient_dual.basis());
  if (r != 1 || out.quotient_rank == 0) return out;

  // Right inverse of π: the generator at each pivot column of π maps to the i-th basis vector of F_p^m.
  Rep section{f, d1, {}};
  for (auto c : quotient_dual.pivots()) section.generators.push_back(h.generators[c]);
  const Matrix t = iso_to_basic(section);
  const PointedRep model = basic_rep(f, out.quotient_rank);
  // Every generator must then act as the basic generator of its image under π.
  const auto tinv = *inverse(t);
  for (std::size_t j = 0; j < s; ++j) {
    Matrix expected = Matrix::identity(f, d1);
    for (std::size_t i = 0; i < out.quotient_rank; ++i) expected(0, i + 1) = (*out.projection)(i, j);
    if (!(t * h.generators[j] * tinv == expected))
      throw std::logic_error("classification cross-check failed at " + gen_name(j));
  }
  out.basic_model = model;
  out.conjugator = t;
  return out;
}

MultiPoly chi_of_rep(const Rep& rep, std::uint64_t k) {
  if (rep.field.r() != 1) throw std::invalid_argument("chi of a representation is only computed for r = 1");
  if (k == 0) throw std::invalid_argument("chi_{y^k} needs k >= 1");
  const std::uint64_t p = rep.field.p();
  const auto s = static_cast<unsigned>(rep.rank());
  const ChiReduction red = classify(rep);
  if (red.verdict == Verdict::zero || red.quotient_rank == 0) return MultiPoly(p, s);
  const auto m = static_cast<unsigned>(red.quotient_rank);
  std::vector<MultiPoly> images;
  for (unsigned i = 0; i < m; ++i) {
    std::vector<Residue> coeffs(s);
    for (unsigned j = 0; j < s; ++j) coeffs[j] = (*red.projection)(i, j).coeffs[0];
    images.push_back(MultiPoly::linear_form(p, coeffs));
  }
  return substitute(chi_via_power_sum(p, m, k), images);
}

bool j_tensor_check(const Rep& a, const Rep& b, std::size_t i) {
  const auto ja = j_filtration(a);
  const auto jb = j_filtration(b);
  const auto jt = j_filtration(tensor_rep(a, b));
  const Field& f = a.field;
  std::vector<Vector> vectors;
  for (std::size_t u = 0; u <= i; ++u) {
    const Subspace& sa = stage(ja, u);
    const Subspace& sb = stage(jb, i - u);
    for (const auto& v : sa.basis())
      for (const auto& w : sb.basis()) vectors.push_back(kron_vector(f, v, w));
  }
  return Subspace::span(f, a.dim * b.dim, std::move(vectors)) == stage(jt, i);
}

}  // namespace modchar

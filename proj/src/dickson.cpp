#include "modchar/dickson.hpp"

#include <map>
#include <stdexcept>

#include "modchar/error.hpp"
#include "modchar/ff.hpp"

namespace modchar {

namespace {

std::uint64_t small_pow(std::uint64_t p, unsigned n) {
  std::uint64_t out = 1;
  for (unsigned i = 0; i < n; ++i) {
    if (out > (1ULL << 40) / p) throw std::overflow_error("p^n too large for a polynomial computation");
    out *= p;
  }
  return out;
}

unsigned top_degree(std::uint64_t p, unsigned n) { return static_cast<unsigned>(small_pow(p, n) - 1); }

TotalClass from_poly(const MultiPoly& f, unsigned dmax) {
  TotalClass out = TotalClass::zero(f.p(), f.nvars(), dmax);
  for (const auto& [e, c] : f.terms()) {
    const unsigned d = total_degree(e);
    if (d <= dmax) out.components[d].add_term(e, c);
  }
  return out;
}

}  // namespace

std::vector<MultiPoly> all_linear_forms(std::uint64_t p, unsigned n) {
  const std::uint64_t count = small_pow(p, n);
  std::vector<MultiPoly> forms;
  forms.reserve(count);
  std::vector<Residue> c(n, 0);
  for (std::uint64_t idx = 0; idx < count; ++idx) {
    std::uint64_t v = idx;
    for (unsigned i = 0; i < n; ++i) {
      c[i] = v % p;
      v /= p;
    }
    forms.push_back(MultiPoly::linear_form(p, c));
  }
  return forms;
}

MultiPoly power_sum(std::uint64_t p, unsigned n, std::uint64_t k) {
  if (k == 0) throw std::invalid_argument("power sums are defined for k >= 1");
  MultiPoly out(p, n);
  for (const auto& form : all_linear_forms(p, n)) out = out + pow(form, k);
  return out;
}

std::vector<MultiPoly> power_sums(std::uint64_t p, unsigned n, unsigned kmax) {
  std::vector<MultiPoly> sums(kmax, MultiPoly(p, n));
  for (const auto& form : all_linear_forms(p, n)) {
    if (form.is_zero()) continue;
    MultiPoly running = form;
    for (unsigned k = 1; k <= kmax; ++k) {
      sums[k - 1] = sums[k - 1] + running;
      if (k < kmax) running = running * form;
    }
  }
  return sums;
}

MultiPoly chi_via_power_sum(std::uint64_t p, unsigned n, std::uint64_t k) { return -power_sum(p, n, k); }

TotalClass TotalClass::zero(std::uint64_t p, unsigned nvars, unsigned dmax) {
  return {p, nvars, dmax, std::vector<MultiPoly>(dmax + 1, MultiPoly(p, nvars))};
}

TotalClass dickson_total(std::uint64_t p, unsigned n) {
  MultiPoly product = MultiPoly::constant(p, n, 1);
  const MultiPoly one = MultiPoly::constant(p, n, 1);
  for (const auto& form : all_linear_forms(p, n)) product = product * (one + form);
  return from_poly(product, top_degree(p, n));
}

TotalClass total_A(std::uint64_t p, unsigned n, unsigned dmax) {
  if (dmax < 1) throw std::invalid_argument("total_A needs dmax >= 1");
  TotalClass out = TotalClass::zero(p, n, dmax);
  const auto sums = power_sums(p, n, dmax);
  // (-1)^k χ_{y^k} = (-1)^{k+1} p_k.
  for (unsigned k = 1; k <= dmax; ++k) out.components[k] = scale(modp::sign(k + 1, p), sums[k - 1]);
  return out;
}

TotalClass with_dmax(const TotalClass& x, unsigned dmax) {
  TotalClass out = TotalClass::zero(x.p, x.nvars, dmax);
  for (unsigned d = 0; d <= std::min(dmax, x.dmax); ++d) out.components[d] = x.components[d];
  return out;
}

TotalClass multiply(const TotalClass& x, const TotalClass& y) {
  if (x.p != y.p || x.nvars != y.nvars) throw ContextMismatch("total classes over different rings");
  const unsigned dmax = std::min(x.dmax, y.dmax);
  TotalClass out = TotalClass::zero(x.p, x.nvars, dmax);
  for (unsigned i = 0; i <= dmax; ++i) {
    if (x.components[i].is_zero()) continue;
    for (unsigned j = 0; i + j <= dmax; ++j) {
      if (y.components[j].is_zero()) continue;
      out.components[i + j] = out.components[i + j] + x.components[i] * y.components[j];
    }
  }
  return out;
}

TotalClass series_inverse(const TotalClass& d, unsigned dmax) {
  if (d.components.empty() || d.components[0] != MultiPoly::constant(d.p, d.nvars, 1))
    throw std::invalid_argument("series inverse needs constant term 1");
  const TotalClass src = with_dmax(d, dmax);
  TotalClass e = TotalClass::zero(d.p, d.nvars, dmax);
  e.components[0] = MultiPoly::constant(d.p, d.nvars, 1);
  // E_k = -Σ_{j=1}^{k} D_j E_{k-j}.
  for (unsigned k = 1; k <= dmax; ++k) {
    MultiPoly acc(d.p, d.nvars);
    for (unsigned j = 1; j <= k; ++j)
      if (!src.components[j].is_zero() && !e.components[k - j].is_zero())
        acc = acc + src.components[j] * e.components[k - j];
    e.components[k] = -acc;
  }
  return e;
}

TotalClass a_from_inverse(std::uint64_t p, unsigned n, unsigned dmax) {
  const TotalClass d = dickson_total(p, n);
  const unsigned top = top_degree(p, n);
  TotalClass lead = TotalClass::zero(p, n, dmax);
  if (top <= dmax) lead.components[top] = -d[top];
  return multiply(lead, series_inverse(d, dmax));
}

bool newton_check(std::uint64_t p, unsigned n, unsigned dmax) {
  const unsigned top = top_degree(p, n);
  if (dmax < top) throw std::invalid_argument("newton_check needs dmax >= p^n - 1");
  const TotalClass d = with_dmax(dickson_total(p, n), dmax);
  const TotalClass product = multiply(d, total_A(p, n, dmax));
  TotalClass expected = TotalClass::zero(p, n, dmax);
  expected.components[top] = -d[top];
  return product == expected;
}

std::uint64_t product_identity_degree(std::uint64_t p, unsigned n, unsigned i) {
  if (i > n) throw std::invalid_argument("product identity index must satisfy i <= n");
  return 2 * small_pow(p, n) - small_pow(p, i) - 1;
}

int product_identity_check(std::uint64_t p, unsigned n, unsigned i) {
  const std::uint64_t k = product_identity_degree(p, n, i);
  const TotalClass d = dickson_total(p, n);
  const unsigned top = top_degree(p, n);
  const MultiPoly rhs = d[top] * d[static_cast<unsigned>(small_pow(p, n) - small_pow(p, i))];
  const MultiPoly lhs = chi_via_power_sum(p, n, k);
  if (lhs == rhs) return 1;
  if (lhs == -rhs) return -1;
  throw std::logic_error("product identity fails at p=" + std::to_string(p) + " n=" + std::to_string(n) +
                         " i=" + std::to_string(i));
}

std::vector<std::uint64_t> nonzero_power_sum_degrees(std::uint64_t p, unsigned n, unsigned kmax) {
  std::vector<std::uint64_t> out;
  const auto sums = power_sums(p, n, kmax);
  for (unsigned k = 1; k <= kmax; ++k)
    if (!sums[k - 1].is_zero()) out.push_back(k);
  return out;
}

MultiPoly tensor_to_poly(const TensorClass& t) {
  if (t.ctx.r != 1) throw std::invalid_argument("polynomial image needs r = 1");
  if (t.arity > kMaxPolyVars) throw std::invalid_argument("polynomial image supports at most 8 factors");
  MultiPoly out(t.ctx.p, static_cast<unsigned>(t.arity));
  for (const auto& [tuple, c] : t.terms) {
    Exponents e{};
    for (std::size_t i = 0; i < tuple.size(); ++i) {
      if (tuple[i].a[0] != 0) throw std::invalid_argument("exterior factors have no polynomial image");
      if (tuple[i].b[0] > UINT16_MAX) throw std::overflow_error("exponent overflow");
      e[i] = static_cast<std::uint16_t>(tuple[i].b[0]);
    }
    out.add_term(e, c);
  }
  return out;
}

IndependenceWitness algebraic_independence_witness(std::uint64_t p, unsigned n, unsigned max_degree) {
  if (n < 1) throw std::invalid_argument("independence witness needs n >= 1");
  const TotalClass d = dickson_total(p, n);
  const unsigned top = top_degree(p, n);
  IndependenceWitness w{{d[top]}, 0, 0};
  for (unsigned i = 1; i < n; ++i)
    w.generators.push_back(d[top] * d[static_cast<unsigned>(small_pow(p, n) - small_pow(p, i))]);

  // Every product of generators with total multiplicity <= max_degree.
  std::vector<MultiPoly> products;
  std::vector<MultiPoly> frontier{MultiPoly::constant(p, n, 1)};
  std::vector<std::size_t> min_index{0};
  products.push_back(frontier.front());
  for (unsigned deg = 1; deg <= max_degree; ++deg) {
    std::vector<MultiPoly> next;
    std::vector<std::size_t> next_index;
    for (std::size_t f = 0; f < frontier.size(); ++f)
      for (std::size_t g = min_index[f]; g < w.generators.size(); ++g) {
        next.push_back(frontier[f] * w.generators[g]);
        next_index.push_back(g);
      }
    products.insert(products.end(), next.begin(), next.end());
    frontier = std::move(next);
    min_index = std::move(next_index);
  }

  std::map<Exponents, std::size_t, GradedLex> columns;
  for (const auto& f : products)
    for (const auto& [e, c] : f.terms()) columns.emplace(e, 0);
  std::size_t col = 0;
  for (auto& [e, idx] : columns) idx = col++;
  const Field field = Field::prime(p);
  std::vector<Vector> rows;
  for (const auto& f : products) {
    Vector row(col, field.zero());
    for (const auto& [e, c] : f.terms()) row[columns.at(e)] = field.from_int(static_cast<std::int64_t>(c));
    rows.push_back(std::move(row));
  }
  w.products = products.size();
  w.rank = rref(field, col, rows).size();
  return w;
}

}  // namespace modchar

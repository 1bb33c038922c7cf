#include "modchar/verify.hpp"

#include <chrono>
#include <map>
#include <set>
#include <sstream>

#include <boost/multiprecision/cpp_int.hpp>

#include "modchar/chi.hpp"
#include "modchar/coalg.hpp"
#include "modchar/dickson.hpp"
#include "modchar/error.hpp"

namespace modchar::verify {

namespace {

using boost::multiprecision::cpp_int;

constexpr std::size_t kMaxReported = 8;

struct Checker {
  SuiteResult& result;

  template <class Msg>
  void expect(bool ok, Msg&& msg) {
    ++result.checks;
    if (ok) return;
    result.passed = false;
    if (result.failures.size() < kMaxReported) result.failures.push_back(msg());
  }
};

std::uint64_t ipow(std::uint64_t b, unsigned e) {
  std::uint64_t out = 1;
  while (e--) out *= b;
  return out;
}

struct GridPoint {
  std::uint64_t p;
  unsigned n;
};

const std::vector<GridPoint> kPrimeGrid = {{2, 1}, {2, 2}, {2, 3}, {3, 1}, {3, 2}, {5, 1}, {5, 2}};

std::string name_of(std::uint64_t p, unsigned n) {
  return "(p=" + std::to_string(p) + ", n=" + std::to_string(n) + ")";
}

// v_p(n!) and the p-free part of n! mod p, from exact factorials.
struct FactorialTable {
  std::uint64_t p;
  std::vector<std::uint64_t> valuation;
  std::vector<Residue> unit;

  FactorialTable(std::uint64_t p, std::size_t top) : p(p) {
    cpp_int f = 1;
    for (std::size_t n = 0; n <= top; ++n) {
      if (n > 0) f *= n;
      cpp_int g = f;
      std::uint64_t v = 0;
      while (g % p == 0) {
        g /= p;
        ++v;
      }
      valuation.push_back(v);
      unit.push_back(static_cast<Residue>(g % p));
    }
  }

  Residue multinomial(const std::vector<std::uint64_t>& parts) const {
    std::uint64_t total = 0;
    std::int64_t v = 0;
    for (auto x : parts) {
      total += x;
      v -= static_cast<std::int64_t>(valuation[x]);
    }
    v += static_cast<std::int64_t>(valuation[total]);
    if (v > 0) return 0;
    Residue out = unit[total];
    for (auto x : parts) out = modp::mul(out, modp::inv(unit[x], p), p);
    return out;
  }
};

std::vector<Monomial> invariant_monomials(const CohContext& ctx, std::uint64_t max_degree) {
  std::vector<Monomial> out;
  for (std::uint64_t d = 0; d <= max_degree; ++d) {
    const auto basis = enumerate_invariant_basis(ctx, d);
    out.insert(out.end(), basis.begin(), basis.end());
  }
  return out;
}

TensorClass swap_factors(const TensorClass& t) {
  TensorClass out = TensorClass::zero(t.ctx, 2);
  for (const auto& [tuple, c] : t.terms) {
    const std::uint64_t dd = degree(tuple[0], t.ctx.p) * degree(tuple[1], t.ctx.p);
    out.add_term({tuple[1], tuple[0]}, modp::mul(c, modp::sign(dd, t.ctx.p), t.ctx.p));
  }
  return out;
}

CohClass contract_unit(const TensorClass& t, std::size_t unit_slot) {
  CohClass out{t.ctx, {}};
  for (const auto& [tuple, c] : t.terms)
    if (tuple[unit_slot].is_unit()) out.add_term(tuple[1 - unit_slot], c);
  return out;
}

// ---------------------------------------------------------------- criteria

void oracle_equivalence(Checker& ck, Profile) {
  for (const auto& [p, n] : kPrimeGrid) {
    const auto ctx = CohContext::make(p, 1);
    const unsigned kmax = static_cast<unsigned>(2 * (ipow(p, n) - 1) + 2 * p);
    const auto batch = power_sums(p, n, kmax);
    for (unsigned k = 1; k <= kmax; ++k) {
      const MultiPoly ps = power_sum(p, n, k);
      ck.expect(ps == batch[k - 1], [&] { return "power_sum batch mismatch " + name_of(p, n) + " k=" + std::to_string(k); });
      const Monomial alpha = Monomial::y_power(1, k);
      if (!is_invariant(alpha, ctx)) {
        ck.expect(ps.is_zero(), [&] {
          return "power sum of non-invariant y^" + std::to_string(k) + " is nonzero " + name_of(p, n);
        });
        continue;
      }
      const MultiPoly lhs = tensor_to_poly(chi_basic({ctx, alpha, n}));
      ck.expect(lhs == -ps, [&] {
        return "chi(y^" + std::to_string(k) + ") " + name_of(p, n) + ": " + format(lhs) + " vs " + format(-ps);
      });
    }
  }
}

void digit_sum_criterion(Checker& ck, Profile) {
  for (const auto& [p, n] : kPrimeGrid) {
    const auto ctx = CohContext::make(p, 1);
    for (std::uint64_t m = 0; m <= 300; ++m) {
      for (auto kind : {R1Kind::y, R1Kind::xy}) {
        if (kind == R1Kind::xy && p == 2) continue;
        Monomial alpha = Monomial::y_power(1, m);
        if (kind == R1Kind::xy) alpha.a[0] = 1;
        const R1Status predicted = r1_predicate(p, kind, m, n);
        std::optional<bool> searched;
        std::optional<bool> expanded;
        try {
          searched = is_chi_nonzero({ctx, alpha, n});
        } catch (const NotInvariant&) {
        }
        if (is_invariant(alpha, ctx)) expanded = !chi_basic({ctx, alpha, n}).is_zero();
        const std::string label = format(alpha, ctx) + " " + name_of(p, n);
        ck.expect(searched == expanded, [&] { return "search and expansion disagree on " + label; });
        switch (predicted) {
          case R1Status::undefined:
            ck.expect(!searched.has_value(), [&] { return "predicate says undefined for " + label; });
            break;
          case R1Status::zero:
            ck.expect(searched == false, [&] { return "predicate says zero for " + label; });
            break;
          case R1Status::nonzero:
          case R1Status::nonzero_nonnilpotent:
            ck.expect(searched == true, [&] { return "predicate says nonzero for " + label; });
            break;
        }
        // The polynomial image of a nonzero pure y-class is a nonzero element of a
        // domain, so its square is nonzero as well.
        if (kind == R1Kind::y && expanded == true && m <= 40) {
          const MultiPoly f = tensor_to_poly(chi_basic({ctx, alpha, n}));
          ck.expect(!(f * f).is_zero(), [&] { return "square of polynomial image vanishes for " + label; });
        }
      }
    }
  }
}

void lowest_degrees(Checker& ck, Profile) {
  for (const auto& [p, n] : kPrimeGrid) {
    const auto ctx = CohContext::make(p, 1);
    const std::uint64_t pn = ipow(p, n);
    for (auto kind : {R1Kind::y, R1Kind::xy}) {
      if (kind == R1Kind::xy && p == 2) continue;
      std::optional<std::uint64_t> lowest;
      for (std::uint64_t m = 0; m <= 2 * pn && !lowest; ++m) {
        Monomial alpha = Monomial::y_power(1, m);
        if (kind == R1Kind::xy) alpha.a[0] = 1;
        if (is_invariant(alpha, ctx) && is_chi_nonzero({ctx, alpha, n})) lowest = degree(alpha, p);
      }
      std::uint64_t closed = 0;
      std::uint64_t via_digits = 0;
      if (kind == R1Kind::y) {
        closed = p == 2 ? pn - 1 : 2 * pn - 2;
        const std::uint64_t m = min_m_for_digit_sum(p, n * (p - 1));
        via_digits = p == 2 ? m : 2 * m;
      } else {
        closed = 2 * pn - 2 * (pn / p) - 1;
        via_digits = 2 * min_m_for_digit_sum(p, n * (p - 1) - 1) + 1;
      }
      const std::string label = std::string(kind == R1Kind::y ? "y^m " : "xy^m ") + name_of(p, n);
      ck.expect(lowest == closed, [&] {
        return "lowest nonzero degree of " + label + " is " + (lowest ? std::to_string(*lowest) : "none") +
               ", closed form " + std::to_string(closed);
      });
      ck.expect(via_digits == closed, [&] { return "digit-sum bound disagrees with closed form for " + label; });
    }
  }
}

void coalgebra_laws(Checker& ck, Profile) {
  const std::vector<std::pair<std::uint64_t, unsigned>> fields = {{2, 1}, {3, 1}, {2, 2}, {5, 1}, {2, 3}, {3, 2}};
  for (const auto& [p, r] : fields) {
    const auto ctx = CohContext::make(p, r);
    for (const auto& m : invariant_monomials(ctx, 12)) {
      const std::string label = format(m, ctx) + " (q=" + std::to_string(ctx.q()) + ")";
      const TensorClass d = coproduct(m, ctx);
      ck.expect(apply_coproduct_at(d, 0) == apply_coproduct_at(d, 1), [&] { return "coassociativity fails at " + label; });
      ck.expect(swap_factors(d) == d, [&] { return "graded cocommutativity fails at " + label; });
      const CohClass self = CohClass::of(ctx, m);
      ck.expect(contract_unit(d, 0) == self && contract_unit(d, 1) == self, [&] { return "counit law fails at " + label; });
      for (const auto& [pair, c] : d.terms) {
        ck.expect(is_invariant(pair[0], ctx) && is_invariant(pair[1], ctx),
                  [&] { return "non-invariant factor in coproduct of " + label; });
        ck.expect(weight(pair[0], p) + weight(pair[1], p) == weight(m, p),
                  [&] { return "weights do not add in coproduct of " + label; });
      }
    }
  }
}

void wedge_consistency(Checker& ck, Profile) {
  const std::vector<std::pair<std::uint64_t, unsigned>> fields = {{2, 1}, {3, 1}, {2, 2}};
  for (const auto& [p, r] : fields) {
    const auto ctx = CohContext::make(p, r);
    for (const auto& alpha : invariant_monomials(ctx, 10))
      for (std::size_t a = 1; a <= 3; ++a)
        for (std::size_t b = 1; a + b <= 4; ++b)
          ck.expect(wedge_split_check(ctx, alpha, a, b), [&] {
            return "wedge formula fails for " + format(alpha, ctx) + " (q=" + std::to_string(ctx.q()) +
                   ", a=" + std::to_string(a) + ", b=" + std::to_string(b) + ")";
          });
  }
}

void dickson_suite(Checker& ck, Profile profile) {
  std::vector<GridPoint> grid = {{2, 1}, {2, 2}, {2, 3}, {3, 1}, {3, 2}, {5, 1}, {5, 2}};
  if (profile == Profile::full) grid.push_back({3, 3});
  for (const auto& [p, n] : grid) {
    const std::uint64_t pn = ipow(p, n);
    const unsigned top = static_cast<unsigned>(pn - 1);
    const unsigned dmax = 3 * top;
    const std::string label = name_of(p, n);
    const TotalClass d = dickson_total(p, n);

    std::set<std::uint64_t> allowed;
    for (unsigned i = 0; i <= n; ++i) allowed.insert(pn - ipow(p, i));
    for (unsigned k = 0; k <= top; ++k)
      ck.expect(d[k].is_zero() || allowed.count(k), [&] { return "D_" + std::to_string(k) + " nonzero at " + label; });
    for (auto k : allowed)
      ck.expect(!d[static_cast<unsigned>(k)].is_zero(), [&] { return "D_" + std::to_string(k) + " vanishes at " + label; });

    MultiPoly product = MultiPoly::constant(p, n, 1);
    for (const auto& form : all_linear_forms(p, n))
      if (!form.is_zero()) product = product * form;
    ck.expect(product == d[top], [&] { return "top Dickson invariant is not the product of the forms at " + label; });

    ck.expect(newton_check(p, n, dmax), [&] { return "Newton identity fails at " + label; });
    ck.expect(a_from_inverse(p, n, dmax) == total_A(p, n, dmax), [&] { return "-D_top/D differs from A at " + label; });

    std::set<std::uint64_t> expected_nonzero;
    for (unsigned i = 0; i <= n; ++i) {
      expected_nonzero.insert(product_identity_degree(p, n, i));
      try {
        const int s = product_identity_check(p, n, i);
        ck.expect(s == 1 || s == -1, [&] { return "bad sign at " + label; });
      } catch (const std::logic_error& e) {
        ck.expect(false, [&] { return std::string(e.what()); });
      }
    }
    const auto found = nonzero_power_sum_degrees(p, n, 2 * top);
    ck.expect(std::set<std::uint64_t>(found.begin(), found.end()) == expected_nonzero,
              [&] { return "unexpected nonzero chi_{y^k}, k <= 2(p^n-1), at " + label; });

    if (n == 2 && p <= 3) {
      const auto w = algebraic_independence_witness(p, n, 3);
      ck.expect(w.independent(), [&] {
        return "relation of degree <= 3 among Dickson products at " + label + ": rank " + std::to_string(w.rank) + " of " +
               std::to_string(w.products);
      });
    }
  }
}

void filtration_suite(Checker& ck, Profile profile) {
  std::mt19937_64 rng(20240611);
  const std::vector<Field> fields = {Field(2, 1), Field(3, 1), Field(2, 2)};
  const std::size_t count = profile == Profile::full ? 600 : 200;
  auto check_chain = [&](const Rep& rep, const std::string& label) {
    const auto a = j_filtration(rep);
    const auto b = j_filtration_augmentation(rep);
    ck.expect(a == b, [&] { return "J-filtration routes disagree on " + label; });
    bool strict = true;
    for (std::size_t i = 1; i < a.size(); ++i) strict = strict && a[i - 1].dim() < a[i].dim();
    ck.expect(strict && a.back().is_full() && a.size() <= std::max<std::size_t>(rep.dim, 1),
              [&] { return "J-filtration not strict or unsaturated on " + label; });
  };
  for (std::size_t t = 0; t < count; ++t) {
    const Field& f = fields[t % fields.size()];
    const std::size_t s = 1 + rng() % 3;
    const Rep rep = random_rep(rng, f, 8, s);
    const std::string label = "random rep #" + std::to_string(t);
    ck.expect(validate(rep).empty(), [&] { return label + " is not valid"; });
    check_chain(rep, label);
  }

  struct Prn {
    std::uint64_t p;
    unsigned r;
    std::size_t n;
  };
  const std::vector<Prn> grid = {{2, 1, 1}, {2, 1, 2}, {2, 1, 3}, {3, 1, 1}, {3, 1, 2},
                                 {2, 2, 1}, {2, 2, 2}, {5, 1, 1}};
  for (const auto& [p, r, n] : grid) {
    const std::string label = "big_rep(" + std::to_string(p) + "," + std::to_string(r) + "," + std::to_string(n) + ")";
    const Rep big = big_rep(p, r, n);
    check_chain(big, label);
    const Rep j1 = restrict(big, stage(j_filtration(big), 1));
    try {
      const Matrix t = iso_to_basic(j1);
      ck.expect(conjugate(j1, t) == basic_rep(big.field, n).rep, [&] { return "J_1 of " + label + " not conjugate to basic"; });
    } catch (const std::exception& e) {
      ck.expect(false, [&] { return "J_1 of " + label + ": " + e.what(); });
    }
  }
  for (const Field& f : fields) {
    const Rep xi = sym_power_rep(f);
    const std::size_t dim = xi.dim * xi.dim;
    for (std::size_t i = 0; i < dim; ++i)
      ck.expect(j_tensor_check(xi, xi, i), [&] {
        return "J_" + std::to_string(i) + " of xi (x) xi is not the sum of products (q=" + std::to_string(f.q()) + ")";
      });
    check_chain(tensor_rep(xi, xi), "xi (x) xi");
  }
}

void classification_suite(Checker& ck, Profile) {
  for (const auto& [p, r] : std::vector<std::pair<std::uint64_t, unsigned>>{{2, 1}, {3, 1}, {2, 2}, {5, 1}}) {
    const std::string q = "(q=" + std::to_string(ipow(p, r)) + ")";
    for (std::size_t a = 1; a <= 2; ++a)
      for (std::size_t b = 1; b <= 2; ++b) {
        const Rep ds = direct_sum(basic_rep(p, r, a).rep, basic_rep(p, r, b).rep);
        ck.expect(classify(ds).verdict == Verdict::zero, [&] { return "direct sum of basics not Zero " + q; });
        const auto w = classify(wedge_sum(basic_rep(p, r, a), basic_rep(p, r, b)).rep);
        ck.expect(w.verdict == Verdict::reduced && w.quotient_rank == r * (a + b),
                  [&] { return "wedge of basics has the wrong quotient rank " + q; });
      }
    const Rep dual = dual_rep(basic_rep(p, r, 2).rep);
    ck.expect(classify(dual).verdict == Verdict::zero, [&] { return "dual of basic(2) not Zero " + q; });
  }

  for (std::uint64_t p : {2, 3})
    for (unsigned n : {1U, 2U}) {
      const Rep reg = regular_rep(p, n);
      const Rep basic = basic_rep(p, 1, n).rep;
      const auto red = classify(reg);
      ck.expect(red.verdict == Verdict::reduced && red.quotient_rank == n &&
                    *red.projection == Matrix::identity(Field::prime(p), n),
                [&] { return "regular rep " + name_of(p, n) + " does not reduce to the identity projection"; });
      for (std::uint64_t k = 1; k <= 2 * (ipow(p, n) - 1); ++k) {
        const MultiPoly expected = chi_via_power_sum(p, n, k);
        ck.expect(chi_of_rep(reg, k) == expected && chi_of_rep(basic, k) == expected,
                  [&] { return "chi_{y^" + std::to_string(k) + "} of regular rep differs from basic " + name_of(p, n); });
      }
    }

  // basic(2) seen through F_p^3 → F_p^2, (a, b, c) ↦ (a, b + c): the third generator
  // duplicates the second.
  for (std::uint64_t p : {2, 3, 5}) {
    const std::vector<std::vector<std::uint64_t>> phi = {{1, 0, 0}, {0, 1, 1}};
    const Rep rep = pullback(basic_rep(p, 1, 2).rep, phi);
    const auto red = classify(rep);
    const Field fp = Field::prime(p);
    ck.expect(red.verdict == Verdict::reduced && red.quotient_rank == 2 &&
                  *red.projection == Matrix::from_ints(fp, {{1, 0, 0}, {0, 1, 1}}),
              [&] { return "pullback classification wrong at p=" + std::to_string(p); });
    const std::vector<MultiPoly> images = {MultiPoly::linear_form(p, {1, 0, 0}), MultiPoly::linear_form(p, {0, 1, 1})};
    for (std::uint64_t k = 1; k <= 2 * (p * p - 1); ++k)
      ck.expect(chi_of_rep(rep, k) == pulled_back_power_sum_oracle(p, images, k),
                [&] { return "pullback chi_{y^" + std::to_string(k) + "} wrong at p=" + std::to_string(p); });
  }
}

void arithmetic_suite(Checker& ck, Profile) {
  for (std::uint64_t p : {2, 3, 5, 7}) {
    // Exact Pascal triangle.
    std::vector<cpp_int> row{1};
    for (std::uint64_t m = 0; m <= 300; ++m) {
      for (std::uint64_t k = 0; k <= m; ++k) {
        const auto exact = static_cast<Residue>(row[k] % p);
        ck.expect(lucas_binomial(p, m, k) == exact, [&] {
          return "C(" + std::to_string(m) + "," + std::to_string(k) + ") mod " + std::to_string(p);
        });
      }
      ck.expect(lucas_binomial(p, m, m + 1) == 0, [&] { return "C(m, m+1) must vanish"; });
      std::vector<cpp_int> next(row.size() + 1);
      next.front() = next.back() = 1;
      for (std::size_t k = 1; k < row.size(); ++k) next[k] = row[k - 1] + row[k];
      row = std::move(next);
    }
    for (std::uint64_t m : {0, 17, 100, 299})
      for (std::uint64_t k = 0; k <= m; k += 7)
        ck.expect(binomial_oracle(p, m, k) == lucas_binomial(p, m, k), [&] { return "factorial oracle disagrees"; });

    const FactorialTable table(p, 400);
    std::vector<std::uint64_t> parts;
    std::size_t mismatches = 0;
    std::size_t total = 0;
    // Non-decreasing tuples, each also fed in reverse: the value is symmetric in the parts
    // but the running-sum evaluation is not.
    auto recurse = [&](auto&& self, std::size_t depth, std::uint64_t from) -> void {
      if (!parts.empty()) {
        ++total;
        const Residue got = multinomial_mod_p(p, parts);
        const std::vector<std::uint64_t> reversed(parts.rbegin(), parts.rend());
        const bool ok = got == table.multinomial(parts) && got == multinomial_mod_p(p, reversed) &&
                        ((got != 0) == no_carry({p, parts}));
        if (!ok && mismatches++ < 3) {
          std::ostringstream os;
          os << "multinomial mod " << p << " of (";
          for (auto x : parts) os << x << ' ';
          os << ")";
          ck.expect(false, [&] { return os.str(); });
        }
      }
      if (depth == 4) return;
      for (std::uint64_t x = from; x <= 100; ++x) {
        parts.push_back(x);
        self(self, depth + 1, x);
        parts.pop_back();
      }
    };
    recurse(recurse, 0, 0);
    ck.expect(mismatches == 0, [&] { return std::to_string(mismatches) + " multinomial mismatches of " + std::to_string(total); });

    for (std::uint64_t s = 0; s <= 40; ++s) {
      const std::uint64_t expected = min_m_oracle(p, s);
      ck.expect(min_m_for_digit_sum(p, s) == expected, [&] {
        return "min m with s_" + std::to_string(p) + "(m)=" + std::to_string(s);
      });
      if (expected <= 2'000'000) {
        std::uint64_t m = 0;
        while (digit_sum(p, m) != s) ++m;
        ck.expect(m == expected, [&] { return "brute-force minimum disagrees at s=" + std::to_string(s); });
      }
    }
  }

  for (std::uint64_t q : {2, 3, 4, 5, 7, 8, 9}) {
    // Gaussian binomials by the q-Pascal rule, compared with the product formula.
    std::vector<std::vector<cpp_int>> pascal(9, std::vector<cpp_int>(9, 0));
    for (unsigned a = 0; a <= 8; ++a) {
      pascal[a][0] = 1;
      for (unsigned b = 1; b <= a; ++b)
        pascal[a][b] = pascal[a - 1][b - 1] + boost::multiprecision::pow(cpp_int(q), b) * pascal[a - 1][b];
    }
    for (unsigned a = 0; a <= 8; ++a)
      for (unsigned b = 0; b <= a; ++b) {
        const cpp_int g = gaussian_binomial(q, a, b);
        ck.expect(g == pascal[a][b] && g % q == 1, [&] {
          return "Gaussian binomial (" + std::to_string(a) + " " + std::to_string(b) + ")_" + std::to_string(q);
        });
      }
  }
}

void witness_suite(Checker& ck, Profile) {
  for (std::uint64_t p : {2, 3, 5})
    for (unsigned r = 1; r <= 3; ++r) {
      const auto ctx = CohContext::make(p, r);
      for (std::size_t n = 1; n <= 3; ++n) {
        const std::uint64_t pn = ipow(p, static_cast<unsigned>(n));
        for (auto kind : {WitnessKind::y_power, WitnessKind::mixed}) {
          if (kind == WitnessKind::mixed && p == 2) continue;
          const std::string label = std::string(kind == WitnessKind::y_power ? "y-power" : "mixed") + " witness (p=" +
                                    std::to_string(p) + ", r=" + std::to_string(r) + ", n=" + std::to_string(n) + ")";
          const Monomial alpha = witness_alpha(p, r, n, kind);
          const auto split = witness_splitting(p, r, n, kind);
          const auto c = term_coefficient({ctx, alpha, n}, split);
          ck.expect(c.has_value() && *c != 0, [&] { return label + ": splitting is not a nonzero admissible term"; });
          ck.expect(is_chi_nonzero({ctx, alpha, n}), [&] { return label + ": term search finds nothing"; });
          std::uint64_t closed = 0;
          if (kind == WitnessKind::y_power) {
            closed = p == 2 ? r * (pn - 1) : 2 * r * (pn - 1);
          } else {
            closed = r * (2 * pn - 2 * (pn / p) - 1);
          }
          ck.expect(degree(alpha, p) == closed && witness_degree(p, r, n, kind) == closed,
                    [&] { return label + ": degree differs from the closed form"; });
        }
        const auto rows = universal_table(p, r, n);
        const std::size_t classes = p == 2 ? 1 : 2;
        ck.expect(rows.size() == classes * (pn - 1), [&] { return "table has the wrong number of rows"; });
        for (const auto& row : rows) {
          const auto kind = row.status == ClassStatus::non_nilpotent ? WitnessKind::y_power : WitnessKind::mixed;
          ck.expect(row.N >= 2 && row.N <= pn && row.degree == witness_degree(p, r, n, kind) &&
                        row.alpha == witness_alpha(p, r, n, kind),
                    [&] { return "table row disagrees with the witness at N=" + std::to_string(row.N); });
        }
      }
    }
}

using SuiteFn = void (*)(Checker&, Profile);

struct SuiteEntry {
  const char* name;
  SuiteFn fn;
};

const SuiteEntry kSuites[kCriteria] = {
    {"oracle equivalence: chi(y^k) = -power sum", oracle_equivalence},
    {"digit-sum criterion vs term search", digit_sum_criterion},
    {"lowest-degree classes", lowest_degrees},
    {"coalgebra laws", coalgebra_laws},
    {"wedge consistency", wedge_consistency},
    {"Dickson identities", dickson_suite},
    {"J-filtration", filtration_suite},
    {"classification", classification_suite},
    {"arithmetic oracles", arithmetic_suite},
    {"witness splittings and degree tables", witness_suite},
};

}  // namespace

std::string criterion_name(int criterion) {
  if (criterion < 1 || criterion > kCriteria) throw std::out_of_range("no such criterion");
  return kSuites[criterion - 1].name;
}

SuiteResult run_criterion(int criterion, Profile profile) {
  SuiteResult result;
  result.criterion = criterion;
  result.name = criterion_name(criterion);
  Checker ck{result};
  const auto start = std::chrono::steady_clock::now();
  try {
    kSuites[criterion - 1].fn(ck, profile);
  } catch (const std::exception& e) {
    ck.expect(false, [&] { return std::string("exception: ") + e.what(); });
  }
  result.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return result;
}

std::vector<SuiteResult> run_all(Profile profile, const std::function<void(const SuiteResult&)>& on_result) {
  std::vector<SuiteResult> out;
  for (int c = 1; c <= kCriteria; ++c) {
    out.push_back(run_criterion(c, profile));
    if (on_result) on_result(out.back());
  }
  return out;
}

Residue binomial_oracle(std::uint64_t p, std::uint64_t m, std::uint64_t k) {
  if (k > m) return 0;
  cpp_int num = 1;
  cpp_int den = 1;
  for (std::uint64_t i = 1; i <= m; ++i) num *= i;
  for (std::uint64_t i = 1; i <= k; ++i) den *= i;
  for (std::uint64_t i = 1; i <= m - k; ++i) den *= i;
  return static_cast<Residue>((num / den) % p);
}

std::uint64_t min_m_oracle(std::uint64_t p, std::uint64_t s) {
  // m = p m' + d has s_p(m) = s_p(m') + d, and p m' + d grows with m'.
  std::vector<std::uint64_t> best{0};
  for (std::uint64_t t = 1; t <= s; ++t) {
    std::uint64_t b = UINT64_MAX;
    for (std::uint64_t d = 0; d < p && d <= t; ++d) {
      if (d == 0) continue;  // p m' is beaten by m' itself
      const std::uint64_t prev = best[t - d];
      if (prev <= (UINT64_MAX - d) / p) b = std::min(b, prev * p + d);
    }
    best.push_back(b);
  }
  return best[s];
}

MultiPoly pulled_back_power_sum_oracle(std::uint64_t p, const std::vector<MultiPoly>& images, std::uint64_t k) {
  const unsigned vars = images.empty() ? 0 : images.front().nvars();
  MultiPoly total(p, vars);
  const auto n = images.size();
  std::vector<Residue> c(n, 0);
  while (true) {
    MultiPoly form(p, vars);
    for (std::size_t i = 0; i < n; ++i) form = form + scale(c[i], images[i]);
    MultiPoly power = MultiPoly::constant(p, vars, 1);
    for (std::uint64_t e = 0; e < k; ++e) power = power * form;
    total = total + power;
    std::size_t i = 0;
    while (i < n && c[i] == p - 1) c[i++] = 0;
    if (i == n) break;
    ++c[i];
  }
  return -total;
}

Rep random_rep(std::mt19937_64& rng, const Field& field, std::size_t max_dim, std::size_t rank) {
  const std::uint64_t p = field.p();
  auto random_map = [&](std::size_t rows) {
    std::vector<std::vector<std::uint64_t>> phi(rows, std::vector<std::uint64_t>(rank));
    for (auto& row : phi)
      for (auto& v : row) v = rng() % p;
    return phi;
  };
  auto random_invertible = [&](std::size_t d) {
    while (true) {
      Matrix t(field, d, d);
      for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) t(i, j) = field.element(rng() % field.q());
      if (inverse(t)) return t;
    }
  };

  const unsigned choice = static_cast<unsigned>(rng() % 7);
  if (max_dim >= 2 && choice == 0) {
    const std::size_t n = 1 + rng() % std::min<std::size_t>(max_dim - 1, 3);
    return pullback(basic_rep(field, n).rep, random_map(field.r() * n));
  }
  if (max_dim >= field.p() && choice == 1) return pullback(sym_power_rep(field), random_map(field.r()));
  if (max_dim >= 2 && choice == 2) {
    // A single unipotent Jordan block of size <= p, so its p-th power is I.
    const std::size_t d = 2 + rng() % (std::min<std::size_t>(max_dim, p) - 1);
    Matrix j = Matrix::identity(field, d);
    for (std::size_t i = 0; i + 1 < d; ++i) j(i, i + 1) = field.one();
    return pullback(Rep{field, d, {j}}, random_map(1));
  }
  if (max_dim >= 2 && choice == 3) {
    const std::size_t left = 1 + rng() % (max_dim - 1);
    return diagonal_sum(random_rep(rng, field, left, rank), random_rep(rng, field, max_dim - left, rank));
  }
  if (max_dim >= 4 && choice == 4) {
    const Rep a = random_rep(rng, field, 2, rank);
    const Rep b = random_rep(rng, field, max_dim / a.dim, rank);
    return diagonal_tensor(a, b);
  }
  if (max_dim >= 2 && choice == 5) {
    const Rep inner = random_rep(rng, field, max_dim, rank);
    return conjugate(inner, random_invertible(inner.dim));
  }
  if (choice == 6 || max_dim < 2) return trivial_rep(field, 1 + rng() % max_dim, rank);
  return random_rep(rng, field, max_dim, rank);
}

}  // namespace modchar::verify

#include <doctest.h>

#include <boost/multiprecision/cpp_int.hpp>

#include "modchar/coalg.hpp"
#include "modchar/error.hpp"

using namespace modchar;
using boost::multiprecision::cpp_int;

namespace {

Monomial y(std::uint64_t e) { return Monomial::y_power(1, e); }
Monomial mono(std::vector<std::uint8_t> a, std::vector<std::uint64_t> b) { return {std::move(a), std::move(b)}; }

cpp_int factorial(unsigned m) {
  cpp_int f = 1;
  for (unsigned i = 2; i <= m; ++i) f *= i;
  return f;
}

TensorClass swap(const TensorClass& t) {
  TensorClass out = TensorClass::zero(t.ctx, 2);
  for (const auto& [tuple, c] : t.terms) {
    const auto d0 = degree(tuple[0], t.ctx.p), d1 = degree(tuple[1], t.ctx.p);
    const Residue sign = (d0 * d1) % 2 ? t.ctx.p - 1 : 1;
    out.add_term({tuple[1], tuple[0]}, c * sign);
  }
  return out;
}

}  // namespace

TEST_CASE("lucas_binomial examples") {
  CHECK(lucas_binomial(2, 3, 1) == 1);
  CHECK(lucas_binomial(3, 4, 2) == 0);
  CHECK(lucas_binomial(7, 12, 0) == 1);
  CHECK(lucas_binomial(5, 3, 4) == 0);
}

TEST_CASE("lucas_binomial matches factorials") {
  for (std::uint64_t p : {2, 3, 5, 7})
    for (unsigned m = 0; m <= 120; ++m) {
      const cpp_int fm = factorial(m);
      for (unsigned k = 0; k <= m; ++k) {
        const cpp_int c = fm / (factorial(k) * factorial(m - k));
        REQUIRE(lucas_binomial(p, m, k) == static_cast<Residue>(c % p));
      }
    }
}

TEST_CASE("no_carry and multinomials") {
  CHECK(no_carry({3, {2, 6}}));
  CHECK_FALSE(no_carry({2, {1, 1}}));
  CHECK(no_carry({5, {77}}));
  CHECK(multinomial_mod_p(3, std::vector<std::uint64_t>{2, 6}) == 1);
  CHECK(multinomial_mod_p(2, std::vector<std::uint64_t>{1, 2}) == 1);
  CHECK(multinomial_mod_p(7, std::vector<std::uint64_t>{40}) == 1);
  for (std::uint64_t p : {2, 3, 5})
    for (std::uint64_t a = 0; a <= 40; ++a)
      for (std::uint64_t b = 0; b <= 40; ++b)
        for (std::uint64_t c = 0; c <= 10; ++c) {
          const std::vector<std::uint64_t> parts = {a, b, c};
          const cpp_int exact = factorial(a + b + c) / (factorial(a) * factorial(b) * factorial(c));
          REQUIRE(multinomial_mod_p(p, parts) == static_cast<Residue>(exact % p));
          REQUIRE((multinomial_mod_p(p, parts) != 0) == no_carry({p, parts}));
        }
}

TEST_CASE("coproduct examples") {
  const auto c2 = CohContext::make(2, 1);
  TensorClass expected = TensorClass::zero(c2, 2);
  for (std::uint64_t k = 0; k <= 3; ++k) expected.add_term({y(3 - k), y(k)}, 1);
  CHECK(coproduct(y(3), c2) == expected);

  TensorClass sq = TensorClass::zero(c2, 2);
  sq.add_term({y(2), y(0)}, 1);
  sq.add_term({y(0), y(2)}, 1);
  CHECK(coproduct(y(2), c2) == sq);

  const auto c4 = CohContext::make(2, 2);
  const Monomial y01 = mono({0, 0}, {1, 1});
  TensorClass prim = TensorClass::zero(c4, 2);
  prim.add_term({y01, Monomial::unit(2)}, 1);
  prim.add_term({Monomial::unit(2), y01}, 1);
  CHECK(coproduct(y01, c4) == prim);

  CHECK_THROWS_AS(coproduct(mono({0, 0}, {1, 0}), c4), NotInvariant);
}

TEST_CASE("exterior splittings carry the shuffle sign") {
  const auto c9 = CohContext::make(3, 2);
  const Monomial alpha = mono({1, 1}, {5, 5});
  REQUIRE(is_invariant(alpha, c9));
  const TensorClass d = coproduct(alpha, c9);
  // x1 y0^5 (x) x0 y1^5 reorders x0 x1 once.
  const Monomial left = mono({0, 1}, {5, 0}), right = mono({1, 0}, {0, 5});
  REQUIRE(is_invariant(left, c9));
  REQUIRE(is_invariant(right, c9));
  CHECK(d.coefficient({left, right}) == 2);
  CHECK(d.coefficient({right, left}) == 1);
  CHECK(shuffle_sign(c9, std::vector<Monomial>{mono({0, 1}, {0, 0}), mono({1, 0}, {0, 0})}) == 2);
  CHECK(shuffle_sign(c9, std::vector<Monomial>{mono({1, 0}, {0, 0}), mono({0, 1}, {0, 0})}) == 1);
}

TEST_CASE("iterated coproduct") {
  const auto c2 = CohContext::make(2, 1);
  CHECK(iterated_coproduct(y(3), c2, 1) == TensorClass::of(c2, {y(3)}));
  CHECK(iterated_coproduct(y(5), c2, 2) == coproduct(y(5), c2));
  const TensorClass d2 = iterated_coproduct(y(3), c2, 3);
  CHECK(d2.terms.size() == 9);
  for (const auto& [tuple, c] : d2.terms) {
    CHECK(c == 1);
    CHECK(no_carry({2, {tuple[0].b[0], tuple[1].b[0], tuple[2].b[0]}}));
  }
  CHECK(d2.coefficient({y(1), y(1), y(1)}) == 0);
}

TEST_CASE("coalgebra laws") {
  for (auto [p, r] : std::vector<std::pair<std::uint64_t, unsigned>>{{2, 1}, {3, 1}, {2, 2}, {5, 1}, {2, 3}, {3, 2}}) {
    const auto ctx = CohContext::make(p, r);
    for (std::uint64_t d = 0; d <= 12; ++d)
      for (const auto& m : enumerate_invariant_basis(ctx, d)) {
        const TensorClass delta = coproduct(m, ctx);
        REQUIRE(apply_coproduct_at(delta, 0) == apply_coproduct_at(delta, 1));
        REQUIRE(swap(delta) == delta);
        CohClass left{ctx, {}}, right{ctx, {}};
        for (const auto& [tuple, c] : delta.terms) {
          REQUIRE(is_invariant(tuple[0], ctx));
          REQUIRE(is_invariant(tuple[1], ctx));
          REQUIRE(weight(tuple[0], p) + weight(tuple[1], p) == weight(m, p));
          left.add_term(tuple[1], c * counit(CohClass::of(ctx, tuple[0])));
          right.add_term(tuple[0], c * counit(CohClass::of(ctx, tuple[1])));
        }
        REQUIRE(left == CohClass::of(ctx, m));
        REQUIRE(right == CohClass::of(ctx, m));
      }
  }
}

TEST_CASE("counit") {
  const auto c5 = CohContext::make(5, 1);
  CHECK(counit(CohClass::of(c5, Monomial::unit(1))) == 1);
  CHECK(counit(CohClass::of(c5, y(4))) == 0);
  CHECK(counit(CohClass::of(c5, Monomial::unit(1), 3) + CohClass::of(c5, y(4))) == 3);
}

TEST_CASE("gaussian binomials") {
  CHECK(gaussian_binomial(2, 4, 2) == 35);
  CHECK(gaussian_binomial(3, 3, 1) == 13);
  CHECK(gaussian_binomial(5, 6, 0) == 1);
  CHECK(gaussian_binomial(4, 2, 3) == 0);
  for (std::uint64_t q : {2, 3, 4, 5, 7, 8, 9})
    for (unsigned a = 0; a <= 8; ++a)
      for (unsigned b = 0; b <= a; ++b) CHECK(gaussian_binomial(q, a, b) % q == 1);
}

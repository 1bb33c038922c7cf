#include <doctest.h>

#include <random>

#include "modchar/poly.hpp"

using namespace modchar;

namespace {

Exponents ex(std::initializer_list<std::uint16_t> e) {
  Exponents out{};
  std::copy(e.begin(), e.end(), out.begin());
  return out;
}

MultiPoly random_poly(std::mt19937_64& rng, std::uint64_t p, unsigned nvars, unsigned max_degree) {
  MultiPoly f(p, nvars);
  for (int t = 0; t < 5; ++t) {
    Exponents e{};
    for (unsigned i = 0; i < nvars; ++i) e[i] = static_cast<std::uint16_t>(rng() % (max_degree + 1));
    f.add_term(e, rng() % p);
  }
  return f;
}

}  // namespace

TEST_CASE("graded lex order") {
  GradedLex less;
  CHECK(less(ex({1}), ex({0, 2})));
  CHECK(less(ex({2, 1}), ex({1, 2})));
  CHECK_FALSE(less(ex({1, 2}), ex({2, 1})));
}

TEST_CASE("construction and formatting") {
  const MultiPoly z1 = MultiPoly::variable(2, 2, 0), z2 = MultiPoly::variable(2, 2, 1);
  CHECK(format(z1 * z1 * z2 + z1 * z2 * z2) == "z1^2 z2 + z1 z2^2");
  CHECK(format(MultiPoly::variable(3, 1, 0) * MultiPoly::constant(3, 1, 2)) == "2 z");
  CHECK(format(MultiPoly(5, 3)) == "0");
  CHECK(format(MultiPoly::constant(5, 2, 4)) == "4");
  const MultiPoly l = MultiPoly::linear_form(3, {1, 2});
  CHECK(l.coefficient(ex({0, 1})) == 2);
  CHECK((l + scale(2, l)).is_zero());
}

TEST_CASE("ring laws on random polynomials") {
  std::mt19937_64 rng(5);
  for (std::uint64_t p : {2, 3, 5})
    for (int trial = 0; trial < 200; ++trial) {
      const MultiPoly a = random_poly(rng, p, 3, 3), b = random_poly(rng, p, 3, 3), c = random_poly(rng, p, 3, 3);
      REQUIRE(a * b == b * a);
      REQUIRE((a * b) * c == a * (b * c));
      REQUIRE(a * (b + c) == a * b + a * c);
      REQUIRE((a - a).is_zero());
      REQUIRE(a + (-a) == MultiPoly(p, 3));
      REQUIRE(pow(a, 3) == a * a * a);
      REQUIRE(multiply_truncated(a, b, 4) == [&] {
        MultiPoly full = a * b, out(p, 3);
        for (unsigned d = 0; d <= 4; ++d) out = out + full.component(d);
        return out;
      }());
    }
}

TEST_CASE("frobenius is additive") {
  const MultiPoly l = MultiPoly::linear_form(3, {1, 1, 2});
  const MultiPoly l3 = pow(l, 3);
  MultiPoly expected(3, 3);
  expected.add_term(ex({3}), 1);
  expected.add_term(ex({0, 3}), 1);
  expected.add_term(ex({0, 0, 3}), 2);
  CHECK(l3 == expected);
  CHECK(l3.is_homogeneous());
  CHECK(l3.degree() == 3);
}

TEST_CASE("substitution") {
  const MultiPoly z1 = MultiPoly::variable(2, 2, 0), z2 = MultiPoly::variable(2, 2, 1);
  const MultiPoly f = z1 * z1 * z2 + z1 * z2 * z2;
  const MultiPoly a = MultiPoly::variable(2, 3, 0);
  const MultiPoly bc = MultiPoly::variable(2, 3, 1) + MultiPoly::variable(2, 3, 2);
  CHECK(substitute(f, {a, bc}) == a * a * bc + a * bc * bc);
  CHECK_THROWS(substitute(f, {a}));
}

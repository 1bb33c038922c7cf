#include <doctest.h>

#include "modchar/chi.hpp"
#include "modchar/coalg.hpp"
#include "modchar/error.hpp"
#include "modchar/verify.hpp"

using namespace modchar;

namespace {

Monomial y(std::uint64_t e) { return Monomial::y_power(1, e); }
Monomial xy(std::uint64_t e) { return {{1}, {e}}; }

}  // namespace

TEST_CASE("chi of the identity representation is alpha") {
  const auto c3 = CohContext::make(3, 1);
  CHECK(chi_basic({c3, xy(1), 1}) == TensorClass::of(c3, {xy(1)}));
  CHECK(chi_basic({c3, y(4), 1}) == TensorClass::of(c3, {y(4)}));
  CHECK(chi_basic({c3, Monomial::unit(1), 3}).is_zero());
}

TEST_CASE("chi_basic examples") {
  const auto c2 = CohContext::make(2, 1);
  TensorClass expected = TensorClass::zero(c2, 2);
  expected.add_term({y(1), y(2)}, 1);
  expected.add_term({y(2), y(1)}, 1);
  CHECK(chi_basic({c2, y(3), 2}) == expected);
  CHECK(chi_basic({c2, y(2), 2}).is_zero());
  CHECK_THROWS_AS(chi_basic({CohContext::make(3, 1), y(1), 2}), NotInvariant);
}

TEST_CASE("chi_basic drops degree-zero factors and keeps invariant ones") {
  for (auto [p, r] : std::vector<std::pair<std::uint64_t, unsigned>>{{2, 1}, {3, 1}, {2, 2}, {3, 2}}) {
    const auto ctx = CohContext::make(p, r);
    for (std::uint64_t d = 1; d <= 12; ++d)
      for (const auto& alpha : enumerate_invariant_basis(ctx, d))
        for (std::size_t n = 1; n <= 3; ++n) {
          const TensorClass chi = chi_basic({ctx, alpha, n});
          for (const auto& [tuple, c] : chi.terms) {
            REQUIRE(c != 0);
            for (const auto& m : tuple) {
              REQUIRE(is_invariant(m, ctx));
              REQUIRE(degree(m, p) > 0);
            }
            REQUIRE(term_coefficient({ctx, alpha, n}, tuple) == c);
          }
          REQUIRE(is_chi_nonzero({ctx, alpha, n}) == !chi.is_zero());
        }
  }
}

TEST_CASE("term search examples") {
  const auto c2 = CohContext::make(2, 1);
  CHECK(is_chi_nonzero({c2, y(3), 2}));
  CHECK_FALSE(is_chi_nonzero({c2, y(2), 2}));
  CHECK(is_chi_nonzero({CohContext::make(3, 1), y(8), 2}));
  const auto term = find_nonzero_term({c2, y(3), 2});
  REQUIRE(term.has_value());
  CHECK(term_coefficient({c2, y(3), 2}, *term).value_or(0) != 0);
  CHECK_FALSE(term_coefficient({c2, y(3), 2}, {y(1), y(1)}).has_value());
}

TEST_CASE("digit sums") {
  CHECK(digit_sum(2, 7) == 3);
  CHECK(digit_sum(3, 8) == 4);
  CHECK(digit_sum(5, 0) == 0);
  CHECK(min_m_for_digit_sum(2, 3) == 7);
  CHECK(min_m_for_digit_sum(3, 5) == 17);
  CHECK(min_m_for_digit_sum(7, 0) == 0);
  for (std::uint64_t p : {2, 3, 5, 7})
    for (std::uint64_t s = 0; s <= 12; ++s) {
      const std::uint64_t m = min_m_for_digit_sum(p, s);
      CHECK(digit_sum(p, m) == s);
      for (std::uint64_t k = 0; k < m; ++k) REQUIRE(digit_sum(p, k) != s);
      CHECK(verify::min_m_oracle(p, s) == m);
    }
}

TEST_CASE("r = 1 predicate") {
  CHECK(r1_predicate(2, R1Kind::y, 3, 2) == R1Status::nonzero_nonnilpotent);
  CHECK(r1_predicate(3, R1Kind::xy, 1, 1) == R1Status::nonzero);
  CHECK(r1_predicate(3, R1Kind::y, 2, 2) == R1Status::zero);
  CHECK(r1_predicate(3, R1Kind::y, 1, 1) == R1Status::undefined);
  CHECK_THROWS(r1_predicate(2, R1Kind::xy, 3, 1));
  CHECK(to_string(R1Status::nonzero_nonnilpotent) == "nonzero-nonnilpotent");
}

TEST_CASE("predicate agrees with the term search") {
  for (auto [p, n] : std::vector<std::pair<std::uint64_t, std::size_t>>{{2, 2}, {3, 2}, {5, 1}}) {
    const auto ctx = CohContext::make(p, 1);
    for (std::uint64_t m = 0; m <= 80; ++m)
      for (R1Kind kind : {R1Kind::y, R1Kind::xy}) {
        if (p == 2 && kind == R1Kind::xy) continue;
        const Monomial alpha = kind == R1Kind::y ? y(m) : xy(m);
        const R1Status s = r1_predicate(p, kind, m, n);
        if (!is_invariant(alpha, ctx)) {
          REQUIRE(s == R1Status::undefined);
          continue;
        }
        const bool nonzero = s == R1Status::nonzero || s == R1Status::nonzero_nonnilpotent;
        REQUIRE(is_chi_nonzero({ctx, alpha, n}) == nonzero);
      }
  }
}

TEST_CASE("witness classes") {
  CHECK(witness_alpha(3, 1, 2, WitnessKind::y_power) == y(8));
  CHECK(witness_degree(3, 1, 2, WitnessKind::y_power) == 16);
  CHECK(witness_alpha(3, 1, 2, WitnessKind::mixed) == xy(5));
  CHECK(witness_degree(3, 1, 2, WitnessKind::mixed) == 11);
  CHECK(witness_alpha(2, 1, 3, WitnessKind::y_power) == y(7));
  CHECK(witness_degree(2, 1, 3, WitnessKind::y_power) == 7);
  CHECK_THROWS(witness_alpha(2, 1, 2, WitnessKind::mixed));
  for (std::uint64_t p : {2, 3, 5})
    for (unsigned r = 1; r <= 2; ++r)
      for (std::size_t n = 1; n <= 2; ++n)
        for (WitnessKind kind : {WitnessKind::y_power, WitnessKind::mixed}) {
          if (p == 2 && kind == WitnessKind::mixed) continue;
          const auto ctx = CohContext::make(p, r);
          const Monomial alpha = witness_alpha(p, r, n, kind);
          CHECK(degree(alpha, p) == witness_degree(p, r, n, kind));
          const auto c = term_coefficient({ctx, alpha, n}, witness_splitting(p, r, n, kind));
          REQUIRE(c.has_value());
          CHECK(*c != 0);
        }
}

TEST_CASE("universal table") {
  const auto rows = universal_table(3, 1, 2);
  CHECK(rows.size() == 16);
  for (const auto& row : rows) {
    CHECK(row.N >= 2);
    CHECK(row.N <= 9);
    CHECK(((row.degree == 16 && row.status == ClassStatus::non_nilpotent) ||
           (row.degree == 11 && row.status == ClassStatus::nonzero)));
  }
  const auto binary = universal_table(2, 1, 2);
  CHECK(binary.size() == 3);
  for (const auto& row : binary) CHECK(row.degree == 3);
  const auto q4 = universal_table(2, 2, 1);
  REQUIRE(q4.size() == 1);
  CHECK(q4[0].N == 2);
  CHECK(q4[0].degree == 2);
  CHECK(q4[0].alpha == Monomial{{0, 0}, {1, 1}});
  const auto bounded = universal_table(2, 1, 2, 7);
  CHECK(bounded.size() > binary.size());
}

TEST_CASE("carry-free tuples") {
  auto contains = [](const std::vector<TupleCertificate>& list, std::vector<std::uint64_t> parts) {
    return std::any_of(list.begin(), list.end(), [&](const TupleCertificate& t) { return t.parts == parts; });
  };
  const auto t3 = indecomposable_tuples(3, 2, 10);
  CHECK(contains(t3, {2, 6}));
  CHECK_FALSE(contains(t3, {2, 2}));
  for (const auto& t : t3)
    if (t.parts == std::vector<std::uint64_t>{2, 6}) CHECK(t.homology_degree == 16);
  const auto t2 = indecomposable_tuples(2, 2, 7);
  REQUIRE(!t2.empty());
  CHECK(t2.front().parts == std::vector<std::uint64_t>{1, 2});
  CHECK(t2.front().homology_degree == 3);
  for (const auto& t : t2) CHECK(no_carry({2, t.parts}));
}

TEST_CASE("wedge split") {
  const auto c2 = CohContext::make(2, 1);
  CHECK(wedge_split_check(c2, y(3), 1, 1));
  CHECK(wedge_split_check(CohContext::make(2, 2), Monomial{{0, 0}, {1, 1}}, 1, 1));
  for (auto [p, r] : std::vector<std::pair<std::uint64_t, unsigned>>{{2, 1}, {3, 1}, {2, 2}}) {
    const auto ctx = CohContext::make(p, r);
    for (std::uint64_t d = 1; d <= 8; ++d)
      for (const auto& alpha : enumerate_invariant_basis(ctx, d))
        for (std::size_t a = 1; a <= 2; ++a)
          for (std::size_t b = 1; a + b <= 3; ++b) REQUIRE(wedge_split_check(ctx, alpha, a, b));
  }
}

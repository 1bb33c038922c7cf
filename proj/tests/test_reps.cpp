#include <doctest.h>

#include <random>

#include "modchar/dickson.hpp"
#include "modchar/error.hpp"
#include "modchar/reps.hpp"
#include "modchar/verify.hpp"

using namespace modchar;

namespace {

std::vector<std::size_t> dims(const std::vector<Subspace>& filtration) {
  std::vector<std::size_t> out;
  for (const auto& s : filtration) out.push_back(s.dim());
  return out;
}

Rep rep_of(const Field& f, std::vector<std::vector<std::vector<std::int64_t>>> gens) {
  Rep rep{f, gens.front().size(), {}};
  for (const auto& g : gens) rep.generators.push_back(Matrix::from_ints(f, g));
  return rep;
}

}  // namespace

TEST_CASE("validation") {
  CHECK(validate(basic_rep(3, 1, 2)).empty());
  CHECK(validate(basic_rep(2, 2, 2)).empty());
  const Field f3 = Field::prime(3);
  const auto order = validate(rep_of(f3, {{{1, 1}, {0, 1}}, {{0, 1}, {1, 0}}}));
  REQUIRE(!order.empty());
  CHECK(order.front().kind == "order");
  CHECK(order.front().generators == std::vector<std::size_t>{1});
  const Field f2 = Field::prime(2);
  const auto comm = validate(rep_of(f2, {{{1, 1, 0}, {0, 1, 0}, {0, 0, 1}}, {{1, 0, 0}, {0, 1, 1}, {0, 0, 1}}}));
  REQUIRE(!comm.empty());
  CHECK(comm.front().kind == "commute");
  CHECK(comm.front().generators == std::vector<std::size_t>{0, 1});
  CHECK_THROWS_AS(require_valid(rep_of(f2, {{{1, 1}, {1, 1}}})), ValidationError);
  PointedRep bad = basic_rep(2, 1, 1);
  bad.basepoint = unit_vector(f2, 2, 1);
  CHECK(!validate(bad).empty());
}

TEST_CASE("basic representations") {
  const PointedRep b1 = basic_rep(2, 1, 1);
  CHECK(b1.rep.generators.front() == Matrix::from_ints(Field::prime(2), {{1, 1}, {0, 1}}));
  const PointedRep b = basic_rep(3, 1, 2);
  CHECK(b.rep.dim == 3);
  CHECK(b.rep.rank() == 2);
  for (std::size_t j = 0; j < 2; ++j) {
    const Matrix d = b.rep.generators[j] - Matrix::identity(b.rep.field, 3);
    for (std::size_t r = 1; r < 3; ++r)
      for (std::size_t c = 0; c < 3; ++c) CHECK(b.rep.field.is_zero(d(r, c)));
  }
  CHECK(fixed_space(b.rep) == Subspace::span(b.rep.field, 3, {unit_vector(b.rep.field, 3, 0)}));
  CHECK(basic_rep(2, 2, 2).rep.rank() == 4);
  CHECK(dims(j_filtration(b.rep)) == std::vector<std::size_t>{1, 3});
}

TEST_CASE("fixed spaces") {
  const Rep ds = direct_sum(basic_rep(3, 1, 1).rep, basic_rep(3, 1, 1).rep);
  CHECK(fixed_space(ds).dim() == 2);
  CHECK(fixed_space(trivial_rep(Field(2, 2), 3, 2)).is_full());
}

TEST_CASE("symmetric power representation") {
  const Rep xi = sym_power_rep(3, 1);
  const Field& f = xi.field;
  CHECK(xi.generators.front() == Matrix::from_ints(f, {{1, 1, 1}, {0, 1, 2}, {0, 0, 1}}));
  const auto j = j_filtration(xi);
  REQUIRE(j.size() == 3);
  CHECK(j[0] == Subspace::span(f, 3, {unit_vector(f, 3, 0)}));
  CHECK(j[1] == Subspace::span(f, 3, {unit_vector(f, 3, 0), unit_vector(f, 3, 1)}));
  CHECK(j[2].is_full());
  const Rep r1 = restrict(xi, j[1]);
  CHECK(r1.generators.front() == Matrix::from_ints(f, {{1, 1}, {0, 1}}));
  CHECK(restrict(xi, j[0]).generators.front().is_identity());
  CHECK(big_rep(3, 1, 2).dim == 9);
  CHECK(sym_power_rep(2, 1).generators.front() == Matrix::from_ints(Field::prime(2), {{1, 1}, {0, 1}}));
}

TEST_CASE("restrict and quotient") {
  const Rep xi = sym_power_rep(3, 1);
  const auto j = j_filtration(xi);
  const Quotient full = quotient(xi, Subspace::full(xi.field, 3));
  CHECK(full.rep.dim == 0);
  const Quotient q = quotient(xi, j[0]);
  CHECK(q.rep.dim == 2);
  CHECK(q.projection.rows() == 2);
  const Subspace line = Subspace::span(xi.field, 3, {unit_vector(xi.field, 3, 2)});
  CHECK_THROWS_AS(restrict(xi, line), NotInvariant);
  CHECK_THROWS_AS(quotient(xi, line), NotInvariant);
}

TEST_CASE("trivial representation filtration") {
  CHECK(dims(j_filtration(trivial_rep(Field::prime(5), 3, 1))) == std::vector<std::size_t>{3});
}

TEST_CASE("two filtration computations agree on random representations") {
  std::mt19937_64 rng(99);
  for (const Field& f : {Field(2, 1), Field(3, 1), Field(2, 2)})
    for (int trial = 0; trial < 60; ++trial) {
      const Rep rep = verify::random_rep(rng, f, 8, 1 + rng() % 3);
      REQUIRE(validate(rep).empty());
      const auto a = j_filtration(rep);
      REQUIRE(a == j_filtration_augmentation(rep));
      for (std::size_t i = 1; i < a.size(); ++i) REQUIRE(a[i - 1].dim() < a[i].dim());
      REQUIRE(a.back().is_full());
      REQUIRE(a.size() <= rep.dim);
    }
}

TEST_CASE("tensor, direct sum, wedge and dual") {
  const PointedRep b1 = basic_rep(3, 1, 1);
  const Rep ds = direct_sum(b1.rep, b1.rep);
  CHECK(ds.rank() == 2);
  CHECK(classify(ds).verdict == Verdict::zero);
  const PointedRep w = wedge_sum(b1, b1);
  CHECK(w.rep.dim == 3);
  CHECK(validate(w).empty());
  const Matrix t = iso_to_basic(w.rep);
  CHECK(conjugate(w.rep, t) == basic_rep(3, 1, 2).rep);
  const Rep dual = dual_rep(basic_rep(3, 1, 2).rep);
  CHECK(fixed_space(dual).dim() == 2);
  CHECK(classify(dual).verdict == Verdict::zero);
  const Rep tp = tensor_rep(b1.rep, b1.rep);
  CHECK(tp.dim == 4);
  CHECK(tp.rank() == 2);
  CHECK_THROWS_AS(tensor_rep(b1.rep, basic_rep(2, 1, 1).rep), ContextMismatch);
  for (std::size_t a = 1; a <= 2; ++a)
    for (std::size_t b = 1; b <= 2; ++b)
      CHECK(classify(wedge_sum(basic_rep(2, 1, a), basic_rep(2, 1, b)).rep).quotient_rank == a + b);
}

TEST_CASE("regular representation") {
  const Rep reg = regular_rep(2, 1);
  CHECK(reg.generators.front() == Matrix::from_ints(Field::prime(2), {{0, 1}, {1, 0}}));
  const Rep reg22 = regular_rep(2, 2);
  const auto j = j_filtration(reg22);
  CHECK(j[0].dim() == 1);
  CHECK(j[0].contains(Vector(4, Field::prime(2).one())));
  CHECK(dims(j) == std::vector<std::size_t>{1, 3, 4});
  const Rep j1 = restrict(reg22, j[1]);
  CHECK(conjugate(j1, iso_to_basic(j1)) == basic_rep(2, 1, 2).rep);
}

TEST_CASE("classification") {
  for (std::size_t n = 1; n <= 2; ++n) {
    const ChiReduction red = classify(big_rep(3, 1, n));
    CHECK(red.verdict == Verdict::reduced);
    CHECK(red.quotient_rank == n);
    CHECK(*red.projection == Matrix::identity(Field::prime(3), n));
  }
  const Rep pulled = pullback(basic_rep(3, 1, 2).rep, {{1, 0, 0}, {0, 1, 1}});
  CHECK(pulled.rank() == 3);
  const ChiReduction red = classify(pulled);
  CHECK(red.verdict == Verdict::reduced);
  CHECK(red.quotient_rank == 2);
  REQUIRE(red.projection.has_value());
  CHECK(kernel(*red.projection) == kernel(Matrix::from_ints(Field::prime(3), {{1, 0, 0}, {0, 1, 1}})));
}

TEST_CASE("iso_to_basic") {
  const Rep xi = sym_power_rep(3, 1);
  const Rep j1 = restrict(xi, j_filtration(xi)[1]);
  CHECK(conjugate(j1, iso_to_basic(j1)) == basic_rep(3, 1, 1).rep);
  const PointedRep b = basic_rep(5, 1, 2);
  CHECK(iso_to_basic(b.rep).is_identity());
  for (auto [p, r, n] : std::vector<std::tuple<std::uint64_t, unsigned, std::size_t>>{
           {2, 1, 1}, {2, 1, 3}, {3, 1, 2}, {2, 2, 1}, {2, 2, 2}, {5, 1, 1}}) {
    const Rep big = big_rep(p, r, n);
    const Rep sub = restrict(big, j_filtration(big)[1]);
    CHECK(conjugate(sub, iso_to_basic(sub)) == basic_rep(p, r, n).rep);
  }
  CHECK_THROWS(iso_to_basic(direct_sum(basic_rep(2, 1, 1).rep, basic_rep(2, 1, 1).rep)));
  CHECK_THROWS(iso_to_basic(sym_power_rep(3, 1)));
}

TEST_CASE("chi of representations") {
  const MultiPoly z1 = MultiPoly::variable(2, 2, 0), z2 = MultiPoly::variable(2, 2, 1);
  CHECK(chi_of_rep(regular_rep(2, 2), 3) == z1 * z1 * z2 + z1 * z2 * z2);
  const Rep ds = direct_sum(basic_rep(2, 1, 1).rep, basic_rep(2, 1, 1).rep);
  for (std::uint64_t k = 1; k <= 5; ++k) CHECK(chi_of_rep(ds, k).is_zero());
  const Rep pulled = pullback(basic_rep(2, 1, 2).rep, {{1, 0, 0}, {0, 1, 1}});
  const MultiPoly a = MultiPoly::variable(2, 3, 0);
  const MultiPoly bc = MultiPoly::variable(2, 3, 1) + MultiPoly::variable(2, 3, 2);
  CHECK(chi_of_rep(pulled, 3) == a * a * bc + a * bc * bc);
  for (std::uint64_t p : {2, 3})
    for (unsigned n = 1; n <= 2; ++n) {
      std::uint64_t pn = 1;
      for (unsigned i = 0; i < n; ++i) pn *= p;
      for (std::uint64_t k = 1; k <= 2 * (pn - 1); ++k) CHECK(chi_of_rep(regular_rep(p, n), k) == chi_via_power_sum(p, n, k));
    }
  CHECK_THROWS(chi_of_rep(basic_rep(2, 2, 1).rep, 3));
  CHECK_THROWS(regular_rep(2, 13));
}

TEST_CASE("J filtration of tensor products") {
  const Rep xi = sym_power_rep(3, 1);
  for (std::size_t i = 0; i <= 4; ++i) CHECK(j_tensor_check(xi, xi, i));
  const Rep prod = tensor_rep(xi, xi);
  CHECK(j_filtration(prod)[1].dim() == 3);
  const Rep line = trivial_rep(xi.field, 1, 1);
  CHECK(dims(j_filtration(tensor_rep(xi, line))) == dims(j_filtration(xi)));
  for (const Field& f : {Field(2, 1), Field(2, 2)}) {
    const Rep x = sym_power_rep(f);
    for (std::size_t i = 0; i <= 2; ++i) CHECK(j_tensor_check(x, x, i));
  }
}

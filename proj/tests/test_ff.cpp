#include <doctest.h>

#include <random>

#include "modchar/error.hpp"
#include "modchar/ff.hpp"

using namespace modchar;

namespace {

const std::vector<std::pair<std::uint64_t, unsigned>> kFields = {{2, 1}, {3, 1}, {5, 1}, {7, 1}, {2, 2}, {2, 3},
                                                                   {3, 2}, {5, 2}, {3, 3}, {2, 8}};

FF random_element(std::mt19937_64& rng, const Field& f) { return f.element(rng() % f.q()); }

Matrix random_matrix(std::mt19937_64& rng, const Field& f, std::size_t rows, std::size_t cols) {
  Matrix m(f, rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = random_element(rng, f);
  return m;
}

Subspace recanonicalize(const Subspace& s) { return Subspace::span(s.field(), s.ambient_dim(), s.basis()); }

}  // namespace

TEST_CASE("find_irreducible picks the smallest monic irreducible") {
  CHECK(find_irreducible(2, 1) == std::vector<std::uint64_t>{0, 1});
  CHECK(find_irreducible(2, 2) == std::vector<std::uint64_t>{1, 1, 1});
  CHECK(find_irreducible(3, 2) == std::vector<std::uint64_t>{1, 0, 1});
  CHECK_THROWS_AS(find_irreducible(4, 2), std::invalid_argument);
  CHECK_THROWS_AS(find_irreducible(2, 0), std::invalid_argument);
  CHECK_THROWS_AS(find_irreducible(2, 9), std::invalid_argument);
  for (auto [p, r] : kFields) CHECK(is_irreducible(p, find_irreducible(p, r)));
}

TEST_CASE("field arithmetic examples") {
  const Field f4(2, 2);
  const FF t = f4.basis_element(1);
  CHECK(f4.mul(t, f4.add(t, f4.one())) == f4.one());
  const Field f3(3, 1);
  CHECK(f3.inv(f3.from_int(2)) == f3.from_int(2));
  CHECK(f3.from_int(-1) == f3.from_int(2));
  CHECK_THROWS_AS(f3.inv(f3.zero()), ZeroDivisionError);
  CHECK_THROWS_AS(f4.div(t, f4.zero()), ZeroDivisionError);
  for (std::uint64_t i = 0; i < f4.q(); ++i) CHECK(f4.mul(f4.one(), f4.element(i)) == f4.element(i));
}

TEST_CASE("element indexing round-trips") {
  for (auto [p, r] : kFields) {
    const Field f(p, r);
    const std::uint64_t limit = std::min<std::uint64_t>(f.q(), 300);
    for (std::uint64_t i = 0; i < limit; ++i) CHECK(f.index(f.element(i)) == i);
  }
}

TEST_CASE("field axioms on random triples") {
  std::mt19937_64 rng(7);
  for (auto [p, r] : kFields) {
    const Field f(p, r);
    for (int trial = 0; trial < 1000; ++trial) {
      const FF a = random_element(rng, f), b = random_element(rng, f), c = random_element(rng, f);
      REQUIRE(f.mul(f.mul(a, b), c) == f.mul(a, f.mul(b, c)));
      REQUIRE(f.add(f.add(a, b), c) == f.add(a, f.add(b, c)));
      REQUIRE(f.mul(a, b) == f.mul(b, a));
      REQUIRE(f.add(a, b) == f.add(b, a));
      REQUIRE(f.mul(a, f.add(b, c)) == f.add(f.mul(a, b), f.mul(a, c)));
      REQUIRE(f.add(a, f.neg(a)) == f.zero());
      if (!f.is_zero(a)) {
        REQUIRE(f.mul(a, f.inv(a)) == f.one());
        REQUIRE(f.div(f.mul(b, a), a) == b);
      }
    }
  }
}

TEST_CASE("Frobenius has order r") {
  for (std::uint64_t p : {2, 3, 5})
    for (unsigned r = 1; r <= 3; ++r) {
      const Field f(p, r);
      for (std::uint64_t i = 0; i < f.q(); ++i) {
        FF a = f.element(i);
        const FF orig = a;
        for (unsigned k = 0; k < r; ++k) a = f.pow(a, p);
        REQUIRE(a == orig);
      }
    }
}

TEST_CASE("nonstandard modulus") {
  const std::vector<std::uint64_t> mod = {2, 2, 1};  // t^2 + 2t + 2 over F_3
  const Field f(3, 2, mod);
  CHECK(f.modulus() == mod);
  for (std::uint64_t i = 1; i < f.q(); ++i) CHECK(f.mul(f.element(i), f.inv(f.element(i))) == f.one());
  const std::vector<std::uint64_t> reducible = {0, 0, 1};
  CHECK_THROWS(Field(3, 2, reducible));
}

TEST_CASE("kernel examples") {
  const Field f2(2, 1);
  CHECK(kernel(Matrix(f2, 2, 2)).dim() == 2);
  const Subspace k = kernel(Matrix::from_ints(f2, {{1, 1}, {1, 1}}));
  CHECK(k == Subspace::span(f2, 2, {{f2.one(), f2.one()}}));
  CHECK(kernel(Matrix::identity(Field(3, 2), 3)).dim() == 0);
}

TEST_CASE("preimage examples") {
  const Field f3(3, 1);
  const Matrix m = Matrix::from_ints(f3, {{1, 0}, {0, 0}});
  CHECK(preimage(m, Subspace::full(f3, 2)).is_full());
  CHECK(preimage(m, Subspace::zero(f3, 2)) == kernel(m));
  CHECK(preimage(m, Subspace::span(f3, 2, {unit_vector(f3, 2, 0)})).is_full());
  CHECK_THROWS_AS(preimage(m, Subspace::full(f3, 3)), DimensionMismatch);
}

TEST_CASE("intersect, solve and sum") {
  const Field f2(2, 1);
  const Subspace a = Subspace::span(f2, 2, {unit_vector(f2, 2, 0)});
  const Subspace b = Subspace::span(f2, 2, {unit_vector(f2, 2, 1)});
  CHECK(intersect(a, a) == a);
  CHECK(intersect(a, b).dim() == 0);
  CHECK(sum(a, b).is_full());
  const Vector v = {f2.one(), f2.zero()};
  CHECK(solve(Matrix::identity(f2, 2), v) == v);
  CHECK_FALSE(solve(Matrix::from_ints(f2, {{1, 1}, {1, 1}}), v).has_value());
  CHECK_THROWS_AS(intersect(a, Subspace::full(f2, 3)), DimensionMismatch);
}

TEST_CASE("annihilator is the orthogonal complement") {
  const Field f3(3, 1);
  const Subspace s = Subspace::span(f3, 3, {{f3.one(), f3.one(), f3.zero()}});
  const Subspace ann = annihilator(s);
  CHECK(ann.dim() == 2);
  CHECK(annihilator(ann) == s);
}

TEST_CASE("rank plus nullity and canonical outputs on random matrices") {
  std::mt19937_64 rng(11);
  for (auto [p, r] : kFields) {
    const Field f(p, r);
    for (int trial = 0; trial < 500; ++trial) {
      const std::size_t rows = 1 + rng() % 5, cols = 1 + rng() % 5;
      const Matrix m = random_matrix(rng, f, rows, cols);
      const Subspace k = kernel(m);
      REQUIRE(rank(m) + k.dim() == cols);
      REQUIRE(k.is_canonical());
      REQUIRE(recanonicalize(k) == k);
      for (const auto& v : k.basis()) REQUIRE(is_zero(m.apply(v)));

      const Subspace img = image(m);
      REQUIRE(img.dim() == rank(m));
      const Subspace s = Subspace::span(f, rows, {random_matrix(rng, f, 1, rows).row(0)});
      const Subspace pre = preimage(m, s);
      REQUIRE(pre.is_canonical());
      REQUIRE(recanonicalize(pre) == pre);
      for (const auto& v : pre.basis()) REQUIRE(s.contains(m.apply(v)));
      for (const auto& v : k.basis()) REQUIRE(pre.contains(v));

      const Subspace t = kernel(random_matrix(rng, f, 1 + rng() % 3, cols));
      const Subspace meet = intersect(k, t);
      REQUIRE(meet.is_canonical());
      REQUIRE(recanonicalize(meet) == meet);
      REQUIRE(meet.dim() + sum(k, t).dim() == k.dim() + t.dim());
    }
  }
}

TEST_CASE("inverse and matrix algebra") {
  std::mt19937_64 rng(3);
  const Field f(3, 2);
  for (int trial = 0; trial < 100; ++trial) {
    const Matrix m = random_matrix(rng, f, 3, 3);
    const auto inv = inverse(m);
    CHECK(inv.has_value() == (rank(m) == 3));
    if (inv) CHECK((m * *inv).is_identity());
  }
  const Field f2(2, 1);
  const Matrix j = Matrix::from_ints(f2, {{1, 1}, {0, 1}});
  CHECK(pow(j, 2).is_identity());
  CHECK(kron(j, j).rows() == 4);
  CHECK(block_diag(j, j).cols() == 4);
  CHECK(vstack(j, j).rows() == 4);
}

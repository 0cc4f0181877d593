#include "doctest.h"
#include "ttg/matrix.hpp"

using namespace ttg;

TEST_CASE("field arithmetic F5") {
  Field f = Field::fp(5);
  CHECK(f.eq(f.add(f.from_int(3), f.from_int(4)), f.from_int(2)));
  CHECK(f.eq(f.mul(f.from_int(3), f.from_int(4)), f.from_int(2)));
  CHECK(f.eq(f.inv(f.from_int(2)), f.from_int(3)));
  CHECK(f.eq(f.from_int(-1), f.from_int(4)));
  CHECK(f.is_zero(f.from_int(10)));
}

TEST_CASE("field arithmetic Q") {
  Field q = Field::rationals();
  Scalar half = q.from_fraction(1, 2);
  Scalar third = q.from_fraction(1, 3);
  CHECK(q.eq(q.add(half, third), q.from_fraction(5, 6)));
  CHECK(q.eq(q.inv(q.from_fraction(2, 3)), q.from_fraction(3, 2)));
  CHECK_THROWS_AS(Field::fp(6), error);
}

TEST_CASE("rref, rank, kernel over F2") {
  Field f = Field::fp(2);
  Matrix a = Matrix::from_int_rows(f, {{1, 1, 0}, {0, 1, 1}, {1, 0, 1}});
  CHECK(a.rank() == 2);
  Matrix k = a.kernel();
  CHECK(k.cols() == 1);
  CHECK((a * k).is_zero());
}

TEST_CASE("solve and inverse over Q") {
  Field q = Field::rationals();
  Matrix a = Matrix::from_int_rows(q, {{2, 1}, {1, 1}});
  Matrix b = Matrix::from_int_rows(q, {{3}, {2}});
  auto x = a.solve(b);
  REQUIRE(x.has_value());
  CHECK(a * *x == b);
  auto inv = a.inverse();
  REQUIRE(inv.has_value());
  CHECK(*inv * a == Matrix::identity(q, 2));

  // inconsistent system
  Matrix s = Matrix::from_int_rows(q, {{1, 1}, {1, 1}});
  Matrix c = Matrix::from_int_rows(q, {{1}, {2}});
  CHECK_FALSE(s.solve(c).has_value());
}

TEST_CASE("solve underdetermined returns a particular solution") {
  Field f = Field::fp(3);
  Matrix a = Matrix::from_int_rows(f, {{1, 2, 0}});
  Matrix b = Matrix::from_int_rows(f, {{2}});
  auto x = a.solve(b);
  REQUIRE(x.has_value());
  CHECK(a * *x == b);
}

TEST_CASE("kronecker product shape and content") {
  Field q = Field::rationals();
  Matrix a = Matrix::from_int_rows(q, {{1, 2}});
  Matrix b = Matrix::from_int_rows(q, {{3}, {4}});
  Matrix k = a.kron(b);
  CHECK(k.rows() == 2);
  CHECK(k.cols() == 2);
  CHECK(q.eq(k.at(0, 0), q.from_int(3)));
  CHECK(q.eq(k.at(1, 1), q.from_int(8)));
  // mixed-product rule (A kron B)(C kron D) = AC kron BD
  Matrix c = Matrix::from_int_rows(q, {{1}, {1}});
  Matrix d = Matrix::from_int_rows(q, {{2, 0}});
  CHECK(a.kron(b) * c.kron(d) == (a * c).kron(b * d));
}

TEST_CASE("column space and basis extension") {
  Field f = Field::fp(5);
  Matrix a = Matrix::from_int_rows(f, {{1, 2, 3}, {2, 4, 6}, {0, 0, 1}});
  Matrix cs = a.column_space();
  CHECK(cs.cols() == 2);
  Matrix base(f, 3, 0);
  auto taken = extend_column_basis(base, a);
  CHECK(taken.size() == 2);
  CHECK(base.rank() == 2);
  CHECK(in_column_span(base, a.column(1)));
}

TEST_CASE("rank is field dependent") {
  // 2x2 all-ones matrix plus identity: invertible over Q, singular over F2
  Matrix a2 = Matrix::from_int_rows(Field::fp(2), {{0, 1}, {1, 0}});
  Matrix aq = Matrix::from_int_rows(Field::rationals(), {{0, 1}, {1, 0}});
  Matrix b2 = Matrix::from_int_rows(Field::fp(2), {{1, 1}, {1, 1}});
  CHECK(a2.rank() == 2);
  CHECK(aq.rank() == 2);
  CHECK(b2.rank() == 1);
}

#include <doctest.h>

#include "stovar/core.hpp"
#include "support.hpp"

using namespace stovar;
using namespace stovar::testing;

TEST_CASE("vsum") {
  CHECK(vsum(Vector<Rational>{q(1), q(2), q(3)}) == 6);
  CHECK(vsum(example1_stationary()) == 1);
  CHECK(vsum(Vector<Rational>{q(1, 2), q(-1, 2)}) == 0);
}

TEST_CASE("l1_norm") {
  CHECK(l1_norm(Vector<Rational>{q(1), q(-2), q(3)}) == 6);
  const auto m = example1();
  CHECK(l1_norm(m.column(1) - m.column(2)) == q(12, 5));
  CHECK(l1_norm(Vector<Rational>::zeros(4)) == 0);
}

TEST_CASE("variation of the 3x3 example and its square") {
  const auto report = variation(example1());
  CHECK(report.value == q(6, 5));
  CHECK(report.arg_j == 1);
  CHECK(report.arg_k == 2);
  CHECK(variation(example1_squared()).value == q(18, 25));
}

TEST_CASE("variation degenerate shapes and ties") {
  Matrix<Rational> same{{q(1), q(1), q(1)}, {q(2), q(2), q(2)}};
  CHECK(variation(same).value == 0);

  Matrix<Rational> column{{q(3)}, {q(-7)}};
  auto single = variation(column);
  CHECK(single.value == 0);
  CHECK(single.arg_j == 0);
  CHECK(single.arg_k == 0);

  // Pairs (0,1), (0,2), (1,2) all at distance 2: the first one wins.
  auto tie = variation(Matrix<Rational>::identity(3));
  CHECK(tie.value == 1);
  CHECK(tie.arg_j == 0);
  CHECK(tie.arg_k == 1);

  // Pairs (1,2) and (2,3) tie at distance 2; the first one wins.
  Matrix<double> later{{0.0, 1.0, 0.0, 1.0}, {0.0, 0.0, 1.0, 0.0}};
  auto r = variation(later);
  CHECK(r.arg_j == 1);
  CHECK(r.arg_k == 2);
}

TEST_CASE("row_variation") {
  CHECK(row_variation(RowVector<Rational>{q(1), q(-1), q(-1)}) == 1);
  CHECK(row_variation(RowVector<Rational>{q(5, 7), q(5, 7), q(5, 7)}) == 0);
  CHECK(row_variation(RowVector<Rational>{q(3), q(0), q(-1)}) == 2);
  RowVector<Rational> z{q(3), q(0), q(-1), q(1, 2)};
  CHECK(row_variation(z) == variation(Matrix<Rational>::from_row(z)).value);
}

TEST_CASE("type_of") {
  auto t = type_of(example1());
  CHECK(t.has_type);
  CHECK(t.type_value == 1);
  CHECK(t.max_deviation == 0);

  CHECK(type_of(Matrix<Rational>::identity(3)).type_value == 1);

  auto untyped = type_of(Matrix<Rational>{{q(1), q(0)}, {q(0), q(2)}});
  CHECK_FALSE(untyped.has_type);
  CHECK(untyped.max_deviation == 1);

  Matrix<double> nearly{{0.1, 0.7}, {0.2, 0.3}, {0.7, 1e-12}};
  CHECK(type_of(nearly).has_type);
  Matrix<double> off{{0.1, 0.7}, {0.2, 0.3}, {0.7, 1e-6}};
  CHECK_FALSE(type_of(off).has_type);
}

TEST_CASE("mat_mul") {
  const auto m = example1();
  CHECK(Matrix<Rational>::identity(3) * m == m);
  CHECK(m * m == example1_squared());
  // Column sums of the 3x3 example, worked by hand: (0-1+6)/5, (2-1+4)/5, (-4+0+9)/5.
  CHECK(RowVector<Rational>::ones(3) * m == RowVector<Rational>{q(1), q(1), q(1)});
  CHECK_THROWS_AS(mat_mul(m, Matrix<Rational>::identity(2)), Error);
}

TEST_CASE("mat_pow") {
  const auto m = example1();
  CHECK(mat_pow(m, 0) == Matrix<Rational>::identity(3));
  CHECK(mat_pow(m, 2) == example1_squared());
  CHECK(mat_pow(m, 7) == naive_pow(m, 7));
  CHECK_THROWS_AS(mat_pow(Matrix<Rational>::zeros(2, 3), 2), Error);

  // [[1-a, b], [a, 1-b]] with a + b = 0: M^k = I + k a [[-1,-1],[1,1]].
  const Rational a = q(3, 7);
  Matrix<Rational> jordan{{1 - a, -a}, {a, 1 + a}};
  for (unsigned k : {1U, 2U, 5U, 33U}) {
    const Rational ka = Rational(k) * a;
    Matrix<Rational> closed{{1 - ka, -ka}, {ka, 1 + ka}};
    CHECK(mat_pow(jordan, k) == closed);
  }
}

TEST_CASE("matrix construction rejects empty and ragged input") {
  CHECK_THROWS_AS(Matrix<Rational>(0, 3, {}), Error);
  CHECK_THROWS_AS(Matrix<Rational>(2, 2, {q(1)}), Error);
  CHECK_THROWS_AS((Matrix<Rational>{{q(1), q(2)}, {q(3)}}), Error);
  CHECK_THROWS_AS(Vector<Rational>(std::vector<Rational>{}), Error);
}

TEST_CASE("elimination helpers") {
  const auto m = example1();
  const auto shifted = m - Matrix<Rational>::identity(3);
  CHECK(rank(shifted) == 2);
  CHECK(determinant(shifted) == 0);
  CHECK(determinant(Matrix<Rational>{{q(0), q(1)}, {q(1), q(0)}}) == -1);
  CHECK(determinant(Matrix<Rational>{{q(2), q(1)}, {q(1), q(3)}}) == 5);

  auto x = solve(Matrix<Rational>{{q(2), q(1)}, {q(1), q(3)}}, Vector<Rational>{q(1), q(2)});
  REQUIRE(x);
  CHECK(*x == Vector<Rational>{q(1, 5), q(3, 5)});
  CHECK_FALSE(solve(shifted, Vector<Rational>{q(1), q(0), q(0)}));

  Matrix<double> near_singular{{1.0, 1.0}, {1.0, 1.0 + 1e-13}};
  CHECK(rank(near_singular) == 1);
  CHECK(rank(Matrix<double>::zeros(2, 2)) == 0);
}

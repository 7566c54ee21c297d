#include <random>

#include "doctest.h"
#include "hopfinv/cyclotomic.hpp"
#include "hopfinv/linalg.hpp"

using namespace hopfinv;

namespace {

Mat from_ints(size_t rows, size_t cols, const std::vector<long>& vals) {
  Mat m(rows, cols);
  for (size_t r = 0; r < rows; ++r)
    for (size_t c = 0; c < cols; ++c) m.at(r, c) = Cyc(vals[r * cols + c]);
  return m;
}

}  // namespace

TEST_SUITE("linalg") {

TEST_CASE("identity and product") {
  Mat id = Mat::identity(3);
  Mat a = from_ints(3, 3, {1, 2, 0, 0, 1, 4, 5, 0, 1});
  CHECK(a * id == a);
  CHECK(id * a == a);
  Mat b = from_ints(3, 2, {1, 0, 2, 1, 0, 3});
  Mat ab = a * b;
  CHECK(ab.rows == 3);
  CHECK(ab.cols == 2);
  CHECK(ab.at(0, 0) == Cyc(5));
  CHECK(ab.at(0, 1) == Cyc(2));
  CHECK(ab.at(1, 0) == Cyc(2));
  CHECK(ab.at(1, 1) == Cyc(13));
  CHECK(ab.at(2, 0) == Cyc(5));
  CHECK(ab.at(2, 1) == Cyc(3));
}

TEST_CASE("sum difference scale transpose") {
  Mat a = from_ints(2, 2, {1, 2, 3, 4});
  Mat b = from_ints(2, 2, {5, 6, 7, 8});
  CHECK((a + b).at(1, 1) == Cyc(12));
  CHECK((b - a).at(0, 0) == Cyc(4));
  CHECK(a.scaled(Cyc(2)).at(1, 0) == Cyc(6));
  Mat t = a.transposed();
  CHECK(t.at(0, 1) == Cyc(3));
  CHECK(t.at(1, 0) == Cyc(2));
  CHECK((a - a).is_zero());
}

TEST_CASE("rref ranks and idempotence") {
  Mat a = from_ints(2, 2, {1, 2, 2, 4});
  Mat a2 = a;
  std::vector<size_t> pivots;
  CHECK(rref(a2, &pivots) == 1);
  REQUIRE(pivots.size() == 1);
  CHECK(pivots[0] == 0);
  CHECK(a2.at(0, 0) == Cyc(1));
  CHECK(a2.at(0, 1) == Cyc(2));
  CHECK(a2.at(1, 0) == Cyc(0));
  CHECK(a2.at(1, 1) == Cyc(0));
  Mat a3 = a2;
  CHECK(rref(a3) == 1);
  CHECK(a3 == a2);

  CHECK(rank(Mat::identity(4)) == 4);
  CHECK(rank(from_ints(3, 3, {1, 2, 3, 4, 5, 6, 7, 8, 9})) == 2);
  CHECK(rank(Mat(2, 5)) == 0);
}

TEST_CASE("rref over a cyclotomic field") {
  Mat m(2, 2);
  m.at(0, 0) = Cyc::zeta(3);
  m.at(0, 1) = Cyc(1);
  m.at(1, 0) = Cyc(1);
  m.at(1, 1) = Cyc::zeta(3, 2);  // second row = zeta_3^2 * first row
  CHECK(rank(m) == 1);
}

TEST_CASE("nullspace columns satisfy A v = 0") {
  Mat a = from_ints(2, 3, {1, 2, 3, 2, 4, 6});
  Mat ns = nullspace(a);
  CHECK(ns.cols == 2);
  CHECK((a * ns).is_zero());
  // free variables are set to 1 one at a time, in ascending column order
  CHECK(ns.at(1, 0) == Cyc(1));
  CHECK(ns.at(2, 0) == Cyc(0));
  CHECK(ns.at(1, 1) == Cyc(0));
  CHECK(ns.at(2, 1) == Cyc(1));
  CHECK(nullspace(Mat::identity(3)).cols == 0);
}

TEST_CASE("solve") {
  Mat a = from_ints(2, 2, {2, 1, 1, 1});
  std::vector<Cyc> b{Cyc(3), Cyc(2)};
  auto x = solve(a, b);
  REQUIRE(x.has_value());
  CHECK((*x)[0] == Cyc(1));
  CHECK((*x)[1] == Cyc(1));

  Mat sing = from_ints(2, 2, {1, 1, 1, 1});
  CHECK(!solve(sing, {Cyc(0), Cyc(1)}).has_value());

  // underdetermined: free variables pinned to zero
  Mat wide = from_ints(1, 3, {1, 1, 1});
  auto y = solve(wide, {Cyc(5)});
  REQUIRE(y.has_value());
  CHECK((*y)[0] == Cyc(5));
  CHECK((*y)[1] == Cyc(0));
  CHECK((*y)[2] == Cyc(0));
}

TEST_CASE("inverse") {
  Mat a = from_ints(2, 2, {1, 1, 0, 1});
  auto inv = inverse(a);
  REQUIRE(inv.has_value());
  CHECK(inv->at(0, 1) == Cyc(-1));
  CHECK(*inv * a == Mat::identity(2));

  CHECK(!inverse(from_ints(2, 2, {1, 2, 2, 4})).has_value());
  // regression: zero pivot column with nonzero later rows
  CHECK(!inverse(from_ints(2, 2, {0, 0, 0, 1})).has_value());

  std::mt19937 rng(4242);
  std::uniform_int_distribution<int> coeff(-2, 2);
  int found = 0;
  while (found < 5) {
    Mat m(3, 3);
    for (size_t r = 0; r < 3; ++r)
      for (size_t c = 0; c < 3; ++c)
        m.at(r, c) = Cyc(coeff(rng)) + Cyc::zeta(3) * Cyc(coeff(rng));
    auto mi = inverse(m);
    if (!mi.has_value()) continue;
    ++found;
    CHECK(m * *mi == Mat::identity(3));
    CHECK(*mi * m == Mat::identity(3));
  }
}

TEST_CASE("apply matches product") {
  Mat a = from_ints(2, 3, {1, 0, 2, 0, 1, 3});
  std::vector<Cyc> v{Cyc(1), Cyc(2), Cyc(3)};
  auto av = a.apply(v);
  REQUIRE(av.size() == 2);
  CHECK(av[0] == Cyc(7));
  CHECK(av[1] == Cyc(11));
}

}  // TEST_SUITE

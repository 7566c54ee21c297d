#include <random>

#include "doctest.h"
#include "hopfinv/cyclotomic.hpp"
#include "hopfinv/error.hpp"

using namespace hopfinv;

namespace {

// deterministic sample in Q(zeta_N) with small integer coordinates
Cyc sample(long N, std::mt19937& rng) {
  std::uniform_int_distribution<int> coeff(-3, 3);
  std::vector<Rat> powers;
  for (long k = 0; k < N; ++k) powers.push_back(rat(coeff(rng)));
  return Cyc::from_powers(N, powers);
}

}  // namespace

TEST_SUITE("cyclotomic") {

TEST_CASE("rational helpers") {
  CHECK(rat(3, 6) == rat(1, 2));
  CHECK(rat_to_string(rat(-3, 4)) == "-3/4");
  CHECK(rat_to_string(rat(5)) == "5");
  auto r = rat_from_string("22/7");
  REQUIRE(r.has_value());
  CHECK(*r == rat(22, 7));
  CHECK(!rat_from_string("a/b").has_value());
  CHECK(!rat_from_string("1/0").has_value());
}

TEST_CASE("root of unity identities") {
  CHECK(Cyc::zeta(4) * Cyc::zeta(4) == Cyc(-1));
  CHECK(Cyc::zeta(2) == Cyc(-1));
  Cyc z8 = Cyc::zeta(8);
  CHECK(z8 * z8 * z8 * z8 + Cyc(1) == Cyc());
  CHECK(Cyc::zeta(3) * Cyc::zeta(3) + Cyc::zeta(3) + Cyc(1) == Cyc());
  CHECK(Cyc::zeta(1, 5) == Cyc(1));
  CHECK(Cyc::zeta(6, 6) == Cyc(1));
  // zeta_6 = -zeta_3^2
  CHECK(Cyc::zeta(6) == -(Cyc::zeta(3) * Cyc::zeta(3)));
}

TEST_CASE("euler phi and cyclotomic polynomials") {
  CHECK(euler_phi(1) == 1);
  CHECK(euler_phi(8) == 4);
  CHECK(euler_phi(12) == 4);
  CHECK(euler_phi(36) == 12);
  const auto& p12 = cyclotomic_polynomial(12);  // x^4 - x^2 + 1
  REQUIRE(p12.size() == 5);
  CHECK(p12[0] == 1);
  CHECK(p12[1] == 0);
  CHECK(p12[2] == -1);
  CHECK(p12[3] == 0);
  CHECK(p12[4] == 1);
  const auto& p8 = cyclotomic_polynomial(8);  // x^4 + 1
  REQUIRE(p8.size() == 5);
  CHECK(p8[0] == 1);
  CHECK(p8[2] == 0);
  CHECK(p8[4] == 1);
}

TEST_CASE("field axioms on fixed samples") {
  std::mt19937 rng(20240817);
  for (int round = 0; round < 25; ++round) {
    Cyc a = sample(12, rng), b = sample(12, rng), c = sample(12, rng);
    CHECK((a + b) + c == a + (b + c));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * b == b * a);
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a + (-a) == Cyc());
    CHECK(a * Cyc(1) == a);
    if (!b.is_zero()) {
      CHECK(b * b.inverse() == Cyc(1));
      CHECK((a / b) * b == a);
    }
  }
  CHECK_THROWS_AS(Cyc().inverse(), HopfError);
}

TEST_CASE("mixed conductor arithmetic lifts") {
  Cyc x = Cyc::zeta(4) + Cyc::zeta(6);
  CHECK(x.conductor() == 12);
  CHECK(x - Cyc::zeta(6) == Cyc::zeta(4));
  CHECK((Cyc(1) + Cyc::zeta(3)).conductor() == 3);
}

TEST_CASE("lift and lower") {
  Cyc z3 = Cyc::zeta(3);
  CHECK(z3.lifted(12).conductor() == 12);
  CHECK(z3.lifted(12) == z3);
  auto back = z3.lifted(12).lowered(3);
  REQUIRE(back.has_value());
  CHECK(*back == z3);
  CHECK(!Cyc::zeta(12).lowered(4).has_value());
  CHECK(Cyc::zeta(12, 2).lowered(6).has_value());  // zeta_12^2 = zeta_6
  // rationals lower to conductor 1 from anywhere
  Cyc five = Cyc(5).lifted(8);
  auto low = five.lowered(1);
  REQUIRE(low.has_value());
  CHECK(low->conductor() == 1);
}

TEST_CASE("minimized finds the true conductor") {
  CHECK(Cyc::zeta(8, 2).minimized().conductor() == 4);
  CHECK(Cyc::zeta(8, 0).minimized().conductor() == 1);
  Cyc x = Cyc::zeta(12, 3);  // = zeta_4
  CHECK(x.minimized().conductor() == 4);
  CHECK(x.minimized() == Cyc::zeta(4));
}

TEST_CASE("text round trips") {
  std::mt19937 rng(7);
  for (int round = 0; round < 20; ++round) {
    Cyc a = sample(8, rng);
    auto parsed = Cyc::parse(a.to_string());
    REQUIRE(parsed.has_value());
    CHECK(*parsed == a);
  }
  CHECK(Cyc(rat(1, 2)).to_string() == "1/2");
  CHECK(Cyc(-7).to_string() == "-7");
  CHECK(!Cyc::parse("z4 +").has_value());
  CHECK(!Cyc::parse("").has_value());
}

TEST_CASE("classification flags") {
  auto c5 = classify(Cyc(5));
  CHECK(c5.rational);
  CHECK(c5.rational_integer);
  CHECK(c5.algebraic_integer);
  auto half = classify(Cyc(rat(1, 2)));
  CHECK(half.rational);
  CHECK(!half.rational_integer);
  CHECK(!half.algebraic_integer);
  auto s = classify(Cyc::zeta(8) + Cyc::zeta(8, 3));  // i*sqrt(2)
  CHECK(!s.rational);
  CHECK(!s.rational_integer);
  CHECK(s.algebraic_integer);
  auto h3 = classify(Cyc::zeta(3) * Cyc(rat(1, 2)));
  CHECK(!h3.rational);
  CHECK(!h3.algebraic_integer);
}

TEST_CASE("ring membership in Z[zeta_n]") {
  CHECK(in_integer_ring(Cyc(7), 1));
  CHECK(in_integer_ring(Cyc::zeta(3), 6));  // zeta_3 = zeta_6^2
  CHECK(in_integer_ring(Cyc::zeta(6), 6));
  CHECK(!in_integer_ring(Cyc::zeta(4), 2));
  CHECK(!in_integer_ring(Cyc(rat(1, 2)), 4));
  // stable under lifting the representation
  CHECK(in_integer_ring(Cyc::zeta(3).lifted(12), 6));
  CHECK(!in_integer_ring(Cyc::zeta(4).lifted(12), 6));
}

TEST_CASE("from_powers reduces exponents") {
  std::vector<Rat> coeffs(6, rat(0));
  coeffs[5] = rat(1);  // zeta_4^5 = zeta_4
  CHECK(Cyc::from_powers(4, coeffs) == Cyc::zeta(4));
  CHECK(Cyc::zeta(4, -1) == Cyc::zeta(4, 3));
}

TEST_CASE("total order is consistent") {
  std::mt19937 rng(99);
  for (int round = 0; round < 15; ++round) {
    Cyc a = sample(12, rng), b = sample(12, rng);
    CHECK(Cyc::compare(a, a) == 0);
    CHECK(Cyc::compare(a, b) == -Cyc::compare(b, a));
    if (Cyc::compare(a, b) == 0) CHECK(a == b);
  }
}

TEST_CASE("rationality queries") {
  CHECK(Cyc(3).is_rational());
  CHECK(!Cyc::zeta(4).is_rational());
  CHECK(!Cyc::zeta(4).as_rational().has_value());
  auto r = (Cyc::zeta(4) * Cyc::zeta(4)).as_rational();
  REQUIRE(r.has_value());
  CHECK(*r == rat(-1));
  CHECK(Cyc().is_zero());
  CHECK(Cyc(1).is_one());
  CHECK(Cyc::zeta(5, 0).is_one());
}

}  // TEST_SUITE

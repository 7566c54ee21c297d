#include "doctest.h"
#include "hopfinv/braid.hpp"
#include "hopfinv/error.hpp"
#include "hopfinv/group.hpp"

using namespace hopfinv;

namespace {

Braiding dbl_braiding(const std::string& name) {
  auto g = named_group(name);
  REQUIRE(g.has_value());
  return make_braiding(drinfeld_double(*g));
}

}  // namespace

TEST_SUITE("braid") {

TEST_CASE("word parsing") {
  BraidWord w = parse_braid("s1 s2' s1");
  CHECK(w.strands == 3);
  REQUIRE(w.letters.size() == 3);
  CHECK(w.letters[0] == std::pair<int, bool>(1, false));
  CHECK(w.letters[1] == std::pair<int, bool>(2, true));
  CHECK(w.letters[2] == std::pair<int, bool>(1, false));
  CHECK(braid_to_string(w) == "s1 s2' s1");
  CHECK(parse_braid(braid_to_string(w)).letters == w.letters);

  BraidWord empty = parse_braid("");
  CHECK(empty.strands == 1);
  CHECK(empty.letters.empty());

  BraidWord wide = parse_braid("s1", 5);
  CHECK(wide.strands == 5);

  CHECK_THROWS_AS(parse_braid("s0"), HopfError);
  CHECK_THROWS_AS(parse_braid("x1"), HopfError);
  CHECK_THROWS_AS(parse_braid("s2", 2), HopfError);  // needs 3 strands
}

TEST_CASE("braiding construction") {
  Braiding b = dbl_braiding("C2");
  CHECK(b.hopf->dim == 4);
  CHECK(!b.r.empty());
  CHECK(!b.r_inv.empty());
  auto g = named_group("C2");
  CHECK_THROWS_AS(make_braiding(group_algebra(*g)), HopfError);
  try {
    make_braiding(group_algebra(*g));
  } catch (const HopfError& e) {
    CHECK(std::string(e.code()) == "braid/no-rmatrix");
  }
}

TEST_CASE("generators are invertible on states") {
  Braiding b = dbl_braiding("C3");
  TensorElement t(b.hopf, 2, 0);
  t.add({3, 7}, Cyc(1));
  TensorElement forth = apply_braid_generator(b, t, 1, false);
  CHECK(apply_braid_generator(b, forth, 1, true) == t);
  TensorElement back = apply_braid_generator(b, t, 1, true);
  CHECK(apply_braid_generator(b, back, 1, false) == t);
}

TEST_CASE("relations hold for doubles") {
  Braiding b2 = dbl_braiding("C2");
  BraidRelationReport r4 = check_braid_relations(b2, 4);
  CHECK(r4.all_pass());
  bool saw_far = false, saw_adjacent = false;
  for (const auto& c : r4.checks) {
    if (c.relation.find("s1 s3") != std::string::npos) saw_far = true;
    if (c.relation.find("s1 s2 s1") != std::string::npos) saw_adjacent = true;
  }
  CHECK(saw_far);
  CHECK(saw_adjacent);

  Braiding b3 = dbl_braiding("C3");
  CHECK(check_braid_relations(b3, 3).all_pass());
}

TEST_CASE("traces") {
  Braiding b = dbl_braiding("C2");
  // identity word on n strands traces to dim^n = |G|^(2n)
  CHECK(braid_trace(b, parse_braid("", 1)) == Cyc(4));
  CHECK(braid_trace(b, parse_braid("", 2)) == Cyc(16));
  CHECK(braid_trace(b, parse_braid("s1")) == Cyc(2));

  Braiding b3 = dbl_braiding("C3");
  CHECK(braid_trace(b3, parse_braid("", 2)) == Cyc(81));
  CHECK(braid_trace(b3, parse_braid("s1 s2 s1")) ==
        braid_trace(b3, parse_braid("s2 s1 s2")));

  // Markov conjugation invariance
  CHECK(braid_trace(b3, parse_braid("s1 s2")) ==
        braid_trace(b3, parse_braid("s2 s1")));
  CHECK(braid_trace(b3, parse_braid("s1 s1", 3)) ==
        braid_trace(b3, parse_braid("s2 s1 s1 s2'", 3)));

  // worker counts agree
  CHECK(braid_trace(b, parse_braid("s1 s2 s1"), 4) ==
        braid_trace(b, parse_braid("s1 s2 s1"), 1));
}

TEST_CASE("state budget caps the sweep") {
  Braiding b = dbl_braiding("C2");
  CHECK_THROWS_AS(braid_trace(b, parse_braid("s1 s2"), 1, 3), HopfError);
  try {
    braid_trace(b, parse_braid("s1 s2"), 1, 3);
  } catch (const HopfError& e) {
    CHECK(std::string(e.code()) == "braid/budget");
  }
}

TEST_CASE("homomorphism crosschecks") {
  auto c2 = *named_group("C2");
  // empty word on one strand: trace 4, hom count over one generator 2,
  // normalization |G|^1 makes them match
  HomcountReport ok = homcount_crosscheck(c2, parse_braid("", 1),
                                          parse_presentation("gens: x;"), 1);
  CHECK(ok.trace == Cyc(4));
  CHECK(ok.homs == 2);
  CHECK(ok.predicted == Cyc(4));
  CHECK(ok.match);

  HomcountReport off = homcount_crosscheck(c2, parse_braid("", 1),
                                           parse_presentation("gens: x;"), 2);
  CHECK(!off.match);
}

}  // TEST_SUITE

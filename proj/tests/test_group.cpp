#include <algorithm>
#include <map>
#include <set>

#include "doctest.h"
#include "hopfinv/error.hpp"
#include "hopfinv/group.hpp"

using namespace hopfinv;

namespace {

FinGroup get(const std::string& name) {
  auto g = named_group(name);
  REQUIRE(g.has_value());
  return *g;
}

bool table_associative(const FinGroup& g) {
  for (int a = 0; a < g.n; ++a)
    for (int b = 0; b < g.n; ++b)
      for (int c = 0; c < g.n; ++c)
        if (g.mul(g.mul(a, b), c) != g.mul(a, g.mul(b, c))) return false;
  return true;
}

}  // namespace

TEST_SUITE("group") {

TEST_CASE("named group catalogue") {
  struct Row {
    const char* name;
    int order;
    long exponent;
    int classes;
  };
  const Row rows[] = {
      {"C1", 1, 1, 1},    {"C2", 2, 2, 2},     {"C3", 3, 3, 3},
      {"C4", 4, 4, 4},    {"C2xC2", 4, 2, 4},  {"C5", 5, 5, 5},
      {"S3", 6, 6, 3},    {"D8", 8, 4, 5},     {"Q8", 8, 4, 5},
      {"C2xC4", 8, 4, 8}, {"S4", 24, 12, 5},
  };
  for (const auto& row : rows) {
    CAPTURE(row.name);
    FinGroup g = get(row.name);
    CHECK(g.n == row.order);
    CHECK(g.exponent() == row.exponent);
    CHECK(g.conjugacy_class_count() == row.classes);
    CHECK((int)g.labels.size() == g.n);
    for (int a = 0; a < g.n; ++a) {
      CHECK(g.mul(g.identity, a) == a);
      CHECK(g.mul(a, g.invof(a)) == g.identity);
    }
  }
  CHECK(table_associative(get("S3")));
  CHECK(table_associative(get("D8")));
  CHECK(!named_group("nope").has_value());
  CHECK(!named_group("C0").has_value());
}

TEST_CASE("element orders in Q8") {
  FinGroup q8 = get("Q8");
  std::map<long, int> histogram;
  for (int a = 0; a < q8.n; ++a) ++histogram[q8.order_of(a)];
  CHECK(histogram[1] == 1);
  CHECK(histogram[2] == 1);
  CHECK(histogram[4] == 6);
}

TEST_CASE("direct products") {
  FinGroup g = get("C2xC4");
  CHECK(g.n == 8);
  FinGroup h = get("C2xC2xC2");
  CHECK(h.n == 8);
  CHECK(h.exponent() == 2);
  FinGroup p = direct_product(get("C2"), get("C3"));
  CHECK(p.n == 6);
  CHECK(p.exponent() == 6);
}

TEST_CASE("isomorphism tests") {
  CHECK(isomorphic(direct_product(get("C2"), get("C3")), get("C6")));
  CHECK(!isomorphic(get("C4"), get("C2xC2")));
  CHECK(!isomorphic(get("D8"), get("Q8")));
  CHECK(isomorphic(get("S3"), get("S3")));
  CHECK(!isomorphic(get("C2"), get("C3")));
}

TEST_CASE("from_table rejects junk") {
  // not closed / wrong identity structure
  std::vector<int> bad{0, 1, 1, 0};
  bad[3] = 2;  // out of range entry
  CHECK_THROWS_AS(FinGroup::from_table("bad", 2, bad, {"e", "t"}), HopfError);
  // valid C2 passes
  auto c2 = FinGroup::from_table("ok", 2, {0, 1, 1, 0}, {"e", "t"});
  CHECK(c2.n == 2);
}

TEST_CASE("character tables are orthogonal") {
  for (const char* name : {"C2", "C3", "C4", "C2xC2", "C5", "S3", "D8", "Q8", "S4"}) {
    CAPTURE(name);
    FinGroup g = get(name);
    auto table = character_table(g);
    REQUIRE(table.has_value());
    const auto& rows = table->rows;
    CHECK((int)rows.size() == g.conjugacy_class_count());

    // row 0 is the trivial character
    for (int a = 0; a < g.n; ++a) CHECK(rows[0].values[a] == Cyc(1));

    // sum of squared dimensions is the order
    long dimsum = 0;
    for (const auto& row : rows) dimsum += row.dim * row.dim;
    CHECK(dimsum == g.n);

    // first orthogonality
    for (size_t i = 0; i < rows.size(); ++i)
      for (size_t j = 0; j < rows.size(); ++j) {
        Cyc s;
        for (int a = 0; a < g.n; ++a)
          s += rows[i].values[a] * rows[j].values[g.invof(a)];
        CHECK(s == (i == j ? Cyc(g.n) : Cyc()));
      }

    // regular character: sum_i d_i chi_i(g) = |G| [g = e]
    for (int a = 0; a < g.n; ++a) {
      Cyc s;
      for (const auto& row : rows) s += Cyc(row.dim) * row.values[a];
      CHECK(s == (a == g.identity ? Cyc(g.n) : Cyc()));
    }
  }
}

TEST_CASE("character values live in the right field") {
  FinGroup c5 = get("C5");
  auto table = character_table(c5);
  REQUIRE(table.has_value());
  CHECK(table->conductor == 5);
  bool sees_zeta5 = false;
  for (const auto& row : table->rows)
    for (const auto& v : row.values)
      if (!v.is_rational()) sees_zeta5 = true;
  CHECK(sees_zeta5);
  CHECK(table->find(table->rows[1].name) == &table->rows[1]);
  CHECK(table->find("no-such-row") == nullptr);
}

TEST_CASE("automorphism groups") {
  struct Row {
    const char* name;
    size_t count;
  };
  for (const auto& row : {Row{"C2", 1}, Row{"C3", 2}, Row{"C4", 2}, Row{"C5", 4},
                          Row{"C2xC2", 6}, Row{"S3", 6}, Row{"D8", 8}, Row{"Q8", 24}}) {
    CAPTURE(row.name);
    FinGroup g = get(row.name);
    auto auts = automorphisms(g);
    CHECK(auts.size() == row.count);
    for (const auto& f : auts) {
      CHECK(f[g.identity] == g.identity);
      for (int a = 0; a < g.n; ++a)
        for (int b = 0; b < g.n; ++b) CHECK(f[g.mul(a, b)] == g.mul(f[a], f[b]));
    }
  }
}

TEST_CASE("presentation parsing") {
  auto p = parse_presentation("gens: x, y; rels: x y^2 x y^3, y x^4 y x^5;");
  CHECK(p.rank() == 2);
  REQUIRE(p.relators.size() == 2);
  CHECK(p.relators[0].size() == 7);
  CHECK(p.relators[1].size() == 11);

  auto q = parse_presentation("gens: a; rels: a^2 a';");
  REQUIRE(q.relators.size() == 1);
  REQUIRE(q.relators[0].size() == 3);
  CHECK(q.relators[0][2] == -1);

  auto free_group = parse_presentation("gens: u, v;");
  CHECK(free_group.rank() == 2);
  CHECK(free_group.relators.empty());

  CHECK_THROWS_AS(parse_presentation("rels: x;"), HopfError);
  CHECK_THROWS_AS(parse_presentation("gens: x; rels: y;"), HopfError);
  CHECK_THROWS_AS(parse_presentation("gens: x; rels: x^0;"), HopfError);

  auto round = parse_presentation(presentation_to_string(p));
  CHECK(round.relators == p.relators);
  CHECK(round.gen_names == p.gen_names);
}

TEST_CASE("hom counting") {
  FinGroup s3 = get("S3");
  CHECK(count_homs(parse_presentation("gens: x; rels: x^2;"), s3) == 4);
  CHECK(count_homs(parse_presentation("gens: x;"), s3) == 6);
  CHECK(count_homs(parse_presentation("gens: x, y;"), s3) == 36);
  CHECK(count_homs(parse_presentation("gens: x; rels: x;"), s3) == 1);
  // commuting pairs
  CHECK(count_homs(parse_presentation("gens: x, y; rels: x y x' y';"), s3) == 18);
  CHECK(count_homs(parse_presentation("gens: x; rels: x^3;"), get("C3")) == 3);
  CHECK(count_homs_tables(get("C2"), s3) == 4);
  CHECK(count_homs_tables(get("C3"), s3) == 3);
}

TEST_CASE("injective hom counting") {
  FinGroup s3 = get("S3");
  CHECK(count_injective_homs(get("C2"), s3) == 3);
  CHECK(count_injective_homs(get("C3"), s3) == 2);
  CHECK(count_injective_homs(get("C4"), s3) == 0);
  CHECK(count_injective_homs(get("C1"), s3) == 1);
}

TEST_CASE("subgroups normality quotients") {
  FinGroup s3 = get("S3");
  auto subs = all_subgroups(s3);
  CHECK(subs.size() == 6);
  int normal = 0;
  const std::vector<int>* a3 = nullptr;
  for (const auto& s : subs) {
    if (is_normal(s3, s)) ++normal;
    if (s.size() == 3) a3 = &s;
  }
  CHECK(normal == 3);  // 1, A3, S3
  REQUIRE(a3 != nullptr);
  FinGroup q = quotient_group(s3, *a3);
  CHECK(isomorphic(q, get("C2")));

  auto gens = generating_set(s3);
  std::set<int> closure{s3.identity};
  bool grew = true;
  while (grew) {
    grew = false;
    for (int a : std::set<int>(closure))
      for (int b : gens)
        for (int c : {s3.mul(a, b), s3.mul(b, a)})
          if (closure.insert(c).second) grew = true;
  }
  CHECK((int)closure.size() == s3.n);
}

}  // TEST_SUITE

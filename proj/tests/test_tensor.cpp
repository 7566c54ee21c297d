#include "doctest.h"
#include "hopfinv/error.hpp"
#include "hopfinv/group.hpp"
#include "hopfinv/hopf.hpp"
#include "hopfinv/tensor.hpp"

using namespace hopfinv;

namespace {

HopfPtr kg(const std::string& name) {
  auto g = named_group(name);
  REQUIRE(g.has_value());
  return group_algebra(*g);
}

TensorElement basis_leg(HopfPtr h, int i) {
  return TensorElement::from_primal(h, basis_el(*h, i));
}

}  // namespace

TEST_SUITE("tensor") {

TEST_CASE("shapes and scalars") {
  HopfPtr h = kg("C2");
  TensorElement s = TensorElement::scalar(h, Cyc(5));
  CHECK(s.primal_count() == 0);
  CHECK(s.dual_count() == 0);
  CHECK(as_scalar(s) == Cyc(5));
  CHECK(as_scalar(TensorElement(h, 0, 0)) == Cyc(0));
  CHECK_THROWS_AS(as_scalar(basis_leg(h, 0)), HopfError);

  TensorElement t(h, 2, 1);
  CHECK_THROWS_AS(t.add({0, 1}, Cyc(1)), HopfError);
  t.add({0, 1, 0}, Cyc(2));
  t.add({0, 1, 0}, Cyc(-2));
  CHECK(t.is_zero());
  CHECK(t.term_count() == 0);
}

TEST_CASE("linear structure") {
  HopfPtr h = kg("C3");
  TensorElement a = basis_leg(h, 1);
  TensorElement b = basis_leg(h, 2);
  TensorElement sum = a;
  sum += b;
  CHECK(sum.term_count() == 2);
  sum -= a;
  CHECK(sum == b);
  CHECK(a.scaled(Cyc(0)).is_zero());
  CHECK(a.scaled(Cyc(3)).coeffs().at({1}) == Cyc(3));
  CHECK_THROWS_AS(sum += TensorElement(kg("C2"), 1, 0), HopfError);
}

TEST_CASE("tensor product concatenates blocks") {
  HopfPtr h = kg("C3");
  TensorElement a = basis_leg(h, 2);
  TensorElement fd = TensorElement::from_dual(h, {Cyc(0), Cyc(7), Cyc(0)});
  TensorElement p = tensor_product(a, fd);
  CHECK(p.primal_count() == 1);
  CHECK(p.dual_count() == 1);
  REQUIRE(p.term_count() == 1);
  CHECK(p.coeffs().at({2, 1}) == Cyc(7));

  TensorElement q = tensor_product(p, basis_leg(h, 0));
  CHECK(q.primal_count() == 2);
  CHECK(q.dual_count() == 1);
  // primal keys first (theirs after ours), dual keys after
  CHECK(q.coeffs().at({2, 0, 1}) == Cyc(7));
}

TEST_CASE("comult and mult on group algebras") {
  auto g = *named_group("S3");
  HopfPtr h = kg("S3");
  for (int a = 0; a < g.n; ++a) {
    TensorElement d = comult_at(basis_leg(h, a), Side::H, 1);
    REQUIRE(d.term_count() == 1);
    CHECK(d.coeffs().at({a, a}) == Cyc(1));
    for (int b = 0; b < g.n; ++b) {
      TensorElement two = tensor_product(basis_leg(h, a), basis_leg(h, b));
      TensorElement m = mult_at(two, Side::H, 1);
      REQUIRE(m.term_count() == 1);
      CHECK(m.coeffs().at({g.mul(a, b)}) == Cyc(1));
    }
  }
}

TEST_CASE("permute moves factor p to image[p-1]") {
  HopfPtr h = kg("S3");
  TensorElement t = tensor_product(
      tensor_product(basis_leg(h, 1), basis_leg(h, 2)), basis_leg(h, 4));
  TensorElement r = permute(t, Side::H, {2, 3, 1});
  REQUIRE(r.term_count() == 1);
  CHECK(r.coeffs().at({4, 1, 2}) == Cyc(1));
  CHECK(permute(r, Side::H, {3, 1, 2}) == t);
  CHECK_THROWS_AS(permute(t, Side::H, {1, 1, 2}), HopfError);
  CHECK_THROWS_AS(permute(t, Side::H, {1, 2}), HopfError);
}

TEST_CASE("pairing a dual leg against a primal leg") {
  HopfPtr h = kg("C3");
  // counit as a dual vector is identically one on group elements
  std::vector<Cyc> eps(3, Cyc(1));
  TensorElement t =
      tensor_product(basis_leg(h, 0), TensorElement::from_dual(h, eps));
  CHECK(as_scalar(pair_legs(t, 1, 1)) == Cyc(1));

  // delta at the identity vanishes on other group elements
  std::vector<Cyc> delta_e{Cyc(1), Cyc(0), Cyc(0)};
  TensorElement u =
      tensor_product(basis_leg(h, 1), TensorElement::from_dual(h, delta_e));
  CHECK(pair_legs(u, 1, 1).is_zero());

  // matches pair_el on generic vectors
  std::vector<Cyc> f{Cyc(1), Cyc::zeta(3), Cyc(2)};
  std::vector<Cyc> x{Cyc(5), Cyc(1), Cyc(-1)};
  TensorElement v = tensor_product(TensorElement::from_primal(h, x),
                                   TensorElement::from_dual(h, f));
  CHECK(as_scalar(pair_legs(v, 1, 1)) == pair_el(f, x));

  // remaining legs keep their order
  TensorElement w = tensor_product(v, basis_leg(h, 2));
  TensorElement rest = pair_legs(w, 1, 1);
  CHECK(rest.primal_count() == 1);
  CHECK(rest.dual_count() == 0);
  CHECK(rest.coeffs().count({2}) == 1);
}

TEST_CASE("algebra product matches elementwise products") {
  HopfPtr h = kg("S3");
  std::vector<Cyc> x{Cyc(1), Cyc(0), Cyc(2), Cyc(0), Cyc(0), Cyc(1)};
  std::vector<Cyc> y{Cyc(0), Cyc(3), Cyc(0), Cyc(1), Cyc(0), Cyc(0)};
  TensorElement px = TensorElement::from_primal(h, x);
  TensorElement py = TensorElement::from_primal(h, y);
  CHECK(algebra_product(px, py) ==
        TensorElement::from_primal(h, mult_el(*h, x, y)));
  TensorElement dx = TensorElement::from_dual(h, x);
  TensorElement dy = TensorElement::from_dual(h, y);
  CHECK(algebra_product(dx, dy) ==
        TensorElement::from_dual(h, mult_dual(*h, x, y)));
  CHECK_THROWS_AS(algebra_product(px, dx), HopfError);
}

TEST_CASE("coordinate changes and cocommutativity of the integral") {
  HopfPtr h = kg("S3");
  auto ell = left_integral(*h);
  TensorElement dl = comult_at(TensorElement::from_primal(h, ell), Side::H, 1);
  TensorElement ss = apply_matrix_at(
      apply_matrix_at(dl, Side::H, 1, h->antipode), Side::H, 2, h->antipode);
  CHECK(ss == dl);
  CHECK(permute(dl, Side::H, {2, 1}) == dl);
  TensorElement d2 = comult_at(dl, Side::H, 2);
  CHECK(permute(d2, Side::H, {2, 3, 1}) == d2);
}

TEST_CASE("dual-side comultiplication matches products") {
  HopfPtr h = kg("S3");
  auto g = *named_group("S3");
  auto lam = dual_integral(*h);
  TensorElement d = comult_at(TensorElement::from_dual(h, lam), Side::D, 1);
  for (int a = 0; a < g.n; ++a)
    for (int b = 0; b < g.n; ++b) {
      auto it = d.coeffs().find({a, b});
      Cyc got = it == d.coeffs().end() ? Cyc(0) : it->second;
      CHECK(got == pair_el(lam, basis_el(*h, g.mul(a, b))));
    }
}

TEST_CASE("term budget aborts runaway expansions") {
  size_t saved = tensor_term_budget();
  set_tensor_term_budget(3);
  HopfPtr h = kg("S3");
  auto ell = left_integral(*h);
  CHECK_THROWS_AS(comult_at(TensorElement::from_primal(h, ell), Side::H, 1),
                  HopfError);
  try {
    comult_at(TensorElement::from_primal(h, ell), Side::H, 1);
  } catch (const HopfError& e) {
    CHECK(std::string(e.code()) == "tensor/budget");
  }
  set_tensor_term_budget(saved);
  CHECK(tensor_term_budget() == saved);
}

TEST_CASE("dump format") {
  HopfPtr h = kg("C2");
  auto ell = left_integral(*h);
  TensorElement dl = comult_at(TensorElement::from_primal(h, ell), Side::H, 1);
  CHECK(dump_tensor(dl) == "1 1 | : 1\n2 2 | : 1\n");
  CHECK(dump_tensor(TensorElement::scalar(h, Cyc(5))) == "| : 5\n");
  TensorElement d = TensorElement::from_dual(h, {Cyc(0), Cyc(rat(1, 2))});
  CHECK(dump_tensor(d) == "| 2 : 1/2\n");
}

TEST_CASE("dense coordinates are key ordered") {
  HopfPtr h = kg("C2");
  TensorElement t(h, 1, 1);
  t.add({1, 0}, Cyc(7));
  auto dense = tensor_to_dense(t);
  REQUIRE(dense.size() == 4);
  CHECK(dense[2] == Cyc(7));
  CHECK(dense[0] == Cyc(0));
  t.add({0, 1}, Cyc(-1));
  CHECK(tensor_to_dense(t)[1] == Cyc(-1));
}

}  // TEST_SUITE

#include "mideal/parse.hpp"

#include "doctest.h"

using namespace mideal;

TEST_CASE("group algebra cancellation") {
  MonoSum one = mono({Rat(0)}, Rat(1));
  MonoSum t = mono({Rat(1)}, Rat(1));
  MonoSum f = madd(one, mneg(t));   // 1 - t
  MonoSum g = madd(one, t);         // 1 + t
  MonoSum fg = mmul(f, g);
  CHECK(fg == madd(one, mneg(mono({Rat(2)}, Rat(1)))));  // 1 - t^2
  CHECK(momega(fg) == Point{Rat(0)});
  CHECK(mmul(f, MonoSum{}).is_zero());
}

TEST_CASE("contents over a valuation domain") {
  ValuationDomain V(OrderedGroup::Z());
  MonoSum one = mono({Rat(0)}, Rat(1));
  MonoSum t = mono({Rat(1)}, Rat(1));
  VPoly f = {one, mneg(t)};
  VPoly g = {one, t};
  CHECK(content(V, f) == unit_ideal(V));
  CHECK(content(V, vp_mul(f, g)) == unit_ideal(V));
  GaussReport r = gauss_check(V, f, g, nullptr);
  CHECK(r.equal);
  MertensReport m = dedekind_mertens_check(V, f, g);
  CHECK(m.holds);
  CHECK(m.m == 1);
}

TEST_CASE("the Z[sqrt(-3)] content gap") {
  QuadraticOrder O = QuadraticOrder::from_disc(Int(-12));
  QPoly f = parse_qpoly(O, "2+(1+sqrt(-3))X");
  QPoly g = parse_qpoly(O, "2+(1-sqrt(-3))X");
  LatticeIdeal P = make_lattice_ideal(O, 1, 2, 1, 1);

  CHECK(content(O, f) == P);
  CHECK(content(O, g) == P);
  CHECK(content(O, qp_mul(O, f, g)) == principal_ideal(O, QElem{Rat(4), Rat(0)}));
  CHECK(multiply(P, P) == scale(P, QElem{Rat(2), Rat(0)}));

  GaussReport plain = gauss_check(O, f, g, nullptr);
  CHECK_FALSE(plain.equal);
  StarOp v = star_v();
  CHECK_FALSE(gauss_check(O, f, g, &v).equal);

  MertensReport m = dedekind_mertens_check(O, f, g);
  CHECK(m.holds);
  CHECK(m.m == 1);

  // both Dedekind-Mertens sides equal 4P
  LatticeIdeal fourP = scale(P, QElem{Rat(4), Rat(0)});
  CHECK(multiply(content(O, f), content(O, qp_mul(O, f, g))) == fourP);
  CHECK(multiply(multiply(content(O, f), content(O, f)), content(O, g)) == fourP);
}

TEST_CASE("polynomial parsing") {
  QuadraticOrder O = QuadraticOrder::from_disc(Int(-12));
  QPoly f = parse_qpoly(O, "2+(1+sqrt(-3))X");
  REQUIRE(f.size() == 2);
  CHECK(f[0] == QElem{Rat(2), Rat(0)});
  CHECK(f[1] == QElem{Rat(1), Rat(1)});
  CHECK(degree(f) == 1);
  CHECK(parse_qpoly(O, "3*X^2 - X^2") == parse_qpoly(O, "2X^2"));
  CHECK(parse_qelem(O, "1/2 + sqrt(-12)/2") == QElem{Rat(1, 2), Rat(1)});
  CHECK_THROWS_AS(parse_qelem(O, "sqrt(2)"), parse_error);
  CHECK_THROWS_AS(parse_qpoly(O, "2+"), parse_error);
}

TEST_CASE("pstarmd over a valuation domain") {
  ValuationDomain V(OrderedGroup::ZLoc(2));
  StarOp t = star_t();
  PStarMDReport r = pstarmd_check(V, t, {make_ideal(V, {Rat(3, 4)}, false)});
  CHECK(r.all_invertible);  // valuation domains are PvMD, hence PtMD
}

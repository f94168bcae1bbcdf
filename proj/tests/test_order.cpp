#include "mideal/parse.hpp"

#include "doctest.h"

using namespace mideal;

TEST_CASE("discriminant bookkeeping") {
  QuadraticOrder O = QuadraticOrder::from_disc(Int(-12));
  CHECK(O.fund_disc == -3);
  CHECK(O.conductor == 2);
  CHECK_FALSE(O.integrally_closed());
  CHECK(O.maximal_order().disc == -3);
  CHECK(QuadraticOrder::from_disc(Int(5)).conductor == 1);
  CHECK(QuadraticOrder::from_disc(Int(40)).conductor == 1);
  CHECK_THROWS(QuadraticOrder::from_disc(Int(7)));   // 3 mod 4
  CHECK_THROWS(QuadraticOrder::from_disc(Int(9)));   // square
  CHECK_THROWS(QuadraticOrder::from_disc(Int(0)));
}

TEST_CASE("the conductor-two prime of Z[sqrt(-3)]") {
  QuadraticOrder O = QuadraticOrder::from_disc(Int(-12));
  QElem root = parse_qelem(O, "sqrt(-3)");
  LatticeIdeal P = from_generators(O, {QElem{Rat(2), Rat(0)}, qadd(QElem{Rat(1), Rat(0)}, root)});
  CHECK(P == make_lattice_ideal(O, 1, 2, 1, 1));
  CHECK(P.norm() == Rat(2));

  CHECK(multiply(P, P) == scale(P, QElem{Rat(2), Rat(0)}));
  LatticeIdeal Pinv = invert(P);
  CHECK(Pinv == make_lattice_ideal(O, 2, 2, 1, 1));  // = O_max as an O-module
  CHECK(multiply(P, Pinv) == P);
  CHECK_FALSE(is_invertible(P));
  CHECK_FALSE(is_v_invertible(P));
  CHECK(v_closure(P) == P);
  CHECK(colon(P, P) == Pinv);  // the multiplier ring of P is the maximal order
  CHECK_FALSE(is_principal(P));
}

TEST_CASE("order change across the conductor") {
  QuadraticOrder O = QuadraticOrder::from_disc(Int(-12));
  QuadraticOrder Omax = O.maximal_order();
  LatticeIdeal P = make_lattice_ideal(O, 1, 2, 1, 1);
  LatticeIdeal ext = extend_to_order(P, Omax);
  CHECK(absolute_lattice(ext) ==
        absolute_lattice(scale(unit_ideal(Omax), QElem{Rat(2), Rat(0)})));
  // 2 O_max, read back as a Z[sqrt(-3)]-module, is P itself
  CHECK(restrict_to_order(ext, O) == P);
  CHECK(restrict_to_order(extend_to_order(unit_ideal(O), Omax), O) ==
        make_lattice_ideal(O, 2, 2, 1, 1));
}

TEST_CASE("principality") {
  QuadraticOrder O = QuadraticOrder::from_disc(Int(-12));
  QElem z = parse_qelem(O, "1+sqrt(-3)");
  LatticeIdeal I = principal_ideal(O, z);
  CHECK(is_principal(I));
  auto g = principal_generator(I);
  REQUIRE(g.has_value());
  CHECK(principal_ideal(O, *g) == I);
  CHECK_FALSE(is_principal(make_lattice_ideal(O, 1, 2, 1, 1)));

  QuadraticOrder Zi = QuadraticOrder::from_disc(Int(-4));
  // (2, 1+i) = (1+i) is principal in Z[i]
  LatticeIdeal two = from_generators(Zi, {QElem{Rat(2), Rat(0)}, parse_qelem(Zi, "1+sqrt(-1)")});
  CHECK(is_principal(two));
}

TEST_CASE("ideal enumeration") {
  QuadraticOrder O = QuadraticOrder::from_disc(Int(-12));
  auto maximals = maximal_ideals_up_to(O, Int(5));
  bool has_p2 = false;
  for (auto& m : maximals) has_p2 = has_p2 || m == make_lattice_ideal(O, 1, 2, 1, 1);
  CHECK(has_p2);
  for (auto& m : maximals) CHECK(m.norm() <= Rat(5));

  auto all = integral_ideals_up_to(O, Int(4));
  CHECK(all.size() == 6);
  for (auto& i : all) {
    CHECK(i.den == 1);
    CHECK(lattice_subset(i, unit_ideal(O)));
  }
}

TEST_CASE("colon and intersection consistency") {
  QuadraticOrder O = QuadraticOrder::from_disc(Int(-20));
  LatticeIdeal I = from_generators(O, {QElem{Rat(3), Rat(0)}, parse_qelem(O, "1+sqrt(-5)")});
  LatticeIdeal J = from_generators(O, {QElem{Rat(2), Rat(0)}, parse_qelem(O, "1+sqrt(-5)")});
  CHECK(colon(I, J) == multiply(I, invert(J)));  // J is invertible in Z[sqrt(-5)]
  CHECK(lattice_subset(intersect(I, J), I));
  CHECK(lattice_subset(intersect(I, J), J));
  CHECK(lattice_subset(multiply(I, J), intersect(I, J)));
  CHECK_FALSE(is_principal(I));
  CHECK(is_principal(multiply(I, I)));  // class of (3, 1+sqrt(-5)) has order 2
}

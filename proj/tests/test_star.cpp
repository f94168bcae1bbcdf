#include "mideal/star.hpp"

#include "doctest.h"

using namespace mideal;

TEST_CASE("closure kinds on the valuation backend") {
  ValuationDomain V(OrderedGroup::ZLoc(2));
  ValIdeal M = maximal_ideal(V);
  CHECK(close(star_d(), V, M) == M);
  CHECK(close(star_v(), V, M) == unit_ideal(V));
  CHECK(close(star_t(), V, M) == M);  // t is finite-type, hence trivial here
  CHECK(star_of_unit(star_v(), V) == unit_ideal(V));
  CHECK_FALSE(is_semistar_only(star_v(), V));

  CHECK(finite_type_of(star_v(), true).kind == StarKind::D);
  CHECK(finite_type_of(star_v(), false).kind == StarKind::T);
  CHECK(finite_type_of(star_t(), true).kind == StarKind::T);

  CompareResult cmp = compare_ops(star_d(), star_v(), V, {M, unit_ideal(V)});
  CHECK(cmp.leq);
  CHECK_FALSE(cmp.geq);
  CHECK(cmp.geq_witness == M.str());
}

TEST_CASE("family validation") {
  ValuationDomain V(OrderedGroup::ZLoc(2));
  CHECK_NOTHROW(star_w(V, {unit_ideal(V)}));
  CHECK_THROWS(star_w(V, {make_ideal(V, {Rat(2)}, false)}));  // H^v = 2V != V
  CHECK_THROWS(star_w(V, {maximal_ideal(V)}));              // not principal
  CHECK_THROWS(star_w(V, {make_ideal(V, {Rat(-1)}, false)}));  // not integral
  CHECK_THROWS(star_meet(V, {ValPrime{ConvexSubgroup{1}}}));   // k must be < rank

  QuadraticOrder O = QuadraticOrder::from_disc(Int(-12));
  CHECK_NOTHROW(star_meet(O, {O.maximal_order()}));
  CHECK_THROWS(star_meet(O, {QuadraticOrder::from_disc(Int(-4))}));
}

TEST_CASE("the maximal-order meet on Z[sqrt(-3)]") {
  QuadraticOrder O = QuadraticOrder::from_disc(Int(-12));
  StarOp meet = star_meet(O, {O.maximal_order()});
  LatticeIdeal P = make_lattice_ideal(O, 1, 2, 1, 1);
  LatticeIdeal halfP = make_lattice_ideal(O, 2, 2, 1, 1);

  CHECK(star_of_unit(meet, O) == halfP);
  CHECK(is_semistar_only(meet, O));
  CHECK(close(meet, O, P) == P);  // P = 2 O_max is already an O_max-module
  CHECK(close(meet, O, principal_ideal(O, QElem{Rat(3), Rat(0)})) ==
        scale(halfP, QElem{Rat(3), Rat(0)}));

  CHECK(is_quasi_star_invertible(meet, O, P));
  CHECK_FALSE(is_star_invertible(meet, O, P));
  CHECK(is_star_invertible(star_v(), O, unit_ideal(O)));
  CHECK_FALSE(is_star_invertible(star_v(), O, P));
}

TEST_CASE("meets over localizations on the valuation backend") {
  ValuationDomain V(OrderedGroup::lex({OrderedGroup::Z(), OrderedGroup::ZLoc(2)}));
  StarOp full = star_meet(V, {ValPrime{ConvexSubgroup{0}}});
  StarOp loc = star_meet(V, {ValPrime{ConvexSubgroup{1}}});
  ValIdeal I = make_ideal(V, {Rat(2), Rat(1, 2)}, false);
  CHECK(close(full, V, I) == I);  // V_M = V
  // I V_P only remembers the leading coordinate
  CHECK(close(loc, V, I) == ValIdeal{V.group, Cut{{Rat(2)}, false}});
  CHECK(is_semistar_only(loc, V));
  CHECK(localization_as_module(V, ValPrime{ConvexSubgroup{1}}).cut ==
        Cut{{Rat(0)}, false});
}

TEST_CASE("H-domain surface for a Dedekind order") {
  HDomainReport hd = h_domain_check(QuadraticOrder::from_disc(Int(-4)), Int(10));
  CHECK(hd.holds);
}

#include "mideal/suites.hpp"

#include "doctest.h"

using namespace mideal;

TEST_CASE("rank-one arithmetic over Z[1/2], cut at 1/3") {
  ValuationDomain V(OrderedGroup::ZLoc(2));
  ValIdeal I = make_ideal(V, {Rat(1, 3)}, false);
  ValIdeal I2 = multiply(V, I, I);
  CHECK(I2 == make_ideal(V, {Rat(2, 3)}, false));
  ValIdeal I3 = multiply(V, I2, I);
  // the boundary sum 1 lies in the group but is not attained by the factors
  CHECK(I3 == ValIdeal{V.group, Cut{{Rat(1)}, true}});
  CHECK(v_closure(V, I3) == make_ideal(V, {Rat(1)}, false));

  ValIdeal inv = colon(V, unit_ideal(V), I);
  CHECK(inv == make_ideal(V, {Rat(-1, 3)}, false));
  CHECK(multiply(V, I, inv) == maximal_ideal(V));
  CHECK(is_v_invertible(V, I));
  CHECK_FALSE(is_invertible(V, I));
  CHECK_FALSE(is_principal(V, I));
  CHECK(is_principal(V, make_ideal(V, {Rat(5, 8)}, false)));
  CHECK(phi(V, I) == Rat(1, 3));
}

TEST_CASE("maximal ideal over Q") {
  ValuationDomain V(OrderedGroup::Q());
  ValIdeal M = maximal_ideal(V);
  CHECK(M.cut == Cut{{Rat(0)}, true});
  CHECK(multiply(V, M, M) == M);
  CHECK(colon(V, unit_ideal(V), M) == unit_ideal(V));
  CHECK(v_closure(V, M) == unit_ideal(V));
  CHECK_FALSE(is_divisorial(V, M));
  CHECK(is_v_invertible(V, M));  // (M V)^v = M^v = V
  CHECK_FALSE(is_invertible(V, M));
}

TEST_CASE("band primes over Z lex Z[1/2]") {
  ValuationDomain V(OrderedGroup::lex({OrderedGroup::Z(), OrderedGroup::ZLoc(2)}));
  ValPrime P{ConvexSubgroup{1}};
  ValIdeal Pi = prime_as_ideal(V, P);
  CHECK(Pi.cut == Cut{{Rat(1)}, false});
  // the band prime is not idempotent: value sums land in the band at 2
  CHECK(multiply(V, Pi, Pi) == ValIdeal{V.group, Cut{{Rat(2)}, false}});
  CHECK(colon(V, unit_ideal(V), Pi) == ValIdeal{V.group, Cut{{Rat(0)}, false}});
  CHECK(is_divisorial(V, Pi));
  CHECK_FALSE(is_v_invertible(V, Pi));

  ValIdeal M = maximal_ideal(V);
  CHECK(M.cut == Cut{{Rat(0), Rat(0)}, true});
  CHECK(multiply(V, M, M) == M);
  MaximalIdealProfile prof = maximal_ideal_profile(V);
  CHECK_FALSE(prof.principal);
  CHECK(prof.idempotent);
  CHECK(prof.prime_directly_below.subgroup.k == 1);
}

TEST_CASE("quotients, localizations, pushforwards") {
  ValuationDomain V(OrderedGroup::lex({OrderedGroup::Z(), OrderedGroup::ZLoc(2)}));
  ValPrime P{ConvexSubgroup{1}};
  ValuationDomain W = quotient_by_prime(V, P);
  CHECK(W.group == OrderedGroup::ZLoc(2));
  CHECK(localize_at_prime(V, P).group == OrderedGroup::Z());

  ValIdeal I = make_ideal(V, {Rat(0), Rat(1, 3)}, false);
  CHECK(push_ideal(V, I, P) == make_ideal(W, {Rat(1, 3)}, false));
  CHECK(push_ideal(V, v_closure(V, I), P) == v_closure(W, push_ideal(V, I, P)));
  CHECK_THROWS(push_ideal(V, make_ideal(V, {Rat(1), Rat(0)}, false), P));
}

TEST_CASE("colon matches the interval oracle on hand cases") {
  OrderedGroup G = OrderedGroup::ZLoc(2);
  ValuationDomain V(G);
  Cut unit{{Rat(0)}, false}, m{{Rat(0)}, true}, third{{Rat(1, 3)}, false};
  // (V : M) = V, (M : V) = M, 0 in I^v for I = M
  CHECK(oracle_colon_member(G, unit, m, {Rat(0)}));
  CHECK_FALSE(oracle_colon_member(G, m, unit, {Rat(0)}));
  CHECK(oracle_v_closure_member(G, m, {Rat(0)}));
  CHECK_FALSE(oracle_v_closure_member(G, third, {Rat(1, 4)}));
  CHECK(oracle_v_closure_member(G, third, {Rat(3, 8)}));
  CHECK(oracle_product_member(G, third, third, {Rat(3, 4)}));
  CHECK_FALSE(oracle_product_member(G, third, third, {Rat(5, 8)}));
}

TEST_CASE("mixed-rank products against the oracle") {
  OrderedGroup G = OrderedGroup::lex({OrderedGroup::Z(), OrderedGroup::ZLoc(2)});
  ValuationDomain V(G);
  Rng rng(12345);
  for (int i = 0; i < 50; ++i) {
    ValIdeal I = random_val_ideal(rng, V, true);
    ValIdeal J = random_val_ideal(rng, V, true);
    ValIdeal IJ = multiply(V, I, J);
    Point probe = {Rat(rng.range(-6, 6)), Rat(rng.range(-24, 24), 4)};
    CHECK(cut_member(G, IJ.cut, probe) ==
          oracle_product_member(G, I.cut, J.cut, probe));
    CHECK(cut_member(G, colon(V, I, J).cut, probe) ==
          oracle_colon_member(G, I.cut, J.cut, probe));
  }
}

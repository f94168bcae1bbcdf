#include "mideal/suites.hpp"

#include "doctest.h"

using namespace mideal;

TEST_CASE("class reduction modulo the bottom group") {
  Atom half{AtomKind::ZLoc, 2};
  CHECK(class_reduce(half, Rat(5, 8)) == Rat(0));
  CHECK(class_reduce(half, Rat(1, 3)) == Rat(1, 3));
  CHECK(class_reduce(half, Rat(4, 3)) == Rat(1, 3));
  CHECK(class_reduce(half, Rat(5, 6)) == Rat(1, 3));   // 5/6 = 1/2 + 1/3
  CHECK(class_reduce(Atom{AtomKind::Q}, Rat(22, 7)) == Rat(0));
  CHECK(class_reduce(Atom{AtomKind::Z}, Rat(7, 3)) == Rat(1, 3));
}

TEST_CASE("descriptors") {
  CHECK(cl_v_descriptor(ValuationDomain(OrderedGroup::Z())).kind == ClassGroupKind::Trivial);
  CHECK(cl_v_descriptor(ValuationDomain(OrderedGroup::lex({OrderedGroup::Q(), OrderedGroup::Z()})))
            .kind == ClassGroupKind::Trivial);
  ClassGroupDescriptor d =
      cl_v_descriptor(ValuationDomain(OrderedGroup::lex({OrderedGroup::Z(), OrderedGroup::Q()})));
  CHECK(d.kind == ClassGroupKind::RModG);
  CHECK(d.modulus == OrderedGroup::Q());
}

TEST_CASE("torsion classes over Z[1/2]") {
  ValuationDomain V(OrderedGroup::ZLoc(2));
  IdealClass c = class_of(V, make_ideal(V, {Rat(1, 3)}, false));
  CHECK_FALSE(class_trivial(c));
  CHECK(class_order(c) == Int(3));
  CHECK(class_trivial(class_mul(class_mul(c, c), c)));
  CHECK(class_trivial(class_of(V, make_ideal(V, {Rat(5, 8)}, false))));
  IdealClass c7 = class_of(V, make_ideal(V, {Rat(1, 7)}, false));
  CHECK(class_order(c7) == Int(7));
  CHECK_FALSE(class_eq(c, c7));
  CHECK_THROWS(class_of(V, maximal_ideal(V)));  // not divisorial
}

TEST_CASE("transport along a quotient") {
  ValuationDomain V(OrderedGroup::lex({OrderedGroup::Z(), OrderedGroup::ZLoc(2)}));
  ValPrime P{ConvexSubgroup{1}};
  std::vector<ValIdeal> samples = {
      make_ideal(V, {Rat(0), Rat(1, 3)}, false), make_ideal(V, {Rat(0), Rat(2, 3)}, false),
      make_ideal(V, {Rat(0), Rat(5, 8)}, false), make_ideal(V, {Rat(0), Rat(1, 5)}, false)};
  TransportReport tr = cl_transport_check(V, P, samples);
  CHECK(tr.ok);
  CHECK(tr.checked > 0);
}

TEST_CASE("order surveys") {
  OrderClassSurvey s = order_class_survey(QuadraticOrder::from_disc(Int(-4)), Int(10));
  CHECK(s.pic_classes == 1);
  CHECK(s.v_classes == 1);
  CHECK(s.clT_equals_clV);
  CHECK(s.every_t_invertible_invertible);

  OrderClassSurvey s20 = order_class_survey(QuadraticOrder::from_disc(Int(-20)), Int(25));
  CHECK(s20.pic_classes == 2);
  CHECK(s20.t_classes == 2);
}

TEST_CASE("gcd criterion") {
  ValuationDomain V(OrderedGroup::Q());
  std::vector<ValIdeal> samples = {make_ideal(V, {Rat(1, 2)}, false),
                                   make_ideal(V, {Rat(-7, 3)}, false)};
  GcdReport g = gcd_criterion_check(V, samples);
  CHECK(g.applicable);
  CHECK(g.holds);
  CHECK(g.representability_caveat);

  ValuationDomain W(OrderedGroup::ZLoc(2));
  GcdReport h = gcd_criterion_check(W, {make_ideal(W, {Rat(1, 3)}, false)});
  CHECK(h.applicable);
  CHECK_FALSE(h.all_classes_trivial);
}

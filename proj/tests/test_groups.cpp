#include "mideal/parse.hpp"

#include "doctest.h"

using namespace mideal;

TEST_CASE("group parsing and structure") {
  CHECK(parse_group("Z") == OrderedGroup::Z());
  CHECK(parse_group("Q") == OrderedGroup::Q());
  CHECK(parse_group("Z[1/2]") == OrderedGroup::ZLoc(2));
  CHECK(parse_group("lex(Z, Z[1/2])") ==
        OrderedGroup::lex({OrderedGroup::Z(), OrderedGroup::ZLoc(2)}));
  CHECK(parse_group("lex(Z, lex(Q, Z))").rank() == 3);
  CHECK_THROWS(parse_group("Z[1/4]"));
  CHECK(OrderedGroup::Z().discrete_bottom());
  CHECK_FALSE(OrderedGroup::lex({OrderedGroup::Z(), OrderedGroup::ZLoc(2)}).discrete_bottom());
}

TEST_CASE("atom membership") {
  Atom d{AtomKind::ZLoc, 2};
  CHECK(d.contains(Rat(5, 8)));
  CHECK(d.contains(Rat(-3)));
  CHECK_FALSE(d.contains(Rat(1, 3)));
  CHECK(Atom{AtomKind::Q}.contains(Rat(22, 7)));
  CHECK_FALSE(Atom{AtomKind::Z}.contains(Rat(1, 2)));
}

TEST_CASE("cut canonicalization") {
  OrderedGroup Z = OrderedGroup::Z();
  CHECK(canon_cut(Z, {Rat(1, 2)}, false) == Cut{{Rat(1)}, false});
  CHECK(canon_cut(Z, {Rat(1, 2)}, true) == Cut{{Rat(1)}, false});
  CHECK(canon_cut(Z, {Rat(2)}, true) == Cut{{Rat(3)}, false});

  OrderedGroup D = OrderedGroup::ZLoc(2);
  CHECK(canon_cut(D, {Rat(1, 3)}, true) == Cut{{Rat(1, 3)}, false});
  CHECK(canon_cut(D, {Rat(1, 3)}, false) == Cut{{Rat(1, 3)}, false});
  CHECK(canon_cut(D, {Rat(1, 2)}, true) == Cut{{Rat(1, 2)}, true});

  OrderedGroup L = OrderedGroup::lex({OrderedGroup::Z(), D});
  // nonmember leading coordinate truncates to a band
  Cut band = canon_cut(L, {Rat(1, 2), Rat(7)}, false);
  CHECK(band.prefix_len() == 1);
  CHECK(band == Cut{{Rat(1)}, false});
  CHECK(cut_canonical(L, band));
}

TEST_CASE("cut membership and bands") {
  OrderedGroup L = OrderedGroup::lex({OrderedGroup::Z(), OrderedGroup::ZLoc(2)});
  Cut band{{Rat(1)}, false};
  CHECK(cut_member(L, band, {Rat(1), Rat(-5)}));
  CHECK(cut_member(L, band, {Rat(2), Rat(0)}));
  CHECK_FALSE(cut_member(L, band, {Rat(0), Rat(100)}));

  Cut full{{Rat(0), Rat(1, 2)}, true};
  CHECK(cut_member(L, full, {Rat(0), Rat(5, 8)}));
  CHECK_FALSE(cut_member(L, full, {Rat(0), Rat(1, 2)}));
  CHECK(cut_subset(L, band, full));       // leading coordinate >= 1 dominates
  CHECK_FALSE(cut_subset(L, full, band));  // (0, 5/8) is only in the full cut
  CHECK(cut_subset(L, Cut{{Rat(2)}, false}, band));
  CHECK(cut_subset(L, band, Cut{{Rat(0), Rat(0)}, false}));
}

TEST_CASE("attained infima") {
  OrderedGroup D = OrderedGroup::ZLoc(2);
  CHECK(cut_attained(D, Cut{{Rat(3, 4)}, false}));
  CHECK_FALSE(cut_attained(D, Cut{{Rat(1, 3)}, false}));
  CHECK_FALSE(cut_attained(D, Cut{{Rat(0)}, true}));
}

TEST_CASE("minimal positive elements and convex subgroups") {
  CHECK(min_positive(OrderedGroup::Z()) == Point{Rat(1)});
  CHECK_FALSE(min_positive(OrderedGroup::Q()).has_value());
  OrderedGroup L = OrderedGroup::lex({OrderedGroup::Q(), OrderedGroup::Z()});
  CHECK(min_positive(L) == Point{Rat(0), Rat(1)});
  CHECK_FALSE(
      min_positive(OrderedGroup::lex({OrderedGroup::Z(), OrderedGroup::ZLoc(2)})).has_value());
  CHECK(convex_subgroups(L).size() == 3);
  CHECK(subgroup_group(L, ConvexSubgroup{1}) == OrderedGroup::Z());
  CHECK(quotient_group(L, ConvexSubgroup{1}) == OrderedGroup::Q());
}

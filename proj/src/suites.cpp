#include "mideal/suites.hpp"

#include "mideal/report.hpp"

#include <algorithm>
#include <stdexcept>

namespace mideal {

namespace {

// ---------------------------------------------------------------------
// Exact interval engine: decides whether the group contains a point
// between two extended lex bounds.  This is the definitional oracle for
// the cut calculus; it never consults the library's rule tables.

struct Ext {
  int inf = 0;  // -1, 0 (finite), +1
  Rat v;
};

struct LexBound {
  std::vector<Ext> v;
  bool strict = false;
};

bool atom_exists_strictly_between(const Atom& A, const Ext& lo, const Ext& hi) {
  if (lo.inf == 1 || hi.inf == -1) return false;
  if (lo.inf == -1 && hi.inf == 1) return true;
  if (lo.inf == -1 || hi.inf == 1) return true;  // one-sided: atoms are unbounded
  if (A.discrete()) return Rat(floor_int(lo.v) + 1) < hi.v;
  return lo.v < hi.v;  // Q and Z[1/p] are dense in R
}

bool exists_rec(const OrderedGroup& G, const LexBound& lo, const LexBound& hi, int idx,
                bool lo_active, bool hi_active) {
  if (idx == G.rank()) return (!lo_active || !lo.strict) && (!hi_active || !hi.strict);
  if (lo_active) {
    if (lo.v[idx].inf == 1) return false;
    if (lo.v[idx].inf == -1) lo_active = false;
  }
  if (hi_active) {
    if (hi.v[idx].inf == -1) return false;
    if (hi.v[idx].inf == 1) hi_active = false;
  }
  const Atom& A = G.atoms[idx];
  Ext L = lo_active ? lo.v[idx] : Ext{-1, Rat()};
  Ext H = hi_active ? hi.v[idx] : Ext{1, Rat()};
  if (atom_exists_strictly_between(A, L, H)) return true;
  if (lo_active && hi_active && lo.v[idx].v == hi.v[idx].v) {
    if (!A.contains(lo.v[idx].v)) return false;
    return exists_rec(G, lo, hi, idx + 1, true, true);
  }
  if (lo_active && A.contains(lo.v[idx].v) && (!hi_active || lo.v[idx].v < hi.v[idx].v) &&
      exists_rec(G, lo, hi, idx + 1, true, false))
    return true;
  if (hi_active && A.contains(hi.v[idx].v) && (!lo_active || lo.v[idx].v < hi.v[idx].v) &&
      exists_rec(G, lo, hi, idx + 1, false, true))
    return true;
  return false;
}

bool exists_point(const OrderedGroup& G, const LexBound& lo, const LexBound& hi) {
  return exists_rec(G, lo, hi, 0, true, true);
}

LexBound pad_to_rank(const OrderedGroup& G, std::vector<Ext> v, int pad_sign, bool strict) {
  while (static_cast<int>(v.size()) < G.rank()) v.push_back(Ext{pad_sign, Rat()});
  return LexBound{std::move(v), strict};
}

// x in set(c)
LexBound lower_in_cut(const OrderedGroup& G, const Cut& c) {
  std::vector<Ext> v;
  for (auto& p : c.point) v.push_back(Ext{0, p});
  return pad_to_rank(G, std::move(v), c.open ? 1 : -1, c.open);
}

// x with (base - x) in set(c)
LexBound upper_in_shifted(const OrderedGroup& G, const Cut& c, const Point& base) {
  std::vector<Ext> v;
  for (std::size_t i = 0; i < c.point.size(); ++i) v.push_back(Ext{0, base[i] - c.point[i]});
  return pad_to_rank(G, std::move(v), c.open ? -1 : 1, c.open);
}

// b with (g + b) NOT in set(c)
LexBound upper_outside_shifted(const OrderedGroup& G, const Cut& c, const Point& g) {
  std::vector<Ext> v;
  for (std::size_t i = 0; i < c.point.size(); ++i) v.push_back(Ext{0, c.point[i] - g[i]});
  return pad_to_rank(G, std::move(v), c.open ? 1 : -1, !c.open);
}

// z that lower-bound every element of set(c).  Writing b for the
// infimum of set(c) in the lex completion (an extended vector), the
// dominating set {x : exists y in set(c), y < x} is exactly {x > b},
// so the lower bounds are {z <= b}.  b is derived from first
// principles: scan for the first coordinate outside its atom, else
// handle the open flag against the last prefix atom.
LexBound upper_bounds_of_set(const OrderedGroup& G, const Cut& c) {
  std::vector<Ext> v;
  int j = c.prefix_len();
  for (int i = 0; i < j; ++i) {
    const Atom& A = G.atoms[i];
    if (!A.contains(c.point[i])) {
      for (int t = 0; t < i; ++t) v.push_back(Ext{0, c.point[t]});
      if (A.discrete()) {
        v.push_back(Ext{0, Rat(floor_int(c.point[i]) + 1)});
        return pad_to_rank(G, std::move(v), -1, false);
      }
      v.push_back(Ext{0, c.point[i]});
      return pad_to_rank(G, std::move(v), 1, false);
    }
  }
  for (auto& p : c.point) v.push_back(Ext{0, p});
  if (!c.open) return pad_to_rank(G, std::move(v), -1, false);
  if (G.atoms[j - 1].discrete()) {
    v[j - 1].v += 1;  // successor: the infimum of {a > p} in a discrete atom
    return pad_to_rank(G, std::move(v), -1, false);
  }
  return pad_to_rank(G, std::move(v), 1, false);
}

LexBound lower_strictly_above(const Point& g) {
  std::vector<Ext> v;
  for (auto& p : g) v.push_back(Ext{0, p});
  return LexBound{std::move(v), true};
}

// definitional membership of a (possibly non-canonical) cut
bool raw_cut_member(const Cut& c, const Point& g) {
  for (std::size_t i = 0; i < c.point.size(); ++i) {
    if (g[i] > c.point[i]) return true;
    if (g[i] < c.point[i]) return false;
  }
  return !c.open;
}

}  // namespace

bool oracle_product_member(const OrderedGroup& G, const Cut& I, const Cut& J, const Point& g) {
  return exists_point(G, lower_in_cut(G, I), upper_in_shifted(G, J, g));
}

bool oracle_colon_member(const OrderedGroup& G, const Cut& I, const Cut& J, const Point& g) {
  return !exists_point(G, lower_in_cut(G, J), upper_outside_shifted(G, I, g));
}

bool oracle_v_closure_member(const OrderedGroup& G, const Cut& I, const Point& g) {
  return !exists_point(G, lower_strictly_above(g), upper_bounds_of_set(G, I));
}

// ---------------------------------------------------------------------
// Random data

namespace {

Rat atom_quantum(const Atom& A, int k) {
  switch (A.kind) {
    case AtomKind::Z:
      return Rat(1);
    case AtomKind::Q:
      return Rat(1, Int(1) << std::min(k, 12));
    case AtomKind::ZLoc: {
      Rat q(1);
      for (int i = 0; i < std::min(k, 8); ++i) q /= Rat(A.p);
      return q;
    }
  }
  return Rat(1);
}

Rat snap_to_atom(const Atom& A, const Rat& q, int k, bool up) {
  if (A.contains(q)) return q;
  Rat step = atom_quantum(A, k);
  Rat scaled = q / step;
  Int m = up ? ceil_int(scaled) : floor_int(scaled);
  return Rat(m) * step;
}

Rat random_member(Rng& rng, const Atom& A, int k, int box) {
  switch (A.kind) {
    case AtomKind::Z:
      return Rat(rng.range(-box, box));
    case AtomKind::Q: {
      long long d = rng.range(1, 12);
      return Rat(rng.range(-box * d, box * d), d);
    }
    case AtomKind::ZLoc: {
      int e = static_cast<int>(rng.range(0, std::min(k, 6)));
      Int d = 1;
      for (int i = 0; i < e; ++i) d *= A.p;
      long long lim = box;
      Rat r(rng.range(-lim, lim));
      return r + Rat(rng.range(-lim, lim), d);
    }
  }
  return Rat(0);
}

// possibly-nonmember coordinate for cut points
Rat random_coord(Rng& rng, int box) {
  static const long long dens[] = {1, 1, 2, 3, 4, 5, 8, 12};
  long long d = dens[rng.range(0, 7)];
  return Rat(rng.range(-box * d / 2 - 1, box * d / 2 + 1), d);
}

Cut random_raw_cut(Rng& rng, const OrderedGroup& G, bool allow_bands, int box) {
  int j = G.rank();
  if (allow_bands && G.rank() > 1 && rng.range(0, 4) == 0)
    j = static_cast<int>(rng.range(1, G.rank() - 1));
  Point p;
  for (int i = 0; i < j; ++i) {
    if (i + 1 < j && rng.range(0, 2) != 0)
      p.push_back(random_member(rng, G.atoms[i], 6, box / 2 + 1));
    else
      p.push_back(random_coord(rng, box));
  }
  return Cut{std::move(p), rng.flip()};
}

Point pad_point(const Cut& c, int rank) {
  Point p = c.point;
  p.resize(rank, Rat(0));
  return p;
}

}  // namespace

ValIdeal random_val_ideal(Rng& rng, const ValuationDomain& V, bool allow_bands) {
  Cut raw = random_raw_cut(rng, V.group, allow_bands, 8);
  return make_ideal(V, raw.point, raw.open);
}

LatticeIdeal random_lattice_ideal(Rng& rng, const QuadraticOrder& O, int height) {
  long long d = rng.range(1, 6);
  std::vector<QElem> gens;
  for (int i = 0; i < 2; ++i) {
    Rat u(rng.range(-height, height)), v(rng.range(-height, height));
    gens.push_back(from_wcoord(O, WCoord{u / Rat(d), v / Rat(d)}));
  }
  bool any = false;
  for (auto& g : gens) any = any || !g.is_zero();
  if (!any) gens[0] = QElem{Rat(1), Rat(0)};
  return from_generators(O, gens);
}

QPoly random_qpoly(Rng& rng, const QuadraticOrder& O, int max_deg, int height) {
  while (true) {
    int deg = static_cast<int>(rng.range(0, max_deg));
    QPoly f;
    for (int i = 0; i <= deg; ++i) {
      long long dd = rng.range(1, 2);
      f.push_back(QElem{Rat(rng.range(-height, height), dd), Rat(rng.range(-height, height), dd)});
    }
    f = qp_normalize(std::move(f));
    if (!f.empty()) return f;
  }
}

VPoly random_vpoly(Rng& rng, const ValuationDomain& V, int max_deg) {
  while (true) {
    int deg = static_cast<int>(rng.range(0, max_deg));
    VPoly f;
    for (int i = 0; i <= deg; ++i) {
      MonoSum c;
      int terms = static_cast<int>(rng.range(0, 2));
      for (int t = 0; t <= terms; ++t) {
        Point g;
        for (auto& A : V.group.atoms) g.push_back(random_member(rng, A, 4, 3));
        long long q = rng.range(-5, 5);
        if (q == 0) q = 1;
        c = madd(c, mono(std::move(g), Rat(q)));
      }
      f.push_back(std::move(c));
    }
    f = vp_normalize(std::move(f));
    if (!f.empty()) return f;
  }
}

// ---------------------------------------------------------------------
// Suites

namespace {

struct Check {
  bool passed = true;
  int checked = 0;
  std::string witness;

  void fail(const std::string& w) {
    if (passed) witness = w;
    passed = false;
  }
  void expect(bool ok, const std::string& w) {
    ++checked;
    if (!ok) fail(w);
  }
};

ojson check_json(const Check& c) {
  ojson j;
  j["checked"] = c.checked;
  j["passed"] = c.passed;
  if (!c.passed) j["witness"] = c.witness;
  return j;
}

SuiteResult finish(const std::string& name, std::uint64_t seed,
                   std::initializer_list<std::pair<const char*, const Check*>> parts,
                   ojson extra = ojson::object()) {
  SuiteResult r;
  r.name = name;
  r.passed = true;
  r.report["suite"] = name;
  r.report["seed"] = seed;
  for (auto& [key, chk] : parts) {
    r.report[key] = check_json(*chk);
    r.passed = r.passed && chk->passed;
  }
  for (auto& [k, v] : extra.items()) r.report[k] = v;
  r.report["passed"] = r.passed;
  return r;
}

std::vector<OrderedGroup> criterion_groups() {
  return {OrderedGroup::Z(), OrderedGroup::Q(), OrderedGroup::ZLoc(2),
          OrderedGroup::lex({OrderedGroup::Z(), OrderedGroup::ZLoc(2)}),
          OrderedGroup::lex({OrderedGroup::Q(), OrderedGroup::Z()})};
}

std::vector<Point> make_probes(Rng& rng, const OrderedGroup& G, const Cut& I, const Cut& J,
                               int k) {
  int rank = G.rank();
  Point pi = pad_point(I, rank), pj = pad_point(J, rank);
  std::vector<Point> bases = {add_points(pi, pj), add_points(pi, negate_point(pj)), pi,
                              Point(rank, Rat(0))};
  for (int i = 0; i < 2; ++i) {
    Point r;
    for (auto& A : G.atoms) r.push_back(random_member(rng, A, k, 8));
    bases.push_back(std::move(r));
  }
  std::vector<Point> probes;
  for (auto& base : bases) {
    for (bool up : {false, true}) {
      Point m;
      for (int i = 0; i < rank; ++i) m.push_back(snap_to_atom(G.atoms[i], base[i], k, up));
      probes.push_back(m);
      Rat q_last = atom_quantum(G.atoms[rank - 1], k);
      for (int s : {-2, -1, 1, 2}) {
        Point x = m;
        x[rank - 1] += Rat(s) * q_last;
        probes.push_back(std::move(x));
      }
      if (rank > 1) {
        Rat q0 = atom_quantum(G.atoms[0], k);
        for (int s : {-1, 1}) {
          Point x = m;
          x[0] += Rat(s) * q0;
          probes.push_back(std::move(x));
        }
      }
      if (group_member(G, base)) break;  // snapping is a no-op, one pass is enough
    }
  }
  return probes;
}

}  // namespace

SuiteResult suite_cut_oracle(std::uint64_t seed, const Bounds& bounds) {
  Rng rng(seed);
  Check chk;
  int pairs_per_kind = std::max(1, bounds.samples);
  for (auto& G : criterion_groups()) {
    ValuationDomain V(G);
    for (int n = 0; n < pairs_per_kind; ++n) {
      Cut rawI = random_raw_cut(rng, G, true, bounds.box);
      Cut rawJ = random_raw_cut(rng, G, true, bounds.box);
      ValIdeal I = make_ideal(V, rawI.point, rawI.open);
      ValIdeal J = make_ideal(V, rawJ.point, rawJ.open);
      ValIdeal IJ = multiply(V, I, J);
      ValIdeal IcJ = colon(V, I, J);
      ValIdeal JcI = colon(V, J, I);
      ValIdeal Iv = v_closure(V, I);
      for (auto& g : make_probes(rng, G, rawI, rawJ, bounds.grid_k)) {
        std::string at = G.str() + " I=" + cut_str(rawI) + " J=" + cut_str(rawJ) +
                         " at " + point_str(g);
        chk.expect(cut_member(G, I.cut, g) == raw_cut_member(rawI, g),
                   "canonicalization changes membership: " + at);
        chk.expect(cut_member(G, IJ.cut, g) == oracle_product_member(G, rawI, rawJ, g),
                   "multiply disagrees with oracle: " + at);
        chk.expect(cut_member(G, IcJ.cut, g) == oracle_colon_member(G, rawI, rawJ, g),
                   "colon(I,J) disagrees with oracle: " + at);
        chk.expect(cut_member(G, JcI.cut, g) == oracle_colon_member(G, rawJ, rawI, g),
                   "colon(J,I) disagrees with oracle: " + at);
        chk.expect(cut_member(G, Iv.cut, g) == oracle_v_closure_member(G, rawI, g),
                   "v_closure disagrees with oracle: " + at);
      }
    }
  }
  ojson extra;
  extra["pairsPerKind"] = pairs_per_kind;
  return finish("cut-oracle", seed, {{"oracleAgreement", &chk}}, extra);
}

// ---------------------------------------------------------------------

namespace {

// Test-side lattice tools, kept independent of the library's w-basis
// Hermite code: products are computed as field elements x + y*sqrt(D0)
// and reduced in the fixed basis (1, w0) of the maximal order.

struct TRow {
  Int u, v;
};

struct THnf {
  Int den, a, b, c;
};

THnf thnf(std::vector<TRow> rows, Int den) {
  for (bool progress = true; progress;) {
    progress = false;
    int piv = -1;
    for (std::size_t i = 0; i < rows.size(); ++i)
      if (rows[i].v != 0 &&
          (piv < 0 ||
           boost::multiprecision::abs(rows[i].v) < boost::multiprecision::abs(rows[piv].v)))
        piv = static_cast<int>(i);
    if (piv < 0) throw std::invalid_argument("degenerate test lattice");
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (static_cast<int>(i) == piv || rows[i].v == 0) continue;
      Int q = rows[i].v / rows[piv].v;
      rows[i].u -= q * rows[piv].u;
      rows[i].v -= q * rows[piv].v;
      if (rows[i].v != 0) progress = true;
    }
    if (!progress) std::swap(rows[piv], rows.back());
  }
  TRow g2 = rows.back();
  rows.pop_back();
  if (g2.v < 0) {
    g2.u = -g2.u;
    g2.v = -g2.v;
  }
  Int A = 0;
  for (auto& r : rows) A = gcd_int(A, r.u);
  if (A < 0) A = -A;
  if (A == 0) throw std::invalid_argument("degenerate test lattice");
  THnf h;
  Int B = ((g2.u % A) + A) % A;
  Int g = gcd_int(gcd_int(den, A), gcd_int(B, g2.v));
  h.den = den / g;
  h.a = A / g;
  h.b = (B / g) % (A / g);
  h.c = g2.v / g;
  return h;
}

// coordinates of x + y*sqrt(D0) in the basis (1, w0): y*sqrt(D0) =
// y*(2*w0 - D0)
std::pair<Rat, Rat> w0_coords(const QuadraticOrder& O, const QElem& e) {
  return {e.x - e.y * Rat(O.fund_disc), 2 * e.y};
}

THnf oracle_span(const QuadraticOrder& O, const std::vector<QElem>& gens) {
  QElem w = from_wcoord(O, WCoord{Rat(0), Rat(1)});
  std::vector<std::pair<Rat, Rat>> coords;
  for (auto& g : gens) {
    coords.push_back(w0_coords(O, g));
    coords.push_back(w0_coords(O, qmul(O, g, w)));
  }
  Int L = 1;
  for (auto& [u, v] : coords) {
    L = L / gcd_int(L, den(u)) * den(u);
    L = L / gcd_int(L, den(v)) * den(v);
  }
  std::vector<TRow> rows;
  for (auto& [u, v] : coords)
    rows.push_back(TRow{num(u) * (L / den(u)), num(v) * (L / den(v))});
  return thnf(std::move(rows), L);
}

// direct solve: is z in (1/den)(a Z + (b + c w) Z)?
bool t_contains(const LatticeIdeal& I, const QElem& z) {
  const QuadraticOrder& O = I.order;
  // z = x + y*sqrt(D0); the basis vector b + c*w has sqrt-part c*f/2
  Rat beta = Rat(2 * I.den) * z.y / (Rat(I.c) * Rat(O.conductor));
  if (!is_integer(beta)) return false;
  Rat alpha =
      (Rat(I.den) * z.x - beta * (Rat(I.b) + Rat(I.c) * Rat(O.disc) / 2)) / Rat(I.a);
  return is_integer(alpha);
}

}  // namespace

SuiteResult suite_lattice_oracle(std::uint64_t seed, const Bounds& bounds) {
  Rng rng(seed);
  Check mul_chk, colon_chk, vchk;
  std::vector<long long> discs = {-12, -20, -4, -3, 40};
  int pairs = std::max(1, bounds.samples / 5);
  for (long long d : discs) {
    QuadraticOrder O = QuadraticOrder::from_disc(Int(d));
    for (int n = 0; n < pairs; ++n) {
      LatticeIdeal I = random_lattice_ideal(rng, O, 50);
      LatticeIdeal J = random_lattice_ideal(rng, O, 50);
      std::string at = "disc " + std::to_string(d) + " I=" + I.str() + " J=" + J.str();

      // multiply vs the naive span of pairwise basis products
      std::vector<QElem> bi = lattice_basis(I), bj = lattice_basis(J);
      std::vector<QElem> prods;
      for (auto& x : bi)
        for (auto& y : bj) prods.push_back(qmul(O, x, y));
      THnf naive = oracle_span(O, prods);
      AbsLattice lib = absolute_lattice(multiply(I, J));
      mul_chk.expect(lib.den == naive.den && lib.a == naive.a && lib.b == naive.b &&
                         lib.c == naive.c,
                     "multiply disagrees with span oracle: " + at);

      // colon: soundness plus maximality probing at index-q refinements
      LatticeIdeal C = colon(I, J);
      bool sound = true;
      for (auto& z : lattice_basis(C))
        for (auto& y : bj) sound = sound && t_contains(I, qmul(O, z, y));
      colon_chk.expect(sound, "colon result does not multiply J into I: " + at);
      std::vector<QElem> bc = lattice_basis(C);
      bool maximal = true;
      for (int q : {2, 3}) {
        for (int i = 0; i < q && maximal; ++i)
          for (int j = 0; j < q && maximal; ++j) {
            if (i == 0 && j == 0) continue;
            QElem z = qadd(qmul(O, QElem{Rat(i, q), 0}, bc[0]),
                           qmul(O, QElem{Rat(j, q), 0}, bc[1]));
            bool maps_in = true;
            for (auto& y : bj) maps_in = maps_in && t_contains(I, qmul(O, z, y));
            if (maps_in) maximal = false;
          }
      }
      colon_chk.expect(maximal, "colon misses a finer solution: " + at);
      if (is_invertible(J))
        colon_chk.expect(C == multiply(I, invert(J)),
                         "colon vs multiply-by-inverse mismatch: " + at);

      // v-closure sandwich and idempotence
      LatticeIdeal Iv = v_closure(I);
      vchk.expect(lattice_subset(I, Iv), "I not inside I^v: " + at);
      vchk.expect(v_closure(Iv) == Iv, "v-closure not idempotent: " + at);
    }
  }
  ojson extra;
  extra["pairsPerDisc"] = pairs;
  return finish("lattice-oracle", seed,
                {{"multiply", &mul_chk}, {"colon", &colon_chk}, {"vClosure", &vchk}}, extra);
}

// ---------------------------------------------------------------------

SuiteResult suite_valuation_classes(std::uint64_t seed, const Bounds& bounds) {
  Rng rng(seed);
  Check rank1, desc_chk, lemmas, quot_chk;

  // rank one over Z[1/2]: torsion class of cut(1/3), trivial cut(5/8)
  ValuationDomain Vd(OrderedGroup::ZLoc(2));
  ValIdeal third = make_ideal(Vd, {Rat(1, 3)}, false);
  IdealClass c3 = class_of(Vd, third);
  rank1.expect(!class_trivial(c3), "class of cut(1/3) should be nontrivial over Z[1/2]");
  auto ord = class_order(c3, bounds.class_order_bound);
  rank1.expect(ord && *ord == 3, "class of cut(1/3) should have order 3");
  IdealClass c58 = class_of(Vd, make_ideal(Vd, {Rat(5, 8)}, false));
  rank1.expect(class_trivial(c58), "class of cut(5/8) should be trivial over Z[1/2]");
  rank1.expect(class_eq(class_mul(class_mul(c3, c3), c3),
                        IdealClass{c3.modulus, Rat(0)}),
               "[1/3]^3 should be the identity");

  // descriptors
  ClassGroupDescriptor dz = cl_v_descriptor(ValuationDomain(OrderedGroup::Z()));
  desc_chk.expect(dz.kind == ClassGroupKind::Trivial && dz.reason == "DVR",
                  "Z-group descriptor should be Trivial (DVR)");
  ValuationDomain Vqz(OrderedGroup::lex({OrderedGroup::Q(), OrderedGroup::Z()}));
  ClassGroupDescriptor dqz = cl_v_descriptor(Vqz);
  desc_chk.expect(dqz.kind == ClassGroupKind::Trivial,
                  "Q lex Z descriptor should be Trivial (principal M)");
  for (int i = 0; i < 100; ++i) {
    ValIdeal I = random_val_ideal(rng, Vqz, false);
    desc_chk.expect(is_divisorial(Vqz, I),
                    "every ideal over a discrete-bottom group should be divisorial: " + I.str());
  }
  ValuationDomain Vzd(OrderedGroup::lex({OrderedGroup::Z(), OrderedGroup::ZLoc(2)}));
  ClassGroupDescriptor dzd = cl_v_descriptor(Vzd);
  desc_chk.expect(dzd.kind == ClassGroupKind::RModG && dzd.modulus == OrderedGroup::ZLoc(2),
                  "Z lex Z[1/2] descriptor should be RModG(Z[1/2])");

  // rank-one lemmas over Z[1/2] and Q
  for (auto& G : {OrderedGroup::ZLoc(2), OrderedGroup::Q()}) {
    ValuationDomain V{G};
    std::vector<ValIdeal> divs;
    for (int i = 0; i < 40; ++i) divs.push_back(v_closure(V, random_val_ideal(rng, V, false)));
    for (std::size_t i = 0; i + 1 < divs.size(); i += 2) {
      const ValIdeal &I = divs[i], &J = divs[i + 1];
      lemmas.expect((phi(V, I) == phi(V, J)) == (I == J),
                    "phi determines the divisorial closure: " + I.str() + " vs " + J.str());
      lemmas.expect(phi(V, v_closure(V, multiply(V, I, J))) == phi(V, I) + phi(V, J),
                    "phi is not additive on " + I.str() + ", " + J.str());
    }
    for (auto& I : divs) {
      lemmas.expect(is_principal(V, I) == group_member(G, I.cut.point),
                    "principality differs from phi-membership: " + I.str());
      lemmas.expect(!is_invertible(V, I) || is_principal(V, I),
                    "invertible but nonprincipal: " + I.str());
      // surjectivity onto the representable part: phi(cut(r)) = r
      lemmas.expect(phi(V, make_ideal(V, {phi(V, I)}, false)) == phi(V, I),
                    "cut(r) does not hit r: " + I.str());
    }
    // same phi, different openness
    ValIdeal open_half = make_ideal(V, {Rat(1, 2)}, true);
    ValIdeal closed_half = make_ideal(V, {Rat(1, 2)}, false);
    lemmas.expect(v_closure(V, open_half) == v_closure(V, closed_half),
                  "open/closed cuts at 1/2 should share a divisorial closure");
  }

  // quotient transport over Z lex Z[1/2]
  ValPrime P{ConvexSubgroup{1}};
  ValuationDomain W = quotient_by_prime(Vzd, P);
  quot_chk.expect(W.group == OrderedGroup::ZLoc(2), "V/P should have group Z[1/2]");
  std::vector<ValIdeal> samples;
  for (int i = 0; i < 20; ++i) {
    ValIdeal s = v_closure(W, random_val_ideal(rng, W, false));
    samples.push_back(make_ideal(Vzd, {Rat(0), s.cut.point[0]}, s.cut.open));
  }
  TransportReport tr = cl_transport_check(Vzd, P, samples);
  quot_chk.expect(tr.ok, tr.witness);
  for (auto& I : samples) {
    ValIdeal Iv = v_closure(Vzd, I);
    quot_chk.expect(push_ideal(Vzd, Iv, P) == v_closure(W, push_ideal(Vzd, I, P)),
                    "push does not commute with v-closure: " + I.str());
    quot_chk.expect(is_v_invertible(Vzd, I) == is_v_invertible(W, push_ideal(Vzd, I, P)),
                    "v-invertibility not preserved/reflected: " + I.str());
  }
  // localization side of the picture
  quot_chk.expect(localize_at_prime(Vzd, P).group == OrderedGroup::Z(),
                  "V_P should have group Z");
  MaximalIdealProfile prof = maximal_ideal_profile(Vzd);
  quot_chk.expect(!prof.principal && prof.idempotent && prof.branched,
                  "Z lex Z[1/2] should have a nonprincipal idempotent branched M");

  return finish("valuation-classes", seed,
                {{"rankOneClasses", &rank1},
                 {"descriptors", &desc_chk},
                 {"rankOneLemmas", &lemmas},
                 {"quotientTransport", &quot_chk}});
}

// ---------------------------------------------------------------------

namespace {

std::pair<VPoly, VPoly> engineered_cancellation_pair(Rng& rng, const ValuationDomain& V) {
  // f = c0 - s*c0*X and g = d0 + (s*d0 + eps)*X: the middle coefficient
  // of f*g collapses to c0*eps, far above the naive value
  auto rand_elem = [&](int lo) {
    Point g;
    for (auto& A : V.group.atoms) g.push_back(random_member(rng, A, 4, 3));
    long long q = rng.range(1, 4);
    MonoSum m = mono(std::move(g), Rat(q));
    Point g2;
    for (auto& A : V.group.atoms) g2.push_back(random_member(rng, A, 4, 3) + Rat(lo));
    return madd(m, mono(std::move(g2), Rat(rng.range(1, 3))));
  };
  MonoSum c0 = rand_elem(0), d0 = rand_elem(0);
  Point sg;
  for (auto& A : V.group.atoms) sg.push_back(random_member(rng, A, 4, 2));
  MonoSum s = mono(std::move(sg), Rat(1));
  Point eg = add_points(momega(s), add_points(momega(d0), Point(V.rank(), Rat(0))));
  eg[V.rank() - 1] += 3;  // push eps above the cancelled value
  Point eg_snap;
  for (int i = 0; i < V.rank(); ++i) eg_snap.push_back(snap_to_atom(V.group.atoms[i], eg[i], 4, true));
  MonoSum eps = mono(std::move(eg_snap), Rat(1));
  VPoly f = {c0, mneg(mmul(s, c0))};
  VPoly g = {d0, madd(mmul(s, d0), eps)};
  return {vp_normalize(std::move(f)), vp_normalize(std::move(g))};
}

}  // namespace

SuiteResult suite_gauss_querre(std::uint64_t seed, const Bounds& bounds) {
  (void)bounds;
  Rng rng(seed);
  Check explicit_chk, maximal_chk, val_chk;

  QuadraticOrder O = QuadraticOrder::from_disc(Int(-12));
  QPoly f = parse_qpoly(O, "2+(1+sqrt(-3))X");
  QPoly g = parse_qpoly(O, "2-(-1+sqrt(-3))X");
  LatticeIdeal P = make_lattice_ideal(O, 1, 2, 1, 1);
  LatticeIdeal fourO = scale(unit_ideal(O), QElem{Rat(4), Rat(0)});
  LatticeIdeal twoP = scale(P, QElem{Rat(2), Rat(0)});
  LatticeIdeal fourP = scale(P, QElem{Rat(4), Rat(0)});

  explicit_chk.expect(content(O, f) == P && content(O, g) == P,
                      "contents of the explicit pair should equal (2, 1+sqrt(-3))");
  LatticeIdeal cfg = content(O, qp_mul(O, f, g));
  explicit_chk.expect(cfg == fourO, "c(fg) should be 4O, got " + cfg.str());
  LatticeIdeal prod = multiply(content(O, f), content(O, g));
  explicit_chk.expect(v_closure(prod) == twoP && prod == twoP,
                      "(c(f)c(g))^v should be 2P, got " + v_closure(prod).str());
  GaussReport plain = gauss_check(O, f, g, nullptr);
  explicit_chk.expect(!plain.equal, "plain Gauss should fail on the non-Prufer order");
  StarOp v = star_v();
  GaussReport withv = gauss_check(O, f, g, &v);
  explicit_chk.expect(!withv.equal, "Gauss with v should fail on the non-maximal order");
  MertensReport dm = dedekind_mertens_check(O, f, g);
  explicit_chk.expect(dm.holds && dm.m == 1, "Dedekind-Mertens fails on the explicit pair");
  explicit_chk.expect(multiply(content(O, f), cfg) == fourP,
                      "c(f) c(fg) should be 4P");
  explicit_chk.expect(multiply(multiply(content(O, f), content(O, f)), content(O, g)) == fourP,
                      "c(f)^2 c(g) should be 4P");

  QuadraticOrder Omax = O.maximal_order();
  for (int i = 0; i < 100; ++i) {
    QPoly a = random_qpoly(rng, Omax, 3, 8), b = random_qpoly(rng, Omax, 3, 8);
    GaussReport r = gauss_check(Omax, a, b, &v);
    maximal_chk.expect(r.equal, "Gauss with v fails on the maximal order: " + r.lhs +
                                    " vs " + r.rhs);
  }

  for (auto& G : criterion_groups()) {
    ValuationDomain V{G};
    for (int i = 0; i < 100; ++i) {
      VPoly a, b;
      if (i % 5 == 0) {
        auto pr = engineered_cancellation_pair(rng, V);
        a = pr.first;
        b = pr.second;
      } else {
        a = random_vpoly(rng, V, 3);
        b = random_vpoly(rng, V, 3);
      }
      GaussReport r = gauss_check(V, a, b, &v);
      val_chk.expect(r.equal, "Gauss with v fails on valuation " + G.str() + ": " + r.lhs +
                                  " vs " + r.rhs);
      MertensReport m = dedekind_mertens_check(V, a, b);
      val_chk.expect(m.holds, "Dedekind-Mertens fails on valuation " + G.str());
    }
  }

  return finish("gauss-querre", seed,
                {{"explicitPair", &explicit_chk},
                 {"maximalOrder", &maximal_chk},
                 {"valuationBackends", &val_chk}});
}

// ---------------------------------------------------------------------

SuiteResult suite_directionality(std::uint64_t seed, const Bounds& bounds) {
  (void)bounds;
  Rng rng(seed);
  Check gauss_chk, pstarmd_chk, qsi_chk;

  QuadraticOrder O = QuadraticOrder::from_disc(Int(-12));
  StarOp meet = star_meet(O, {O.maximal_order()});
  LatticeIdeal P = make_lattice_ideal(O, 1, 2, 1, 1);

  for (int i = 0; i < 100; ++i) {
    QPoly f = random_qpoly(rng, O, 3, 8), g = random_qpoly(rng, O, 3, 8);
    GaussReport r = gauss_check(O, f, g, &meet);
    gauss_chk.expect(r.equal,
                     "Gauss along the maximal-order meet fails: " + r.lhs + " vs " + r.rhs);
  }

  PStarMDReport pr = pstarmd_check(O, meet, {P});
  pstarmd_chk.expect(!pr.all_invertible && pr.witness == P.str(),
                     "pstarmd should fail exactly at P");
  LatticeIdeal Ds = star_of_unit(meet, O);
  pstarmd_chk.expect(!(Ds == unit_ideal(O)), "the meet should be semistar (D^* = O_max != O)");

  qsi_chk.expect(is_quasi_star_invertible(meet, O, P),
                 "P should be quasi-star-invertible for the maximal-order meet");
  qsi_chk.expect(!is_star_invertible(meet, O, P),
                 "P should not be star-invertible for the maximal-order meet");

  return finish("directionality", seed,
                {{"gaussAlongMeet", &gauss_chk},
                 {"pstarmdWitness", &pstarmd_chk},
                 {"quasiVsStar", &qsi_chk}});
}

// ---------------------------------------------------------------------

namespace {

// independent count of reduced positive binary quadratic forms of
// negative discriminant
int reduced_form_count(long long disc) {
  int count = 0;
  for (long long a = 1; a * a <= -disc / 3 + 1; ++a)
    for (long long b = -a; b <= a; ++b) {
      long long num = b * b - disc;
      if (num % (4 * a) != 0) continue;
      long long c = num / (4 * a);
      if (c < a) continue;
      if ((b < 0 && (a == -b || a == c))) continue;  // reduced: b >= 0 when |b|=a or a=c
      ++count;
    }
  return count;
}

}  // namespace

SuiteResult suite_class_surveys(std::uint64_t seed, const Bounds& bounds) {
  Check survey_chk, gcd_chk;
  Int bound = bounds.norm;

  OrderClassSurvey s20 = order_class_survey(QuadraticOrder::from_disc(Int(-20)), bound);
  survey_chk.expect(s20.pic_classes == 2, "Z[sqrt(-5)] should have 2 classes");
  survey_chk.expect(s20.v_classes == 2 && s20.clT_equals_clV,
                    "Cl^t = Cl^v should have 2 classes for Z[sqrt(-5)]");
  survey_chk.expect(reduced_form_count(-20) == s20.pic_classes,
                    "form-count oracle disagrees for disc -20");

  OrderClassSurvey s4 = order_class_survey(QuadraticOrder::from_disc(Int(-4)), bound);
  survey_chk.expect(s4.pic_classes == 1 && s4.v_classes == 1 && s4.clT_equals_clV,
                    "Z[i] should have one class");
  survey_chk.expect(reduced_form_count(-4) == s4.pic_classes,
                    "form-count oracle disagrees for disc -4");

  OrderClassSurvey s12 = order_class_survey(QuadraticOrder::from_disc(Int(-12)), bound);
  survey_chk.expect(s12.pic_classes == 1 && s12.v_classes == 1 && s12.clT_equals_clV,
                    "Z[sqrt(-3)] should have one class");
  survey_chk.expect(s12.every_t_invertible_invertible,
                    "every t-invertible t-ideal of Z[sqrt(-3)] should be invertible");

  // GCD criterion surfaces
  QuadraticOrder Zi = QuadraticOrder::from_disc(Int(-4));
  Rng rng(seed);
  std::vector<LatticeIdeal> samples;
  for (int i = 0; i < 25; ++i) samples.push_back(random_lattice_ideal(rng, Zi, 10));
  GcdReport gr = gcd_criterion_check(Zi, samples);
  gcd_chk.expect(gr.applicable && gr.holds, "Z[i] samples should all have principal v-closures");

  ValuationDomain Vq(OrderedGroup::Q());
  std::vector<ValIdeal> vsamples;
  for (int i = 0; i < 25; ++i) vsamples.push_back(random_val_ideal(rng, Vq, false));
  GcdReport gv = gcd_criterion_check(Vq, vsamples);
  gcd_chk.expect(gv.applicable && gv.holds && gv.representability_caveat,
                 "rational cuts over Q should be principal, with the R/G caveat flagged");

  ojson extra;
  extra["normBound"] = bound.str();
  return finish("class-surveys", seed, {{"surveys", &survey_chk}, {"gcdCriterion", &gcd_chk}},
                extra);
}

// ---------------------------------------------------------------------

SuiteResult suite_star_axioms(std::uint64_t seed, const Bounds& bounds) {
  Rng rng(seed);
  Check ord_chk, val_chk, ft_chk;

  QuadraticOrder O = QuadraticOrder::from_disc(Int(-12));
  std::vector<StarOp> ord_ops = {star_d(), star_v(), star_t(), star_w(O, {unit_ideal(O)}),
                                 star_meet(O, {O.maximal_order()}), star_meet(O, {O})};
  std::vector<LatticeIdeal> ord_samples;
  for (int i = 0; i < 100; ++i) ord_samples.push_back(random_lattice_ideal(rng, O, 10));
  for (auto& op : ord_ops) {
    LatticeIdeal Ds = star_of_unit(op, O);
    for (std::size_t i = 0; i < ord_samples.size(); ++i) {
      const LatticeIdeal& I = ord_samples[i];
      std::string at = " [op " + op.name() + ", " + I.str() + "]";
      LatticeIdeal cI = close(op, O, I);
      ord_chk.expect(lattice_subset(I, cI), "extensive fails" + at);
      ord_chk.expect(close(op, O, cI) == cI, "idempotent fails" + at);
      long long xs = rng.range(1, 5);
      QElem x{Rat(xs), Rat(rng.range(0, 2))};
      if (qnorm(O, x) != 0)
        ord_chk.expect(scale(cI, x) == close(op, O, scale(I, x)), "scaling fails" + at);
      const LatticeIdeal& J = ord_samples[(i + 1) % ord_samples.size()];
      if (lattice_subset(I, J))
        ord_chk.expect(lattice_subset(cI, close(op, O, J)), "monotone fails" + at);
      if (i % 4 == 0) {
        LatticeIdeal EF = close(op, O, multiply(I, J));
        ord_chk.expect(close(op, O, multiply(cI, J)) == EF, "(E*F)^* fails" + at);
        ord_chk.expect(close(op, O, multiply(cI, close(op, O, J))) == EF,
                       "(E*F*)^* fails" + at);
      }
      if (i % 10 == 0 && is_quasi_star_invertible(op, O, I))
        ord_chk.expect(cI == colon(Ds, colon(Ds, I)),
                       "quasi-invertible closure is not v(star)-type" + at);
      if (i % 10 == 0 && op.kind == StarKind::W) {
        // certified one-sided w: invertible along w implies invertible along t
        if (is_star_invertible(op, O, I))
          ord_chk.expect(is_star_invertible(star_t(), O, I),
                         "w-invertible sample not t-invertible" + at);
      }
    }
  }

  ValuationDomain V(OrderedGroup::lex({OrderedGroup::Z(), OrderedGroup::ZLoc(2)}));
  std::vector<StarOp> val_ops = {star_d(), star_v(), star_t(), star_w(V, {unit_ideal(V)}),
                                 star_meet(V, {ValPrime{ConvexSubgroup{1}}}),
                                 star_meet(V, {ValPrime{ConvexSubgroup{0}}})};
  std::vector<ValIdeal> val_samples;
  for (int i = 0; i < 100; ++i) val_samples.push_back(random_val_ideal(rng, V, true));
  for (auto& op : val_ops) {
    ValIdeal Ds = star_of_unit(op, V);
    for (std::size_t i = 0; i < val_samples.size(); ++i) {
      const ValIdeal& I = val_samples[i];
      std::string at = " [op " + op.name() + ", " + I.str() + "]";
      ValIdeal cI = close(op, V, I);
      val_chk.expect(cut_subset(V.group, I.cut, cI.cut), "extensive fails" + at);
      val_chk.expect(close(op, V, cI) == cI, "idempotent fails" + at);
      ValIdeal x = make_ideal(V, {Rat(rng.range(-3, 3)), Rat(rng.range(-4, 4), 4)}, false);
      if (is_principal(V, x))
        val_chk.expect(multiply(V, cI, x) == close(op, V, multiply(V, I, x)),
                       "scaling fails" + at);
      const ValIdeal& J = val_samples[(i + 1) % val_samples.size()];
      if (cut_subset(V.group, I.cut, J.cut))
        val_chk.expect(cut_subset(V.group, cI.cut, close(op, V, J).cut),
                       "monotone fails" + at);
      if (i % 4 == 0) {
        ValIdeal EF = close(op, V, multiply(V, I, J));
        val_chk.expect(close(op, V, multiply(V, cI, J)) == EF, "(E*F)^* fails" + at);
        val_chk.expect(close(op, V, multiply(V, cI, close(op, V, J))) == EF,
                       "(E*F*)^* fails" + at);
      }
      if (i % 10 == 0 && is_quasi_star_invertible(op, V, I))
        val_chk.expect(cI == colon(V, Ds, colon(V, Ds, I)),
                       "quasi-invertible closure is not v(star)-type" + at);
    }
  }

  // t = (v)_f collapses to d on a valuation domain, witnessed by M
  ft_chk.expect(finite_type_of(star_v(), true).kind == StarKind::D,
                "finite type of v should be d on the valuation backend");
  ft_chk.expect(finite_type_of(star_v(), false).kind == StarKind::T,
                "finite type of v should be t on the order backend");
  ft_chk.expect(finite_type_of(star_d(), true).kind == StarKind::D,
                "finite type of d should be d");
  ValuationDomain Vd(OrderedGroup::ZLoc(2));
  ValIdeal M = maximal_ideal(Vd);
  ft_chk.expect(!(close(star_v(), Vd, M) == close(star_d(), Vd, M)),
                "v and d should differ at a nonprincipal M");
  CompareResult cmp = compare_ops(star_d(), star_v(), Vd, {M, unit_ideal(Vd)});
  ft_chk.expect(cmp.leq && !cmp.geq, "d <= v should hold strictly on the witness set");
  HDomainReport hd = h_domain_check(O, bounds.norm);
  ft_chk.expect(hd.holds, hd.witnesses.empty() ? "H-domain check failed"
                                               : hd.witnesses.front());

  return finish("star-axioms", seed,
                {{"orderBackend", &ord_chk},
                 {"valuationBackend", &val_chk},
                 {"finiteTypeAndWitness", &ft_chk}});
}

// ---------------------------------------------------------------------

SuiteResult suite_determinism(std::uint64_t seed, const Bounds& bounds) {
  (void)bounds;
  Check chk;
  json cfg = {
      {"command", "gauss"},
      {"backend", {{"type", "order"}, {"disc", -12}}},
      {"f", "2+(1+sqrt(-3))X"},
      {"g", "2+(1-sqrt(-3))X"},
      {"seed", seed},
  };
  RunResult r1 = run_job(parse_config(cfg));
  RunResult r2 = run_job(parse_config(cfg));
  chk.expect(r1.exit_code == 1, "the witness config should fail its check");
  chk.expect(render(r1.report) == render(r2.report), "reports differ between identical runs");
  chk.expect(r1.report.contains("witness") && r1.report.contains("repro"),
             "failing report should carry a witness and a repro config");
  if (r1.report.contains("repro")) {
    json repro = json::parse(r1.report.at("repro").dump());
    RunResult r3 = run_job(parse_config(repro));
    RunResult r4 = run_job(parse_config(repro));
    chk.expect(r3.exit_code == 1, "the repro config should reproduce the failure");
    chk.expect(render(r3.report) == render(r4.report), "repro runs differ");
    chk.expect(r3.report.at("witness") == r1.report.at("witness"),
               "repro witness differs from the original");
  }
  return finish("determinism", seed, {{"byteStability", &chk}});
}

// ---------------------------------------------------------------------

SuiteResult suite_dedekind_mertens(std::uint64_t seed, const Bounds& bounds) {
  Rng rng(seed);
  Check ord_chk, val_chk;
  int pairs = std::min(200, std::max(1, bounds.samples));
  QuadraticOrder O = QuadraticOrder::from_disc(Int(-12));
  for (int i = 0; i < pairs; ++i) {
    QPoly f = random_qpoly(rng, O, 4, 10), g = random_qpoly(rng, O, 4, 10);
    MertensReport r = dedekind_mertens_check(O, f, g);
    ord_chk.expect(r.holds, "Dedekind-Mertens fails: " + r.lhs + " vs " + r.rhs);
  }
  ValuationDomain V(OrderedGroup::ZLoc(2));
  for (int i = 0; i < pairs; ++i) {
    VPoly f = random_vpoly(rng, V, 4), g = random_vpoly(rng, V, 4);
    MertensReport r = dedekind_mertens_check(V, f, g);
    val_chk.expect(r.holds, "Dedekind-Mertens fails: " + r.lhs + " vs " + r.rhs);
  }
  return finish("dedekind-mertens", seed, {{"orderBackend", &ord_chk}, {"valuationBackend", &val_chk}});
}

// ---------------------------------------------------------------------

std::vector<std::string> suite_names() {
  return {"cut-oracle",     "lattice-oracle", "valuation-classes",       "gauss-querre",
          "directionality", "class-surveys",  "star-axioms",     "determinism",
          "dedekind-mertens"};
}

SuiteResult run_suite(const std::string& name, std::uint64_t seed, const Bounds& bounds) {
  if (name == "cut-oracle") return suite_cut_oracle(seed, bounds);
  if (name == "lattice-oracle") return suite_lattice_oracle(seed, bounds);
  if (name == "valuation-classes") return suite_valuation_classes(seed, bounds);
  if (name == "gauss-querre") return suite_gauss_querre(seed, bounds);
  if (name == "directionality") return suite_directionality(seed, bounds);
  if (name == "class-surveys") return suite_class_surveys(seed, bounds);
  if (name == "star-axioms") return suite_star_axioms(seed, bounds);
  if (name == "determinism") return suite_determinism(seed, bounds);
  if (name == "dedekind-mertens") return suite_dedekind_mertens(seed, bounds);
  throw std::invalid_argument("unknown suite: " + name);
}

}  // namespace mideal

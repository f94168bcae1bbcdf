#include "mideal/content.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace mideal {

namespace {

struct PointLess {
  bool operator()(const Point& a, const Point& b) const { return compare_lex(a, b) < 0; }
};

MonoSum from_map(std::map<Point, Rat, PointLess>&& m) {
  MonoSum r;
  for (auto& [g, q] : m)
    if (q != 0) r.terms.emplace_back(g, q);
  return r;
}

}  // namespace

MonoSum mono(Point g, Rat q) {
  MonoSum r;
  if (q != 0) r.terms.emplace_back(std::move(g), std::move(q));
  return r;
}

MonoSum madd(const MonoSum& a, const MonoSum& b) {
  std::map<Point, Rat, PointLess> m;
  for (auto& [g, q] : a.terms) m[g] += q;
  for (auto& [g, q] : b.terms) m[g] += q;
  return from_map(std::move(m));
}

MonoSum mneg(const MonoSum& a) {
  MonoSum r = a;
  for (auto& [g, q] : r.terms) q = -q;
  return r;
}

MonoSum mmul(const MonoSum& a, const MonoSum& b) {
  std::map<Point, Rat, PointLess> m;
  for (auto& [g1, q1] : a.terms)
    for (auto& [g2, q2] : b.terms) m[add_points(g1, g2)] += q1 * q2;
  return from_map(std::move(m));
}

Point momega(const MonoSum& a) {
  if (a.is_zero()) throw std::invalid_argument("omega of zero");
  return a.terms.front().first;
}

std::string MonoSum::str() const {
  if (terms.empty()) return "0";
  std::string s;
  for (std::size_t i = 0; i < terms.size(); ++i) {
    if (i) s += "+";
    s += rat_str(terms[i].second) + "*t^" + point_str(terms[i].first);
  }
  return s;
}

VPoly vp_normalize(VPoly f) {
  while (!f.empty() && f.back().is_zero()) f.pop_back();
  return f;
}

QPoly qp_normalize(QPoly f) {
  while (!f.empty() && f.back().is_zero()) f.pop_back();
  return f;
}

int degree(const VPoly& f) { return static_cast<int>(f.size()) - 1; }
int degree(const QPoly& f) { return static_cast<int>(f.size()) - 1; }

VPoly vp_mul(const VPoly& f, const VPoly& g) {
  if (f.empty() || g.empty()) return {};
  VPoly h(f.size() + g.size() - 1);
  for (std::size_t i = 0; i < f.size(); ++i)
    for (std::size_t j = 0; j < g.size(); ++j) h[i + j] = madd(h[i + j], mmul(f[i], g[j]));
  return vp_normalize(std::move(h));
}

QPoly qp_mul(const QuadraticOrder& O, const QPoly& f, const QPoly& g) {
  if (f.empty() || g.empty()) return {};
  QPoly h(f.size() + g.size() - 1);
  for (std::size_t i = 0; i < f.size(); ++i)
    for (std::size_t j = 0; j < g.size(); ++j) h[i + j] = qadd(h[i + j], qmul(O, f[i], g[j]));
  return qp_normalize(std::move(h));
}

ValIdeal content(const ValuationDomain& V, const VPoly& f) {
  bool have = false;
  Point best;
  for (auto& c : f) {
    if (c.is_zero()) continue;
    Point w = momega(c);
    if (!have || compare_lex(w, best) < 0) {
      best = w;
      have = true;
    }
  }
  if (!have) throw std::invalid_argument("content of zero polynomial");
  // the module generated by the coefficients: principal at the least value
  return make_ideal(V, best, false);
}

LatticeIdeal content(const QuadraticOrder& O, const QPoly& f) {
  std::vector<QElem> gens;
  for (auto& c : f)
    if (!c.is_zero()) gens.push_back(c);
  if (gens.empty()) throw std::invalid_argument("content of zero polynomial");
  return from_generators(O, gens);
}

namespace {

ValIdeal vpow(const ValuationDomain& V, const ValIdeal& I, int m) {
  ValIdeal r = unit_ideal(V);
  for (int i = 0; i < m; ++i) r = multiply(V, r, I);
  return r;
}

LatticeIdeal lpow(const LatticeIdeal& I, int m) {
  LatticeIdeal r = unit_ideal(I.order);
  for (int i = 0; i < m; ++i) r = multiply(r, I);
  return r;
}

}  // namespace

MertensReport dedekind_mertens_check(const ValuationDomain& V, const VPoly& f, const VPoly& g) {
  MertensReport rep;
  rep.m = degree(g);
  ValIdeal cf = content(V, f);
  ValIdeal lhs = multiply(V, vpow(V, cf, rep.m), content(V, vp_mul(f, g)));
  ValIdeal rhs = multiply(V, vpow(V, cf, rep.m + 1), content(V, g));
  rep.holds = lhs == rhs;
  rep.lhs = lhs.str();
  rep.rhs = rhs.str();
  return rep;
}

MertensReport dedekind_mertens_check(const QuadraticOrder& O, const QPoly& f, const QPoly& g) {
  MertensReport rep;
  rep.m = degree(g);
  LatticeIdeal cf = content(O, f);
  LatticeIdeal lhs = multiply(lpow(cf, rep.m), content(O, qp_mul(O, f, g)));
  LatticeIdeal rhs = multiply(lpow(cf, rep.m + 1), content(O, g));
  rep.holds = lhs == rhs;
  rep.lhs = lhs.str();
  rep.rhs = rhs.str();
  return rep;
}

GaussReport gauss_check(const ValuationDomain& V, const VPoly& f, const VPoly& g,
                        const StarOp* op) {
  ValIdeal lhs = content(V, vp_mul(f, g));
  ValIdeal rhs = multiply(V, content(V, f), content(V, g));
  if (op) {
    lhs = close(*op, V, lhs);
    rhs = close(*op, V, rhs);
  }
  return GaussReport{lhs == rhs, lhs.str(), rhs.str()};
}

GaussReport gauss_check(const QuadraticOrder& O, const QPoly& f, const QPoly& g,
                        const StarOp* op) {
  LatticeIdeal lhs = content(O, qp_mul(O, f, g));
  LatticeIdeal rhs = multiply(content(O, f), content(O, g));
  if (op) {
    lhs = close(*op, O, lhs);
    rhs = close(*op, O, rhs);
  }
  return GaussReport{lhs == rhs, lhs.str(), rhs.str()};
}

PStarMDReport pstarmd_check(const ValuationDomain& V, const StarOp& op,
                            const std::vector<ValIdeal>& samples) {
  PStarMDReport rep;
  for (auto& F : samples) {
    if (!is_star_invertible(op, V, F)) {
      rep.all_invertible = false;
      rep.witness = F.str();
      break;
    }
  }
  return rep;
}

PStarMDReport pstarmd_check(const QuadraticOrder& O, const StarOp& op,
                            const std::vector<LatticeIdeal>& samples) {
  PStarMDReport rep;
  for (auto& F : samples) {
    if (!is_star_invertible(op, O, F)) {
      rep.all_invertible = false;
      rep.witness = F.str();
      break;
    }
  }
  return rep;
}

}  // namespace mideal

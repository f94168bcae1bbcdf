#pragma once

#include "mideal/star.hpp"

#include <string>
#include <vector>

namespace mideal {

// Element of the group algebra Q[G]: finite formal sum of q * t^g with
// exact rational q and exponent g in the value group.  Multiplication
// exhibits genuine coefficient cancellation, so polynomial contents over
// the valuation backend are honest.
struct MonoSum {
  // sorted by exponent (lex ascending), nonzero coefficients
  std::vector<std::pair<Point, Rat>> terms;

  bool is_zero() const { return terms.empty(); }
  bool operator==(const MonoSum& o) const { return terms == o.terms; }
  std::string str() const;
};

MonoSum mono(Point g, Rat q);
MonoSum madd(const MonoSum& a, const MonoSum& b);
MonoSum mneg(const MonoSum& a);
MonoSum mmul(const MonoSum& a, const MonoSum& b);
// least exponent (the value of the element under the valuation)
Point momega(const MonoSum& a);

// Polynomials: coefficient lists, ascending degree, leading coeff nonzero.
using VPoly = std::vector<MonoSum>;
using QPoly = std::vector<QElem>;

VPoly vp_normalize(VPoly f);
QPoly qp_normalize(QPoly f);
VPoly vp_mul(const VPoly& f, const VPoly& g);
QPoly qp_mul(const QuadraticOrder& O, const QPoly& f, const QPoly& g);
int degree(const VPoly& f);
int degree(const QPoly& f);

ValIdeal content(const ValuationDomain& V, const VPoly& f);
LatticeIdeal content(const QuadraticOrder& O, const QPoly& f);

struct MertensReport {
  int m = 0;
  bool holds = false;
  std::string lhs, rhs;
};

// c(f)^m c(fg) = c(f)^(m+1) c(g) with m = deg g
MertensReport dedekind_mertens_check(const ValuationDomain& V, const VPoly& f, const VPoly& g);
MertensReport dedekind_mertens_check(const QuadraticOrder& O, const QPoly& f, const QPoly& g);

struct GaussReport {
  bool equal = false;
  std::string lhs, rhs;
};

// compares c(fg)^op with (c(f)c(g))^op; op == nullptr is plain equality
GaussReport gauss_check(const ValuationDomain& V, const VPoly& f, const VPoly& g,
                        const StarOp* op);
GaussReport gauss_check(const QuadraticOrder& O, const QPoly& f, const QPoly& g,
                        const StarOp* op);

struct PStarMDReport {
  bool all_invertible = true;
  std::string witness;
};

// (F F^{-1})^* = D^* over the sample set of finitely generated ideals
PStarMDReport pstarmd_check(const ValuationDomain& V, const StarOp& op,
                            const std::vector<ValIdeal>& samples);
PStarMDReport pstarmd_check(const QuadraticOrder& O, const StarOp& op,
                            const std::vector<LatticeIdeal>& samples);

}  // namespace mideal

#include "mideal/classgroup.hpp"

#include <stdexcept>

namespace mideal {

namespace {

// extended gcd: returns g = gcd(a, b) with g = s*a + t*b
Int egcd(Int a, Int b, Int& s, Int& t) {
  Int s0 = 1, t0 = 0, s1 = 0, t1 = 1;
  while (b != 0) {
    Int q = a / b;
    Int r = a - q * b;
    a = b;
    b = r;
    Int s2 = s0 - q * s1, t2 = t0 - q * t1;
    s0 = s1;
    t0 = t1;
    s1 = s2;
    t1 = t2;
  }
  s = s0;
  t = t0;
  return a;
}

Int inv_mod(const Int& a, const Int& m) {
  Int s, t;
  Int g = egcd(((a % m) + m) % m, m, s, t);
  if (g != 1 && g != -1) throw std::invalid_argument("not invertible");
  if (g == -1) s = -s;
  return ((s % m) + m) % m;
}

}  // namespace

ClassGroupDescriptor cl_v_descriptor(const ValuationDomain& V) {
  ClassGroupDescriptor d;
  if (V.group.discrete_bottom()) {
    d.kind = ClassGroupKind::Trivial;
    d.reason = V.rank() == 1 ? "DVR" : "principal-maximal-ideal";
  } else {
    d.kind = ClassGroupKind::RModG;
    d.modulus = OrderedGroup{{V.group.atoms.back()}};
    d.reason = "branched-idempotent-maximal-ideal";
  }
  return d;
}

Rat class_reduce(const Atom& A, const Rat& r) {
  switch (A.kind) {
    case AtomKind::Q:
      return Rat(0);
    case AtomKind::Z:
      return r - Rat(floor_int(r));
    case AtomKind::ZLoc: {
      // split off the p-power part of the denominator, then reduce mod 1
      Int b = den(r), a = num(r);
      Int pk = 1;
      while (b % A.p == 0) {
        b /= A.p;
        pk *= A.p;
      }
      if (pk == 1) {
        Rat s = Rat(a, b);
        return s - Rat(floor_int(s));
      }
      // r = a/(pk*b); subtract c/pk with c*b = a mod pk
      Int c = (a % pk) * inv_mod(b, pk) % pk;
      Rat s = r - Rat(c, pk);
      return s - Rat(floor_int(s));
    }
  }
  throw std::logic_error("unreachable");
}

IdealClass class_of(const ValuationDomain& V, const ValIdeal& I) {
  if (I.cut.prefix_len() != V.rank())
    throw std::invalid_argument("class_of needs a full-rank (v-invertible) ideal");
  if (!is_divisorial(V, I) || !is_v_invertible(V, I))
    throw std::invalid_argument("class_of needs a v-invertible divisorial ideal");
  // leading coordinates are group members (canonical form), hence a
  // principal shift; the class lives in the bottom quotient
  IdealClass c;
  c.modulus = V.group.atoms.back();
  c.rep = class_reduce(c.modulus, I.cut.point.back());
  return c;
}

IdealClass class_mul(const IdealClass& a, const IdealClass& b) {
  if (!(a.modulus == b.modulus)) throw std::invalid_argument("modulus mismatch");
  return IdealClass{a.modulus, class_reduce(a.modulus, a.rep + b.rep)};
}

bool class_eq(const IdealClass& a, const IdealClass& b) {
  if (!(a.modulus == b.modulus)) throw std::invalid_argument("modulus mismatch");
  return a.modulus.contains(a.rep - b.rep);
}

bool class_trivial(const IdealClass& a) { return a.modulus.contains(a.rep); }

std::optional<Int> class_order(const IdealClass& a, const Int& bound) {
  Rat acc = 0;
  for (Int n = 1; n <= bound; ++n) {
    acc += a.rep;
    if (a.modulus.contains(acc)) return n;
  }
  return std::nullopt;
}

TransportReport cl_transport_check(const ValuationDomain& V, ValPrime P,
                                   const std::vector<ValIdeal>& samples) {
  TransportReport rep;
  ValuationDomain W = quotient_by_prime(V, P);
  std::vector<IdealClass> up, down;
  for (auto& I : samples) {
    IdealClass c1 = class_of(V, I);
    IdealClass c2 = class_of(W, push_ideal(V, I, P));
    ++rep.checked;
    if (!class_eq(c1, c2)) {
      rep.ok = false;
      rep.witness = I.str() + ": class changes across the quotient";
      return rep;
    }
    up.push_back(c1);
    down.push_back(c2);
  }
  for (std::size_t i = 0; i < samples.size(); ++i)
    for (std::size_t j = i + 1; j < samples.size(); ++j) {
      if (class_eq(up[i], up[j]) != class_eq(down[i], down[j])) {
        rep.ok = false;
        rep.witness = samples[i].str() + " vs " + samples[j].str() + ": injectivity fails";
        return rep;
      }
    }
  for (std::size_t i = 0; i + 1 < samples.size(); i += 2) {
    ValIdeal prod = multiply(V, samples[i], samples[i + 1]);
    IdealClass cp = class_of(V, v_closure(V, prod));
    if (!class_eq(cp, class_mul(up[i], up[i + 1]))) {
      rep.ok = false;
      rep.witness = samples[i].str() + " * " + samples[i + 1].str() + ": multiplicativity fails";
      return rep;
    }
  }
  return rep;
}

namespace {

// bucket ideals modulo principal equivalence under the supplied
// difference -> principality predicate
template <typename T, typename Equiv>
std::vector<T> bucket_reps(const std::vector<T>& items, Equiv equiv) {
  std::vector<T> reps;
  for (auto& I : items) {
    bool found = false;
    for (auto& R : reps) {
      if (equiv(I, R)) {
        found = true;
        break;
      }
    }
    if (!found) reps.push_back(I);
  }
  return reps;
}

}  // namespace

OrderClassSurvey order_class_survey(const QuadraticOrder& O, const Int& norm_bound) {
  OrderClassSurvey s;
  std::vector<LatticeIdeal> all = integral_ideals_up_to(O, norm_bound);

  std::vector<LatticeIdeal> invertibles;
  for (auto& I : all)
    if (is_invertible(I)) invertibles.push_back(I);
  auto pic_equiv = [&](const LatticeIdeal& I, const LatticeIdeal& J) {
    return is_principal(multiply(I, invert(J)));
  };
  std::vector<LatticeIdeal> pic = bucket_reps(invertibles, pic_equiv);
  s.pic_classes = static_cast<int>(pic.size());
  for (auto& R : pic) s.pic_reps.push_back(R.str());

  std::vector<LatticeIdeal> v_ideals;
  for (auto& I : all)
    if (v_closure(I) == I && is_v_invertible(I)) v_ideals.push_back(I);
  auto v_equiv = [&](const LatticeIdeal& I, const LatticeIdeal& J) {
    return is_principal(v_closure(multiply(I, invert(J))));
  };
  std::vector<LatticeIdeal> vcl = bucket_reps(v_ideals, v_equiv);
  s.v_classes = static_cast<int>(vcl.size());
  for (auto& R : vcl) s.v_reps.push_back(R.str());

  StarOp t = star_t();
  std::vector<LatticeIdeal> t_ideals;
  for (auto& I : all)
    if (close(t, O, I) == I && is_star_invertible(t, O, I)) t_ideals.push_back(I);
  auto t_equiv = [&](const LatticeIdeal& I, const LatticeIdeal& J) {
    return is_principal(close(t, O, multiply(I, invert(J))));
  };
  s.t_classes = static_cast<int>(bucket_reps(t_ideals, t_equiv).size());
  s.clT_equals_clV = s.t_classes == s.v_classes;

  for (auto& I : t_ideals) {
    if (!is_invertible(I)) {
      s.every_t_invertible_invertible = false;
      s.witness = I.str() + " is t-invertible but not invertible";
      break;
    }
  }
  return s;
}

GcdReport gcd_criterion_check(const ValuationDomain& V, const std::vector<ValIdeal>& samples) {
  GcdReport rep;
  ClassGroupDescriptor d = cl_v_descriptor(V);
  for (auto& I : samples) {
    ValIdeal Iv = v_closure(V, I);
    if (!is_v_invertible(V, Iv)) {
      rep.applicable = false;
      rep.witness = I.str();
      return rep;
    }
    if (!class_trivial(class_of(V, Iv))) {
      rep.all_classes_trivial = false;
      rep.witness = I.str();
    }
  }
  if (rep.all_classes_trivial) {
    for (auto& I : samples) {
      if (!is_principal(V, v_closure(V, I))) {
        rep.holds = false;
        rep.witness = I.str();
        break;
      }
    }
    // rational cuts only see the Q-part of R/G; a trivial sample does not
    // certify a trivial descriptor
    rep.representability_caveat = d.kind == ClassGroupKind::RModG;
  } else {
    rep.holds = false;
  }
  return rep;
}

GcdReport gcd_criterion_check(const QuadraticOrder& O, const std::vector<LatticeIdeal>& samples) {
  GcdReport rep;
  for (auto& I : samples) {
    if (!is_v_invertible(I)) {
      rep.applicable = false;
      rep.witness = I.str();
      return rep;
    }
  }
  for (auto& I : samples) {
    if (!is_principal(v_closure(I))) {
      rep.all_classes_trivial = false;
      rep.holds = false;
      rep.witness = I.str();
      break;
    }
  }
  return rep;
}

}  // namespace mideal

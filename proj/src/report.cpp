#include "mideal/report.hpp"

#include "mideal/suites.hpp"

#include <stdexcept>

namespace mideal {

ojson val_ideal_json(const ValIdeal& I) {
  ojson j;
  ojson pt = ojson::array();
  for (auto& c : I.cut.point) pt.push_back(rat_str(c));
  j["point"] = pt;
  j["open"] = I.cut.open;
  return j;
}

ojson ord_ideal_json(const LatticeIdeal& I) {
  ojson j;
  j["den"] = I.den.str();
  j["a"] = I.a.str();
  j["b"] = I.b.str();
  j["c"] = I.c.str();
  return j;
}

ojson abs_lattice_json(const AbsLattice& L) {
  ojson j;
  j["den"] = L.den.str();
  j["a"] = L.a.str();
  j["b"] = L.b.str();
  j["c"] = L.c.str();
  return j;
}

ojson class_json(const IdealClass& c) {
  ojson j;
  j["rep"] = rat_str(c.rep);
  j["modulus"] = c.modulus.str();
  j["trivial"] = class_trivial(c);
  return j;
}

ojson descriptor_json(const ClassGroupDescriptor& d) {
  ojson j;
  j["kind"] = d.kind == ClassGroupKind::Trivial ? "Trivial" : "RModG";
  if (d.kind == ClassGroupKind::RModG) j["group"] = d.modulus.str();
  j["reason"] = d.reason;
  return j;
}

std::string render(const ojson& report) { return report.dump(2) + "\n"; }

namespace {

ojson pick(const json& raw, std::initializer_list<const char*> keys) {
  ojson out;
  for (auto* k : keys)
    if (raw.contains(k)) out[k] = ojson(raw.at(k));
  return out;
}

struct JobState {
  const JobConfig& cfg;
  ojson results;
  bool passed = true;
  std::string witness;
  ojson repro;
};

void require_backend(const JobConfig& cfg) {
  if (!cfg.order && !cfg.valuation) throw std::invalid_argument("command needs a backend");
}

void cmd_closure(JobState& st) {
  const JobConfig& cfg = st.cfg;
  require_backend(cfg);
  if (cfg.is_order) {
    const QuadraticOrder& O = *cfg.order;
    StarOp op = parse_star(O, cfg.raw.at("op"));
    LatticeIdeal I = parse_ord_ideal(O, cfg.raw.at("ideal"));
    LatticeIdeal C = close(op, O, I);
    st.results["input"] = ord_ideal_json(I);
    st.results["output"] = ord_ideal_json(C);
    st.results["fixed"] = C == I;
    st.results["semistar"] = is_semistar_only(op, O);
  } else {
    const ValuationDomain& V = *cfg.valuation;
    StarOp op = parse_star(V, cfg.raw.at("op"));
    ValIdeal I = parse_val_ideal(V, cfg.raw.at("ideal"));
    ValIdeal C = close(op, V, I);
    st.results["input"] = val_ideal_json(I);
    st.results["output"] = val_ideal_json(C);
    st.results["fixed"] = C == I;
    st.results["semistar"] = is_semistar_only(op, V);
  }
}

void cmd_invert(JobState& st) {
  const JobConfig& cfg = st.cfg;
  require_backend(cfg);
  if (cfg.is_order) {
    LatticeIdeal I = parse_ord_ideal(*cfg.order, cfg.raw.at("ideal"));
    st.results["inverse"] = ord_ideal_json(invert(I));
    st.results["invertible"] = is_invertible(I);
    st.results["vInvertible"] = is_v_invertible(I);
  } else {
    const ValuationDomain& V = *cfg.valuation;
    ValIdeal I = parse_val_ideal(V, cfg.raw.at("ideal"));
    st.results["inverse"] = val_ideal_json(colon(V, unit_ideal(V), I));
    st.results["invertible"] = is_invertible(V, I);
    st.results["vInvertible"] = is_v_invertible(V, I);
  }
}

void cmd_gauss(JobState& st) {
  const JobConfig& cfg = st.cfg;
  require_backend(cfg);
  GaussReport rep;
  if (cfg.is_order) {
    const QuadraticOrder& O = *cfg.order;
    QPoly f = parse_qpoly(O, cfg.raw.at("f").get<std::string>());
    QPoly g = parse_qpoly(O, cfg.raw.at("g").get<std::string>());
    StarOp op;
    bool has_op = cfg.raw.contains("op");
    if (has_op) op = parse_star(O, cfg.raw.at("op"));
    rep = gauss_check(O, f, g, has_op ? &op : nullptr);
  } else {
    const ValuationDomain& V = *cfg.valuation;
    VPoly f = parse_vpoly(V, cfg.raw.at("f"));
    VPoly g = parse_vpoly(V, cfg.raw.at("g"));
    StarOp op;
    bool has_op = cfg.raw.contains("op");
    if (has_op) op = parse_star(V, cfg.raw.at("op"));
    rep = gauss_check(V, f, g, has_op ? &op : nullptr);
  }
  st.results["lhs"] = rep.lhs;
  st.results["rhs"] = rep.rhs;
  st.results["equal"] = rep.equal;
  if (!rep.equal) {
    st.passed = false;
    st.witness = "c(fg) = " + rep.lhs + " differs from (c(f)c(g)) = " + rep.rhs;
    st.repro = pick(st.cfg.raw, {"command", "backend", "f", "g", "op", "seed"});
  }
}

void cmd_mertens(JobState& st) {
  const JobConfig& cfg = st.cfg;
  require_backend(cfg);
  MertensReport rep;
  if (cfg.is_order) {
    const QuadraticOrder& O = *cfg.order;
    rep = dedekind_mertens_check(O, parse_qpoly(O, cfg.raw.at("f").get<std::string>()),
                                 parse_qpoly(O, cfg.raw.at("g").get<std::string>()));
  } else {
    const ValuationDomain& V = *cfg.valuation;
    rep = dedekind_mertens_check(V, parse_vpoly(V, cfg.raw.at("f")),
                                 parse_vpoly(V, cfg.raw.at("g")));
  }
  st.results["m"] = rep.m;
  st.results["lhs"] = rep.lhs;
  st.results["rhs"] = rep.rhs;
  st.results["holds"] = rep.holds;
  if (!rep.holds) {
    st.passed = false;
    st.witness = "c(f)^m c(fg) = " + rep.lhs + " differs from c(f)^(m+1) c(g) = " + rep.rhs;
    st.repro = pick(st.cfg.raw, {"command", "backend", "f", "g", "seed"});
  }
}

void cmd_pstarmd(JobState& st) {
  const JobConfig& cfg = st.cfg;
  require_backend(cfg);
  if (cfg.is_order) {
    const QuadraticOrder& O = *cfg.order;
    StarOp op = parse_star(O, cfg.raw.at("op"));
    std::vector<LatticeIdeal> samples;
    if (cfg.raw.contains("ideals")) {
      for (auto& i : cfg.raw.at("ideals")) samples.push_back(parse_ord_ideal(O, i));
    } else {
      Rng rng(cfg.seed);
      for (int i = 0; i < 50; ++i) samples.push_back(random_lattice_ideal(rng, O, 12));
    }
    PStarMDReport rep = pstarmd_check(O, op, samples);
    st.results["allInvertible"] = rep.all_invertible;
    if (!rep.all_invertible) {
      st.passed = false;
      st.witness = rep.witness;
      for (auto& F : samples) {
        if (!is_star_invertible(op, O, F)) {
          st.repro = pick(st.cfg.raw, {"command", "backend", "op"});
          st.repro["ideals"] = ojson::array({ord_ideal_json(F)});
          break;
        }
      }
    }
  } else {
    const ValuationDomain& V = *cfg.valuation;
    StarOp op = parse_star(V, cfg.raw.at("op"));
    std::vector<ValIdeal> samples;
    if (cfg.raw.contains("ideals")) {
      for (auto& i : cfg.raw.at("ideals")) samples.push_back(parse_val_ideal(V, i));
    } else {
      Rng rng(cfg.seed);
      // finitely generated = principal on a valuation domain
      for (int i = 0; i < 50; ++i) {
        ValIdeal I = random_val_ideal(rng, V, false);
        samples.push_back(v_closure(V, I));
      }
    }
    PStarMDReport rep = pstarmd_check(V, op, samples);
    st.results["allInvertible"] = rep.all_invertible;
    if (!rep.all_invertible) {
      st.passed = false;
      st.witness = rep.witness;
      for (auto& F : samples) {
        if (!is_star_invertible(op, V, F)) {
          st.repro = pick(st.cfg.raw, {"command", "backend", "op"});
          st.repro["ideals"] = ojson::array({val_ideal_json(F)});
          break;
        }
      }
    }
  }
}

void cmd_classgroup(JobState& st) {
  const JobConfig& cfg = st.cfg;
  require_backend(cfg);
  if (cfg.is_order) {
    OrderClassSurvey s = order_class_survey(*cfg.order, cfg.bounds.norm);
    st.results["picClasses"] = s.pic_classes;
    st.results["vClasses"] = s.v_classes;
    st.results["clTEqualsClV"] = s.clT_equals_clV;
    st.results["everyTInvertibleInvertible"] = s.every_t_invertible_invertible;
  } else {
    const ValuationDomain& V = *cfg.valuation;
    st.results["descriptor"] = descriptor_json(cl_v_descriptor(V));
    if (cfg.raw.contains("ideal")) {
      ValIdeal I = parse_val_ideal(V, cfg.raw.at("ideal"));
      IdealClass c = class_of(V, v_closure(V, I));
      st.results["class"] = class_json(c);
      auto n = class_order(c, cfg.bounds.class_order_bound);
      st.results["classOrder"] = n ? ojson(n->str()) : ojson(nullptr);
    }
  }
}

void cmd_transport(JobState& st) {
  const JobConfig& cfg = st.cfg;
  require_backend(cfg);
  if (cfg.is_order) throw std::invalid_argument("transport needs a valuation backend");
  const ValuationDomain& V = *cfg.valuation;
  ValPrime P{ConvexSubgroup{cfg.raw.at("prime").get<int>()}};
  std::vector<ValIdeal> samples;
  if (cfg.raw.contains("ideals")) {
    for (auto& i : cfg.raw.at("ideals")) samples.push_back(parse_val_ideal(V, i));
  } else {
    Rng rng(cfg.seed);
    ValuationDomain W = quotient_by_prime(V, P);
    int lead = V.rank() - P.subgroup.k;
    for (int i = 0; i < 20; ++i) {
      ValIdeal s = v_closure(W, random_val_ideal(rng, W, false));
      Point p(lead, Rat(0));
      p.insert(p.end(), s.cut.point.begin(), s.cut.point.end());
      samples.push_back(make_ideal(V, std::move(p), s.cut.open));
    }
  }
  TransportReport rep = cl_transport_check(V, P, samples);
  st.results["checked"] = rep.checked;
  st.results["ok"] = rep.ok;
  if (!rep.ok) {
    st.passed = false;
    st.witness = rep.witness;
    st.repro = pick(st.cfg.raw, {"command", "backend", "prime", "seed"});
    ojson arr = ojson::array();
    for (auto& s : samples) arr.push_back(val_ideal_json(s));
    st.repro["ideals"] = arr;
  }
}

void cmd_survey(JobState& st) {
  const JobConfig& cfg = st.cfg;
  require_backend(cfg);
  if (!cfg.is_order) throw std::invalid_argument("survey needs an order backend");
  OrderClassSurvey s = order_class_survey(*cfg.order, cfg.bounds.norm);
  st.results["picClasses"] = s.pic_classes;
  st.results["picReps"] = s.pic_reps;
  st.results["vClasses"] = s.v_classes;
  st.results["vReps"] = s.v_reps;
  st.results["tClasses"] = s.t_classes;
  st.results["clTEqualsClV"] = s.clT_equals_clV;
  st.results["everyTInvertibleInvertible"] = s.every_t_invertible_invertible;
  if (!s.witness.empty()) st.results["witness"] = s.witness;
}

void cmd_propsuite(JobState& st) {
  const JobConfig& cfg = st.cfg;
  if (cfg.suite.empty()) throw std::invalid_argument("propsuite needs a suite name");
  if (!cfg.has_seed) throw std::invalid_argument("randomized suites need an explicit seed");
  SuiteResult sr = run_suite(cfg.suite, cfg.seed, cfg.bounds);
  st.results = sr.report;
  if (!sr.passed) {
    st.passed = false;
    st.witness = "suite " + sr.name + " failed";
    st.repro = pick(st.cfg.raw, {"command", "suite", "seed", "bounds"});
  }
}

}  // namespace

RunResult run_job(const JobConfig& cfg) {
  JobState st{cfg};
  if (cfg.command == "closure")
    cmd_closure(st);
  else if (cfg.command == "invert")
    cmd_invert(st);
  else if (cfg.command == "gauss")
    cmd_gauss(st);
  else if (cfg.command == "mertens")
    cmd_mertens(st);
  else if (cfg.command == "pstarmd")
    cmd_pstarmd(st);
  else if (cfg.command == "classgroup")
    cmd_classgroup(st);
  else if (cfg.command == "transport")
    cmd_transport(st);
  else if (cfg.command == "survey")
    cmd_survey(st);
  else if (cfg.command == "propsuite")
    cmd_propsuite(st);
  else
    throw std::invalid_argument("unknown command: " + cfg.command);

  RunResult out;
  out.report["command"] = cfg.command;
  out.report["inputs"] = ojson(cfg.raw);
  if (cfg.has_seed) out.report["seed"] = cfg.seed;
  out.report["results"] = st.results;
  out.report["passed"] = st.passed;
  if (!st.passed) {
    out.report["witness"] = st.witness;
    if (!st.repro.is_null()) out.report["repro"] = st.repro;
    out.exit_code = 1;
  }
  return out;
}

}  // namespace mideal

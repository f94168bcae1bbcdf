#pragma once

#include "mideal/parse.hpp"

#include <cstdint>
#include <random>
#include <string>
#include <vector>

namespace mideal {

// Deterministic RNG: mt19937_64 has a standard-mandated sequence, and
// the range mapping below avoids distribution objects, so streams are
// identical across platforms and library versions.
struct Rng {
  std::mt19937_64 eng;
  explicit Rng(std::uint64_t seed) : eng(seed) {}
  std::uint64_t next() { return eng(); }
  long long range(long long lo, long long hi) {  // inclusive
    std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
    std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() / span * span;
    std::uint64_t x;
    do {
      x = next();
    } while (x >= limit);
    return lo + static_cast<long long>(x % span);
  }
  bool flip() { return next() & 1; }
};

struct SuiteResult {
  std::string name;
  bool passed = false;
  nlohmann::ordered_json report;
};

std::vector<std::string> suite_names();
SuiteResult run_suite(const std::string& name, std::uint64_t seed, const Bounds& bounds);

SuiteResult suite_cut_oracle(std::uint64_t seed, const Bounds& bounds);
SuiteResult suite_lattice_oracle(std::uint64_t seed, const Bounds& bounds);
SuiteResult suite_valuation_classes(std::uint64_t seed, const Bounds& bounds);
SuiteResult suite_gauss_querre(std::uint64_t seed, const Bounds& bounds);
SuiteResult suite_directionality(std::uint64_t seed, const Bounds& bounds);
SuiteResult suite_class_surveys(std::uint64_t seed, const Bounds& bounds);
SuiteResult suite_star_axioms(std::uint64_t seed, const Bounds& bounds);
SuiteResult suite_determinism(std::uint64_t seed, const Bounds& bounds);
SuiteResult suite_dedekind_mertens(std::uint64_t seed, const Bounds& bounds);

// Sampling helpers (also used by the test suite).
ValIdeal random_val_ideal(Rng& rng, const ValuationDomain& V, bool allow_bands);
LatticeIdeal random_lattice_ideal(Rng& rng, const QuadraticOrder& O, int height);
QPoly random_qpoly(Rng& rng, const QuadraticOrder& O, int max_deg, int height);
VPoly random_vpoly(Rng& rng, const ValuationDomain& V, int max_deg);

// Definitional membership oracles for the cut calculus, decided by
// exact interval emptiness over the group (no reliance on the library's
// frozen multiply/colon/closure rules).
bool oracle_product_member(const OrderedGroup& G, const Cut& I, const Cut& J, const Point& g);
bool oracle_colon_member(const OrderedGroup& G, const Cut& I, const Cut& J, const Point& g);
bool oracle_v_closure_member(const OrderedGroup& G, const Cut& I, const Point& g);

}  // namespace mideal

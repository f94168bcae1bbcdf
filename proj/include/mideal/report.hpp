#pragma once

#include "mideal/parse.hpp"

#include <string>

namespace mideal {

using ojson = nlohmann::ordered_json;

ojson val_ideal_json(const ValIdeal& I);
ojson ord_ideal_json(const LatticeIdeal& I);
ojson abs_lattice_json(const AbsLattice& L);
ojson class_json(const IdealClass& c);
ojson descriptor_json(const ClassGroupDescriptor& d);

// Reports are byte-stable for a fixed config and seed: ordered keys,
// exact "p/q" rationals, no floats, no timestamps (timing goes to
// stderr, never into the report body).
std::string render(const ojson& report);

struct RunResult {
  ojson report;
  int exit_code = 0;  // 0 ok, 1 mathematical check failed, 2 config error
};

RunResult run_job(const JobConfig& cfg);

}  // namespace mideal

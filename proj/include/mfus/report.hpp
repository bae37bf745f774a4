#pragma once

#include <string>
#include <vector>

#include "mfus/io.hpp"

namespace mfus {

// Every report carries a "verdict" of pass, fail or inconclusive. Reports
// hold no timings or addresses, so equal inputs give equal bytes.

struct RunOptions {
    bool oracle = false;  // cross-check centers against the induction route
    int max_rank = 10;    // bound on permutation and subgroup enumerations
};

json check_report(const std::string& path);
json center_report(const std::string& path, const RunOptions& opt);
// Dual category of RMod_A(C) for the algebra named `algebra` in the file.
json dual_report(const std::string& path, const std::string& algebra);
// LMod_A(C) (x)_C RMod_B(C); refs name algebras of `over` as "A" or "file#A".
json tensor_report(const std::string& ref_a, const std::string& ref_b, const std::string& over);
// Center of a declared bimodule: "file.json#name".
json zfun_report(const std::string& ref);

// Runs every instance of a suite file; instances may run concurrently but
// the report lists them in file order.
json run_suite(const std::string& path, const RunOptions& opt);

// 0 when everything passed, 2 when the only non-passes are inconclusive,
// 1 otherwise.
int exit_code(const json& report);

} // namespace mfus

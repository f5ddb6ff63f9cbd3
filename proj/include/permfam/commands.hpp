#pragma once

#include <cstdint>

#include <json.hpp>

#include "permfam/families.hpp"
#include "permfam/field.hpp"
#include "permfam/report.hpp"

namespace permfam {

struct CheckOptions {
  bool oracle = false;
  bool full = false;
  bool timings = false;
};

/// Criterion verdict for one parameter set, optionally with the brute-force
/// oracle and (full) the per-instance lemma chain and decomposition identity.
/// Throws InvalidParams for parameters outside the family.
CheckReport run_check(const Field& f, const FamilyParams& params,
                      const CheckOptions& opts);

/// Reproduces the two characteristic-2 counterexamples (q = 32 and q = 128).
CounterexampleReport run_counterexamples();

/// Times eval_fast against rat_eval of g_map over mu_{q+1}. Throws
/// DegenerateParams when the decomposition does not exist.
BenchReport run_bench(const Field& f, const FamilyParams& params,
                      std::uint64_t repetitions);

nlohmann::json field_info(const Field& f);

}  // namespace permfam

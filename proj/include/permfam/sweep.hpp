#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <utility>
#include <vector>

#include <json.hpp>

#include "permfam/families.hpp"
#include "permfam/field.hpp"
#include "permfam/report.hpp"

namespace permfam {

inline constexpr std::uint64_t kDefaultSeed = 20240517;

/// How (a, b) pairs are enumerated. a_normalized fixes a = 1, which loses
/// nothing because scaling (a, b) scales f.
enum class Strategy { a_normalized, exhaustive, sampled };

std::string_view to_string(Strategy s);
Strategy parse_strategy(std::string_view s);

struct SweepConfig {
  std::vector<std::pair<std::uint32_t, unsigned>> fields;
  std::vector<Family> families{Family::thm1, Family::thm2};
  /// Largest n; 0 means q+1 for each field.
  std::int64_t n_bound = 0;
  /// r = n + m(q+1) for each listed m, skipping r < 1.
  std::vector<std::int64_t> ms{0, 1};
  Strategy strategy = Strategy::a_normalized;
  std::uint64_t seed = kDefaultSeed;
  /// Tuples drawn per field and family under Strategy::sampled.
  std::uint64_t samples = 10000;
  bool oracle = true;
  unsigned threads = 1;
  std::uint64_t max_elems = kDefaultMaxElems;
  /// Keep a row per tuple (for CSV output).
  bool keep_rows = false;

  bool operator==(const SweepConfig&) const = default;
};

void to_json(nlohmann::json& j, const SweepConfig& c);
void from_json(const nlohmann::json& j, SweepConfig& c);

/// The ordered parameter space of one family over one field. Index order is
/// n, then m, then (u, v) or v, then a, then b, each ascending by encoding.
class TupleSpace {
 public:
  TupleSpace(const Field& f, Family family, const SweepConfig& config);

  std::uint64_t size() const { return size_; }
  FamilyParams at(std::uint64_t index) const;

 private:
  Family family_;
  std::vector<std::pair<std::int64_t, std::int64_t>> exponents_;  // (n, r)
  std::vector<std::pair<Elem, Elem>> uv_;                          // (u, v)
  std::vector<Elem> as_;
  std::vector<Elem> bs_;
  std::uint64_t size_ = 0;
};

struct SweepReport {
  SweepConfig config;
  SweepCounts counts;
  std::vector<Disagreement> disagreements;
  std::vector<TupleRow> rows;
  std::optional<std::int64_t> wall_ns;

  bool operator==(const SweepReport&) const = default;
};

void to_json(nlohmann::json& j, const SweepReport& r);
void from_json(const nlohmann::json& j, SweepReport& r);

using CriterionFn = std::function<bool(const Field&, const FamilyParams&)>;

/// Compares the criterion against the brute-force oracle on every tuple.
/// Results are merged in index order, so the report does not depend on the
/// thread count. wall_ns is left empty; callers that want it set it.
SweepReport run_sweep(const SweepConfig& config,
                      const CriterionFn& crit = criterion);

/// Per-tuple table: field,family,r,n,u,v,a,b,criterion,oracle.
std::string sweep_csv(const SweepReport& r);

}  // namespace permfam

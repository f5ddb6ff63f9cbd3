#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "permfam/families.hpp"
#include "permfam/field.hpp"
#include "permfam/oracle.hpp"

namespace permfam {

inline constexpr const char* kSchema = "permfam/1";

// Report records are plain data: everything needed to print them is captured
// when they are made, so they serialize without a Field at hand.

struct ElemRecord {
  std::uint32_t code = 0;
  std::string pretty;
  bool operator==(const ElemRecord&) const = default;
};

struct ParamsRecord {
  std::string field;  // "p^k"
  std::string family;
  std::int64_t r = 0;
  std::int64_t n = 0;
  std::optional<ElemRecord> u;  // thm1 only
  ElemRecord v, a, b;
  bool operator==(const ParamsRecord&) const = default;
};

struct WitnessRecord {
  std::string kind;  // "collision" or "escape"
  ElemRecord first;
  std::optional<ElemRecord> second;
  bool operator==(const WitnessRecord&) const = default;
};

struct VerdictRecord {
  bool is_permutation = true;
  std::optional<WitnessRecord> witness;
  bool operator==(const VerdictRecord&) const = default;
};

ElemRecord make_record(const Field& f, Elem x);
ParamsRecord make_record(const Field& f, const FamilyParams& params);
VerdictRecord make_record(const Field& f, const PermVerdict& v);

struct LemmaChain {
  bool old = false;
  bool lemx = false;
  bool scr = false;
  bool operator==(const LemmaChain&) const = default;
};

struct CheckReport {
  ParamsRecord params;
  int b_degree = 0;
  bool criterion = false;
  std::optional<VerdictRecord> oracle;
  /// "holds", "fails" or "degenerate".
  std::optional<std::string> decomposition;
  std::optional<LemmaChain> lemmas;
  /// "OK", "DISAGREEMENT" or "FAILED" (a lemma or decomposition check).
  std::string status = "OK";
  std::optional<std::map<std::string, std::int64_t>> timings_ns;
  bool operator==(const CheckReport&) const = default;
};

struct Disagreement {
  ParamsRecord params;
  bool criterion = false;
  VerdictRecord oracle;
  bool operator==(const Disagreement&) const = default;
};

struct TupleRow {
  ParamsRecord params;
  bool criterion = false;
  std::optional<bool> oracle;
  bool operator==(const TupleRow&) const = default;
};

struct SweepCounts {
  std::uint64_t tuples = 0;
  std::uint64_t criterion_true = 0;
  std::uint64_t criterion_false = 0;
  std::uint64_t oracle_checked = 0;
  std::uint64_t disagreements = 0;
  bool operator==(const SweepCounts&) const = default;
};

struct FactRecord {
  std::string name;
  std::string expected;
  std::string actual;
  bool pass = false;
  bool operator==(const FactRecord&) const = default;
};

struct CounterexampleReport {
  std::vector<FactRecord> facts;
  bool pass = false;
  bool operator==(const CounterexampleReport&) const = default;
};

struct BenchReport {
  ParamsRecord params;
  int b_degree = 0;
  std::uint64_t points = 0;
  std::uint64_t repetitions = 0;
  bool outputs_equal = false;
  std::optional<double> fast_ns_per_point;    // median over repetitions
  std::optional<double> direct_ns_per_point;  // median over repetitions
  std::optional<double> ratio;                // direct / fast
  bool operator==(const BenchReport&) const = default;
};

void to_json(nlohmann::json& j, const ElemRecord& r);
void from_json(const nlohmann::json& j, ElemRecord& r);
void to_json(nlohmann::json& j, const ParamsRecord& r);
void from_json(const nlohmann::json& j, ParamsRecord& r);
void to_json(nlohmann::json& j, const WitnessRecord& r);
void from_json(const nlohmann::json& j, WitnessRecord& r);
void to_json(nlohmann::json& j, const VerdictRecord& r);
void from_json(const nlohmann::json& j, VerdictRecord& r);
void to_json(nlohmann::json& j, const LemmaChain& r);
void from_json(const nlohmann::json& j, LemmaChain& r);
void to_json(nlohmann::json& j, const CheckReport& r);
void from_json(const nlohmann::json& j, CheckReport& r);
void to_json(nlohmann::json& j, const Disagreement& r);
void from_json(const nlohmann::json& j, Disagreement& r);
void to_json(nlohmann::json& j, const TupleRow& r);
void from_json(const nlohmann::json& j, TupleRow& r);
void to_json(nlohmann::json& j, const SweepCounts& r);
void from_json(const nlohmann::json& j, SweepCounts& r);
void to_json(nlohmann::json& j, const FactRecord& r);
void from_json(const nlohmann::json& j, FactRecord& r);
void to_json(nlohmann::json& j, const CounterexampleReport& r);
void from_json(const nlohmann::json& j, CounterexampleReport& r);
void to_json(nlohmann::json& j, const BenchReport& r);
void from_json(const nlohmann::json& j, BenchReport& r);

}  // namespace permfam

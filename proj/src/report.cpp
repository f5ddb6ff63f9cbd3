#include "permfam/report.hpp"

#include "permfam/text.hpp"

namespace permfam {

using nlohmann::json;

namespace {

template <typename T>
void put_opt(json& j, const char* key, const std::optional<T>& v) {
  if (v) j[key] = *v;
}

template <typename T>
void get_opt(const json& j, const char* key, std::optional<T>& v) {
  if (j.contains(key) && !j.at(key).is_null()) {
    v = j.at(key).get<T>();
  } else {
    v.reset();
  }
}

}  // namespace

ElemRecord make_record(const Field& f, Elem x) {
  return ElemRecord{x.code, pretty_elem(f, x)};
}

ParamsRecord make_record(const Field& f, const FamilyParams& params) {
  ParamsRecord r;
  r.field = format_field_spec(f);
  r.family = std::string(to_string(params.family));
  r.r = params.r;
  r.n = params.n;
  if (params.family == Family::thm1) r.u = make_record(f, params.u);
  r.v = make_record(f, params.v);
  r.a = make_record(f, params.a);
  r.b = make_record(f, params.b);
  return r;
}

VerdictRecord make_record(const Field& f, const PermVerdict& v) {
  VerdictRecord r{v.is_permutation, std::nullopt};
  if (v.witness) {
    WitnessRecord w;
    w.first = make_record(f, v.witness->first);
    if (v.witness->kind == Witness::Kind::collision) {
      w.kind = "collision";
      w.second = make_record(f, v.witness->second);
    } else {
      w.kind = "escape";
    }
    r.witness = w;
  }
  return r;
}

void to_json(json& j, const ElemRecord& r) {
  j = json{{"code", r.code}, {"pretty", r.pretty}};
}
void from_json(const json& j, ElemRecord& r) {
  j.at("code").get_to(r.code);
  j.at("pretty").get_to(r.pretty);
}

void to_json(json& j, const ParamsRecord& r) {
  j = json{{"field", r.field}, {"family", r.family}, {"r", r.r}, {"n", r.n}};
  put_opt(j, "u", r.u);
  j["v"] = r.v;
  j["a"] = r.a;
  j["b"] = r.b;
}
void from_json(const json& j, ParamsRecord& r) {
  j.at("field").get_to(r.field);
  j.at("family").get_to(r.family);
  j.at("r").get_to(r.r);
  j.at("n").get_to(r.n);
  get_opt(j, "u", r.u);
  j.at("v").get_to(r.v);
  j.at("a").get_to(r.a);
  j.at("b").get_to(r.b);
}

void to_json(json& j, const WitnessRecord& r) {
  j = json{{"kind", r.kind}, {"first", r.first}};
  put_opt(j, "second", r.second);
}
void from_json(const json& j, WitnessRecord& r) {
  j.at("kind").get_to(r.kind);
  j.at("first").get_to(r.first);
  get_opt(j, "second", r.second);
}

void to_json(json& j, const VerdictRecord& r) {
  j = json{{"is_permutation", r.is_permutation}};
  put_opt(j, "witness", r.witness);
}
void from_json(const json& j, VerdictRecord& r) {
  j.at("is_permutation").get_to(r.is_permutation);
  get_opt(j, "witness", r.witness);
}

void to_json(json& j, const LemmaChain& r) {
  j = json{{"old", r.old}, {"lemx", r.lemx}, {"scr", r.scr}};
}
void from_json(const json& j, LemmaChain& r) {
  j.at("old").get_to(r.old);
  j.at("lemx").get_to(r.lemx);
  j.at("scr").get_to(r.scr);
}

void to_json(json& j, const CheckReport& r) {
  j = json{{"schema", kSchema},     {"command", "check"},
           {"params", r.params},    {"b_degree", r.b_degree},
           {"criterion", r.criterion}, {"status", r.status}};
  put_opt(j, "oracle", r.oracle);
  put_opt(j, "decomposition", r.decomposition);
  put_opt(j, "lemmas", r.lemmas);
  put_opt(j, "timings_ns", r.timings_ns);
}
void from_json(const json& j, CheckReport& r) {
  j.at("params").get_to(r.params);
  j.at("b_degree").get_to(r.b_degree);
  j.at("criterion").get_to(r.criterion);
  j.at("status").get_to(r.status);
  get_opt(j, "oracle", r.oracle);
  get_opt(j, "decomposition", r.decomposition);
  get_opt(j, "lemmas", r.lemmas);
  get_opt(j, "timings_ns", r.timings_ns);
}

void to_json(json& j, const Disagreement& r) {
  j = json{{"params", r.params}, {"criterion", r.criterion},
           {"oracle", r.oracle}};
}
void from_json(const json& j, Disagreement& r) {
  j.at("params").get_to(r.params);
  j.at("criterion").get_to(r.criterion);
  j.at("oracle").get_to(r.oracle);
}

void to_json(json& j, const TupleRow& r) {
  j = json{{"params", r.params}, {"criterion", r.criterion}};
  put_opt(j, "oracle", r.oracle);
}
void from_json(const json& j, TupleRow& r) {
  j.at("params").get_to(r.params);
  j.at("criterion").get_to(r.criterion);
  get_opt(j, "oracle", r.oracle);
}

void to_json(json& j, const SweepCounts& r) {
  j = json{{"tuples", r.tuples},
           {"criterion_true", r.criterion_true},
           {"criterion_false", r.criterion_false},
           {"oracle_checked", r.oracle_checked},
           {"disagreements", r.disagreements}};
}
void from_json(const json& j, SweepCounts& r) {
  j.at("tuples").get_to(r.tuples);
  j.at("criterion_true").get_to(r.criterion_true);
  j.at("criterion_false").get_to(r.criterion_false);
  j.at("oracle_checked").get_to(r.oracle_checked);
  j.at("disagreements").get_to(r.disagreements);
}

void to_json(json& j, const FactRecord& r) {
  j = json{{"name", r.name}, {"expected", r.expected}, {"actual", r.actual},
           {"pass", r.pass}};
}
void from_json(const json& j, FactRecord& r) {
  j.at("name").get_to(r.name);
  j.at("expected").get_to(r.expected);
  j.at("actual").get_to(r.actual);
  j.at("pass").get_to(r.pass);
}

void to_json(json& j, const CounterexampleReport& r) {
  j = json{{"schema", kSchema}, {"command", "counterexamples"},
           {"facts", r.facts}, {"pass", r.pass}};
}
void from_json(const json& j, CounterexampleReport& r) {
  j.at("facts").get_to(r.facts);
  j.at("pass").get_to(r.pass);
}

void to_json(json& j, const BenchReport& r) {
  j = json{{"schema", kSchema},
           {"command", "bench"},
           {"params", r.params},
           {"b_degree", r.b_degree},
           {"points", r.points},
           {"repetitions", r.repetitions},
           {"outputs_equal", r.outputs_equal}};
  put_opt(j, "fast_ns_per_point", r.fast_ns_per_point);
  put_opt(j, "direct_ns_per_point", r.direct_ns_per_point);
  put_opt(j, "ratio", r.ratio);
}
void from_json(const json& j, BenchReport& r) {
  j.at("params").get_to(r.params);
  j.at("b_degree").get_to(r.b_degree);
  j.at("points").get_to(r.points);
  j.at("repetitions").get_to(r.repetitions);
  j.at("outputs_equal").get_to(r.outputs_equal);
  get_opt(j, "fast_ns_per_point", r.fast_ns_per_point);
  get_opt(j, "direct_ns_per_point", r.direct_ns_per_point);
  get_opt(j, "ratio", r.ratio);
}

}  // namespace permfam

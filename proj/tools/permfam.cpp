// permfam: permutation checks for X^r B(X^{q-1}) over F_{q^2}.
//
// Exit codes: 0 all checks pass, 1 a mathematical check failed, 2 usage.

#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "permfam/commands.hpp"
#include "permfam/families.hpp"
#include "permfam/field.hpp"
#include "permfam/sweep.hpp"
#include "permfam/text.hpp"

namespace {

using namespace permfam;

constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ParamFlags {
  std::string field;
  std::string family = "thm1";
  std::optional<std::int64_t> r, n, m;
  std::string u, v, a = "1", b = "1";
};

void add_param_flags(CLI::App* cmd, ParamFlags& pf) {
  cmd->add_option("--field", pf.field, "Field spec p^k (F_q with q = p^k)")
      ->required();
  cmd->add_option("--family", pf.family, "thm1 or thm2")
      ->check(CLI::IsMember({"thm1", "thm2"}));
  cmd->add_option("--r", pf.r, "Exponent r");
  cmd->add_option("--n", pf.n, "Exponent n")->required();
  cmd->add_option("--m", pf.m, "Set r = n + m(q+1)");
  cmd->add_option("--u", pf.u, "u (thm1), as encoding or g^j");
  cmd->add_option("--v", pf.v, "v, as encoding or g^j")->required();
  cmd->add_option("--a", pf.a, "a (default 1)");
  cmd->add_option("--b", pf.b, "b (default 1)");
}

Field build_field(const std::string& spec, std::uint64_t max_elems) {
  const auto [p, k] = parse_field_spec(spec);
  return Field::build(p, k, max_elems);
}

FamilyParams resolve_params(const Field& f, const ParamFlags& pf) {
  FamilyParams params;
  params.family = parse_family(pf.family);
  params.n = *pf.n;
  if (pf.r && pf.m) throw UsageError("give either --r or --m, not both");
  const auto q = static_cast<std::int64_t>(f.q());
  if (pf.r) {
    params.r = *pf.r;
  } else {
    params.r = params.n + pf.m.value_or(0) * (q + 1);
  }
  if (params.family == Family::thm1) {
    if (pf.u.empty()) throw UsageError("thm1 needs --u");
    params.u = parse_elem(f, pf.u);
  }
  params.v = parse_elem(f, pf.v);
  params.a = parse_elem(f, pf.a);
  params.b = parse_elem(f, pf.b);
  return params;
}

void print_json(const nlohmann::json& j) { std::cout << j.dump(2) << '\n'; }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Permutation checks for generalized Redei denominator families"};
  app.require_subcommand(1);
  std::uint64_t max_elems = kDefaultMaxElems;
  app.add_option("--max-elems", max_elems, "Size bound on q^2")
      ->capture_default_str();

  // field-info
  auto* info_cmd = app.add_subcommand("field-info", "Describe F_{q^2}");
  std::string info_field;
  info_cmd->add_option("--field", info_field, "Field spec p^k")->required();
  bool info_json = false;
  info_cmd->add_flag("--json", info_json, "Emit JSON");

  // check
  auto* check_cmd = app.add_subcommand("check", "Check one parameter set");
  ParamFlags check_pf;
  add_param_flags(check_cmd, check_pf);
  CheckOptions check_opts;
  bool check_json = false;
  check_cmd->add_flag("--oracle", check_opts.oracle, "Run the brute-force oracle");
  check_cmd->add_flag("--full", check_opts.full,
                      "Also run the lemma chain and decomposition identity");
  check_cmd->add_flag("--timings", check_opts.timings, "Include timings");
  check_cmd->add_flag("--json", check_json, "Emit JSON");

  // sweep
  auto* sweep_cmd = app.add_subcommand("sweep", "Compare criteria against the oracle");
  std::vector<std::string> sweep_fields;
  std::vector<std::string> sweep_families;
  SweepConfig cfg;
  std::string strategy = "a-normalized";
  bool no_oracle = false, sweep_json = false, sweep_timings = false;
  std::string csv_path;
  sweep_cmd->add_option("--field", sweep_fields, "Field specs p^k")
      ->delimiter(',');
  sweep_cmd->add_option("--family", sweep_families, "thm1 and/or thm2")
      ->delimiter(',')
      ->check(CLI::IsMember({"thm1", "thm2"}));
  sweep_cmd->add_option("--n-bound", cfg.n_bound, "Largest n (default q+1)");
  sweep_cmd->add_option("--m", cfg.ms, "Values of m in r = n + m(q+1)")
      ->delimiter(',');
  sweep_cmd->add_option("--strategy", strategy,
                        "a-normalized, exhaustive or sampled")
      ->check(CLI::IsMember({"a-normalized", "exhaustive", "sampled"}));
  sweep_cmd->add_option("--seed", cfg.seed, "Seed for sampled sweeps");
  sweep_cmd->add_option("--samples", cfg.samples, "Tuples per field and family");
  sweep_cmd->add_option("--threads", cfg.threads, "Worker threads (0 = all cores)");
  sweep_cmd->add_flag("--no-oracle", no_oracle, "Skip the oracle");
  sweep_cmd->add_flag("--json", sweep_json, "Emit JSON");
  sweep_cmd->add_flag("--timings", sweep_timings, "Include wall time");
  sweep_cmd->add_option("--csv", csv_path, "Write per-tuple CSV to this file");
#ifdef PERMFAM_FAULT_INJECTION
  bool inject_fault = false;
  sweep_cmd->add_flag("--inject-fault", inject_fault,
                      "Drop the gcd(n, q-1) clause from the thm1 criterion");
#endif

  // counterexamples
  auto* cx_cmd = app.add_subcommand("counterexamples",
                                    "Reproduce the q = 32 and q = 128 cases");
  bool cx_json = false;
  cx_cmd->add_flag("--json", cx_json, "Emit JSON");

  // bench
  auto* bench_cmd = app.add_subcommand("bench", "Fast versus direct evaluation");
  ParamFlags bench_pf;
  add_param_flags(bench_cmd, bench_pf);
  std::uint64_t repetitions = 5;
  bool bench_json = false;
  bench_cmd->add_option("--repetitions", repetitions, "Timed passes");
  bench_cmd->add_flag("--json", bench_json, "Emit JSON");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    if (*info_cmd) {
      const Field f = build_field(info_field, max_elems);
      const auto j = field_info(f);
      if (info_json) {
        print_json(j);
      } else {
        std::cout << "p=" << f.p() << " k=" << f.k() << " q=" << f.q()
                  << " modulus=" << j["modulus"].dump()
                  << " generator=" << f.generator().code
                  << " mu_size=" << j["mu_size"] << '\n';
      }
      return 0;
    }

    if (*check_cmd) {
      const Field f = build_field(check_pf.field, max_elems);
      const FamilyParams params = resolve_params(f, check_pf);
      const CheckReport rep = run_check(f, params, check_opts);
      if (check_json) {
        print_json(rep);
      } else {
        std::cout << format_params(f, params)
                  << " criterion=" << (rep.criterion ? "true" : "false");
        if (rep.oracle) {
          std::cout << " oracle=" << (rep.oracle->is_permutation ? "true" : "false");
        }
        if (rep.decomposition) std::cout << " decomposition=" << *rep.decomposition;
        std::cout << " status=" << rep.status << '\n';
      }
      return rep.status == "OK" ? 0 : kExitFail;
    }

    if (*sweep_cmd) {
      for (const auto& s : sweep_fields) cfg.fields.push_back(parse_field_spec(s));
      if (!sweep_families.empty()) {
        cfg.families.clear();
        for (const auto& s : sweep_families) cfg.families.push_back(parse_family(s));
      }
      cfg.strategy = parse_strategy(strategy);
      cfg.oracle = !no_oracle;
      cfg.max_elems = max_elems;
      cfg.keep_rows = !csv_path.empty();
      CriterionFn crit = criterion;
#ifdef PERMFAM_FAULT_INJECTION
      if (inject_fault) {
        crit = [](const Field& f, const FamilyParams& p) {
          if (p.family == Family::thm2) return thm2_check(f, p);
          const auto q = static_cast<std::int64_t>(f.q());
          return f.pow(f.div(p.b, p.a), q - 1) != f.pow(f.div(p.v, p.u), p.n) &&
                 gcd_i64(p.r, q - 1) == 1;
        };
      }
#endif
      const auto start = std::chrono::steady_clock::now();
      SweepReport rep = run_sweep(cfg, crit);
      if (sweep_timings) {
        rep.wall_ns = std::chrono::duration_cast<std::chrono::nanoseconds>(
                          std::chrono::steady_clock::now() - start)
                          .count();
      }
      if (!csv_path.empty()) {
        std::ofstream out(csv_path);
        if (!out) throw UsageError("cannot write " + csv_path);
        out << sweep_csv(rep);
      }
      if (sweep_json) {
        print_json(rep);
      } else {
        std::cout << "tuples=" << rep.counts.tuples
                  << " criterion_true=" << rep.counts.criterion_true
                  << " criterion_false=" << rep.counts.criterion_false
                  << " oracle_checked=" << rep.counts.oracle_checked
                  << " disagreements=" << rep.counts.disagreements << '\n';
        for (const auto& d : rep.disagreements) {
          std::cout << "DISAGREEMENT " << nlohmann::json(d).dump() << '\n';
        }
      }
      return rep.counts.disagreements == 0 ? 0 : kExitFail;
    }

    if (*cx_cmd) {
      const CounterexampleReport rep = run_counterexamples();
      if (cx_json) {
        print_json(rep);
      } else {
        for (const auto& fr : rep.facts) {
          std::cout << (fr.pass ? "PASS " : "FAIL ") << fr.name << ": expected "
                    << fr.expected << ", got " << fr.actual << '\n';
        }
      }
      return rep.pass ? 0 : kExitFail;
    }

    if (*bench_cmd) {
      const Field f = build_field(bench_pf.field, max_elems);
      const FamilyParams params = resolve_params(f, bench_pf);
      const BenchReport rep = run_bench(f, params, repetitions);
      if (bench_json) {
        print_json(rep);
      } else {
        std::cout << "points=" << rep.points << " repetitions=" << rep.repetitions
                  << " outputs_equal=" << (rep.outputs_equal ? "true" : "false");
        if (rep.fast_ns_per_point) {
          std::cout << " fast_ns_per_point=" << *rep.fast_ns_per_point
                    << " direct_ns_per_point=" << *rep.direct_ns_per_point;
        }
        if (rep.ratio) std::cout << " ratio=" << *rep.ratio;
        std::cout << '\n';
      }
      return rep.outputs_equal ? 0 : kExitFail;
    }
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const InvalidParams& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const DegenerateParams& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const FieldError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

#include "permfam/commands.hpp"

#include <algorithm>
#include <chrono>

#include "permfam/oracle.hpp"
#include "permfam/text.hpp"

namespace permfam {

namespace {

using Clock = std::chrono::steady_clock;

std::int64_t since_ns(Clock::time_point start) {
  return std::chrono::duration_cast<std::chrono::nanoseconds>(Clock::now() -
                                                             start)
      .count();
}

double median(std::vector<double> xs) {
  std::sort(xs.begin(), xs.end());
  const std::size_t mid = xs.size() / 2;
  return xs.size() % 2 == 1 ? xs[mid] : 0.5 * (xs[mid - 1] + xs[mid]);
}

FactRecord fact(std::string name, std::string expected, std::string actual) {
  const bool pass = expected == actual;
  return FactRecord{std::move(name), std::move(expected), std::move(actual),
                    pass};
}

std::string yes_no(bool b) { return b ? "true" : "false"; }

}  // namespace

CheckReport run_check(const Field& f, const FamilyParams& params,
                      const CheckOptions& opts) {
  validate(f, params);
  CheckReport rep;
  std::map<std::string, std::int64_t> timings;
  rep.params = make_record(f, params);
  const Poly b = b_poly(f, params);
  rep.b_degree = b.degree();

  auto start = Clock::now();
  rep.criterion = criterion(f, params);
  timings["criterion"] = since_ns(start);

  if (opts.oracle) {
    start = Clock::now();
    const PermVerdict v = permutes_fq2(f, f_poly(f, params));
    timings["oracle"] = since_ns(start);
    rep.oracle = make_record(f, v);
    if (v.is_permutation != rep.criterion) rep.status = "DISAGREEMENT";
  }

  if (opts.full) {
    start = Clock::now();
    LemmaChain chain;
    chain.old = validate_lemma_old(f, params.r, b);
    chain.lemx = validate_lemma_lemx(f, params.r, b);
    chain.scr = validate_lemma_scr(f, b, static_cast<int>(params.n));
    rep.lemmas = chain;
    timings["lemmas"] = since_ns(start);

    start = Clock::now();
    try {
      const Decomposition d = decompose(f, params);
      const RationalMap g = g_map(f, params.r, b);
      bool holds = true;
      for (Elem x : f.enum_mu()) {
        const ProjPoint pt = ProjPoint::finite(x);
        if (rat_eval(f, g, pt) != eval_fast(f, d, pt)) holds = false;
      }
      rep.decomposition = holds ? "holds" : "fails";
    } catch (const DegenerateParams&) {
      rep.decomposition = "degenerate";
    }
    timings["decomposition"] = since_ns(start);

    const bool failed = !chain.old || !chain.lemx || !chain.scr ||
                        rep.decomposition == "fails";
    if (failed && rep.status == "OK") rep.status = "FAILED";
  }
  if (opts.timings) rep.timings_ns = timings;
  return rep;
}

CounterexampleReport run_counterexamples() {
  CounterexampleReport rep;
  auto& facts = rep.facts;

  {
    const Field f = Field::build(2, 5);
    for (bool swap : {false, true}) {
      SpecialArgs args;
      args.n = 11;
      args.m = 1;
      args.swap = swap;
      const FamilyParams p = special_case(f, SpecialCase::PUW8, args);
      const std::string tag =
          std::string("PUW8 q=32 n=11 r=44") + (swap ? " (u,v swapped)" : "");
      facts.push_back(fact(tag + ": r = n + q + 1", "44", std::to_string(p.r)));
      facts.push_back(fact(tag + ": brute force says f permutes F_1024", "true",
                           yes_no(permutes_fq2(f, f_poly(f, p)).is_permutation)));
      facts.push_back(fact(tag + ": criterion", "true", yes_no(thm1_check(f, p))));
    }
    facts.push_back(
        fact("gcd(n, q^2-1) = gcd(11, 1023)", "11", std::to_string(gcd_i64(11, 1023))));
    facts.push_back(fact("PUW8 corrected conditions gcd(rn, q-1) = 1 and 3 does not divide n",
                         "true",
                         yes_no(gcd_i64(44 * 11, 31) == 1 && 11 % 3 != 0)));
  }

  {
    const Field f = Field::build(2, 7);
    for (bool swap : {false, true}) {
      SpecialArgs args;
      args.n = 43;
      args.m = 1;
      args.swap = swap;
      const FamilyParams p = special_case(f, SpecialCase::PUW9, args);
      const std::string tag =
          std::string("PUW9 q=128 n=43 r=172") + (swap ? " (u,v swapped)" : "");
      facts.push_back(fact(tag + ": r = n + q + 1", "172", std::to_string(p.r)));
      facts.push_back(fact(tag + ": brute force says f permutes F_16384", "true",
                           yes_no(permutes_fq2(f, f_poly(f, p)).is_permutation)));
      facts.push_back(fact(tag + ": criterion", "true", yes_no(thm1_check(f, p))));
    }
    facts.push_back(fact("n mod 3 = 43 mod 3", "1", std::to_string(43 % 3)));
    facts.push_back(fact("gcd(n, q^2-1) = gcd(43, 16383)", "43",
                         std::to_string(gcd_i64(43, 16383))));
    facts.push_back(fact("PUW9 corrected conditions gcd(rn, q-1) = 1 and n != 2 mod 3",
                         "true",
                         yes_no(gcd_i64(172 * 43, 127) == 1 && 43 % 3 != 2)));
  }

  rep.pass = std::all_of(facts.begin(), facts.end(),
                         [](const FactRecord& fr) { return fr.pass; });
  return rep;
}

BenchReport run_bench(const Field& f, const FamilyParams& params,
                      std::uint64_t repetitions) {
  const Decomposition d = decompose(f, params);
  const Poly b = b_poly(f, params);
  const RationalMap g = g_map(f, params.r, b);
  const auto mu = f.enum_mu();

  BenchReport rep;
  rep.params = make_record(f, params);
  rep.b_degree = b.degree();
  rep.points = mu.size();
  rep.repetitions = repetitions;

  std::vector<ProjPoint> fast(mu.size()), direct(mu.size());
  auto fast_pass = [&] {
    for (std::size_t i = 0; i < mu.size(); ++i) {
      fast[i] = eval_fast(f, d, ProjPoint::finite(mu[i]));
    }
  };
  auto direct_pass = [&] {
    for (std::size_t i = 0; i < mu.size(); ++i) {
      direct[i] = rat_eval(f, g, ProjPoint::finite(mu[i]));
    }
  };
  fast_pass();
  direct_pass();
  rep.outputs_equal = fast == direct;

  if (repetitions > 0) {
    std::vector<double> fast_ns, direct_ns;
    const auto pts = static_cast<double>(mu.size());
    for (std::uint64_t i = 0; i < repetitions; ++i) {
      auto start = Clock::now();
      fast_pass();
      fast_ns.push_back(static_cast<double>(since_ns(start)) / pts);
      start = Clock::now();
      direct_pass();
      direct_ns.push_back(static_cast<double>(since_ns(start)) / pts);
      if (fast != direct) rep.outputs_equal = false;
    }
    rep.fast_ns_per_point = median(fast_ns);
    rep.direct_ns_per_point = median(direct_ns);
    if (*rep.fast_ns_per_point > 0) {
      rep.ratio = *rep.direct_ns_per_point / *rep.fast_ns_per_point;
    }
  }
  return rep;
}

nlohmann::json field_info(const Field& f) {
  return nlohmann::json{
      {"schema", kSchema},
      {"command", "field-info"},
      {"p", f.p()},
      {"k", f.k()},
      {"q", f.q()},
      {"size", f.size()},
      {"modulus", f.modulus()},
      {"generator", make_record(f, f.generator())},
      {"mu_size", f.enum_mu().size()}};
}

}  // namespace permfam

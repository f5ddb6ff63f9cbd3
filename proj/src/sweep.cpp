#include "permfam/sweep.hpp"

#include <atomic>
#include <random>
#include <sstream>
#include <thread>

#include "permfam/oracle.hpp"
#include "permfam/text.hpp"

namespace permfam {

using nlohmann::json;

namespace {

constexpr std::uint64_t kBlock = 256;

struct BlockResult {
  SweepCounts counts;
  std::vector<Disagreement> disagreements;
  std::vector<TupleRow> rows;
};

void merge(SweepCounts& into, const SweepCounts& from) {
  into.tuples += from.tuples;
  into.criterion_true += from.criterion_true;
  into.criterion_false += from.criterion_false;
  into.oracle_checked += from.oracle_checked;
  into.disagreements += from.disagreements;
}

std::vector<std::uint64_t> sample_indices(const SweepConfig& config,
                                          const Field& f, Family family,
                                          std::uint64_t space_size) {
  std::vector<std::uint64_t> out;
  if (space_size == 0) return out;
  std::seed_seq seq{config.seed & 0xffffffffu, config.seed >> 32,
                    std::uint64_t{f.p()}, std::uint64_t{f.k()},
                    static_cast<std::uint64_t>(family)};
  std::mt19937_64 rng(seq);
  std::uniform_int_distribution<std::uint64_t> pick(0, space_size - 1);
  out.reserve(config.samples);
  for (std::uint64_t i = 0; i < config.samples; ++i) out.push_back(pick(rng));
  return out;
}

}  // namespace

std::string_view to_string(Strategy s) {
  switch (s) {
    case Strategy::a_normalized:
      return "a-normalized";
    case Strategy::exhaustive:
      return "exhaustive";
    case Strategy::sampled:
      return "sampled";
  }
  return "?";
}

Strategy parse_strategy(std::string_view s) {
  if (s == "a-normalized") return Strategy::a_normalized;
  if (s == "exhaustive") return Strategy::exhaustive;
  if (s == "sampled") return Strategy::sampled;
  throw ParseError("unknown strategy '" + std::string(s) + "'");
}

TupleSpace::TupleSpace(const Field& f, Family family, const SweepConfig& config)
    : family_(family) {
  const auto q = static_cast<std::int64_t>(f.q());
  const std::int64_t bound = config.n_bound > 0 ? config.n_bound : q + 1;
  for (std::int64_t n = 1; n <= bound; ++n) {
    for (std::int64_t m : config.ms) {
      const std::int64_t r = n + m * (q + 1);
      if (r >= 1) exponents_.emplace_back(n, r);
    }
  }
  if (family == Family::thm1) {
    const auto mu = f.enum_mu();
    for (Elem u : mu) {
      for (Elem v : mu) {
        if (u != v) uv_.emplace_back(u, v);
      }
    }
  } else {
    for (std::uint64_t c = 1; c < f.size(); ++c) {
      const Elem v{static_cast<std::uint32_t>(c)};
      if (!f.in_mu(v)) uv_.emplace_back(Elem{}, v);
    }
  }
  for (std::uint64_t c = 1; c < f.size(); ++c) {
    bs_.emplace_back(static_cast<std::uint32_t>(c));
  }
  if (config.strategy == Strategy::a_normalized) {
    as_ = {f.one()};
  } else {
    as_ = bs_;
  }
  size_ = exponents_.size() * uv_.size() * as_.size() * bs_.size();
}

FamilyParams TupleSpace::at(std::uint64_t index) const {
  FamilyParams p;
  p.family = family_;
  p.b = bs_[index % bs_.size()];
  index /= bs_.size();
  p.a = as_[index % as_.size()];
  index /= as_.size();
  const auto& [u, v] = uv_[index % uv_.size()];
  index /= uv_.size();
  p.u = u;
  p.v = v;
  const auto& [n, r] = exponents_[index];
  p.n = n;
  p.r = r;
  return p;
}

SweepReport run_sweep(const SweepConfig& config, const CriterionFn& crit) {
  SweepReport report;
  report.config = config;
  unsigned threads = config.threads;
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());

  for (const auto& [p, k] : config.fields) {
    const Field f = Field::build(p, k, config.max_elems);
    for (Family family : config.families) {
      const TupleSpace space(f, family, config);
      std::vector<std::uint64_t> sampled;
      std::uint64_t total = space.size();
      if (config.strategy == Strategy::sampled) {
        sampled = sample_indices(config, f, family, space.size());
        total = sampled.size();
      }
      const std::uint64_t blocks = (total + kBlock - 1) / kBlock;
      std::vector<BlockResult> results(blocks);
      std::atomic<std::uint64_t> next{0};

      auto worker = [&] {
        while (true) {
          const std::uint64_t blk = next.fetch_add(1);
          if (blk >= blocks) return;
          BlockResult& out = results[blk];
          const std::uint64_t end = std::min(total, (blk + 1) * kBlock);
          for (std::uint64_t i = blk * kBlock; i < end; ++i) {
            const FamilyParams params =
                space.at(sampled.empty() ? i : sampled[i]);
            const bool verdict = crit(f, params);
            ++out.counts.tuples;
            ++(verdict ? out.counts.criterion_true : out.counts.criterion_false);
            std::optional<bool> oracle_says;
            if (config.oracle) {
              const PermVerdict v = permutes_fq2(f, f_poly(f, params));
              ++out.counts.oracle_checked;
              oracle_says = v.is_permutation;
              if (v.is_permutation != verdict) {
                ++out.counts.disagreements;
                out.disagreements.push_back(Disagreement{
                    make_record(f, params), verdict, make_record(f, v)});
              }
            }
            if (config.keep_rows) {
              out.rows.push_back(
                  TupleRow{make_record(f, params), verdict, oracle_says});
            }
          }
        }
      };

      const unsigned n_workers =
          static_cast<unsigned>(std::min<std::uint64_t>(threads, blocks));
      if (n_workers <= 1) {
        worker();
      } else {
        std::vector<std::jthread> pool;
        for (unsigned t = 0; t < n_workers; ++t) pool.emplace_back(worker);
      }

      for (auto& blk : results) {
        merge(report.counts, blk.counts);
        for (auto& d : blk.disagreements) {
          report.disagreements.push_back(std::move(d));
        }
        for (auto& row : blk.rows) report.rows.push_back(std::move(row));
      }
    }
  }
  return report;
}

void to_json(json& j, const SweepConfig& c) {
  json fields = json::array();
  for (const auto& [p, k] : c.fields) {
    fields.push_back(std::to_string(p) + "^" + std::to_string(k));
  }
  json families = json::array();
  for (Family fam : c.families) families.push_back(std::string(to_string(fam)));
  j = json{{"fields", fields},
           {"families", families},
           {"n_bound", c.n_bound},
           {"ms", c.ms},
           {"strategy", std::string(to_string(c.strategy))},
           {"seed", c.seed},
           {"samples", c.samples},
           {"oracle", c.oracle},
           {"threads", c.threads},
           {"max_elems", c.max_elems},
           {"keep_rows", c.keep_rows}};
}

void from_json(const json& j, SweepConfig& c) {
  c.fields.clear();
  for (const auto& s : j.at("fields")) {
    c.fields.push_back(parse_field_spec(s.get<std::string>()));
  }
  c.families.clear();
  for (const auto& s : j.at("families")) {
    c.families.push_back(parse_family(s.get<std::string>()));
  }
  j.at("n_bound").get_to(c.n_bound);
  j.at("ms").get_to(c.ms);
  c.strategy = parse_strategy(j.at("strategy").get<std::string>());
  j.at("seed").get_to(c.seed);
  j.at("samples").get_to(c.samples);
  j.at("oracle").get_to(c.oracle);
  j.at("threads").get_to(c.threads);
  j.at("max_elems").get_to(c.max_elems);
  j.at("keep_rows").get_to(c.keep_rows);
}

void to_json(json& j, const SweepReport& r) {
  // Thread count does not affect results and is left out so that reports
  // compare byte-for-byte across parallelism settings.
  json config = r.config;
  config.erase("threads");
  j = json{{"schema", kSchema},
           {"command", "sweep"},
           {"config", config},
           {"counts", r.counts},
           {"disagreements", r.disagreements}};
  if (!r.rows.empty()) j["rows"] = r.rows;
  if (r.wall_ns) j["wall_ns"] = *r.wall_ns;
}

void from_json(const json& j, SweepReport& r) {
  json config = j.at("config");
  config["threads"] = 1;
  config.get_to(r.config);
  j.at("counts").get_to(r.counts);
  j.at("disagreements").get_to(r.disagreements);
  r.rows.clear();
  if (j.contains("rows")) j.at("rows").get_to(r.rows);
  r.wall_ns.reset();
  if (j.contains("wall_ns")) r.wall_ns = j.at("wall_ns").get<std::int64_t>();
}

std::string sweep_csv(const SweepReport& r) {
  std::ostringstream out;
  out << "field,family,r,n,u,v,a,b,criterion,oracle\n";
  for (const auto& row : r.rows) {
    const auto& p = row.params;
    out << p.field << ',' << p.family << ',' << p.r << ',' << p.n << ','
        << (p.u ? std::to_string(p.u->code) : "") << ',' << p.v.code << ','
        << p.a.code << ',' << p.b.code << ',' << (row.criterion ? 1 : 0)
        << ',' << (row.oracle ? (*row.oracle ? "1" : "0") : "") << '\n';
  }
  return out.str();
}

}  // namespace permfam

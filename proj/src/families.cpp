#include "permfam/families.hpp"

#include <array>

namespace permfam {

namespace {

constexpr std::array<std::string_view, 6> kSpecialNames = {
    "FFLW1", "FFLW2", "PUW8", "PUW9", "WYDM35_ZR12", "WYDM33_ZR11"};

std::int64_t q_of(const Field& f) { return static_cast<std::int64_t>(f.q()); }

bool congruent(std::int64_t a, std::int64_t b, std::int64_t mod) {
  return (a - b) % mod == 0;
}

}  // namespace

std::string_view to_string(Family fam) {
  return fam == Family::thm1 ? "thm1" : "thm2";
}

Family parse_family(std::string_view s) {
  if (s == "thm1") return Family::thm1;
  if (s == "thm2") return Family::thm2;
  throw InvalidParams("unknown family '" + std::string(s) + "'");
}

void validate(const Field& f, const FamilyParams& params) {
  const std::int64_t q = q_of(f);
  if (params.n < 1) throw InvalidParams("n must be positive");
  if (params.r < 1) throw InvalidParams("r must be positive");
  if (!congruent(params.r, params.n, q + 1)) {
    throw InvalidParams("r must be congruent to n mod q+1");
  }
  if (params.a.is_zero() || params.b.is_zero()) {
    throw InvalidParams("a and b must be nonzero");
  }
  if (params.family == Family::thm1) {
    if (!f.in_mu(params.u) || !f.in_mu(params.v)) {
      throw InvalidParams("thm1 requires u, v in mu_{q+1}");
    }
    if (params.u == params.v) throw InvalidParams("thm1 requires u != v");
  } else {
    if (params.v.is_zero()) throw InvalidParams("thm2 requires v != 0");
    if (f.in_mu(params.v)) {
      throw InvalidParams("thm2 requires v outside mu_{q+1}");
    }
  }
}

Poly b_poly(const Field& f, const FamilyParams& params) {
  validate(f, params);
  const auto n = static_cast<std::uint64_t>(params.n);
  const Elem first_root = params.family == Family::thm1
                              ? params.u
                              : f.inv(f.frob(params.v));
  const Poly first = poly_pow(f, Poly{first_root, f.one()}, n);
  const Poly second = poly_pow(f, Poly{params.v, f.one()}, n);
  return poly_add(f, poly_scale(f, first, params.a),
                  poly_scale(f, second, params.b));
}

SparsePoly f_poly(const Field& f, const FamilyParams& params) {
  const Poly b = b_poly(f, params);
  const std::int64_t step = q_of(f) - 1;
  SparsePoly out;
  for (int i = 0; i <= b.degree(); ++i) {
    if (b[i].is_zero()) continue;
    out.push_back(Term{params.r + i * step, b[i]});
  }
  return out;
}

bool thm1_check(const Field& f, const FamilyParams& params) {
  validate(f, params);
  if (params.family != Family::thm1) throw InvalidParams("expected thm1");
  const std::int64_t q = q_of(f);
  const Elem lhs = f.pow(f.div(params.b, params.a), q - 1);
  const Elem rhs = f.pow(f.div(params.v, params.u), params.n);
  return lhs != rhs && gcd_i64(params.r, q - 1) == 1 &&
         gcd_i64(params.n, q - 1) == 1;
}

bool thm2_check(const Field& f, const FamilyParams& params) {
  validate(f, params);
  if (params.family != Family::thm2) throw InvalidParams("expected thm2");
  const std::int64_t q = q_of(f);
  const Elem x =
      f.div(f.mul(params.b, f.pow(params.v, params.n)), params.a);
  return !f.in_mu(x) && gcd_i64(params.r, q - 1) == 1 &&
         gcd_i64(params.n, q + 1) == 1;
}

bool criterion(const Field& f, const FamilyParams& params) {
  return params.family == Family::thm1 ? thm1_check(f, params)
                                       : thm2_check(f, params);
}

std::optional<Elem> g0_eval(const Field& f, std::int64_t r, const Poly& b,
                            Elem x) {
  if (!f.in_mu(x)) throw FieldError("g0_eval: point is not in mu_{q+1}");
  const Elem bx = poly_eval(f, b, x);
  if (bx.is_zero()) return std::nullopt;
  const std::int64_t q = q_of(f);
  const std::int64_t e = ((r % (q + 1)) + (q + 1)) % (q + 1);
  return f.mul(f.pow(x, e), f.pow(bx, q - 1));
}

RationalMap g_map(const Field& f, std::int64_t r, const Poly& b) {
  if (b.is_zero()) throw FieldError("g_map: B is the zero polynomial");
  const int d = b.degree();
  if (r >= d) {
    return RationalMap::build(f, reversal_num(f, b, static_cast<int>(r)), b);
  }
  const Poly shift = Poly::monomial(f, f.one(), static_cast<std::size_t>(d - r));
  return RationalMap::build(f, reversal_num(f, b, d), poly_mul(f, shift, b));
}

Decomposition decompose(const Field& f, const FamilyParams& params) {
  validate(f, params);
  const std::int64_t n = params.n;
  const Elem aq = f.frob(params.a);
  const Elem bq = f.frob(params.b);

  Elem e_alpha, e_beta, e_gamma, e_delta;
  Elem r_beta, r_delta;
  if (params.family == Family::thm1) {
    e_alpha = f.mul(aq, f.pow(params.u, -n));
    e_beta = f.mul(bq, f.pow(params.v, -n));
    e_gamma = params.a;
    e_delta = params.b;
    r_beta = params.u;
    r_delta = params.v;
  } else {
    const std::int64_t q = q_of(f);
    e_alpha = f.mul(aq, f.pow(params.v, -n));
    e_beta = f.mul(bq, f.pow(params.v, q * n));
    e_gamma = params.b;
    e_delta = params.a;
    r_beta = params.v;
    r_delta = f.inv(f.frob(params.v));
  }
  if (!is_degree_one(f, e_alpha, e_beta, e_gamma, e_delta)) {
    throw DegenerateParams("outer Mobius factor is constant; g is constant");
  }
  if (!is_degree_one(f, f.one(), r_beta, f.one(), r_delta)) {
    throw DegenerateParams("inner Mobius factor is constant");
  }
  return Decomposition{Mobius::make(f, e_alpha, e_beta, e_gamma, e_delta), n,
                       Mobius::make(f, f.one(), r_beta, f.one(), r_delta)};
}

ProjPoint eval_fast(const Field& f, const Decomposition& d, ProjPoint x) {
  return mobius_eval(f, d.eta, proj_pow(f, mobius_eval(f, d.rho, x), d.n));
}

ReductionMap reduction_map(const Field& f, const FamilyParams& params) {
  validate(f, params);
  if (params.family == Family::thm1) {
    const Elem w = f.solve_w(f.div(params.u, params.v));
    const Mobius map =
        Mobius::make(f, w, f.mul(params.v, f.frob(w)), f.one(), params.v);
    return ReductionMap{f.inv(w), map, w};
  }
  const Elem vq = f.frob(params.v);
  return ReductionMap{vq, Mobius::make(f, f.one(), params.v, vq, f.one()),
                      std::nullopt};
}

std::string_view to_string(SpecialCase c) {
  return kSpecialNames[static_cast<std::size_t>(c)];
}

SpecialCase parse_special_case(std::string_view s) {
  for (std::size_t i = 0; i < kSpecialNames.size(); ++i) {
    if (kSpecialNames[i] == s) return static_cast<SpecialCase>(i);
  }
  throw InvalidParams("unknown special case '" + std::string(s) + "'");
}

FamilyParams special_case(const Field& f, SpecialCase which,
                          const SpecialArgs& args) {
  const std::int64_t q = q_of(f);
  if (args.sign != 1 && args.sign != -1) {
    throw InvalidParams("sign must be +1 or -1");
  }
  FamilyParams p;
  p.n = args.n;
  p.r = args.n + args.m * (q + 1);
  const Elem sign = f.from_int(args.sign);
  const std::string name(to_string(which));

  auto require = [&](const std::optional<Elem>& e, const char* slot) {
    if (!e) throw InvalidParams(name + " needs a value for " + slot);
    return *e;
  };
  auto f4 = [&] {
    if (f.p() != 2) {
      throw InvalidParams(name + " needs characteristic 2 (F_4 inside F_{q^2})");
    }
    auto [w1, w2] = f.f4_pair();
    if (args.swap) std::swap(w1, w2);
    return std::pair{w1, w2};
  };

  switch (which) {
    case SpecialCase::FFLW1:
      if (f.p() == 2) throw InvalidParams("FFLW1 needs odd q (v = -u != u)");
      p.family = Family::thm1;
      p.a = args.a.value_or(f.one());
      p.b = f.mul(sign, p.a);
      p.u = require(args.u, "u");
      p.v = f.neg(p.u);
      break;
    case SpecialCase::FFLW2: {
      if (f.p() == 2) {
        throw InvalidParams("FFLW2 needs odd q (norm -1 = 1 puts v in mu)");
      }
      const Elem minus_one = f.neg(f.one());
      p.family = Family::thm2;
      p.a = args.a.value_or(f.one());
      p.b = f.mul(sign, p.a);
      p.v = args.v.value_or(f.solve_norm(minus_one));
      if (f.pow(p.v, q + 1) != minus_one) {
        throw InvalidParams("FFLW2 requires v^{q+1} = -1");
      }
      break;
    }
    case SpecialCase::PUW8: {
      const auto [u, v] = f4();
      p.family = Family::thm1;
      p.u = u;
      p.v = v;
      p.a = f.one();
      p.b = f.one();
      break;
    }
    case SpecialCase::PUW9: {
      const auto [u, v] = f4();
      p.family = Family::thm1;
      p.u = u;
      p.v = v;
      p.a = v;
      p.b = u;
      break;
    }
    case SpecialCase::WYDM35_ZR12: {
      const Elem b = require(args.b, "b");
      if (b.is_zero() || f.in_subfield(b)) {
        throw InvalidParams("WYDM35_ZR12 needs b outside F_q so that u != v");
      }
      p.family = Family::thm1;
      p.b = b;
      p.v = require(args.v, "v");
      p.a = f.pow(f.neg(b), args.n);
      p.u = f.mul(p.v, f.pow(b, q - 1));
      break;
    }
    case SpecialCase::WYDM33_ZR11: {
      p.family = Family::thm2;
      p.v = require(args.v, "v");
      if (p.v.is_zero()) throw InvalidParams("WYDM33_ZR11 needs v != 0");
      p.a = f.neg(f.inv(p.v));
      p.b = f.inv(f.pow(p.v, args.n));
      break;
    }
  }
  validate(f, p);
  return p;
}

}  // namespace permfam

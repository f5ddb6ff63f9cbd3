#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

#include "permfam/field.hpp"
#include "permfam/mobius.hpp"
#include "permfam/poly.hpp"
#include "permfam/rational.hpp"

namespace permfam {

/// Parameters that violate a family's hypotheses.
class InvalidParams : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// The Mobius pieces of g are not degree one; g is constant there.
class DegenerateParams : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

enum class Family { thm1, thm2 };

std::string_view to_string(Family fam);
Family parse_family(std::string_view s);

/// Parameters of f(X) = X^r B(X^{q-1}) with
///   thm1: B(X) = a (X+u)^n + b (X+v)^n,      u != v in mu_{q+1}
///   thm2: B(X) = a (X+v^{-q})^n + b (X+v)^n, v not in mu_{q+1}
/// and in both cases r = n (mod q+1), r, n >= 1, a, b != 0. The u slot is
/// unused (zero) for thm2.
struct FamilyParams {
  Family family = Family::thm1;
  std::int64_t r = 1;
  std::int64_t n = 1;
  Elem u;
  Elem v;
  Elem a;
  Elem b;

  bool operator==(const FamilyParams&) const = default;
};

/// Throws InvalidParams describing the first violated hypothesis.
void validate(const Field& f, const FamilyParams& params);

Poly b_poly(const Field& f, const FamilyParams& params);

/// X^r B(X^{q-1}) as a sparse polynomial: the term X^{r + i(q-1)} carries
/// coefficient i of B.
SparsePoly f_poly(const Field& f, const FamilyParams& params);

/// (b/a)^{q-1} != (v/u)^n and gcd(rn, q-1) = 1.
bool thm1_check(const Field& f, const FamilyParams& params);
/// b v^n / a not in mu_{q+1}, gcd(r, q-1) = 1 and gcd(n, q+1) = 1.
bool thm2_check(const Field& f, const FamilyParams& params);
/// Dispatches on params.family.
bool criterion(const Field& f, const FamilyParams& params);

/// x^r B(x)^{q-1} for x in mu_{q+1}; nullopt when B(x) = 0.
std::optional<Elem> g0_eval(const Field& f, std::int64_t r, const Poly& b,
                            Elem x);

/// X^r B^{(q)}(1/X) / B(X) as a reduced rational map. Any integer r is
/// accepted; for r < deg B both parts are multiplied by X^{deg B - r}.
RationalMap g_map(const Field& f, std::int64_t r, const Poly& b);

/// g = eta o X^n o rho with eta, rho of degree one.
struct Decomposition {
  Mobius eta;
  std::int64_t n;
  Mobius rho;
};

/// thm1: eta = (a^q u^{-n} X + b^q v^{-n})/(aX + b), rho = (X+u)/(X+v).
/// thm2: eta = (a^q v^{-n} X + b^q v^{qn})/(bX + a), rho = (X+v)/(X+v^{-q}).
/// Throws DegenerateParams when eta is not of degree one.
Decomposition decompose(const Field& f, const FamilyParams& params);

/// eta(rho(x)^n), with the power taken by square-and-multiply on P^1.
ProjPoint eval_fast(const Field& f, const Decomposition& d, ProjPoint x);

/// The map that carries the injectivity question for g.
///
/// thm1: rho = w^{-1} * map with map = (wX + v w^q)/(X + v), w^{q-1} = u/v,
///       and map sends mu_{q+1} bijectively onto P^1(F_q).
/// thm2: rho = v^q * map with map = (X + v)/(v^q X + 1), which permutes
///       mu_{q+1}.
struct ReductionMap {
  Elem scale;
  Mobius map;
  std::optional<Elem> w;
};

ReductionMap reduction_map(const Field& f, const FamilyParams& params);

enum class SpecialCase { FFLW1, FFLW2, PUW8, PUW9, WYDM35_ZR12, WYDM33_ZR11 };

std::string_view to_string(SpecialCase c);
SpecialCase parse_special_case(std::string_view s);

/// Free parameters of a special case; r = n + m(q+1).
///
/// FFLW1:       b = sign*a, v = -u           (needs u; a defaults to 1)
/// FFLW2:       b = sign*a, v^{q+1} = -1     (v defaults to solve_norm(-1))
/// PUW8:        a = b = 1, {u, v} = F_4 \ F_2  (swap exchanges u and v)
/// PUW9:        a = v, b = u, {u, v} = F_4 \ F_2
/// WYDM35_ZR12: a = (-b)^n, u = v b^{q-1}    (needs b and v)
/// WYDM33_ZR11: a = -1/v, b = 1/v^n          (needs v)
struct SpecialArgs {
  std::int64_t n = 1;
  std::int64_t m = 0;
  int sign = 1;
  bool swap = false;
  std::optional<Elem> u, v, a, b;
};

/// Throws InvalidParams when the constraints cannot be met in this field.
FamilyParams special_case(const Field& f, SpecialCase which,
                          const SpecialArgs& args);

}  // namespace permfam

#pragma once

#include <functional>
#include <optional>

#include "permfam/field.hpp"
#include "permfam/mobius.hpp"
#include "permfam/poly.hpp"
#include "permfam/rational.hpp"

namespace permfam {

/// Why a map failed to be a permutation.
///   collision: first != second but both have the same image
///   escape:    first is sent outside the target set (second is unused)
struct Witness {
  enum class Kind { collision, escape };
  Kind kind = Kind::collision;
  Elem first;
  Elem second;

  bool operator==(const Witness&) const = default;
};

struct PermVerdict {
  bool is_permutation = true;
  std::optional<Witness> witness;  // present iff !is_permutation

  bool operator==(const PermVerdict&) const = default;
};

/// Brute force: evaluates s at every element of F_{q^2} and marks images in
/// a bitset. Stops at the first repeated image.
PermVerdict permutes_fq2(const Field& f, const SparsePoly& s);

/// Second route to the same verdict: sorts the image multiset and looks for
/// adjacent repeats.
PermVerdict permutes_fq2_sorted(const Field& f, const SparsePoly& s);

using MuMap = std::function<ProjPoint(Elem)>;

/// Whether map restricted to mu_{q+1} is a bijection onto mu_{q+1}. An image
/// outside mu_{q+1}, infinity included, is reported as an escape.
PermVerdict permutes_mu(const Field& f, const MuMap& map);

/// g_0(X) = X^r B(X)^{q-1} as a point map; a root of B maps to 0.
MuMap g0_point_map(const Field& f, std::int64_t r, const Poly& b);

/// X^r B(X^{q-1}).
SparsePoly compose_f(const Field& f, std::int64_t r, const Poly& b);

// Each validator recomputes both sides of one equivalence or implication on a
// single instance and returns whether the statement holds there.

/// permutes F_{q^2}  <=>  gcd(r, q-1) = 1 and g_0 permutes mu_{q+1}.
bool validate_lemma_old(const Field& f, std::int64_t r, const Poly& b);

/// g_0 permutes mu  <=>  B has no root in mu and X^r B^{(q)}(1/X)/B(X)
/// permutes mu.
bool validate_lemma_lemx(const Field& f, std::int64_t r, const Poly& b);

/// If deg(X^n B^{(q)}(1/X)/B(X)) = n then B has no root in mu and the map
/// sends mu into mu. Requires n >= deg B.
bool validate_lemma_scr(const Field& f, const Poly& b, int n);

/// For alpha^{q+1} != beta^{q+1}, (beta^q X + alpha^q)/(alpha X + beta)
/// permutes mu. Vacuously true otherwise.
bool validate_lemma_deg1mu(const Field& f, Elem alpha, Elem beta);

/// For alpha not in F_q and beta in mu, (alpha X + beta alpha^q)/(X + beta)
/// maps mu bijectively onto P^1(F_q). Throws FieldError on bad input.
bool validate_lemma_mu(const Field& f, Elem alpha, Elem beta);

/// deg(eta o g o rho) = deg g for nonconstant g.
bool validate_lemma_deg(const Field& f, const RationalMap& g, const Mobius& eta,
                        const Mobius& rho);

}  // namespace permfam

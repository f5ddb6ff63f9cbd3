#pragma once

#include "permfam/field.hpp"

namespace permfam {

/// Point of P^1(F_{q^2}): a finite element or the point at infinity.
struct ProjPoint {
  bool infinite = false;
  Elem value;  // zero when infinite

  static constexpr ProjPoint finite(Elem x) { return ProjPoint{false, x}; }
  static constexpr ProjPoint infinity() { return ProjPoint{true, Elem{}}; }

  bool operator==(const ProjPoint&) const = default;
};

/// True iff (alpha X + beta)/(gamma X + delta) has degree one, i.e.
/// alpha*delta != beta*gamma. Throws when gamma = delta = 0.
bool is_degree_one(const Field& f, Elem alpha, Elem beta, Elem gamma,
                   Elem delta);

/// Degree-one rational function (alpha X + beta)/(gamma X + delta),
/// alpha*delta - beta*gamma != 0. Acts bijectively on P^1(F_{q^2}).
class Mobius {
 public:
  /// Throws FieldError if the determinant vanishes.
  static Mobius make(const Field& f, Elem alpha, Elem beta, Elem gamma,
                     Elem delta);
  static Mobius identity(const Field& f);

  Elem alpha() const { return a_; }
  Elem beta() const { return b_; }
  Elem gamma() const { return c_; }
  Elem delta() const { return d_; }
  Elem det(const Field& f) const;

  bool operator==(const Mobius&) const = default;

 private:
  Mobius(Elem a, Elem b, Elem c, Elem d) : a_(a), b_(b), c_(c), d_(d) {}
  Elem a_, b_, c_, d_;
};

ProjPoint mobius_eval(const Field& f, const Mobius& m, ProjPoint pt);

/// Matrix product: mobius_eval(compose(m1, m2), P) = m1(m2(P)).
Mobius mobius_compose(const Field& f, const Mobius& m1, const Mobius& m2);
/// Adjugate; inverse up to a scalar.
Mobius mobius_inverse(const Field& f, const Mobius& m);
/// Same map on P^1 (matrices proportional).
bool mobius_equivalent(const Field& f, const Mobius& m1, const Mobius& m2);

/// x -> x^n on P^1 for n >= 1: 0 and infinity are fixed.
ProjPoint proj_pow(const Field& f, ProjPoint pt, std::int64_t n);

}  // namespace permfam

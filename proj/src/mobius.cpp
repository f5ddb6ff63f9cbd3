#include "permfam/mobius.hpp"

namespace permfam {

bool is_degree_one(const Field& f, Elem alpha, Elem beta, Elem gamma,
                   Elem delta) {
  if (gamma.is_zero() && delta.is_zero()) {
    throw FieldError("is_degree_one: denominator gamma X + delta is zero");
  }
  return f.mul(alpha, delta) != f.mul(beta, gamma);
}

Mobius Mobius::make(const Field& f, Elem alpha, Elem beta, Elem gamma,
                    Elem delta) {
  if (f.mul(alpha, delta) == f.mul(beta, gamma)) {
    throw FieldError("Mobius map with vanishing determinant");
  }
  return Mobius(alpha, beta, gamma, delta);
}

Mobius Mobius::identity(const Field& f) {
  return Mobius(f.one(), f.zero(), f.zero(), f.one());
}

Elem Mobius::det(const Field& f) const {
  return f.sub(f.mul(a_, d_), f.mul(b_, c_));
}

ProjPoint mobius_eval(const Field& f, const Mobius& m, ProjPoint pt) {
  if (pt.infinite) {
    if (m.gamma().is_zero()) return ProjPoint::infinity();
    return ProjPoint::finite(f.div(m.alpha(), m.gamma()));
  }
  const Elem den = f.add(f.mul(m.gamma(), pt.value), m.delta());
  if (den.is_zero()) return ProjPoint::infinity();
  const Elem num = f.add(f.mul(m.alpha(), pt.value), m.beta());
  return ProjPoint::finite(f.div(num, den));
}

Mobius mobius_compose(const Field& f, const Mobius& m1, const Mobius& m2) {
  auto dot = [&](Elem x1, Elem y1, Elem x2, Elem y2) {
    return f.add(f.mul(x1, y1), f.mul(x2, y2));
  };
  return Mobius::make(
      f, dot(m1.alpha(), m2.alpha(), m1.beta(), m2.gamma()),
      dot(m1.alpha(), m2.beta(), m1.beta(), m2.delta()),
      dot(m1.gamma(), m2.alpha(), m1.delta(), m2.gamma()),
      dot(m1.gamma(), m2.beta(), m1.delta(), m2.delta()));
}

Mobius mobius_inverse(const Field& f, const Mobius& m) {
  return Mobius::make(f, m.delta(), f.neg(m.beta()), f.neg(m.gamma()),
                      m.alpha());
}

bool mobius_equivalent(const Field& f, const Mobius& m1, const Mobius& m2) {
  const Elem v1[4] = {m1.alpha(), m1.beta(), m1.gamma(), m1.delta()};
  const Elem v2[4] = {m2.alpha(), m2.beta(), m2.gamma(), m2.delta()};
  for (int i = 0; i < 4; ++i) {
    for (int j = i + 1; j < 4; ++j) {
      if (f.mul(v1[i], v2[j]) != f.mul(v1[j], v2[i])) return false;
    }
  }
  return true;
}

ProjPoint proj_pow(const Field& f, ProjPoint pt, std::int64_t n) {
  if (n == 0) return ProjPoint::finite(f.one());
  const bool zero = !pt.infinite && pt.value.is_zero();
  if (pt.infinite || zero) {
    // 0 and infinity are fixed by positive powers and swapped by negative ones.
    return (pt.infinite == (n > 0)) ? ProjPoint::infinity()
                                    : ProjPoint::finite(f.zero());
  }
  return ProjPoint::finite(f.pow(pt.value, n));
}

}  // namespace permfam

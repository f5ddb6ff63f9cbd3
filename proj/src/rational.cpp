#include "permfam/rational.hpp"

namespace permfam {

RationalMap RationalMap::build(const Field& f, const Poly& num,
                               const Poly& den) {
  if (den.is_zero()) throw FieldError("rational map with zero denominator");
  if (num.is_zero()) return RationalMap(Poly{}, Poly::constant(f.one()));
  const Poly g = poly_gcd(f, num, den);
  Poly n = poly_divmod(f, num, g).first;
  Poly d = poly_divmod(f, den, g).first;
  const Elem s = f.inv(d.lead());
  return RationalMap(poly_scale(f, n, s), poly_scale(f, d, s));
}

ProjPoint rat_eval(const Field& f, const RationalMap& g, ProjPoint pt) {
  if (pt.infinite) {
    const int dn = g.num().degree();
    const int dd = g.den().degree();
    if (dn > dd) return ProjPoint::infinity();
    if (dn < dd) return ProjPoint::finite(f.zero());
    return ProjPoint::finite(f.div(g.num().lead(), g.den().lead()));
  }
  const Elem d = poly_eval(f, g.den(), pt.value);
  if (d.is_zero()) return ProjPoint::infinity();
  return ProjPoint::finite(f.div(poly_eval(f, g.num(), pt.value), d));
}

RationalMap compose(const Field& f, const Mobius& eta, const RationalMap& g,
                    const Mobius& rho) {
  // Homogenize g(rho(X)): with P = alpha X + beta and Q = gamma X + delta,
  // N(P/Q) Q^d and D(P/Q) Q^d are polynomials for d = deg g.
  const int d = std::max(g.degree(), 0);
  const Poly p{rho.beta(), rho.alpha()};
  const Poly q{rho.delta(), rho.gamma()};

  std::vector<Poly> p_pows{Poly::constant(f.one())};
  std::vector<Poly> q_pows{Poly::constant(f.one())};
  for (int i = 1; i <= d; ++i) {
    p_pows.push_back(poly_mul(f, p_pows.back(), p));
    q_pows.push_back(poly_mul(f, q_pows.back(), q));
  }
  auto homogenize = [&](const Poly& h) {
    Poly out;
    for (int i = 0; i <= h.degree(); ++i) {
      if (h[i].is_zero()) continue;
      const Poly term = poly_mul(f, p_pows[i], q_pows[d - i]);
      out = poly_add(f, out, poly_scale(f, term, h[i]));
    }
    return out;
  };
  const Poly n1 = homogenize(g.num());
  const Poly d1 = homogenize(g.den());

  const Poly num = poly_add(f, poly_scale(f, n1, eta.alpha()),
                            poly_scale(f, d1, eta.beta()));
  const Poly den = poly_add(f, poly_scale(f, n1, eta.gamma()),
                            poly_scale(f, d1, eta.delta()));
  return RationalMap::build(f, num, den);
}

}  // namespace permfam

#pragma once

#include <algorithm>

#include "permfam/mobius.hpp"
#include "permfam/poly.hpp"

namespace permfam {

/// Reduced rational function num/den over F_{q^2}: gcd(num, den) = 1 and den
/// monic. Its degree is max(deg num, deg den), and it acts on P^1(F_{q^2}).
class RationalMap {
 public:
  /// Divides out gcd(num, den) and makes den monic. Throws on den = 0.
  static RationalMap build(const Field& f, const Poly& num, const Poly& den);

  const Poly& num() const { return num_; }
  const Poly& den() const { return den_; }
  int degree() const { return std::max(num_.degree(), den_.degree()); }
  bool is_constant() const { return degree() <= 0; }

  bool operator==(const RationalMap&) const = default;

 private:
  RationalMap(Poly n, Poly d) : num_(std::move(n)), den_(std::move(d)) {}
  Poly num_, den_;
};

ProjPoint rat_eval(const Field& f, const RationalMap& g, ProjPoint pt);

/// eta o g o rho, computed by substitution and reduced with RationalMap::build.
RationalMap compose(const Field& f, const Mobius& eta, const RationalMap& g,
                    const Mobius& rho);

}  // namespace permfam

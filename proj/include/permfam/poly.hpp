#pragma once

#include <cstdint>
#include <initializer_list>
#include <utility>
#include <vector>

#include "permfam/field.hpp"

namespace permfam {

/// Univariate polynomial over F_{q^2}, little-endian, with no trailing zero
/// coefficients. The zero polynomial has no coefficients and degree -1.
class Poly {
 public:
  Poly() = default;
  explicit Poly(std::vector<Elem> coeffs) : c_(std::move(coeffs)) { trim(); }
  Poly(std::initializer_list<Elem> coeffs) : c_(coeffs) { trim(); }

  static Poly constant(Elem c) { return Poly{c}; }
  static Poly monomial(const Field& f, Elem c, std::size_t deg);

  const std::vector<Elem>& coeffs() const { return c_; }
  bool is_zero() const { return c_.empty(); }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  Elem lead() const { return c_.empty() ? Elem{} : c_.back(); }
  Elem operator[](std::size_t i) const { return i < c_.size() ? c_[i] : Elem{}; }

  bool operator==(const Poly&) const = default;

 private:
  void trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
  }
  std::vector<Elem> c_;
};

Poly poly_add(const Field& f, const Poly& a, const Poly& b);
Poly poly_sub(const Field& f, const Poly& a, const Poly& b);
Poly poly_scale(const Field& f, const Poly& a, Elem s);
Poly poly_mul(const Field& f, const Poly& a, const Poly& b);
Poly poly_pow(const Field& f, Poly base, std::uint64_t e);
/// Quotient and remainder; throws FieldError when dividing by zero.
std::pair<Poly, Poly> poly_divmod(const Field& f, const Poly& a, const Poly& b);
Poly poly_monic(const Field& f, const Poly& a);
/// Monic gcd by the Euclidean algorithm; gcd(0, 0) = 0.
Poly poly_gcd(const Field& f, Poly a, Poly b);

/// Horner evaluation.
Elem poly_eval(const Field& f, const Poly& b, Elem x);

/// B^{(q)}: each coefficient raised to the q-th power.
Poly frob_poly(const Field& f, const Poly& b);

/// X^n B^{(q)}(1/X) = sum_i b_i^q X^{n-i}. Requires n >= deg(B).
Poly reversal_num(const Field& f, const Poly& b, int n);

/// One term c X^e of a sparse polynomial. Exponents are non-negative.
struct Term {
  std::int64_t exponent = 0;
  Elem coeff;
  bool operator==(const Term&) const = default;
};

/// Sparse polynomial: terms with distinct exponents and nonzero coefficients,
/// sorted by exponent.
using SparsePoly = std::vector<Term>;

/// Pointwise evaluation of a sparse polynomial, sum c_i x^{e_i}. Powers are
/// chained along the sorted exponents so that equally spaced terms cost one
/// multiplication each.
Elem sparse_eval(const Field& f, const SparsePoly& s, Elem x);

}  // namespace permfam

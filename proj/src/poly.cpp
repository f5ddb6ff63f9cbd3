#include "permfam/poly.hpp"

#include <algorithm>

namespace permfam {

Poly Poly::monomial(const Field& f, Elem c, std::size_t deg) {
  std::vector<Elem> v(deg + 1, f.zero());
  v[deg] = c;
  return Poly(std::move(v));
}

Poly poly_add(const Field& f, const Poly& a, const Poly& b) {
  const std::size_t n = std::max(a.coeffs().size(), b.coeffs().size());
  std::vector<Elem> out(n);
  for (std::size_t i = 0; i < n; ++i) out[i] = f.add(a[i], b[i]);
  return Poly(std::move(out));
}

Poly poly_sub(const Field& f, const Poly& a, const Poly& b) {
  const std::size_t n = std::max(a.coeffs().size(), b.coeffs().size());
  std::vector<Elem> out(n);
  for (std::size_t i = 0; i < n; ++i) out[i] = f.sub(a[i], b[i]);
  return Poly(std::move(out));
}

Poly poly_scale(const Field& f, const Poly& a, Elem s) {
  std::vector<Elem> out = a.coeffs();
  for (auto& c : out) c = f.mul(c, s);
  return Poly(std::move(out));
}

Poly poly_mul(const Field& f, const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  const auto& ac = a.coeffs();
  const auto& bc = b.coeffs();
  std::vector<Elem> out(ac.size() + bc.size() - 1, f.zero());
  for (std::size_t i = 0; i < ac.size(); ++i) {
    if (ac[i].is_zero()) continue;
    for (std::size_t j = 0; j < bc.size(); ++j) {
      out[i + j] = f.add(out[i + j], f.mul(ac[i], bc[j]));
    }
  }
  return Poly(std::move(out));
}

Poly poly_pow(const Field& f, Poly base, std::uint64_t e) {
  Poly result = Poly::constant(f.one());
  while (e > 0) {
    if (e & 1) result = poly_mul(f, result, base);
    e >>= 1;
    if (e > 0) base = poly_mul(f, base, base);
  }
  return result;
}

std::pair<Poly, Poly> poly_divmod(const Field& f, const Poly& a, const Poly& b) {
  if (b.is_zero()) throw FieldError("polynomial division by zero");
  if (a.degree() < b.degree()) return {Poly{}, a};
  std::vector<Elem> rem = a.coeffs();
  const auto& bc = b.coeffs();
  const std::size_t db = bc.size() - 1;
  const Elem lead_inv = f.inv(bc.back());
  std::vector<Elem> quot(rem.size() - db, f.zero());
  for (std::size_t i = rem.size(); i-- > db;) {
    const Elem c = f.mul(rem[i], lead_inv);
    if (c.is_zero()) continue;
    const std::size_t shift = i - db;
    quot[shift] = c;
    for (std::size_t j = 0; j <= db; ++j) {
      rem[shift + j] = f.sub(rem[shift + j], f.mul(c, bc[j]));
    }
  }
  return {Poly(std::move(quot)), Poly(std::move(rem))};
}

Poly poly_monic(const Field& f, const Poly& a) {
  if (a.is_zero()) return a;
  return poly_scale(f, a, f.inv(a.lead()));
}

Poly poly_gcd(const Field& f, Poly a, Poly b) {
  a = poly_monic(f, a);
  b = poly_monic(f, b);
  while (!b.is_zero()) {
    Poly r = poly_monic(f, poly_divmod(f, a, b).second);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

Elem poly_eval(const Field& f, const Poly& b, Elem x) {
  Elem acc = f.zero();
  const auto& c = b.coeffs();
  for (auto it = c.rbegin(); it != c.rend(); ++it) {
    acc = f.add(f.mul(acc, x), *it);
  }
  return acc;
}

Poly frob_poly(const Field& f, const Poly& b) {
  std::vector<Elem> out = b.coeffs();
  for (auto& c : out) c = f.frob(c);
  return Poly(std::move(out));
}

Poly reversal_num(const Field& f, const Poly& b, int n) {
  if (n < b.degree()) {
    throw FieldError("reversal_num: n = " + std::to_string(n) +
                     " is below deg(B) = " + std::to_string(b.degree()));
  }
  if (b.is_zero()) return {};
  std::vector<Elem> out(static_cast<std::size_t>(n) + 1, f.zero());
  const auto& c = b.coeffs();
  for (std::size_t i = 0; i < c.size(); ++i) {
    out[static_cast<std::size_t>(n) - i] = f.frob(c[i]);
  }
  return Poly(std::move(out));
}

Elem sparse_eval(const Field& f, const SparsePoly& s, Elem x) {
  Elem acc = f.zero();
  if (s.empty()) return acc;
  Elem power = f.pow(x, s.front().exponent);
  std::int64_t last_gap = -1;
  Elem step;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i > 0) {
      const std::int64_t gap = s[i].exponent - s[i - 1].exponent;
      if (gap != last_gap) {
        step = f.pow(x, gap);
        last_gap = gap;
      }
      power = f.mul(power, step);
    }
    acc = f.add(acc, f.mul(s[i].coeff, power));
  }
  return acc;
}

}  // namespace permfam

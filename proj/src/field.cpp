#include "permfam/field.hpp"

#include <algorithm>
#include <numeric>

namespace permfam {

namespace {

using Coeffs = std::vector<std::uint32_t>;

// Dense polynomials over F_p used only while constructing the field.

void trim(Coeffs& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

std::uint32_t inv_mod_p(std::uint32_t a, std::uint32_t p) {
  // p is prime and a != 0: a^{p-2}.
  std::uint64_t result = 1, base = a % p;
  std::uint64_t e = p - 2;
  while (e > 0) {
    if (e & 1) result = result * base % p;
    base = base * base % p;
    e >>= 1;
  }
  return static_cast<std::uint32_t>(result);
}

Coeffs poly_mod(Coeffs a, const Coeffs& m, std::uint32_t p) {
  trim(a);
  const std::size_t dm = m.size() - 1;
  const std::uint64_t lead_inv = inv_mod_p(m.back(), p);
  while (a.size() > dm) {
    const std::size_t shift = a.size() - 1 - dm;
    const std::uint64_t c = a.back() * lead_inv % p;
    for (std::size_t i = 0; i <= dm; ++i) {
      const std::uint64_t sub = c * m[i] % p;
      a[shift + i] = static_cast<std::uint32_t>((a[shift + i] + p - sub) % p);
    }
    trim(a);
  }
  return a;
}

Coeffs poly_mulmod(const Coeffs& a, const Coeffs& b, const Coeffs& m,
                   std::uint32_t p) {
  if (a.empty() || b.empty()) return {};
  Coeffs prod(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) {
      prod[i + j] = static_cast<std::uint32_t>(
          (prod[i + j] + std::uint64_t{a[i]} * b[j]) % p);
    }
  }
  return poly_mod(std::move(prod), m, p);
}

Coeffs poly_powmod(Coeffs base, std::uint64_t e, const Coeffs& m,
                   std::uint32_t p) {
  Coeffs result{1};
  base = poly_mod(std::move(base), m, p);
  while (e > 0) {
    if (e & 1) result = poly_mulmod(result, base, m, p);
    e >>= 1;
    if (e > 0) base = poly_mulmod(base, base, m, p);
  }
  return result;
}

Coeffs poly_gcd(Coeffs a, Coeffs b, std::uint32_t p) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    Coeffs r = poly_mod(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

// Rabin's test: m of degree d is irreducible over F_p iff t^{p^d} = t mod m
// and gcd(t^{p^{d/l}} - t, m) = 1 for each prime l | d.
bool is_irreducible(const Coeffs& m, std::uint32_t p) {
  const std::size_t d = m.size() - 1;
  if (d == 1) return true;
  if (m[0] == 0) return false;

  // frob_pows[i] = t^{p^i} mod m
  std::vector<Coeffs> frob_pows{Coeffs{0, 1}};
  for (std::size_t i = 1; i <= d; ++i) {
    frob_pows.push_back(poly_powmod(frob_pows.back(), p, m, p));
  }
  Coeffs last = frob_pows[d];
  trim(last);
  if (last != Coeffs{0, 1}) return false;

  for (std::uint64_t l : prime_factors(d)) {
    Coeffs h = frob_pows[d / l];
    h.resize(std::max<std::size_t>(h.size(), 2), 0);
    h[1] = (h[1] + p - 1) % p;
    trim(h);
    if (h.empty()) return false;
    Coeffs g = poly_gcd(h, m, p);
    if (g.size() != 1) return false;
  }
  return true;
}

}  // namespace

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

std::int64_t gcd_i64(std::int64_t a, std::int64_t b) {
  // std::gcd on |INT64_MIN| is undefined; exponents here never reach it.
  return std::gcd(a, b);
}

Field Field::build(std::uint32_t p, unsigned k, std::uint64_t max_elems) {
  if (!is_prime(p)) {
    throw FieldError("characteristic " + std::to_string(p) + " is not prime");
  }
  if (k == 0) throw FieldError("extension degree k must be at least 1");
  if (max_elems > (std::uint64_t{1} << 31)) {
    throw FieldError("size bound above 2^31 is not supported");
  }

  Field f;
  f.p_ = p;
  f.k_ = k;
  const unsigned d = 2 * k;
  f.place_.assign(d + 1, 1);
  for (unsigned i = 1; i <= d; ++i) {
    if (f.place_[i - 1] > max_elems / p) {
      throw FieldError("field of order " + std::to_string(p) + "^" +
                       std::to_string(d) + " exceeds the size bound " +
                       std::to_string(max_elems));
    }
    f.place_[i] = f.place_[i - 1] * p;
  }
  f.size_ = f.place_[d];
  f.q_ = f.place_[k];

  // Smallest monic irreducible of degree d by encoding of the low part.
  Coeffs m(d + 1, 0);
  m[d] = 1;
  bool found = false;
  for (std::uint64_t low = 0; low < f.size_ && !found; ++low) {
    std::uint64_t rest = low;
    for (unsigned i = 0; i < d; ++i) {
      m[i] = static_cast<std::uint32_t>(rest % p);
      rest /= p;
    }
    found = is_irreducible(m, p);
  }
  if (!found) throw FieldError("no irreducible modulus found");
  f.modulus_ = m;

  f.order_primes_ = prime_factors(f.group_order());
  f.tables_ = std::make_shared<const Tables>();

  const std::uint64_t n = f.group_order();
  for (std::uint64_t c = 1; c < f.size_; ++c) {
    const Elem x{static_cast<std::uint32_t>(c)};
    if (f.pow_slow(x, n) != f.one()) continue;
    const bool primitive = std::all_of(
        f.order_primes_.begin(), f.order_primes_.end(),
        [&](std::uint64_t l) { return f.pow_slow(x, n / l) != f.one(); });
    if (primitive) {
      f.generator_ = x;
      break;
    }
  }
  if (f.generator_.is_zero()) throw FieldError("no primitive element found");

  if (f.size_ <= kTableLimit) {
    auto t = std::make_shared<Tables>();
    t->exp.resize(2 * n);
    t->log.assign(f.size_, 0);
    Elem cur = f.one();
    for (std::uint64_t i = 0; i < n; ++i) {
      t->exp[i] = cur.code;
      t->log[cur.code] = static_cast<std::uint32_t>(i);
      cur = f.mul_slow(cur, f.generator_);
    }
    for (std::uint64_t i = n; i < 2 * n; ++i) t->exp[i] = t->exp[i - n];
    f.tables_ = std::move(t);
  }
  return f;
}

Elem Field::from_int(std::int64_t v) const {
  const auto pp = static_cast<std::int64_t>(p_);
  return Elem{static_cast<std::uint32_t>(((v % pp) + pp) % pp)};
}

Elem Field::from_code(std::uint64_t code) const {
  if (code >= size_) {
    throw FieldError("element encoding " + std::to_string(code) +
                     " out of range for field of order " +
                     std::to_string(size_));
  }
  return Elem{static_cast<std::uint32_t>(code)};
}

std::vector<std::uint32_t> Field::coeffs(Elem x) const {
  std::vector<std::uint32_t> c(degree());
  std::uint32_t rest = x.code;
  for (auto& ci : c) {
    ci = rest % p_;
    rest /= p_;
  }
  return c;
}

Elem Field::from_coeffs(std::span<const std::uint32_t> c) const {
  if (c.size() > degree()) throw FieldError("too many coefficients");
  std::uint64_t code = 0;
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (c[i] >= p_) throw FieldError("coefficient out of range");
    code += c[i] * place_[i];
  }
  return Elem{static_cast<std::uint32_t>(code)};
}

Elem Field::add(Elem x, Elem y) const {
  if (p_ == 2) return Elem{x.code ^ y.code};
  std::uint32_t a = x.code, b = y.code, out = 0;
  for (unsigned i = 0; (a | b) != 0; ++i) {
    std::uint32_t s = a % p_ + b % p_;
    if (s >= p_) s -= p_;
    out += static_cast<std::uint32_t>(s * place_[i]);
    a /= p_;
    b /= p_;
  }
  return Elem{out};
}

Elem Field::neg(Elem x) const {
  if (p_ == 2) return x;
  std::uint32_t a = x.code, out = 0;
  for (unsigned i = 0; a != 0; ++i) {
    const std::uint32_t d = a % p_;
    if (d != 0) out += static_cast<std::uint32_t>((p_ - d) * place_[i]);
    a /= p_;
  }
  return Elem{out};
}

Elem Field::sub(Elem x, Elem y) const { return add(x, neg(y)); }

Elem Field::mul(Elem x, Elem y) const {
  if (x.is_zero() || y.is_zero()) return zero();
  if (has_tables()) {
    const auto& t = *tables_;
    return Elem{t.exp[std::size_t{t.log[x.code]} + t.log[y.code]]};
  }
  return mul_slow(x, y);
}

Elem Field::mul_slow(Elem x, Elem y) const {
  const Coeffs prod = poly_mulmod(coeffs(x), coeffs(y), modulus_, p_);
  return from_coeffs(prod);
}

Elem Field::pow_slow(Elem x, std::uint64_t e) const {
  Elem result = one();
  while (e > 0) {
    if (e & 1) result = mul_slow(result, x);
    e >>= 1;
    if (e > 0) x = mul_slow(x, x);
  }
  return result;
}

Elem Field::inv(Elem x) const {
  if (x.is_zero()) throw FieldError("inverse of zero");
  if (has_tables()) {
    const auto& t = *tables_;
    const std::uint32_t l = t.log[x.code];
    return Elem{t.exp[l == 0 ? 0 : group_order() - l]};
  }
  return pow(x, static_cast<std::int64_t>(group_order() - 1));
}

Elem Field::div(Elem x, Elem y) const {
  if (y.is_zero()) throw FieldError("division by zero");
  return mul(x, inv(y));
}

Elem Field::pow(Elem x, std::int64_t e) const {
  if (x.is_zero()) {
    if (e < 0) throw FieldError("zero raised to a negative power");
    return e == 0 ? one() : zero();
  }
  const auto n = static_cast<std::int64_t>(group_order());
  auto r = static_cast<std::uint64_t>(((e % n) + n) % n);
  Elem result = one();
  while (r > 0) {
    if (r & 1) result = mul(result, x);
    r >>= 1;
    if (r > 0) x = mul(x, x);
  }
  return result;
}

Elem Field::frob(Elem x) const {
  return pow(x, static_cast<std::int64_t>(q_));
}

bool Field::in_mu(Elem x) const {
  return !x.is_zero() && pow(x, static_cast<std::int64_t>(q_ + 1)) == one();
}

std::vector<Elem> Field::enum_mu() const {
  std::vector<Elem> out;
  out.reserve(q_ + 1);
  const Elem step = pow(generator_, static_cast<std::int64_t>(q_ - 1));
  Elem cur = one();
  for (std::uint64_t j = 0; j <= q_; ++j) {
    out.push_back(cur);
    cur = mul(cur, step);
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool Field::in_subfield(Elem x) const { return frob(x) == x; }

Elem Field::solve_w(Elem c) const {
  if (!in_mu(c)) throw FieldError("solve_w: argument is not in mu_{q+1}");
  const auto e = static_cast<std::int64_t>(q_ - 1);
  for (std::uint64_t code = 1; code < size_; ++code) {
    const Elem w{static_cast<std::uint32_t>(code)};
    if (pow(w, e) == c) return w;
  }
  throw FieldError("solve_w: no solution");  // unreachable: x^{q-1} is onto mu
}

Elem Field::solve_norm(Elem c) const {
  if (c.is_zero() || !in_subfield(c)) {
    throw FieldError("solve_norm: argument is not in F_q^*");
  }
  const auto e = static_cast<std::int64_t>(q_ + 1);
  for (std::uint64_t code = 1; code < size_; ++code) {
    const Elem v{static_cast<std::uint32_t>(code)};
    if (pow(v, e) == c) return v;
  }
  throw FieldError("solve_norm: no solution");  // unreachable: norm is onto
}

std::pair<Elem, Elem> Field::f4_pair() const {
  if (p_ != 2) throw FieldError("F_4 is a subfield only in characteristic 2");
  const auto third = static_cast<std::int64_t>(group_order() / 3);
  Elem w1 = pow(generator_, third);
  Elem w2 = pow(generator_, 2 * third);
  if (w2 < w1) std::swap(w1, w2);
  return {w1, w2};
}

std::uint64_t Field::order_of(Elem x) const {
  if (x.is_zero()) throw FieldError("order of zero");
  std::uint64_t ord = group_order();
  for (std::uint64_t l : order_primes_) {
    while (ord % l == 0 && pow(x, static_cast<std::int64_t>(ord / l)) == one()) {
      ord /= l;
    }
  }
  return ord;
}

}  // namespace permfam

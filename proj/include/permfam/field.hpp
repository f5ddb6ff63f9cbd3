#pragma once

#include <compare>
#include <cstdint>
#include <memory>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace permfam {

/// Raised for malformed field parameters and for arithmetic outside an
/// operation's domain (division by zero, 0 to a negative power, ...).
class FieldError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Element of F_{q^2}, stored as its integer encoding sum(c_i * p^i) of the
/// little-endian coefficient vector of the canonical residue representative.
/// The encoding is a bijection with the coefficient vector, so equality and
/// ordering are those of the encoding.
struct Elem {
  std::uint32_t code = 0;

  constexpr Elem() = default;
  constexpr explicit Elem(std::uint32_t c) : code(c) {}

  constexpr bool is_zero() const { return code == 0; }
  constexpr auto operator<=>(const Elem&) const = default;
};

inline constexpr std::uint64_t kDefaultMaxElems = std::uint64_t{1} << 26;

/// Largest field order for which log/antilog tables are built; larger fields
/// fall back to schoolbook polynomial multiplication.
inline constexpr std::uint64_t kTableLimit = std::uint64_t{1} << 22;

bool is_prime(std::uint64_t n);
std::vector<std::uint64_t> prime_factors(std::uint64_t n);
std::int64_t gcd_i64(std::int64_t a, std::int64_t b);

/// F_{q^2} = F_p[t]/(m(t)) with q = p^k and deg m = 2k.
///
/// Construction is deterministic: the modulus is the monic irreducible of
/// degree 2k with the smallest integer encoding, and the generator is the
/// primitive element with the smallest encoding. F_q is never built
/// separately; it is the fixed field of x -> x^q.
///
/// Contexts are immutable and cheap to copy (the tables are shared).
class Field {
 public:
  static Field build(std::uint32_t p, unsigned k,
                     std::uint64_t max_elems = kDefaultMaxElems);

  std::uint32_t p() const { return p_; }
  unsigned k() const { return k_; }
  /// Extension degree of F_{q^2} over F_p.
  unsigned degree() const { return 2 * k_; }
  std::uint64_t q() const { return q_; }
  /// |F_{q^2}| = q^2.
  std::uint64_t size() const { return size_; }
  /// q^2 - 1.
  std::uint64_t group_order() const { return size_ - 1; }

  /// Coefficients of the modulus, little-endian, length 2k+1 (monic).
  const std::vector<std::uint32_t>& modulus() const { return modulus_; }
  Elem generator() const { return generator_; }
  bool has_tables() const { return !tables_->exp.empty(); }

  Elem zero() const { return Elem{0}; }
  Elem one() const { return Elem{1}; }
  /// Image of an integer in the prime field.
  Elem from_int(std::int64_t v) const;
  Elem from_code(std::uint64_t code) const;
  std::vector<std::uint32_t> coeffs(Elem x) const;
  Elem from_coeffs(std::span<const std::uint32_t> c) const;

  Elem add(Elem x, Elem y) const;
  Elem sub(Elem x, Elem y) const;
  Elem neg(Elem x) const;
  Elem mul(Elem x, Elem y) const;
  Elem inv(Elem x) const;
  Elem div(Elem x, Elem y) const;

  /// x^e by square-and-multiply. For x != 0 the exponent is first reduced
  /// mod q^2-1, so negative e is allowed. 0^e = 0 for e > 0 and 0^0 = 1;
  /// 0^e with e < 0 throws.
  Elem pow(Elem x, std::int64_t e) const;

  /// x^q, the generator of Gal(F_{q^2}/F_q).
  Elem frob(Elem x) const;

  /// x != 0 and x^{q+1} = 1.
  bool in_mu(Elem x) const;
  /// The q+1 elements of mu_{q+1}, sorted by encoding.
  std::vector<Elem> enum_mu() const;
  /// x^q = x.
  bool in_subfield(Elem x) const;

  /// Smallest-encoding w with w^{q-1} = c, for c in mu_{q+1}.
  Elem solve_w(Elem c) const;
  /// Smallest-encoding v with v^{q+1} = c, for c in F_q^*.
  Elem solve_norm(Elem c) const;
  /// The two primitive cube roots of unity, ordered by encoding. p must be 2.
  std::pair<Elem, Elem> f4_pair() const;

  /// Multiplicative order of x != 0.
  std::uint64_t order_of(Elem x) const;

  /// Discrete log base generator(); only available when has_tables().
  std::uint32_t log(Elem x) const { return tables_->log[x.code]; }

 private:
  struct Tables {
    std::vector<std::uint32_t> exp;  // length 2(q^2-1), exp[i] = g^i
    std::vector<std::uint32_t> log;  // length q^2, log[0] unused
  };

  Field() = default;
  Elem mul_slow(Elem x, Elem y) const;
  Elem pow_slow(Elem x, std::uint64_t e) const;

  std::uint32_t p_ = 2;
  unsigned k_ = 1;
  std::uint64_t q_ = 2;
  std::uint64_t size_ = 4;
  std::vector<std::uint32_t> modulus_;
  std::vector<std::uint64_t> place_;  // p^i, i = 0..2k
  std::vector<std::uint64_t> order_primes_;
  Elem generator_;
  std::shared_ptr<const Tables> tables_;
};

inline bool operator==(const Field& a, const Field& b) {
  return a.p() == b.p() && a.k() == b.k() && a.modulus() == b.modulus() &&
         a.generator() == b.generator();
}

}  // namespace permfam

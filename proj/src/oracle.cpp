#include "permfam/oracle.hpp"

#include <algorithm>
#include <utility>

#include "permfam/families.hpp"

namespace permfam {

namespace {

PermVerdict collision(Elem x1, Elem x2) {
  return PermVerdict{false, Witness{Witness::Kind::collision, x1, x2}};
}

PermVerdict escape(Elem x) {
  return PermVerdict{false, Witness{Witness::Kind::escape, x, Elem{}}};
}

// Finds a repeated image among (image, preimage) pairs.
PermVerdict first_repeat(std::vector<std::pair<std::uint32_t, Elem>> images) {
  std::sort(images.begin(), images.end());
  for (std::size_t i = 1; i < images.size(); ++i) {
    if (images[i].first == images[i - 1].first) {
      return collision(images[i - 1].second, images[i].second);
    }
  }
  return PermVerdict{};
}

}  // namespace

PermVerdict permutes_fq2(const Field& f, const SparsePoly& s) {
  const std::uint64_t size = f.size();
  std::vector<std::uint64_t> seen((size + 63) / 64, 0);
  for (std::uint64_t c = 0; c < size; ++c) {
    const Elem x{static_cast<std::uint32_t>(c)};
    const std::uint32_t y = sparse_eval(f, s, x).code;
    std::uint64_t& word = seen[y / 64];
    const std::uint64_t bit = std::uint64_t{1} << (y % 64);
    if (word & bit) {
      for (std::uint64_t e = 0; e < c; ++e) {
        const Elem earlier{static_cast<std::uint32_t>(e)};
        if (sparse_eval(f, s, earlier).code == y) return collision(earlier, x);
      }
    }
    word |= bit;
  }
  return PermVerdict{};
}

PermVerdict permutes_fq2_sorted(const Field& f, const SparsePoly& s) {
  std::vector<std::pair<std::uint32_t, Elem>> images;
  images.reserve(f.size());
  for (std::uint64_t c = 0; c < f.size(); ++c) {
    const Elem x{static_cast<std::uint32_t>(c)};
    images.emplace_back(sparse_eval(f, s, x).code, x);
  }
  return first_repeat(std::move(images));
}

PermVerdict permutes_mu(const Field& f, const MuMap& map) {
  std::vector<std::pair<std::uint32_t, Elem>> images;
  for (Elem x : f.enum_mu()) {
    const ProjPoint y = map(x);
    if (y.infinite || !f.in_mu(y.value)) return escape(x);
    images.emplace_back(y.value.code, x);
  }
  return first_repeat(std::move(images));
}

MuMap g0_point_map(const Field& f, std::int64_t r, const Poly& b) {
  return [f, r, b](Elem x) {
    const auto y = g0_eval(f, r, b, x);
    return ProjPoint::finite(y.value_or(f.zero()));
  };
}

SparsePoly compose_f(const Field& f, std::int64_t r, const Poly& b) {
  const auto step = static_cast<std::int64_t>(f.q()) - 1;
  SparsePoly out;
  for (int i = 0; i <= b.degree(); ++i) {
    if (!b[i].is_zero()) out.push_back(Term{r + i * step, b[i]});
  }
  return out;
}

bool validate_lemma_old(const Field& f, std::int64_t r, const Poly& b) {
  const auto q = static_cast<std::int64_t>(f.q());
  const bool lhs = permutes_fq2(f, compose_f(f, r, b)).is_permutation;
  const bool rhs = gcd_i64(r, q - 1) == 1 &&
                   permutes_mu(f, g0_point_map(f, r, b)).is_permutation;
  return lhs == rhs;
}

bool validate_lemma_lemx(const Field& f, std::int64_t r, const Poly& b) {
  const bool lhs = permutes_mu(f, g0_point_map(f, r, b)).is_permutation;
  const auto mu = f.enum_mu();
  const bool has_root = std::any_of(mu.begin(), mu.end(), [&](Elem x) {
    return poly_eval(f, b, x).is_zero();
  });
  const RationalMap g = g_map(f, r, b);
  const bool g_perm =
      permutes_mu(f, [&](Elem x) {
        return rat_eval(f, g, ProjPoint::finite(x));
      }).is_permutation;
  return lhs == (!has_root && g_perm);
}

bool validate_lemma_scr(const Field& f, const Poly& b, int n) {
  const RationalMap g = RationalMap::build(f, reversal_num(f, b, n), b);
  if (g.degree() != n) return true;
  for (Elem x : f.enum_mu()) {
    if (poly_eval(f, b, x).is_zero()) return false;
    const ProjPoint y = rat_eval(f, g, ProjPoint::finite(x));
    if (y.infinite || !f.in_mu(y.value)) return false;
  }
  return true;
}

bool validate_lemma_deg1mu(const Field& f, Elem alpha, Elem beta) {
  const auto e = static_cast<std::int64_t>(f.q()) + 1;
  if (f.pow(alpha, e) == f.pow(beta, e)) return true;
  const Mobius m =
      Mobius::make(f, f.frob(beta), f.frob(alpha), alpha, beta);
  return permutes_mu(f, [&](Elem x) {
           return mobius_eval(f, m, ProjPoint::finite(x));
         }).is_permutation;
}

bool validate_lemma_mu(const Field& f, Elem alpha, Elem beta) {
  if (f.in_subfield(alpha)) {
    throw FieldError("validate_lemma_mu: alpha must lie outside F_q");
  }
  if (!f.in_mu(beta)) {
    throw FieldError("validate_lemma_mu: beta must lie in mu_{q+1}");
  }
  const Mobius m =
      Mobius::make(f, alpha, f.mul(beta, f.frob(alpha)), f.one(), beta);
  // Infinity is encoded past the end of the field so it sorts last.
  const auto inf_code = static_cast<std::uint32_t>(f.size());
  std::vector<std::pair<std::uint32_t, Elem>> images;
  for (Elem x : f.enum_mu()) {
    const ProjPoint y = mobius_eval(f, m, ProjPoint::finite(x));
    if (!y.infinite && !f.in_subfield(y.value)) return false;
    images.emplace_back(y.infinite ? inf_code : y.value.code, x);
  }
  // q+1 distinct points of P^1(F_q), which has q+1 points.
  return first_repeat(std::move(images)).is_permutation;
}

bool validate_lemma_deg(const Field& f, const RationalMap& g, const Mobius& eta,
                        const Mobius& rho) {
  if (g.is_constant()) throw FieldError("validate_lemma_deg: g is constant");
  return compose(f, eta, g, rho).degree() == g.degree();
}

}  // namespace permfam

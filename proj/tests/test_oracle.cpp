#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <set>

#include "naive.hpp"
#include "permfam/families.hpp"
#include "permfam/oracle.hpp"

using namespace permfam;

namespace {

SparsePoly random_sparse(const Field& f, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> terms(1, 4);
  std::uniform_int_distribution<std::int64_t> exps(0, static_cast<std::int64_t>(f.size()) * 2);
  std::set<std::int64_t> used;
  SparsePoly s;
  const int t = terms(rng);
  while (static_cast<int>(s.size()) < t) {
    const auto e = exps(rng);
    if (!used.insert(e).second) continue;
    s.push_back(Term{e, naive::random_nonzero(f, rng)});
  }
  std::sort(s.begin(), s.end(), [](const Term& x, const Term& y) { return x.exponent < y.exponent; });
  return s;
}

}  // namespace

TEST_CASE("permutes_fq2 examples") {
  const Field f = Field::build(3, 1);
  const Elem one = f.one();
  CHECK(permutes_fq2(f, SparsePoly{Term{1, one}}).is_permutation);
  CHECK(permutes_fq2(f, SparsePoly{Term{3, one}}).is_permutation);
  CHECK(permutes_fq2(f, SparsePoly{Term{5, one}}).is_permutation);

  const PermVerdict sq = permutes_fq2(f, SparsePoly{Term{2, one}});
  CHECK_FALSE(sq.is_permutation);
  REQUIRE(sq.witness.has_value());
  CHECK(sq.witness->kind == Witness::Kind::collision);
  CHECK(sq.witness->first != sq.witness->second);
  CHECK(sq.witness->second == f.neg(sq.witness->first));

  // Constant maps collide immediately.
  const PermVerdict c = permutes_fq2(f, SparsePoly{Term{0, one}});
  CHECK_FALSE(c.is_permutation);
  CHECK(c.witness->kind == Witness::Kind::collision);
}

TEST_CASE("permutes_fq2: witnesses really collide") {
  for (auto [p, k] : std::vector<std::pair<std::uint32_t, unsigned>>{{2, 1}, {3, 1}, {2, 2}, {5, 1}}) {
    const Field f = Field::build(p, k);
    std::mt19937_64 rng(p * 7 + k);
    for (int i = 0; i < 200; ++i) {
      const SparsePoly s = random_sparse(f, rng);
      const PermVerdict v = permutes_fq2(f, s);
      CHECK(v.is_permutation == naive::is_permutation(f, s));
      const PermVerdict sorted = permutes_fq2_sorted(f, s);
      CHECK(sorted.is_permutation == v.is_permutation);
      // The two routes may name different colliding pairs; both must be real.
      for (const PermVerdict& pv : {v, sorted}) {
        if (pv.is_permutation) continue;
        REQUIRE(pv.witness.has_value());
        CHECK(pv.witness->first != pv.witness->second);
        CHECK(sparse_eval(f, s, pv.witness->first) == sparse_eval(f, s, pv.witness->second));
      }
    }
  }
}

TEST_CASE("permutes_fq2 and permutes_fq2_sorted agree on larger fields") {
  for (auto [p, k] : std::vector<std::pair<std::uint32_t, unsigned>>{{2, 3}, {3, 2}, {7, 1}, {2, 4}}) {
    const Field f = Field::build(p, k);
    std::mt19937_64 rng(p * 31 + k);
    for (int i = 0; i < 60; ++i) {
      const SparsePoly s = random_sparse(f, rng);
      CHECK(permutes_fq2(f, s).is_permutation == permutes_fq2_sorted(f, s).is_permutation);
    }
  }
}

TEST_CASE("permutes_mu") {
  const Field f = Field::build(5, 1);
  const auto q = static_cast<std::int64_t>(f.q());
  auto power = [&](std::int64_t e) {
    return [&f, e](Elem x) { return ProjPoint::finite(f.pow(x, e)); };
  };
  // x -> x^e permutes mu_6 iff gcd(e, 6) = 1.
  for (std::int64_t e = 0; e <= 2 * (q + 1); ++e) {
    CHECK(permutes_mu(f, power(e)).is_permutation == (std::gcd(e, q + 1) == 1));
  }
  const PermVerdict esc = permutes_mu(f, [&](Elem) { return ProjPoint::infinity(); });
  CHECK_FALSE(esc.is_permutation);
  CHECK(esc.witness->kind == Witness::Kind::escape);

  const PermVerdict out = permutes_mu(f, [&](Elem x) { return ProjPoint::finite(f.mul(x, f.generator())); });
  CHECK_FALSE(out.is_permutation);
  CHECK(out.witness->kind == Witness::Kind::escape);
}

TEST_CASE("permutes_mu(g_0) only sees r modulo q+1") {
  for (auto [p, k] : std::vector<std::pair<std::uint32_t, unsigned>>{{2, 2}, {5, 1}, {3, 2}}) {
    const Field f = Field::build(p, k);
    const auto q = static_cast<std::int64_t>(f.q());
    std::mt19937_64 rng(p + 100 * k);
    for (int i = 0; i < 100; ++i) {
      const Poly b{naive::random_elem(f, rng), naive::random_elem(f, rng), naive::random_nonzero(f, rng)};
      std::uniform_int_distribution<std::int64_t> rd(0, 3 * (q + 1));
      const auto r = rd(rng);
      CHECK(permutes_mu(f, g0_point_map(f, r, b)).is_permutation ==
            permutes_mu(f, g0_point_map(f, r + q + 1, b)).is_permutation);
    }
  }
}

TEST_CASE("compose_f matches f_poly") {
  const Field f = Field::build(3, 1);
  const Poly b{f.generator(), f.zero(), f.one()};
  const SparsePoly s = compose_f(f, 2, b);
  CHECK(s == SparsePoly{Term{2, f.generator()}, Term{6, f.one()}});
}

TEST_CASE("lemma validators: examples") {
  const Field f = Field::build(2, 1);
  const auto [w, w2] = f.f4_pair();
  SUBCASE("mu: q = 2, alpha = w, beta = 1 gives {0, 1, infinity}") {
    CHECK(validate_lemma_mu(f, w, f.one()));
    const Mobius m = Mobius::make(f, w, f.mul(f.one(), f.frob(w)), f.one(), f.one());
    std::set<std::pair<bool, std::uint32_t>> image;
    for (Elem x : f.enum_mu()) {
      const ProjPoint y = mobius_eval(f, m, ProjPoint::finite(x));
      image.emplace(y.infinite, y.value.code);
    }
    CHECK(image == std::set<std::pair<bool, std::uint32_t>>{{false, 0}, {false, 1}, {true, 0}});
    CHECK_THROWS_AS(validate_lemma_mu(f, f.one(), f.one()), FieldError);
    CHECK_THROWS_AS(validate_lemma_mu(f, w, f.zero()), FieldError);
    (void)w2;
  }
  SUBCASE("deg1mu") {
    const Field g = Field::build(3, 1);
    for (Elem a : naive::all_elems(g))
      for (Elem b : naive::all_elems(g)) {
        if (a.is_zero() && b.is_zero()) continue;
        CHECK(validate_lemma_deg1mu(g, a, b));
      }
  }
  SUBCASE("old, lemx, scr on the q = 32 counterexample") {
    const Field g = Field::build(2, 5);
    const auto [u, v] = g.f4_pair();
    const FamilyParams p{Family::thm1, 44, 11, u, v, g.one(), g.one()};
    const Poly b = b_poly(g, p);
    CHECK(validate_lemma_old(g, p.r, b));
    CHECK(validate_lemma_lemx(g, p.r, b));
    CHECK(validate_lemma_scr(g, b, static_cast<int>(p.n)));
    CHECK_THROWS(validate_lemma_scr(g, b, 1));
  }
  SUBCASE("deg") {
    const Field g = Field::build(5, 1);
    const RationalMap x3 = RationalMap::build(g, Poly::monomial(g, g.one(), 3), Poly{g.one()});
    const Mobius eta = Mobius::make(g, g.one(), g.generator(), g.one(), g.zero());
    const Mobius rho = Mobius::make(g, g.generator(), g.one(), g.zero(), g.one());
    CHECK(validate_lemma_deg(g, x3, eta, rho));
    CHECK_THROWS(validate_lemma_deg(g, RationalMap::build(g, Poly{g.one()}, Poly{g.one()}), eta, rho));
  }
}

TEST_CASE("lemma validators hold exhaustively on F_4 with quadratic B") {
  const Field f = Field::build(2, 1);
  for (Elem c0 : naive::all_elems(f))
    for (Elem c1 : naive::all_elems(f))
      for (Elem c2 : naive::all_elems(f)) {
        const Poly b{c0, c1, c2};
        if (b.is_zero()) continue;
        for (std::int64_t r = 1; r <= 6; ++r) {
          CHECK(validate_lemma_old(f, r, b));
          CHECK(validate_lemma_lemx(f, r, b));
          if (r >= b.degree()) CHECK(validate_lemma_scr(f, b, static_cast<int>(r)));
        }
      }
}

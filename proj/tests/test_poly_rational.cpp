#include <doctest.h>

#include <set>

#include "naive.hpp"
#include "permfam/mobius.hpp"
#include "permfam/poly.hpp"
#include "permfam/rational.hpp"

using namespace permfam;

namespace {

std::vector<ProjPoint> projective_line(const Field& f) {
  std::vector<ProjPoint> out{ProjPoint::infinity()};
  for (Elem x : naive::all_elems(f)) out.push_back(ProjPoint::finite(x));
  return out;
}

Mobius random_mobius(const Field& f, std::mt19937_64& rng) {
  while (true) {
    const Elem a = naive::random_elem(f, rng), b = naive::random_elem(f, rng),
               c = naive::random_elem(f, rng), d = naive::random_elem(f, rng);
    if (f.mul(a, d) != f.mul(b, c)) return Mobius::make(f, a, b, c, d);
  }
}

Poly random_poly(const Field& f, std::mt19937_64& rng, int max_deg) {
  std::uniform_int_distribution<int> deg(0, max_deg);
  std::vector<Elem> c(static_cast<std::size_t>(deg(rng)) + 1);
  for (auto& e : c) e = naive::random_elem(f, rng);
  return Poly(std::move(c));
}

}  // namespace

TEST_CASE("poly_eval") {
  const Field f4 = Field::build(2, 1);
  const Elem w{2};
  CHECK(poly_eval(f4, Poly{}, w) == f4.zero());
  const Field f9 = Field::build(3, 1);
  for (Elem u : naive::all_elems(f9)) {
    CHECK(poly_eval(f9, Poly{u, f9.one()}, f9.neg(u)) == f9.zero());
  }
  // (X+1)^2 = X^2 + 1 in characteristic 2; at w this is w^2 + 1 = w.
  const Poly sq = poly_mul(f4, Poly{f4.one(), f4.one()}, Poly{f4.one(), f4.one()});
  CHECK(sq == Poly{f4.one(), f4.zero(), f4.one()});
  CHECK(poly_eval(f4, sq, w) == w);
}

TEST_CASE("poly arithmetic: divmod, gcd, pow") {
  const Field f = Field::build(5, 1);
  std::mt19937_64 rng(11);
  for (int i = 0; i < 200; ++i) {
    const Poly a = random_poly(f, rng, 7);
    Poly b = random_poly(f, rng, 4);
    if (b.is_zero()) continue;
    const auto [quo, rem] = poly_divmod(f, a, b);
    CHECK(rem.degree() < b.degree());
    CHECK(poly_add(f, poly_mul(f, quo, b), rem) == a);

    const Poly c = random_poly(f, rng, 3);
    const Poly g = poly_gcd(f, poly_mul(f, a, c), poly_mul(f, b, c));
    if (!c.is_zero() && !a.is_zero()) {
      CHECK(g.lead() == f.one());
      CHECK(poly_divmod(f, g, poly_monic(f, c)).second.is_zero());
    }
  }
  CHECK_THROWS_AS(poly_divmod(f, Poly{f.one()}, Poly{}), FieldError);
  const Poly lin{f.from_int(2), f.one()};
  CHECK(poly_pow(f, lin, 3) == poly_mul(f, lin, poly_mul(f, lin, lin)));
  CHECK(poly_pow(f, lin, 0) == Poly::constant(f.one()));
}

TEST_CASE("frob_poly") {
  const Field f = Field::build(2, 2);
  std::mt19937_64 rng(3);
  const Poly fq{f.one(), f.zero(), f.one()};
  CHECK(frob_poly(f, fq) == fq);
  for (int i = 0; i < 100; ++i) {
    const Poly b = random_poly(f, rng, 5);
    const Elem x = naive::random_elem(f, rng);
    CHECK(frob_poly(f, frob_poly(f, b)) == b);
    CHECK(frob_poly(f, b).degree() == b.degree());
    CHECK(poly_eval(f, frob_poly(f, b), f.frob(x)) == f.frob(poly_eval(f, b, x)));
  }
}

TEST_CASE("reversal_num") {
  const Field f = Field::build(3, 1);
  const Elem v = f.generator();
  // B = X + v, n = 1: N = v^q X + 1.
  CHECK(reversal_num(f, Poly{v, f.one()}, 1) == Poly{f.one(), f.frob(v)});
  CHECK(reversal_num(f, Poly{v}, 0) == Poly{f.frob(v)});
  CHECK_THROWS_AS(reversal_num(f, Poly{v, f.one()}, 0), FieldError);
  // degree n iff b_0 != 0
  CHECK(reversal_num(f, Poly{v, f.one()}, 4).degree() == 4);
  CHECK(reversal_num(f, Poly{f.zero(), f.one()}, 4).degree() == 3);

  // On mu_{q+1}: N(x) = x^n B(x)^q, since 1/x = x^q there.
  std::mt19937_64 rng(5);
  for (auto [p, k] : std::vector<std::pair<std::uint32_t, unsigned>>{
           {2, 1}, {3, 1}, {2, 2}, {5, 1}, {7, 1}, {2, 3}}) {
    const Field g = Field::build(p, k);
    for (int i = 0; i < 50; ++i) {
      const Poly b = random_poly(g, rng, 4);
      if (b.is_zero()) continue;
      const int n = b.degree() + static_cast<int>(rng() % 4);
      const Poly num = reversal_num(g, b, n);
      for (Elem x : g.enum_mu()) {
        const Elem expected = naive::mul(g, naive::pow(g, x, static_cast<std::uint64_t>(n)),
                                         naive::pow(g, poly_eval(g, b, x), g.q()));
        CHECK(poly_eval(g, num, x) == expected);
      }
    }
  }
}

TEST_CASE("sparse_eval matches a naive sum of powers") {
  const Field f = Field::build(3, 1);
  std::mt19937_64 rng(9);
  for (int i = 0; i < 50; ++i) {
    SparsePoly s;
    std::int64_t e = static_cast<std::int64_t>(rng() % 5);
    for (int t = 0; t < 4; ++t) {
      s.push_back(Term{e, naive::random_nonzero(f, rng)});
      e += 1 + static_cast<std::int64_t>(rng() % 6);
    }
    for (Elem x : naive::all_elems(f)) {
      Elem acc = f.zero();
      for (const auto& term : s) {
        acc = naive::add(f, acc, naive::mul(f, term.coeff,
                                            naive::pow(f, x, static_cast<std::uint64_t>(term.exponent))));
      }
      CHECK(sparse_eval(f, s, x) == acc);
    }
  }
}

TEST_CASE("is_degree_one") {
  const Field f = Field::build(3, 1);
  const Elem one = f.one(), zero = f.zero();
  CHECK(is_degree_one(f, one, zero, zero, one));
  CHECK_FALSE(is_degree_one(f, one, one, one, one));
  CHECK_THROWS_AS(is_degree_one(f, one, one, zero, zero), FieldError);
  CHECK_THROWS_AS(Mobius::make(f, one, one, one, one), FieldError);
}

TEST_CASE("mobius_eval: identity, inversion, poles") {
  const Field f = Field::build(3, 1);
  const Mobius id = Mobius::identity(f);
  for (ProjPoint pt : projective_line(f)) CHECK(mobius_eval(f, id, pt) == pt);
  const Mobius inv = Mobius::make(f, f.zero(), f.one(), f.one(), f.zero());
  CHECK(mobius_eval(f, inv, ProjPoint::finite(f.zero())) == ProjPoint::infinity());
  CHECK(mobius_eval(f, inv, ProjPoint::infinity()) == ProjPoint::finite(f.zero()));
  // (alpha X + beta alpha^q)/(X + beta) has its pole at -beta.
  const Elem alpha = f.generator(), beta = f.enum_mu()[1];
  const Mobius m = Mobius::make(f, alpha, f.mul(beta, f.frob(alpha)), f.one(), beta);
  CHECK(mobius_eval(f, m, ProjPoint::finite(f.neg(beta))) == ProjPoint::infinity());
}

TEST_CASE("mobius: bijective on P^1, composition pointwise and associative") {
  for (auto [p, k] : std::vector<std::pair<std::uint32_t, unsigned>>{
           {2, 1}, {3, 1}, {2, 2}, {5, 1}}) {
    const Field f = Field::build(p, k);
    const auto line = projective_line(f);
    std::mt19937_64 rng(p * 31 + k);
    for (int i = 0; i < 40; ++i) {
      const Mobius m1 = random_mobius(f, rng), m2 = random_mobius(f, rng),
                   m3 = random_mobius(f, rng);
      std::set<std::pair<bool, Elem>> image;
      for (ProjPoint pt : line) {
        const ProjPoint y = mobius_eval(f, m1, pt);
        image.emplace(y.infinite, y.value);
        CHECK(mobius_eval(f, mobius_compose(f, m1, m2), pt) ==
              mobius_eval(f, m1, mobius_eval(f, m2, pt)));
        CHECK(mobius_eval(f, mobius_compose(f, mobius_compose(f, m1, m2), m3), pt) ==
              mobius_eval(f, mobius_compose(f, m1, mobius_compose(f, m2, m3)), pt));
      }
      CHECK(image.size() == line.size());
      CHECK(mobius_compose(f, m1, Mobius::identity(f)) == m1);
      CHECK(mobius_equivalent(f, mobius_compose(f, m1, mobius_inverse(f, m1)),
                              Mobius::identity(f)));
      CHECK(mobius_compose(f, m1, m2).det(f) == f.mul(m1.det(f), m2.det(f)));
    }
  }
}

TEST_CASE("rat_build: reduction and degree") {
  const Field f = Field::build(3, 1);
  const Poly xp1{f.one(), f.one()};
  const RationalMap c = RationalMap::build(f, xp1, xp1);
  CHECK(c.degree() == 0);
  CHECK(c.num() == Poly::constant(f.one()));
  const RationalMap x = RationalMap::build(f, Poly::monomial(f, f.one(), 2),
                                           Poly::monomial(f, f.one(), 1));
  CHECK(x.degree() == 1);
  CHECK(x.num() == Poly{f.zero(), f.one()});
  CHECK(x.den() == Poly::constant(f.one()));
  CHECK_THROWS_AS(RationalMap::build(f, xp1, Poly{}), FieldError);
  // den normalized to monic, ratio preserved
  const RationalMap s = RationalMap::build(f, Poly{f.one()}, Poly{f.zero(), f.from_int(2)});
  CHECK(s.den().lead() == f.one());
}

TEST_CASE("rat_eval: finite points, poles, infinity") {
  const Field f = Field::build(5, 1);
  const RationalMap id = RationalMap::build(f, Poly{f.zero(), f.one()}, Poly{f.one()});
  for (Elem x : naive::all_elems(f)) CHECK(rat_eval(f, id, ProjPoint::finite(x)) == ProjPoint::finite(x));
  CHECK(rat_eval(f, id, ProjPoint::infinity()) == ProjPoint::infinity());
  const RationalMap inv = RationalMap::build(f, Poly{f.one()}, Poly{f.zero(), f.one()});
  CHECK(rat_eval(f, inv, ProjPoint::finite(f.zero())) == ProjPoint::infinity());
  CHECK(rat_eval(f, inv, ProjPoint::infinity()) == ProjPoint::finite(f.zero()));

  // Unreduced and reduced agree wherever the unreduced denominator is nonzero.
  std::mt19937_64 rng(17);
  for (int i = 0; i < 100; ++i) {
    const Poly common = random_poly(f, rng, 2);
    const Poly num = poly_mul(f, random_poly(f, rng, 3), common);
    const Poly den = poly_mul(f, random_poly(f, rng, 3), common);
    if (den.is_zero()) continue;
    const RationalMap g = RationalMap::build(f, num, den);
    CHECK(poly_gcd(f, g.num(), g.den()).degree() <= 0);
    for (Elem x : naive::all_elems(f)) {
      const Elem d = poly_eval(f, den, x);
      if (d.is_zero()) continue;
      CHECK(rat_eval(f, g, ProjPoint::finite(x)) ==
            ProjPoint::finite(f.div(poly_eval(f, num, x), d)));
    }
  }
}

TEST_CASE("compose agrees pointwise and preserves degree") {
  for (auto [p, k] : std::vector<std::pair<std::uint32_t, unsigned>>{
           {2, 1}, {3, 1}, {2, 2}, {5, 1}, {7, 1}, {2, 3}, {3, 2}}) {
    const Field f = Field::build(p, k);
    std::mt19937_64 rng(p * 7 + k);
    for (int i = 0; i < 30; ++i) {
      const Poly num = random_poly(f, rng, 6);
      Poly den = random_poly(f, rng, 6);
      if (den.is_zero()) continue;
      const RationalMap g = RationalMap::build(f, num, den);
      if (g.is_constant()) continue;
      const Mobius eta = random_mobius(f, rng), rho = random_mobius(f, rng);
      const RationalMap h = compose(f, eta, g, rho);
      CHECK(h.degree() == g.degree());
      for (ProjPoint pt : projective_line(f)) {
        CHECK(rat_eval(f, h, pt) ==
              mobius_eval(f, eta, rat_eval(f, g, mobius_eval(f, rho, pt))));
      }
    }
  }
}

TEST_CASE("proj_pow") {
  const Field f = Field::build(3, 1);
  CHECK(proj_pow(f, ProjPoint::infinity(), 3) == ProjPoint::infinity());
  CHECK(proj_pow(f, ProjPoint::finite(f.zero()), 3) == ProjPoint::finite(f.zero()));
  CHECK(proj_pow(f, ProjPoint::infinity(), -1) == ProjPoint::finite(f.zero()));
  CHECK(proj_pow(f, ProjPoint::finite(f.zero()), -2) == ProjPoint::infinity());
  CHECK(proj_pow(f, ProjPoint::finite(f.generator()), 2) ==
        ProjPoint::finite(f.mul(f.generator(), f.generator())));
}

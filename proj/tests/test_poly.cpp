#include <doctest.h>

#include "shinv/errors.hpp"
#include "shinv/oracle.hpp"
#include "shinv/poly.hpp"
#include "support.hpp"

using namespace shinv;

namespace {

using Poly = DensePoly<PrimeField>;

const PrimeField F2(2), F5(5), F7(7), F97(97);

Poly P(const PrimeField& f, std::vector<long long> coeffs) {
  std::vector<PrimeField::Element> c;
  for (auto x : coeffs) c.push_back(f.from_integer(x));
  return make_poly(f, std::move(c));
}

bool same(const PrimeField& f, const Poly& a, const Poly& b) { return poly_equal(f, a, b); }

// Every polynomial over f with exactly `degree` (nonzero leading coefficient).
std::vector<Poly> all_of_degree(const PrimeField& f, long degree) {
  std::vector<Poly> out;
  const auto p = static_cast<long long>(f.modulus());
  long long count = 1;
  for (long i = 0; i <= degree; ++i) count *= p;
  for (long long code = 0; code < count; ++code) {
    std::vector<long long> c;
    long long x = code;
    for (long i = 0; i <= degree; ++i) {
      c.push_back(x % p);
      x /= p;
    }
    if (c.back() == 0) continue;
    out.push_back(P(f, c));
  }
  return out;
}

}  // namespace

TEST_CASE("field arithmetic and parsing") {
  CHECK(PrimeField::parse("F5").modulus() == 5);
  CHECK(PrimeField::parse("GF(97)").modulus() == 97);
  CHECK(PrimeField::parse("7").modulus() == 7);
  CHECK_THROWS_AS(PrimeField(6), ContractViolation);
  CHECK_THROWS_AS(PrimeField::parse("Fx"), std::invalid_argument);
  CHECK(F7.mul(3, 5) == 1);
  CHECK(F7.inv(3) == 5);
  CHECK_THROWS_AS(F7.inv(0), DivisionByZero);
  CHECK(F7.from_integer(-1) == 6);
  const PrimeField big((std::uint64_t{1} << 61) - 1);
  CHECK(big.mul(big.inv(123456789), 123456789) == 1);
}

TEST_CASE("field axioms hold at test scale") {
  std::mt19937_64 rng(31);
  for (const auto& f : {F2, F5, F97}) {
    for (int i = 0; i < 500; ++i) {
      const auto a = rng() % f.modulus(), b = rng() % f.modulus(), c = rng() % f.modulus();
      CHECK(f.mul(f.mul(a, b), c) == f.mul(a, f.mul(b, c)));
      CHECK(f.mul(a, f.add(b, c)) == f.add(f.mul(a, b), f.mul(a, c)));
      CHECK(f.add(a, f.neg(a)) == 0);
      if (a != 0) CHECK(f.mul(a, f.inv(a)) == 1);
    }
  }
}

TEST_CASE("pshift multiplies by a power of x") {
  const auto p = P(F7, {1, 1, 1});
  CHECK(same(F7, pshift(F7, p, 1), P(F7, {0, 1, 1, 1})));
  CHECK(same(F7, pshift(F7, p, -1), P(F7, {1, 1})));
  CHECK(pshift(F7, p, -3).is_zero());
  CHECK(pshift(F7, Poly{}, 4).is_zero());
}

TEST_CASE("polynomial text format") {
  auto [field, p] = parse_poly_with_field("1,2,0,1 @ F5");
  CHECK(field.modulus() == 5);
  CHECK(format_poly(field, p) == "1,2,0,1");
  CHECK(format_poly(F5, parse_poly(F5, "0,0")) == "0");
  CHECK(format_poly(F5, parse_poly(F5, "-1, 7")) == "4,2");
  CHECK_THROWS_AS(parse_poly(F5, "1,,2"), std::invalid_argument);
  CHECK_THROWS_AS(parse_poly(F5, "1,x"), std::invalid_argument);
  CHECK_THROWS_AS(parse_poly_with_field("1,2"), std::invalid_argument);
}

TEST_CASE("karatsuba polynomial product matches schoolbook") {
  std::mt19937_64 rng(32);
  for (int i = 0; i < 60; ++i) {
    const auto a = testing::random_poly(rng, F97, static_cast<long>(rng() % 200));
    const auto b = testing::random_poly(rng, F97, static_cast<long>(rng() % 200));
    const auto school = pmul(F97, a, b, 0);
    CHECK(same(F97, pmul(F97, a, b, 2), school));
    CHECK(same(F97, pmul(F97, a, b, 16), school));
    const std::size_t n = rng() % 420;
    auto low = school;
    if (low.coeffs.size() > n) low.coeffs.resize(n);
    trim(F97, low);
    CHECK(same(F97, pmul_low(F97, a, b, n, 0), low));
    CHECK(same(F97, pmul_low(F97, a, b, n, 4), low));
  }
}

TEST_CASE("pshinv examples") {
  CHECK(same(F7, pshinv(F7, P(F7, {1, 1}), 3), P(F7, {1, 6, 1})));
  CHECK(same(F7, pshinv(F7, P(F7, {0, 0, 1}), 4), P(F7, {0, 0, 1})));
  CHECK(same(F7, pshinv(F7, P(F7, {2, 3, 4}), 2), P(F7, {2})));
  CHECK(pshinv(F7, P(F7, {2, 3, 4}), 1).is_zero());
  CHECK_THROWS_AS(pshinv(F7, Poly{}, 3), DivisionByZero);
}

TEST_CASE("pdivmod examples") {
  auto [q, r] = pdivmod(F5, P(F5, {1, 2, 0, 1}), P(F5, {1, 1}));
  CHECK(same(F5, q, P(F5, {3, 4, 1})));
  CHECK(same(F5, r, P(F5, {3})));
  const auto v = P(F5, {2, 0, 3, 1});
  auto [q1, r1] = pdivmod(F5, v, v);
  CHECK(same(F5, q1, P(F5, {1})));
  CHECK(r1.is_zero());
  auto [q0, r0] = pdivmod(F5, P(F5, {1}), P(F5, {1, 1}));
  CHECK(q0.is_zero());
  CHECK(same(F5, r0, P(F5, {1})));
  CHECK_THROWS_AS(pdivmod(F5, v, Poly{}), DivisionByZero);
}

TEST_CASE("ppow_diff examples") {
  const auto v = P(F7, {1, 1});
  const auto w = P(F7, {1, 6, 1});
  CHECK(same(F7, ppow_diff(F7, v, w, 3), P(F7, {6})));
  CHECK(same(F7, ppow_diff(F7, v, w, 3, 3), P(F7, {6})));
  CHECK(ppow_diff(F7, P(F7, {0, 1}), P(F7, {0, 0, 1}), 3).is_zero());
  CHECK(same(F7, ppow_diff(F7, v, Poly{}, 3), P(F7, {0, 0, 0, 1})));
}

TEST_CASE("pdivmod matches long division exhaustively for small degrees") {
  for (const auto& f : {F2, F5}) {
    const long max_deg = f.modulus() == 2 ? 8 : 4;
    std::vector<Poly> divisors;
    for (long d = 0; d <= std::min(max_deg, 3L); ++d)
      for (auto& p : all_of_degree(f, d)) divisors.push_back(p);
    long mismatches = 0, cases = 0;
    for (long du = 0; du <= max_deg; ++du)
      for (const auto& u : all_of_degree(f, du))
        for (const auto& v : divisors) {
          if (v.degree() > u.degree()) continue;
          auto [q, r] = pdivmod(f, u, v);
          auto [oq, orr] = oracle::poly_longdiv(f, u, v);
          ++cases;
          if (!same(f, q, oq) || !same(f, r, orr)) ++mismatches;
        }
    CHECK(cases > 1000);
    CHECK(mismatches == 0);
  }
}

TEST_CASE("pdivmod reconstructs random large inputs") {
  std::mt19937_64 rng(33);
  for (int i = 0; i < 40; ++i) {
    const auto u = testing::random_poly(rng, F97, static_cast<long>(rng() % 513));
    const auto v = testing::random_poly(rng, F97, static_cast<long>(rng() % (u.degree() + 1)));
    for (auto variant : kAllVariants) {
      auto [q, r] = pdivmod(F97, u, v, variant);
      CHECK(r.degree() < v.degree());
      CHECK(same(F97, padd(F97, pmul(F97, q, v), r), u));
    }
  }
}

TEST_CASE("polynomial iterates double their correct coefficients exactly") {
  std::mt19937_64 rng(34);
  for (int i = 0; i < 30; ++i) {
    const auto v = testing::random_poly(rng, F97, 1 + static_cast<long>(rng() % 40));
    const long n = v.degree() + 2 + static_cast<long>(rng() % 300);
    RefineStats stats;
    const auto w = pshinv(F97, v, n, RefineVariant::refine2, &stats);
    CHECK(same(F97, w, oracle::poly_longdiv(F97, monomial(F97, n), v).first));
    REQUIRE(stats.ell_trace.size() >= 2);
    for (std::size_t s = 1; s + 1 < stats.ell_trace.size(); ++s)
      CHECK(stats.ell_trace[s] == 2 * stats.ell_trace[s - 1]);
    CHECK(stats.ell_trace.back() >= n - v.degree() + 1);
  }
}

TEST_CASE("short polynomial iterates are leading quotient coefficients") {
  // After each step the iterate equals x^(k + scale) quo v for its own scale.
  std::mt19937_64 rng(35);
  PolyDomain<PrimeField> dom(F97);
  for (int i = 0; i < 20; ++i) {
    const auto v = testing::random_poly(rng, F97, 1 + static_cast<long>(rng() % 30));
    const long k = v.degree();
    auto st = dom.initial_state(v, k + 64);
    RefineStats stats;
    auto w = st.w;
    long scale = st.scale;
    long ell = st.ell;
    CHECK(same(F97, w, oracle::poly_longdiv(F97, monomial(F97, k + scale), v).first));
    for (int step_no = 0; step_no < 5; ++step_no) {
      const long next = 2 * ell - 1;
      w = generic_step(dom, k + next, v, w, next - scale, ell, stats);
      scale = next;
      ell *= 2;
      CHECK(same(F97, w, oracle::poly_longdiv(F97, monomial(F97, k + scale), v).first));
    }
  }
}

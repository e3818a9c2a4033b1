#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <random>

#include "shinv/dynamics.hpp"

using namespace shinv::dynamics;

namespace {

std::vector<mpz_class> Z(std::initializer_list<long> xs) {
  std::vector<mpz_class> out;
  for (long x : xs) out.emplace_back(x);
  return out;
}

bool contains(const std::vector<mpz_class>& xs, const mpz_class& x) {
  return std::find(xs.begin(), xs.end(), x) != xs.end();
}

}  // namespace

TEST_CASE("s_z_map examples") {
  CHECK(s_z_map(100, 7, 10) == 13);
  CHECK(s_z_map(100, 7, 0) == 0);
  CHECK(s_z_map(10, 3, 3) == 3);
  CHECK(s_z_map(100, 7, 29) < 0);
}

TEST_CASE("s_r_iterate examples") {
  const mpq_class x(5, 3);
  CHECK(s_r_iterate(x, 100, 7, 0) == x);
  CHECK(s_r_iterate(mpq_class(100, 7), 100, 7, 5) == mpq_class(100, 7));
  CHECK(s_r_iterate(1, 4, 2, 1) == mpq_class(3, 2));
  CHECK(s_r_iterate_direct(1, 4, 2, 1) == mpq_class(3, 2));
}

TEST_CASE("closed form equals repeated application") {
  std::mt19937_64 rng(51);
  for (int t = 0; t < 300; ++t) {
    const mpz_class v = 2 + static_cast<long>(rng() % 50);
    const mpz_class u = v + 1 + static_cast<long>(rng() % 500);
    mpq_class x(static_cast<long>(rng() % 2000) - 500, 1 + static_cast<long>(rng() % 97));
    x.canonicalize();
    const unsigned i = static_cast<unsigned>(rng() % 7);
    CHECK(s_r_iterate(x, u, v, i) == s_r_iterate_direct(x, u, v, i));
  }
}

TEST_CASE("fixed point examples") {
  CHECK(fixed_points(10, 3) == Z({0, 1, 2, 3}));
  CHECK(fixed_points(10, 4) == Z({0, 1, 2}));
  CHECK(fixed_points(100, 9) == Z({0, 1, 11}));
  CHECK(is_floor_minus_one_fixed(mpz_class(10), mpz_class(3)));
  CHECK_FALSE(is_floor_minus_one_fixed(mpz_class(100), mpz_class(9)));
  for (long j = 4; j < 40; ++j) CHECK(is_floor_minus_one_fixed(mpz_class(7 * j), mpz_class(7)));
}

TEST_CASE("fixed point set law") {
  long violations = 0;
  for (long u = 3; u <= 1000; ++u)
    for (long v = 2; v < u; ++v) {
      const mpz_class U(u), V(v);
      const auto found = fixed_points(U, V);
      const bool direct = contains(found, mpz_class(u / v - 1));
      if (found != predicted_fixed_points(U, V)) ++violations;
      if (direct != is_floor_minus_one_fixed(U, V)) ++violations;
      if (direct != is_floor_minus_one_fixed(std::int64_t{u}, std::int64_t{v})) ++violations;
    }
  CHECK(violations == 0);
}

TEST_CASE("large operands use the exact predicate") {
  const mpz_class v("1000000000000000000000");
  CHECK(is_floor_minus_one_fixed(mpz_class(5 * v), v));
  CHECK_FALSE(is_floor_minus_one_fixed(mpz_class(5 * v + v / 2), v));
  // v / 3 rounds down, so 5 + (v / 3) / v is still below 5 + 1/3.
  CHECK(is_floor_minus_one_fixed(mpz_class(5 * v + v / 3), v));
  CHECK_FALSE(is_floor_minus_one_fixed(mpz_class(5 * v + v / 3 + 1), v));
  CHECK(s_z_map(mpz_class(5 * v + v / 3), v, 4) == 4);
  CHECK(s_z_map(mpz_class(5 * v + v / 3 + 1), v, 4) != 4);
}

TEST_CASE("census examples") {
  CHECK(census_floor_minus_one(10) == 8);
  CHECK(census_floor_minus_one(100) == 85);
  CHECK(census_floor_minus_one(1000) == 818);
  CHECK(census_floor_minus_one(1000, 4) == 818);
  CHECK(census_estimate(10) == 8);
  CHECK(census_estimate(1000) == 811);
  CHECK(census_estimate(10000) == 8116);
}

TEST_CASE("census relative errors are close to the published column") {
  const std::vector<std::pair<std::int64_t, double>> rows{{100, 4.706e-2}, {1000, 8.557e-3}, {10000, 2.336e-3}};
  for (auto [u, published] : rows) {
    const auto row = census_row(u, 2);
    CHECK(row.rel_err >= published / 2);
    CHECK(row.rel_err <= published * 2);
  }
}

TEST_CASE("census CSV layout") {
  CHECK(census_csv_header() == "u, actual, estimate, abs_err, rel_err");
  CHECK(format_census_csv_row(census_row(1000)) == "1000, 818, 811, 7, 8.557e-3");
  CHECK(format_sci(0.04706) == "4.706e-2");
  CHECK(format_sci(0) == "0");
}

TEST_CASE("trace examples") {
  auto a = steps_to_converge(100, 7, 14);
  CHECK(a.outcome == Outcome::fixed_point);
  CHECK(a.steps() == 0);
  CHECK(*a.limit == 14);

  auto b = steps_to_converge(100, 7, 11);
  CHECK(b.outcome == Outcome::fixed_point);
  CHECK(b.steps() == 2);
  CHECK(b.steps() <= ceil_log2_log2(100, 7));
  CHECK(format_trace(b) == "11 → 13 → 14 (fixed)");

  auto c = steps_to_converge(100, 7, 29);
  CHECK(c.outcome == Outcome::diverged);
  CHECK(format_trace(steps_to_converge(100, 7, 0)) == "0 (fixed)");

  auto d = steps_to_converge(100, 7, 11, 1);
  CHECK(d.outcome == Outcome::budget_exceeded);
  CHECK(d.steps() == 1);
}

TEST_CASE("trace iterates follow the map") {
  for (long w0 = 0; w0 < 40; ++w0) {
    const auto t = steps_to_converge(1000, 37, w0);
    REQUIRE(!t.iterates.empty());
    CHECK(t.iterates.front() == w0);
    for (std::size_t i = 0; i + 1 < t.iterates.size(); ++i) CHECK(t.iterates[i + 1] == s_z_map(1000, 37, t.iterates[i]));
    if (t.outcome == Outcome::fixed_point) CHECK(s_z_map(1000, 37, *t.limit) == *t.limit);
  }
}

TEST_CASE("budget helpers") {
  CHECK(ceil_log2_log2(100, 7) == 2);
  CHECK(ceil_log2_log2(4, 1) == 1);
  CHECK(ceil_log2_log2(5, 1) == 2);
  CHECK(ceil_log2_log2(16, 1) == 2);
  CHECK(ceil_log2_log2(17, 1) == 3);
  CHECK(default_budget(100, 7) == 18);
  CHECK(default_budget(10, 9) == 14);
}

TEST_CASE("convergence dichotomy") {
  long violations = 0;
  for (long u = 3; u <= 150; ++u)
    for (long v = 2; v < u; ++v) {
      const long q = u / v, top = 2 * u / v;
      for (long w0 = 0; w0 <= top + 5; ++w0) {
        const auto t = steps_to_converge(u, v, w0);
        const bool converged = t.outcome == Outcome::fixed_point;
        if (converged != (w0 <= top)) ++violations;
        if (t.outcome == Outcome::budget_exceeded) ++violations;
        if (!converged) continue;
        const long x = t.limit->get_si();
        if (x != 0 && x != 1 && x != q - 1 && x != q) ++violations;
        if (w0 >= 2 && w0 <= q && x != q - 1 && x != q) ++violations;
      }
    }
  CHECK(violations == 0);
}

TEST_CASE("fast convergence from the quarter band") {
  long violations = 0, checked = 0;
  for (long u = 4; u <= 1000; ++u)
    for (long v = 2; 2 * v <= u; ++v) {
      const long lo = (3 * u + 4 * v - 1) / (4 * v), hi = (5 * u) / (4 * v);
      const unsigned bound = ceil_log2_log2(u, v);
      for (long w0 = lo; w0 <= hi; ++w0) {
        ++checked;
        const auto t = steps_to_converge(u, v, w0);
        if (t.outcome != Outcome::fixed_point || t.steps() > bound) ++violations;
        else if (*t.limit != u / v && *t.limit != u / v - 1) ++violations;
      }
    }
  CHECK(checked > 10000);
  CHECK(violations == 0);
}

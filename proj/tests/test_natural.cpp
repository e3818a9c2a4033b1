#include <doctest.h>

#include "gmp_bridge.hpp"
#include "shinv/errors.hpp"
#include "shinv/multiply.hpp"
#include "shinv/natural.hpp"
#include "shinv/oracle.hpp"
#include "support.hpp"

using namespace shinv;
using testing::to_mpz;

namespace {

const Radix kTen(10);
const Radix kTwo(2);

Natural dec(std::uint64_t x) { return Natural(x, kTen); }

}  // namespace

TEST_CASE("radix accepts small bases and powers of two up to 2^32") {
  CHECK(Radix(2).base() == 2);
  CHECK(Radix(65536).base() == 65536);
  CHECK(Radix(std::uint64_t{1} << 32).is_power_of_two());
  CHECK(Radix(std::uint64_t{1} << 20).bits() == 20);
  CHECK_THROWS_AS(Radix(1), ContractViolation);
  CHECK_THROWS_AS(Radix(65537), ContractViolation);
  CHECK_THROWS_AS(Radix((std::uint64_t{1} << 32) + 2), ContractViolation);
}

TEST_CASE("prec counts digits") {
  CHECK(prec(dec(345)) == 3);
  CHECK(prec(dec(0)) == 0);
  CHECK(prec(Natural(8, kTwo)) == 4);
  CHECK(prec(Natural(0xffffffffull)) == 1);
  CHECK(prec(Natural(0x100000000ull)) == 2);
}

TEST_CASE("whole shift appends or drops digits") {
  CHECK(shift(dec(345), 2) == dec(34500));
  CHECK(shift(dec(345), -1) == dec(34));
  CHECK(shift(dec(345), -5) == dec(0));
  CHECK(shift(dec(345), -3) == dec(0));
  CHECK(shift(dec(345), 0) == dec(345));
  CHECK(shift(dec(0), 4) == dec(0));
}

TEST_CASE("add, sub and cmp") {
  CHECK(add(dec(999), dec(1)) == dec(1000));
  CHECK(sub(dec(1000), dec(1)) == dec(999));
  CHECK(cmp(dec(45), dec(45)) == std::strong_ordering::equal);
  CHECK(cmp(dec(44), dec(45)) == std::strong_ordering::less);
  CHECK(cmp(dec(1000), dec(999)) == std::strong_ordering::greater);
  CHECK_THROWS_AS(sub(dec(1), dec(2)), ContractViolation);
  CHECK_THROWS_AS(add(dec(1), Natural(1, Radix(16))), ContractViolation);
}

TEST_CASE("from_digits validates and trims") {
  CHECK(Natural::from_digits(10, {5, 4, 3, 0, 0}) == dec(345));
  CHECK(Natural::from_digits(10, {}).is_zero());
  CHECK_THROWS_AS(Natural::from_digits(10, {10}), ContractViolation);
}

TEST_CASE("parse and print decimal and hex") {
  const auto big = Natural::parse("123456789012345678901234567890");
  CHECK(big.to_string() == "123456789012345678901234567890");
  CHECK(Natural::parse("0xdeadbeefcafebabe1234").to_hex() == "0xdeadbeefcafebabe1234");
  CHECK(Natural::parse("0x10", kTen) == dec(16));
  CHECK(Natural::parse("  42 ", kTen) == dec(42));
  CHECK(Natural::parse("0").is_zero());
  CHECK(Natural().to_string() == "0");
  CHECK(Natural().to_hex() == "0x0");
  CHECK_THROWS_AS(Natural::parse("12a"), std::invalid_argument);
  CHECK_THROWS_AS(Natural::parse(""), std::invalid_argument);
  CHECK_THROWS_AS(Natural::parse("0xfg"), std::invalid_argument);
}

TEST_CASE("to_u64 reports overflow") {
  CHECK(dec(1234567).to_u64() == 1234567u);
  CHECK_FALSE(Natural::parse("18446744073709551616").to_u64().has_value());
  CHECK(Natural::parse("18446744073709551615").to_u64() == UINT64_MAX);
}

TEST_CASE("power_of_base, low_digits and single-word helpers") {
  CHECK(power_of_base(kTen, 3) == dec(1000));
  CHECK(is_power_of_base(dec(1000)));
  CHECK(is_power_of_base(dec(1)));
  CHECK_FALSE(is_power_of_base(dec(1001)));
  CHECK_FALSE(is_power_of_base(dec(0)));
  CHECK(low_digits(dec(123456), 2) == dec(56));
  CHECK(low_digits(dec(123456), 10) == dec(123456));
  auto [q, r] = divmod_small(dec(1000000), 7);
  CHECK(q == dec(142857));
  CHECK(r == 1);
  CHECK(mul_small(dec(142857), 7) == dec(999999));
}

TEST_CASE("rebase keeps the value") {
  const auto x = Natural::parse("98765432109876543210");
  for (std::uint64_t b : {2ull, 3ull, 10ull, 16ull, 27ull, 65536ull}) {
    auto y = rebase(x, Radix(b));
    CHECK(y.base() == b);
    CHECK(to_mpz(y) == to_mpz(x));
    CHECK(rebase(y, Radix{}) == x);
  }
}

TEST_CASE("signed difference") {
  CHECK(signed_difference(dec(10), dec(3)).to_string() == "7");
  CHECK(signed_difference(dec(3), dec(10)).to_string() == "-7");
  CHECK_FALSE(signed_difference(dec(3), dec(3)).negative);
}

TEST_CASE("mult and mult_mod examples") {
  for (auto backend : {MultBackend::schoolbook(), MultBackend::karatsuba()}) {
    CHECK(mult(dec(123), dec(456), backend) == dec(56088));
    CHECK(mult(dec(123), dec(0), backend).is_zero());
    CHECK(mult(dec(123), dec(1), backend) == dec(123));
    CHECK(mult_mod(dec(123), dec(456), 2, backend) == dec(88));
    CHECK(mult_mod(dec(123), dec(456), 0, backend).is_zero());
    CHECK(mult_mod(dec(12), dec(34), 5, backend) == dec(408));
  }
}

TEST_CASE("digit round trip") {
  std::mt19937_64 rng(11);
  for (std::uint64_t b : std::initializer_list<std::uint64_t>{2, 10, 255, std::uint64_t{1} << 32}) {
    const Radix radix(b);
    for (int i = 0; i < 200; ++i) {
      auto u = testing::random_natural(rng, 1 + rng() % 30, radix);
      std::vector<Digit> digits(u.digits().begin(), u.digits().end());
      CHECK(Natural::from_digits(radix, digits) == u);
      CHECK(Natural::parse(u.to_string(), radix) == u);
      CHECK(Natural::parse(u.to_hex(), radix) == u);
    }
  }
}

TEST_CASE("karatsuba agrees with schoolbook on small values") {
  std::mt19937_64 rng(5);
  for (int i = 0; i < 10000; ++i) {
    const auto a = rng() % 1000001, b = rng() % 1000001;
    const Radix radix = (i % 2) ? kTen : Radix{};
    const Natural u(a, radix), v(b, radix);
    const auto school = mult(u, v, MultBackend::schoolbook());
    REQUIRE(mult(u, v, MultBackend::karatsuba(2)) == school);
    REQUIRE(school.to_u64() == a * b);
  }
}

TEST_CASE("karatsuba agrees with schoolbook and an independent product on large operands") {
  std::mt19937_64 rng(6);
  for (std::uint64_t b : std::initializer_list<std::uint64_t>{10, 16, 1000, 65536, std::uint64_t{1} << 32}) {
    const Radix radix(b);
    for (int i = 0; i < 40; ++i) {
      auto u = testing::random_edgy_natural(rng, 300, radix);
      auto v = testing::random_edgy_natural(rng, 300, radix);
      const auto school = mult(u, v, MultBackend::schoolbook());
      CHECK(mult(u, v, MultBackend::karatsuba(4)) == school);
      CHECK(mult(u, v, MultBackend::karatsuba(32)) == school);
      CHECK(to_mpz(school) == to_mpz(u) * to_mpz(v));
    }
  }
}

TEST_CASE("mult_mod equals the low digits of the full product") {
  std::mt19937_64 rng(7);
  for (std::uint64_t b : std::initializer_list<std::uint64_t>{10, std::uint64_t{1} << 32}) {
    const Radix radix(b);
    for (int i = 0; i < 300; ++i) {
      auto u = testing::random_edgy_natural(rng, 80, radix);
      auto v = testing::random_edgy_natural(rng, 80, radix);
      const std::size_t e = rng() % 170;
      const auto full = mult(u, v);
      CHECK(mult_mod(u, v, e, MultBackend::schoolbook()) == low_digits(full, e));
      CHECK(mult_mod(u, v, e, MultBackend::karatsuba(4)) == low_digits(full, e));
    }
  }
}

TEST_CASE("shift round trip and truncation against long division") {
  std::mt19937_64 rng(8);
  for (int i = 0; i < 300; ++i) {
    auto u = testing::random_natural(rng, 1 + rng() % 20, kTen);
    const long n = static_cast<long>(rng() % 25);
    CHECK(shift(shift(u, n), -n) == u);
    CHECK(shift(u, -n) == oracle::school_divmod(u, power_of_base(kTen, n)).first);
  }
}

TEST_CASE("add and sub are inverse") {
  std::mt19937_64 rng(9);
  for (std::uint64_t b : std::initializer_list<std::uint64_t>{3, 10, std::uint64_t{1} << 32}) {
    const Radix radix(b);
    for (int i = 0; i < 300; ++i) {
      auto u = testing::random_edgy_natural(rng, 40, radix);
      auto v = testing::random_edgy_natural(rng, 40, radix);
      CHECK(sub(add(u, v), v) == u);
      CHECK(to_mpz(add(u, v)) == to_mpz(u) + to_mpz(v));
    }
  }
}

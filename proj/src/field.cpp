#include "shinv/field.hpp"

#include <cctype>
#include <stdexcept>

namespace shinv {

namespace {

std::uint64_t pow_mod(std::uint64_t b, std::uint64_t e, std::uint64_t m) {
  unsigned __int128 result = 1;
  unsigned __int128 base = b % m;
  while (e != 0) {
    if (e & 1) result = result * base % m;
    base = base * base % m;
    e >>= 1;
  }
  return static_cast<std::uint64_t>(result);
}

// Deterministic Miller-Rabin for 64-bit inputs.
bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    if (n % p == 0) return n == p;
  }
  std::uint64_t d = n - 1;
  int r = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++r;
  }
  for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    std::uint64_t x = pow_mod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int i = 1; i < r; ++i) {
      x = static_cast<std::uint64_t>(static_cast<unsigned __int128>(x) * x % n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

}  // namespace

PrimeField::PrimeField(std::uint64_t p) : p_(p) {
  if (p >= (std::uint64_t{1} << 61) || !is_prime(p)) {
    throw ContractViolation("field modulus must be a prime below 2^61");
  }
}

PrimeField PrimeField::parse(std::string_view name) {
  std::string digits;
  for (char c : name) {
    if (std::isdigit(static_cast<unsigned char>(c))) digits += c;
  }
  if (digits.empty()) throw std::invalid_argument("field name needs a modulus, e.g. F5");
  return PrimeField(std::stoull(digits));
}

std::optional<PrimeField::Element> PrimeField::inverse(Element a) const noexcept {
  if (a % p_ == 0) return std::nullopt;
  return pow_mod(a, p_ - 2, p_);
}

PrimeField::Element PrimeField::inv(Element a) const {
  auto r = inverse(a);
  if (!r) throw DivisionByZero("inverse of zero in " + name());
  return *r;
}

}  // namespace shinv

#include "shinv/natural.hpp"

#include <algorithm>
#include <bit>
#include <cctype>

#include "kernels.hpp"
#include "shinv/errors.hpp"

namespace shinv {

namespace {

void require_same_radix(const Natural& a, const Natural& b) {
  if (!(a.radix() == b.radix())) {
    throw ContractViolation("operands use different bases");
  }
}

int hex_value(char c) {
  if (c >= '0' && c <= '9') return c - '0';
  if (c >= 'a' && c <= 'f') return c - 'a' + 10;
  if (c >= 'A' && c <= 'F') return c - 'A' + 10;
  return -1;
}

// z = z * m + add over digits of `radix`; m and add below 2^32.
void mul_small_add_inplace(const Radix& radix, std::vector<Digit>& z, std::uint64_t m,
                           std::uint64_t add) {
  std::uint64_t carry = add;
  for (Digit& d : z) {
    unsigned __int128 t = static_cast<unsigned __int128>(d) * m + carry;
    d = static_cast<Digit>(t % radix.base());
    carry = static_cast<std::uint64_t>(t / radix.base());
  }
  while (carry != 0) {
    z.push_back(radix.low(carry));
    carry = radix.high(carry);
  }
}

}  // namespace

Radix::Radix(std::uint64_t base) : base_(base) {
  const bool pow2 = base >= 2 && std::has_single_bit(base);
  if (base < 2 || base > kWordBase || (!pow2 && base > (std::uint64_t{1} << 16))) {
    throw ContractViolation("base must be in [2, 2^16] or a power of two up to 2^32");
  }
  if (pow2) {
    bits_ = std::countr_zero(base);
    mask_ = base - 1;
  }
}

Natural::Natural(std::uint64_t value, Radix radix) : radix_(radix) {
  while (value != 0) {
    digits_.push_back(radix_.low(value));
    value = radix_.high(value);
  }
}

Natural Natural::from_digits(Radix radix, std::vector<Digit> little_endian) {
  for (Digit d : little_endian) {
    if (d >= radix.base()) throw ContractViolation("digit out of range for base");
  }
  return DigitAccess::adopt(radix, std::move(little_endian));
}

Natural Natural::parse(std::string_view text, Radix radix) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
  if (text.empty()) throw std::invalid_argument("empty number");

  std::vector<Digit> out;
  if (text.size() > 2 && text[0] == '0' && (text[1] == 'x' || text[1] == 'X')) {
    for (char c : text.substr(2)) {
      if (c == '_') continue;
      int h = hex_value(c);
      if (h < 0) throw std::invalid_argument("bad hexadecimal digit in '" + std::string(text) + "'");
      mul_small_add_inplace(radix, out, 16, static_cast<std::uint64_t>(h));
    }
  } else {
    std::uint64_t chunk = 0;
    std::uint64_t scale = 1;
    for (char c : text) {
      if (c == '_' || c == '\'') continue;
      if (c < '0' || c > '9') throw std::invalid_argument("bad decimal digit in '" + std::string(text) + "'");
      chunk = chunk * 10 + static_cast<std::uint64_t>(c - '0');
      scale *= 10;
      if (scale == 1000000000) {
        mul_small_add_inplace(radix, out, scale, chunk);
        chunk = 0;
        scale = 1;
      }
    }
    if (scale != 1) mul_small_add_inplace(radix, out, scale, chunk);
  }
  return DigitAccess::adopt(radix, std::move(out));
}

std::string Natural::to_string() const {
  if (is_zero()) return "0";
  std::vector<std::uint32_t> chunks;  // base 10^9, little-endian
  Natural rest = *this;
  while (!rest.is_zero()) {
    auto [q, r] = divmod_small(rest, 1000000000u);
    chunks.push_back(static_cast<std::uint32_t>(r));
    rest = std::move(q);
  }
  std::string out = std::to_string(chunks.back());
  for (auto it = chunks.rbegin() + 1; it != chunks.rend(); ++it) {
    std::string part = std::to_string(*it);
    out.append(9 - part.size(), '0');
    out += part;
  }
  return out;
}

std::string Natural::to_hex() const {
  if (is_zero()) return "0x0";
  static constexpr char kHex[] = "0123456789abcdef";
  std::string rev;
  Natural rest = *this;
  while (!rest.is_zero()) {
    auto [q, r] = divmod_small(rest, 1u << 28);
    for (int i = 0; i < 7; ++i) {
      rev.push_back(kHex[r & 15]);
      r >>= 4;
    }
    rest = std::move(q);
  }
  while (rev.size() > 1 && rev.back() == '0') rev.pop_back();
  return "0x" + std::string(rev.rbegin(), rev.rend());
}

std::optional<std::uint64_t> Natural::to_u64() const {
  unsigned __int128 acc = 0;
  for (auto it = digits_.rbegin(); it != digits_.rend(); ++it) {
    acc = acc * base() + *it;
    if (acc > UINT64_MAX) return std::nullopt;
  }
  return static_cast<std::uint64_t>(acc);
}

std::strong_ordering operator<=>(const Natural& a, const Natural& b) {
  require_same_radix(a, b);
  if (a.digits_.size() != b.digits_.size()) return a.digits_.size() <=> b.digits_.size();
  for (std::size_t i = a.digits_.size(); i-- > 0;) {
    if (a.digits_[i] != b.digits_[i]) return a.digits_[i] <=> b.digits_[i];
  }
  return std::strong_ordering::equal;
}

bool operator==(const Natural& a, const Natural& b) {
  return a.radix_ == b.radix_ && a.digits_ == b.digits_;
}

long prec(const Natural& u) noexcept { return static_cast<long>(u.size()); }

Natural shift(const Natural& u, long n) {
  if (u.is_zero() || n == 0) return u;
  auto d = u.digits();
  if (n > 0) {
    std::vector<Digit> out(static_cast<std::size_t>(n), 0);
    out.insert(out.end(), d.begin(), d.end());
    return DigitAccess::adopt(u.radix(), std::move(out));
  }
  const auto drop = static_cast<std::size_t>(-n);
  if (drop >= d.size()) return Natural(u.radix());
  return DigitAccess::adopt(u.radix(), std::vector<Digit>(d.begin() + static_cast<long>(drop), d.end()));
}

Natural add(const Natural& u, const Natural& v) {
  require_same_radix(u, v);
  const Natural& big = u.size() >= v.size() ? u : v;
  const Natural& small = u.size() >= v.size() ? v : u;
  std::vector<Digit> out(big.digits().begin(), big.digits().end());
  out.push_back(0);
  kernels::with_split(u.radix(), [&](const auto& s) {
    kernels::add_into(s, out.data(), out.size(), small.digits().data(), small.size());
  });
  return DigitAccess::adopt(u.radix(), std::move(out));
}

Natural sub(const Natural& u, const Natural& v) {
  require_same_radix(u, v);
  if (u < v) throw ContractViolation("sub: subtrahend exceeds minuend");
  std::vector<Digit> out(u.digits().begin(), u.digits().end());
  kernels::with_split(u.radix(), [&](const auto& s) {
    kernels::sub_into(s, out.data(), out.size(), v.digits().data(), v.size());
  });
  return DigitAccess::adopt(u.radix(), std::move(out));
}

std::strong_ordering cmp(const Natural& u, const Natural& v) { return u <=> v; }

Natural low_digits(const Natural& u, std::size_t e) {
  if (e >= u.size()) return u;
  auto d = u.digits();
  return DigitAccess::adopt(u.radix(), std::vector<Digit>(d.begin(), d.begin() + static_cast<long>(e)));
}

Natural power_of_base(Radix radix, long n) {
  if (n < 0) return Natural(radix);
  std::vector<Digit> out(static_cast<std::size_t>(n) + 1, 0);
  out.back() = 1;
  return DigitAccess::adopt(radix, std::move(out));
}

bool is_power_of_base(const Natural& u) noexcept {
  auto d = u.digits();
  if (d.empty() || d.back() != 1) return false;
  return std::all_of(d.begin(), d.end() - 1, [](Digit x) { return x == 0; });
}

std::pair<Natural, std::uint64_t> divmod_small(const Natural& u, std::uint32_t d) {
  if (d == 0) throw DivisionByZero("divmod_small: zero divisor");
  auto digits = u.digits();
  std::vector<Digit> q(digits.size());
  std::uint64_t rem = 0;
  const std::uint64_t base = u.base();
  for (std::size_t i = digits.size(); i-- > 0;) {
    unsigned __int128 cur = static_cast<unsigned __int128>(rem) * base + digits[i];
    q[i] = static_cast<Digit>(cur / d);
    rem = static_cast<std::uint64_t>(cur % d);
  }
  return {DigitAccess::adopt(u.radix(), std::move(q)), rem};
}

Natural mul_small(const Natural& u, std::uint32_t m) {
  std::vector<Digit> out(u.digits().begin(), u.digits().end());
  mul_small_add_inplace(u.radix(), out, m, 0);
  return DigitAccess::adopt(u.radix(), std::move(out));
}

Natural rebase(const Natural& u, Radix target) {
  if (u.radix() == target) return u;
  std::vector<Digit> out;
  auto d = u.digits();
  for (std::size_t i = d.size(); i-- > 0;) {
    mul_small_add_inplace(target, out, u.base(), d[i]);
  }
  return DigitAccess::adopt(target, std::move(out));
}

std::string SignedNatural::to_string() const {
  return negative ? "-" + magnitude.to_string() : magnitude.to_string();
}

SignedNatural signed_difference(const Natural& a, const Natural& b) {
  if (a >= b) return SignedNatural(false, sub(a, b));
  return SignedNatural(true, sub(b, a));
}

}  // namespace shinv

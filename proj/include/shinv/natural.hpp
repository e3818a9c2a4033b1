#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace shinv {

using Digit = std::uint32_t;

inline constexpr std::uint64_t kWordBase = std::uint64_t{1} << 32;

/// Digit base B. Any 2 <= B <= 2^16 is accepted, as is any power of two up
/// to 2^32. Power-of-two bases split accumulators with shifts.
class Radix {
 public:
  explicit Radix(std::uint64_t base = kWordBase);

  std::uint64_t base() const noexcept { return base_; }
  Digit max_digit() const noexcept { return static_cast<Digit>(base_ - 1); }
  bool is_power_of_two() const noexcept { return bits_ != 0; }
  int bits() const noexcept { return bits_; }

  Digit low(std::uint64_t x) const noexcept {
    return static_cast<Digit>(bits_ ? (x & mask_) : (x % base_));
  }
  std::uint64_t high(std::uint64_t x) const noexcept {
    return bits_ ? (x >> bits_) : (x / base_);
  }

  friend bool operator==(const Radix& a, const Radix& b) noexcept {
    return a.base_ == b.base_;
  }

 private:
  std::uint64_t base_;
  std::uint64_t mask_ = 0;
  int bits_ = 0;
};

/// Nonnegative integer stored as little-endian base-B digits with no
/// most-significant zero digit. Zero is the empty digit vector.
class Natural {
 public:
  Natural() = default;
  explicit Natural(Radix radix) : radix_(radix) {}
  Natural(std::uint64_t value, Radix radix);
  explicit Natural(std::uint64_t value) : Natural(value, Radix{}) {}

  /// Validates every digit against the base and trims leading zeros.
  static Natural from_digits(Radix radix, std::vector<Digit> little_endian);
  static Natural from_digits(std::uint64_t base, std::vector<Digit> little_endian) {
    return from_digits(Radix{base}, std::move(little_endian));
  }

  /// Parses decimal text, or hexadecimal when prefixed with "0x".
  static Natural parse(std::string_view text, Radix radix = Radix{});

  std::string to_string() const;
  std::string to_hex() const;

  const Radix& radix() const noexcept { return radix_; }
  std::uint64_t base() const noexcept { return radix_.base(); }
  std::span<const Digit> digits() const noexcept { return digits_; }
  std::size_t size() const noexcept { return digits_.size(); }
  bool is_zero() const noexcept { return digits_.empty(); }
  bool is_one() const noexcept { return digits_.size() == 1 && digits_[0] == 1; }
  Digit digit(std::size_t i) const noexcept { return i < digits_.size() ? digits_[i] : 0; }

  std::optional<std::uint64_t> to_u64() const;

  friend std::strong_ordering operator<=>(const Natural& a, const Natural& b);
  friend bool operator==(const Natural& a, const Natural& b);

 private:
  friend class DigitAccess;
  Radix radix_;
  std::vector<Digit> digits_;
};

/// Raw digit storage access for the arithmetic kernels.
class DigitAccess {
 public:
  static std::vector<Digit>& digits(Natural& u) noexcept { return u.digits_; }
  static Natural adopt(Radix radix, std::vector<Digit> digits) {
    Natural out(radix);
    out.digits_ = std::move(digits);
    trim(out.digits_);
    return out;
  }
  static void trim(std::vector<Digit>& digits) noexcept {
    while (!digits.empty() && digits.back() == 0) digits.pop_back();
  }
};

/// Number of base-B digits, floor(log_B u) + 1; zero for u = 0.
long prec(const Natural& u) noexcept;

/// Whole n-shift floor(u * B^n).
Natural shift(const Natural& u, long n);

Natural add(const Natural& u, const Natural& v);
/// Requires u >= v.
Natural sub(const Natural& u, const Natural& v);
std::strong_ordering cmp(const Natural& u, const Natural& v);

/// u rem B^e.
Natural low_digits(const Natural& u, std::size_t e);
/// B^n.
Natural power_of_base(Radix radix, long n);
bool is_power_of_base(const Natural& u) noexcept;

/// Short division by a single machine word d, 1 <= d < 2^32.
std::pair<Natural, std::uint64_t> divmod_small(const Natural& u, std::uint32_t d);
Natural mul_small(const Natural& u, std::uint32_t m);

/// Same value, different base.
Natural rebase(const Natural& u, Radix target);

/// Signed value used for differences such as B^h - v*w.
struct SignedNatural {
  bool negative = false;
  Natural magnitude;

  SignedNatural() = default;
  SignedNatural(bool neg, Natural mag) : negative(neg && !mag.is_zero()), magnitude(std::move(mag)) {}
  explicit SignedNatural(Natural mag) : magnitude(std::move(mag)) {}

  bool is_zero() const noexcept { return magnitude.is_zero(); }
  std::string to_string() const;
  friend bool operator==(const SignedNatural&, const SignedNatural&) = default;
};

/// a - b as a signed value.
SignedNatural signed_difference(const Natural& a, const Natural& b);

}  // namespace shinv

#pragma once

// Digit-array kernels shared by the Natural operations and the
// multiplication backends. Arrays are little-endian, fixed length, and may
// carry leading zeros; trimming happens when a Natural is built.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <vector>

#include "shinv/natural.hpp"

namespace shinv::kernels {

struct Pow2Split {
  int bits;
  std::uint64_t mask;
  Digit low(std::uint64_t x) const noexcept { return static_cast<Digit>(x & mask); }
  std::uint64_t high(std::uint64_t x) const noexcept { return x >> bits; }
  Digit max_digit() const noexcept { return static_cast<Digit>(mask); }
};

struct DivSplit {
  std::uint64_t base;
  Digit low(std::uint64_t x) const noexcept { return static_cast<Digit>(x % base); }
  std::uint64_t high(std::uint64_t x) const noexcept { return x / base; }
  Digit max_digit() const noexcept { return static_cast<Digit>(base - 1); }
};

template <class F>
decltype(auto) with_split(const Radix& radix, F&& f) {
  if (radix.is_power_of_two()) {
    return f(Pow2Split{radix.bits(), radix.max_digit()});
  }
  return f(DivSplit{radix.base()});
}

/// z[0..n) += a[0..na), na <= n. Returns the carry out of z[n-1].
template <class S>
Digit add_into(const S& s, Digit* z, std::size_t n, const Digit* a, std::size_t na) {
  std::uint64_t carry = 0;
  std::size_t i = 0;
  for (; i < na; ++i) {
    std::uint64_t t = std::uint64_t{z[i]} + a[i] + carry;
    z[i] = s.low(t);
    carry = s.high(t);
  }
  for (; carry != 0 && i < n; ++i) {
    std::uint64_t t = std::uint64_t{z[i]} + carry;
    z[i] = s.low(t);
    carry = s.high(t);
  }
  return static_cast<Digit>(carry);
}

/// z[0..n) -= a[0..na), na <= n. Returns the borrow out of z[n-1].
template <class S>
Digit sub_into(const S& s, Digit* z, std::size_t n, const Digit* a, std::size_t na) {
  const std::uint64_t top = s.max_digit();
  std::uint64_t borrow = 0;
  std::size_t i = 0;
  for (; i < na; ++i) {
    std::uint64_t take = std::uint64_t{a[i]} + borrow;
    if (z[i] >= take) {
      z[i] = static_cast<Digit>(z[i] - take);
      borrow = 0;
    } else {
      z[i] = static_cast<Digit>(z[i] + top + 1 - take);
      borrow = 1;
    }
  }
  for (; borrow != 0 && i < n; ++i) {
    if (z[i] != 0) {
      --z[i];
      borrow = 0;
    } else {
      z[i] = static_cast<Digit>(top);
    }
  }
  return static_cast<Digit>(borrow);
}

/// z[0..na+nb) = a * b. z must not alias the inputs.
template <class S>
void mul_basecase(const S& s, Digit* z, const Digit* a, std::size_t na, const Digit* b,
                  std::size_t nb) {
  std::fill(z, z + na + nb, Digit{0});
  for (std::size_t i = 0; i < na; ++i) {
    const std::uint64_t ai = a[i];
    if (ai == 0) continue;
    std::uint64_t carry = 0;
    Digit* zi = z + i;
    for (std::size_t j = 0; j < nb; ++j) {
      std::uint64_t t = std::uint64_t{zi[j]} + ai * b[j] + carry;
      zi[j] = s.low(t);
      carry = s.high(t);
    }
    zi[nb] = static_cast<Digit>(carry);
  }
}

/// z[0..e) = (a * b) rem B^e, touching only the partial products below B^e.
template <class S>
void mul_low_basecase(const S& s, Digit* z, const Digit* a, std::size_t na, const Digit* b,
                      std::size_t nb, std::size_t e) {
  std::fill(z, z + e, Digit{0});
  for (std::size_t i = 0; i < na && i < e; ++i) {
    const std::uint64_t ai = a[i];
    if (ai == 0) continue;
    std::uint64_t carry = 0;
    Digit* zi = z + i;
    const std::size_t limit = std::min(nb, e - i);
    std::size_t j = 0;
    for (; j < limit; ++j) {
      std::uint64_t t = std::uint64_t{zi[j]} + ai * b[j] + carry;
      zi[j] = s.low(t);
      carry = s.high(t);
    }
    for (std::size_t p = i + j; carry != 0 && p < e; ++p) {
      std::uint64_t t = std::uint64_t{z[p]} + carry;
      z[p] = s.low(t);
      carry = s.high(t);
    }
  }
}

/// z[0..na+nb) = a * b by Karatsuba splitting above `threshold` digits.
template <class S>
void mul_karatsuba(const S& s, Digit* z, const Digit* a, std::size_t na, const Digit* b,
                   std::size_t nb, std::size_t threshold) {
  if (na < nb) {
    std::swap(a, b);
    std::swap(na, nb);
  }
  if (nb == 0) {
    std::fill(z, z + na, Digit{0});
    return;
  }
  if (nb < threshold || na < 4) {
    mul_basecase(s, z, a, na, b, nb);
    return;
  }
  if (2 * nb <= na) {
    // Unbalanced: multiply nb-sized slices of a by b and accumulate.
    std::fill(z, z + na + nb, Digit{0});
    std::vector<Digit> part(2 * nb);
    for (std::size_t off = 0; off < na; off += nb) {
      const std::size_t len = std::min(nb, na - off);
      mul_karatsuba(s, part.data(), a + off, len, b, nb, threshold);
      add_into(s, z + off, na + nb - off, part.data(), len + nb);
    }
    return;
  }

  const std::size_t m = na / 2;  // nb > m since 2 * nb > na
  const Digit* a0 = a;
  const Digit* a1 = a + m;
  const Digit* b0 = b;
  const Digit* b1 = b + m;
  const std::size_t na1 = na - m;
  const std::size_t nb1 = nb - m;

  std::fill(z, z + na + nb, Digit{0});
  mul_karatsuba(s, z, a0, m, b0, m, threshold);                // z0 in z[0..2m)
  mul_karatsuba(s, z + 2 * m, a1, na1, b1, nb1, threshold);    // z2 in z[2m..)

  const std::size_t ns = na1 + 1;
  const std::size_t nt = std::max(m, nb1) + 1;
  std::vector<Digit> sa(ns, 0), sb(nt, 0);
  std::copy(a1, a1 + na1, sa.begin());
  add_into(s, sa.data(), ns, a0, m);
  std::copy(b0, b0 + m, sb.begin());
  add_into(s, sb.data(), nt, b1, nb1);

  std::vector<Digit> mid(ns + nt);
  mul_karatsuba(s, mid.data(), sa.data(), ns, sb.data(), nt, threshold);
  sub_into(s, mid.data(), mid.size(), z, 2 * m);
  sub_into(s, mid.data(), mid.size(), z + 2 * m, na1 + nb1);

  std::size_t nmid = mid.size();
  while (nmid > 0 && mid[nmid - 1] == 0) --nmid;
  add_into(s, z + m, na + nb - m, mid.data(), nmid);
}

}  // namespace shinv::kernels

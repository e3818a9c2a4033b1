#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "shinv/natural.hpp"
#include "shinv/poly.hpp"

namespace testing {

inline shinv::Natural random_natural(std::mt19937_64& rng, std::size_t digits, const shinv::Radix& radix) {
  std::vector<shinv::Digit> d(digits);
  for (auto& x : d) x = static_cast<shinv::Digit>(rng() % radix.base());
  if (!d.empty() && d.back() == 0) d.back() = 1;
  return shinv::Natural::from_digits(radix, std::move(d));
}

/// Random natural with 1..max_digits digits, biased toward edge digits 0 and B-1.
inline shinv::Natural random_edgy_natural(std::mt19937_64& rng, std::size_t max_digits,
                                          const shinv::Radix& radix) {
  std::vector<shinv::Digit> d(1 + rng() % max_digits);
  const int mode = static_cast<int>(rng() % 4);
  for (auto& x : d) {
    if (mode == 1) x = radix.max_digit();
    else if (mode == 2) x = (rng() % 3 == 0) ? radix.max_digit() : 0;
    else x = static_cast<shinv::Digit>(rng() % radix.base());
  }
  if (d.back() == 0) d.back() = 1;
  return shinv::Natural::from_digits(radix, std::move(d));
}

template <class F>
shinv::DensePoly<F> random_poly(std::mt19937_64& rng, const F& field, long degree) {
  std::vector<typename F::Element> c(static_cast<std::size_t>(degree + 1));
  for (auto& x : c) x = field.from_integer(static_cast<long long>(rng() % field.modulus()));
  if (field.is_zero(c.back())) c.back() = field.one();
  return shinv::make_poly(field, std::move(c));
}

}  // namespace testing

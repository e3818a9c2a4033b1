#include "shinv/int_shinv.hpp"

#include <algorithm>

#include "shinv/errors.hpp"

namespace shinv {

namespace {

SignedNatural full_pow_diff(const Natural& v, const Natural& w, long H, const MultBackend& backend) {
  return signed_difference(power_of_base(v.radix(), H), mult(v, w, backend));
}

// floor(B^n / V) for a divisor V of at most three digits, n <= 4.
Natural short_inverse(const Radix& radix, const Natural& V, long n) {
  unsigned __int128 d = 0;
  for (long i = static_cast<long>(V.size()) - 1; i >= 0; --i)
    d = d * radix.base() + V.digit(static_cast<std::size_t>(i));
  unsigned __int128 quotient;
  if (radix.is_power_of_two() && radix.bits() * n == 128) {
    // B^n = 2^128 does not fit; divide 2^128 - 1 and fix up when d | 2^128.
    const unsigned __int128 all = ~static_cast<unsigned __int128>(0);
    quotient = all / d;
    if ((d & (d - 1)) == 0) ++quotient;
  } else {
    unsigned __int128 power = 1;
    for (long i = 0; i < n; ++i) power *= radix.base();
    quotient = power / d;
  }
  std::vector<Digit> digits;
  while (quotient != 0) {
    digits.push_back(static_cast<Digit>(quotient % radix.base()));
    quotient /= radix.base();
  }
  return DigitAccess::adopt(radix, std::move(digits));
}

long regroup_power(std::uint64_t base) {
  long p = 1;
  std::uint64_t big = base;
  while (big < 16) {
    big *= base;
    ++p;
  }
  return p;
}

std::uint64_t ipow(std::uint64_t base, long p) {
  std::uint64_t r = 1;
  for (long i = 0; i < p; ++i) r *= base;
  return r;
}

}  // namespace

SignedNatural IntegerDomain::pow_diff(const Natural& v, const Natural& w, long H, long ell, long g,
                                      RefineStats& stats) const {
  ++stats.pow_diff_calls;
  ++stats.mults;
  const long k = prec(v) - 1;
  const long t = prec(w) - 1;
  const long e = k + t - ell + g;
  const auto& radix = v.radix();
  SignedNatural out;
  bool have = false;
  if (ell >= 1 && e >= 0 && e + 1 < H) {
    Natural low = mult_mod(v, w, static_cast<std::size_t>(e + 1), options_.backend);
    const Digit sentinel = low.digit(static_cast<std::size_t>(e));
    if (sentinel == 0) {
      // v w = B^H + low
      out = SignedNatural(true, std::move(low));
      have = true;
    } else if (sentinel == radix.max_digit()) {
      // v w = B^H - (B^(e+1) - low)
      out = SignedNatural(false, sub(power_of_base(radix, e + 1), low));
      have = true;
    } else if (!options_.allow_fallback) {
      throw ContractViolation("pow_diff: product is not close to B^h");
    }
  }
  if (!have) {
    ++stats.pow_diff_fallbacks;
    out = full_pow_diff(v, w, H, options_.backend);
  }
  if (options_.shadow_check && !(out == full_pow_diff(v, w, H, options_.backend))) {
    throw ContractViolation("pow_diff: low-digit result disagrees with the full product");
  }
  return out;
}

SignedNatural IntegerDomain::mul_diff(const Natural& w, const SignedNatural& diff,
                                      RefineStats& stats) const {
  ++stats.mults;
  return SignedNatural(diff.negative, mult(w, diff.magnitude, options_.backend));
}

SignedNatural IntegerDomain::shift_diff(const SignedNatural& d, long n) const {
  if (n >= 0 || !d.negative) return SignedNatural(d.negative, shift(d.magnitude, n));
  Natural q = shift(d.magnitude, n);
  const bool exact = low_digits(d.magnitude, static_cast<std::size_t>(-n)).is_zero();
  if (!exact) q = add(q, Natural(1, d.magnitude.radix()));
  return SignedNatural(true, std::move(q));
}

Natural IntegerDomain::add_diff(const Natural& w, const SignedNatural& d) const {
  if (!d.negative) return add(w, d.magnitude);
  if (w < d.magnitude) throw ContractViolation("iteration left the convergence region");
  return sub(w, d.magnitude);
}

ShinvState<Natural> IntegerDomain::initial_state(const Natural& v, long h) const {
  const auto& radix = v.radix();
  require(radix.base() >= 16, "initial value needs B >= 16");
  const long k = prec(v) - 1;
  require(k >= 1, "initial value needs v >= B");
  require(!(power_of_base(radix, h) < add(v, v)), "initial value needs 2v <= B^h");
  const long f = std::min(k, 2L);
  ShinvState<Natural> st{short_inverse(radix, shift(v, -(k - f)), f + 2)};
  st.ell = 2;
  st.h = h;
  st.k = k;
  st.g = guard;
  st.scale = 2;
  st.prefix = k - f;
  return st;
}

std::optional<Natural> IntegerDomain::small_case(const Natural& v, long h) const {
  const auto& radix = v.radix();
  if (v.is_zero()) throw DivisionByZero("whole shifted inverse of zero");
  require(h >= 0, "shinv: negative exponent");
  if (v.is_one()) return power_of_base(radix, h);
  const long k = prec(v) - 1;
  if (k > h) return Natural(radix);
  const Natural power = power_of_base(radix, h);
  if (power < v) return Natural(radix);
  if (power < add(v, v)) return Natural(1, radix);
  if (k == 0) return divmod_small(power, v.digit(0)).first;
  if (is_power_of_base(v)) return power_of_base(radix, h - k);
  return std::nullopt;
}

Natural IntegerDomain::finalize(const Natural& w, const Natural& v, long h,
                                RefineStats& stats) const {
  const auto& radix = v.radix();
  const Natural one(1, radix);
  Natural q = w;
  SignedNatural r = signed_difference(power_of_base(radix, h), mult(v, q, options_.backend));
  ++stats.mults;
  while (r.negative) {
    q = sub(q, one);
    r = signed_difference(v, r.magnitude);
    ++stats.corrections;
  }
  Natural rem = std::move(r.magnitude);
  while (!(rem < v)) {
    q = add(q, one);
    rem = sub(rem, v);
    ++stats.corrections;
  }
  return q;
}

Natural step(long h, const Natural& v, const Natural& w, long m, long ell,
             const IntShinvOptions& options, RefineStats* stats) {
  RefineStats local;
  return generic_step(IntegerDomain(options), h, v, w, m, ell, stats ? *stats : local);
}

SignedNatural pow_diff(const Natural& v, const Natural& w, long h, long ell, long g,
                       const IntShinvOptions& options, RefineStats* stats) {
  RefineStats local;
  return IntegerDomain(options).pow_diff(v, w, h, ell, g, stats ? *stats : local);
}

InitialValue initial_value(const Natural& v, long h) {
  IntegerDomain dom;
  auto st = dom.initial_state(v, h);
  return {shift(st.w, h - st.k - st.scale), st.ell};
}

namespace {

Natural run_variant(const Natural& v, long h, RefineVariant variant,
                    const IntShinvOptions& options, RefineStats* stats) {
  RefineStats local;
  RefineStats& st = stats ? *stats : local;
  IntegerDomain dom(options);
  const auto& radix = v.radix();
  if (v.is_zero()) throw DivisionByZero("whole shifted inverse of zero");
  if (radix.base() < 16 && !v.is_one()) {
    // Read the digits in groups of p as base B^p >= 16.
    const long p = regroup_power(radix.base());
    const long hp = (h + p - 1) / p;
    const Radix wide(ipow(radix.base(), p));
    Natural inverse = run_variant(rebase(v, wide), hp, variant, options, &st);
    return shift(rebase(inverse, radix), -(p * hp - h));
  }
  return generic_shinv(dom, v, h, variant, st);
}

}  // namespace

Natural refine1(const Natural& v, long h, const IntShinvOptions& options, RefineStats* stats) {
  return run_variant(v, h, RefineVariant::refine1, options, stats);
}

Natural refine2(const Natural& v, long h, const IntShinvOptions& options, RefineStats* stats) {
  return run_variant(v, h, RefineVariant::refine2, options, stats);
}

Natural refine3(const Natural& v, long h, const IntShinvOptions& options, RefineStats* stats) {
  return run_variant(v, h, RefineVariant::refine3, options, stats);
}

Natural shinv(const Natural& v, long h, RefineVariant variant, const IntShinvOptions& options,
              RefineStats* stats) {
  return run_variant(v, h, variant, options, stats);
}

Natural final_correction(const Natural& w, const Natural& v, long h, RefineStats* stats) {
  if (v.is_zero()) throw DivisionByZero("final correction with zero divisor");
  RefineStats local;
  return IntegerDomain().finalize(w, v, h, stats ? *stats : local);
}

DivModResult divmod(const Natural& u, const Natural& v, RefineVariant variant,
                    const IntShinvOptions& options, RefineStats* stats) {
  if (v.is_zero()) throw DivisionByZero("division by zero");
  if (!(u.radix() == v.radix())) throw ContractViolation("divmod: operands use different bases");
  if (u < v) return {Natural(u.radix()), u, 0};
  // Minimal h with u <= B^h.
  const long h = is_power_of_base(u) ? prec(u) - 1 : prec(u);
  Natural inverse = shinv(v, h, variant, options, stats);
  Natural q = shift(mult(u, inverse, options.backend), -h);
  Natural r = sub(u, mult(q, v, options.backend));
  int delta = 0;
  if (!(r < v)) {
    q = add(q, Natural(1, u.radix()));
    r = sub(r, v);
    delta = 1;
  }
  if (!(r < v)) throw ContractViolation("divmod: quotient estimate off by more than one");
  return {std::move(q), std::move(r), delta};
}

}  // namespace shinv

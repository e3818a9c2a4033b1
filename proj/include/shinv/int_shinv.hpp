#pragma once

// Whole shifted inverse floor(B^h / v) of multiprecision naturals by modified
// Newton iteration, and quotient/remainder derived from it.

#include <optional>
#include <utility>

#include "shinv/generic.hpp"
#include "shinv/multiply.hpp"
#include "shinv/natural.hpp"

namespace shinv {

struct IntShinvOptions {
  MultBackend backend{};
  /// Recompute every close product in full and compare.
  bool shadow_check = false;
  /// When the sentinel digit of a close product is neither 0 nor B-1, redo
  /// the product in full instead of raising ContractViolation.
  bool allow_fallback = true;
};

/// Shift-ring descriptor for base-B naturals with b = B. Carries cost one
/// place per doubling step; short iterates carry two guard digits.
class IntegerDomain {
 public:
  using Element = Natural;
  using Diff = SignedNatural;
  static constexpr long shortfall = 1;
  static constexpr long guard = 2;
  static constexpr long places_offset = 0;
  static constexpr long final_margin = 0;

  explicit IntegerDomain(IntShinvOptions options = {}) : options_(options) {}

  const IntShinvOptions& options() const noexcept { return options_; }

  long precision(const Natural& e) const { return prec(e); }
  Natural whole_shift(const Natural& e, long n) const { return shift(e, n); }
  Natural mul(const Natural& a, const Natural& b) const { return mult(a, b, options_.backend); }

  SignedNatural pow_diff(const Natural& v, const Natural& w, long H, long ell, long g,
                         RefineStats& stats) const;
  SignedNatural mul_diff(const Natural& w, const SignedNatural& diff, RefineStats& stats) const;
  /// floor(d * B^n), rounding toward minus infinity.
  SignedNatural shift_diff(const SignedNatural& d, long n) const;
  Natural add_diff(const Natural& w, const SignedNatural& d) const;

  ShinvState<Natural> initial_state(const Natural& v, long h) const;
  std::optional<Natural> small_case(const Natural& v, long h) const;
  Natural finalize(const Natural& w, const Natural& v, long h, RefineStats& stats) const;

 private:
  IntShinvOptions options_;
};

/// shift(w, m) + floor(shift(w, m) (B^h - v shift(w, m)) / B^h).
Natural step(long h, const Natural& v, const Natural& w, long m, long ell,
             const IntShinvOptions& options = {}, RefineStats* stats = nullptr);

/// B^h - v w from the low e + 1 digits of v w, e = k + t - ell + g with
/// k = prec(v) - 1 and t = prec(w) - 1. Requires |B^h - v w| <= B^e.
SignedNatural pow_diff(const Natural& v, const Natural& w, long h, long ell, long g,
                       const IntShinvOptions& options = {}, RefineStats* stats = nullptr);

struct InitialValue {
  Natural w0;  // full scale, approximates floor(B^h / v) to within a quarter
  long ell0 = 2;
};

/// Inverts the leading min(k, 2) + 1 digits of v. Requires B >= 16,
/// B <= v and 2v <= B^h.
InitialValue initial_value(const Natural& v, long h);

Natural refine1(const Natural& v, long h, const IntShinvOptions& options = {},
                RefineStats* stats = nullptr);
Natural refine2(const Natural& v, long h, const IntShinvOptions& options = {},
                RefineStats* stats = nullptr);
Natural refine3(const Natural& v, long h, const IntShinvOptions& options = {},
                RefineStats* stats = nullptr);

/// floor(B^h / v). Throws DivisionByZero for v = 0.
Natural shinv(const Natural& v, long h, RefineVariant variant = RefineVariant::refine3,
              const IntShinvOptions& options = {}, RefineStats* stats = nullptr);

/// Steps w by +-1 until 0 <= B^h - v w < v.
Natural final_correction(const Natural& w, const Natural& v, long h,
                         RefineStats* stats = nullptr);

struct DivModResult {
  Natural q;
  Natural r;
  /// Correction added to shift(u * shinv_h(v), -h); 0 or 1.
  int delta = 0;
};

/// u = q v + r with 0 <= r < v. Throws DivisionByZero for v = 0.
DivModResult divmod(const Natural& u, const Natural& v,
                    RefineVariant variant = RefineVariant::refine3,
                    const IntShinvOptions& options = {}, RefineStats* stats = nullptr);

}  // namespace shinv

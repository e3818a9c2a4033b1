#pragma once

// Whole shifted inverse by modified Newton iteration, written once for any
// ring with a whole shift with respect to a central element b. Integers
// (b = B, with carries) and polynomials (b = x, no carries) plug in through
// thin domain descriptors.

#include <algorithm>
#include <concepts>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "shinv/errors.hpp"

namespace shinv {

enum class RefineVariant { refine1, refine2, refine3 };

inline std::string_view to_string(RefineVariant variant) {
  switch (variant) {
    case RefineVariant::refine1: return "refine1";
    case RefineVariant::refine2: return "refine2";
    case RefineVariant::refine3: return "refine3";
  }
  return "?";
}

inline RefineVariant parse_refine_variant(std::string_view name) {
  if (name == "refine1" || name == "1") return RefineVariant::refine1;
  if (name == "refine2" || name == "2") return RefineVariant::refine2;
  if (name == "refine3" || name == "3") return RefineVariant::refine3;
  throw std::invalid_argument("unknown refine variant '" + std::string(name) + "'");
}

inline constexpr RefineVariant kAllVariants[] = {RefineVariant::refine1, RefineVariant::refine2,
                                                 RefineVariant::refine3};

/// Iteration state. `w` approximates shinv_{k - prefix + scale}(shift(v, -prefix))
/// and has `ell` correct leading places.
template <class E>
struct ShinvState {
  E w;
  long ell = 2;
  long h = 0;
  long k = 0;
  long g = 0;
  long scale = 0;
  long prefix = 0;
};

struct RefineStats {
  long iterations = 0;
  long mults = 0;
  long pow_diff_calls = 0;
  long pow_diff_fallbacks = 0;
  long corrections = 0;
  std::vector<long> ell_trace;
};

/// Shift-ring descriptor.
///
/// shortfall: places lost per doubling step (1 with carries, 0 without).
/// guard: extra low places carried by short iterates.
/// places_offset: places of shinv_{k+s}(v) minus s (0 for integers, whose
/// inverse at offset s has s digits; 1 for polynomials, which have s + 1
/// coefficients).
/// final_margin: extra places demanded before the last, full-length step.
template <class D>
concept ShiftDomain = requires(const D& d, const typename D::Element& e,
                               const typename D::Diff& x, long n, RefineStats& st) {
  typename D::Element;
  typename D::Diff;
  { D::shortfall } -> std::convertible_to<long>;
  { D::guard } -> std::convertible_to<long>;
  { D::places_offset } -> std::convertible_to<long>;
  { D::final_margin } -> std::convertible_to<long>;
  { d.precision(e) } -> std::convertible_to<long>;
  { d.whole_shift(e, n) } -> std::same_as<typename D::Element>;
  { d.pow_diff(e, e, n, n, n, st) } -> std::same_as<typename D::Diff>;
  { d.mul_diff(e, x, st) } -> std::same_as<typename D::Diff>;
  { d.shift_diff(x, n) } -> std::same_as<typename D::Diff>;
  { d.add_diff(e, x) } -> std::same_as<typename D::Element>;
  { d.initial_state(e, n) } -> std::same_as<ShinvState<typename D::Element>>;
  { d.small_case(e, n) } -> std::same_as<std::optional<typename D::Element>>;
  { d.finalize(e, e, n, st) } -> std::same_as<typename D::Element>;
};

/// S(H, v, shift(w, m)) = shift(w, m) + floor(shift(w, m) * (b^H - v shift(w, m)) / b^H).
/// Only w is shifted: b^H - v shift(w, m) = b^m (b^(H-m) - v w), so the
/// close product is formed at the unshifted scale.
template <ShiftDomain D>
typename D::Element generic_step(const D& dom, long H, const typename D::Element& v,
                                 const typename D::Element& w, long m, long ell,
                                 RefineStats& stats) {
  require(m >= 0, "step: shift m must be nonnegative");
  auto diff = dom.pow_diff(v, w, H - m, ell, D::guard, stats);
  auto correction = dom.shift_diff(dom.mul_diff(w, diff, stats), 2 * m - H);
  return dom.add_diff(dom.whole_shift(w, m), correction);
}

/// Refines an initial state to shinv_h(v). Refine1 iterates at full length
/// with `shortfall` places of headroom; Refine2 grows short iterates by the
/// precision law ell' = 2 ell - shortfall carrying `guard` extra places;
/// Refine3 additionally replaces v by its leading places.
template <ShiftDomain D>
typename D::Element generic_refine(const D& dom, RefineVariant variant,
                                   const typename D::Element& v, long h,
                                   ShinvState<typename D::Element> st, RefineStats& stats) {
  using E = typename D::Element;
  const long d = D::shortfall;
  const long g = D::guard;
  const long c = D::places_offset;
  const long k = st.k;
  const long target = h - k;
  const long final_places = target + c;

  long ell = st.ell;
  stats.ell_trace.push_back(ell);

  if (variant == RefineVariant::refine1) {
    const long full = target + d;
    const long H = k + full;
    E w = dom.whole_shift(st.w, full - st.scale);
    while (ell < full + c) {
      w = generic_step(dom, H, v, w, 0, ell, stats);
      ell = std::min(2 * ell - d, full + c);
      ++stats.iterations;
      stats.ell_trace.push_back(ell);
    }
    return dom.finalize(dom.whole_shift(w, -d), v, h, stats);
  }

  const bool use_prefix = variant == RefineVariant::refine3;
  E w = st.w;
  long scale = st.scale;
  for (;;) {
    const bool last = 2 * ell - d >= final_places + D::final_margin;
    // A target shorter than the current iterate is reached by truncating
    // after the step, so the guard places still absorb the step error.
    const long next_scale = std::max(scale, last ? target : 2 * ell - d + g - c);
    long s = 0;
    if (use_prefix) {
      const long keep = last ? next_scale + c + g : 2 * ell + g;
      s = std::max(0L, k - keep + 1);
    }
    const E divisor = s > 0 ? dom.whole_shift(v, -s) : v;
    w = generic_step(dom, k - s + next_scale, divisor, w, next_scale - scale, ell, stats);
    scale = next_scale;
    ell = std::min(2 * ell - d, scale + c);
    ++stats.iterations;
    stats.ell_trace.push_back(ell);
    if (last) break;
  }
  if (scale > target) w = dom.whole_shift(w, target - scale);
  return dom.finalize(w, v, h, stats);
}

/// shinv_h(v): special cases, then initial value, then refinement.
template <ShiftDomain D>
typename D::Element generic_shinv(const D& dom, const typename D::Element& v, long h,
                                  RefineVariant variant, RefineStats& stats) {
  if (auto small = dom.small_case(v, h)) return *small;
  return generic_refine(dom, variant, v, h, dom.initial_state(v, h), stats);
}

/// Right quotient q_R = shift(u * shinv_h(v), -h), so u = q_R v + r_R.
/// Exact for carry-free domains.
template <ShiftDomain D>
  requires(D::shortfall == 0)
typename D::Element quo_right(const D& dom, const typename D::Element& u,
                              const typename D::Element& v,
                              RefineVariant variant = RefineVariant::refine3) {
  RefineStats stats;
  const long h = dom.precision(u) - 1;
  if (h < dom.precision(v) - 1) return dom.whole_shift(u, -(h + 1));
  auto inverse = generic_shinv(dom, v, h, variant, stats);
  return dom.whole_shift(dom.mul(u, inverse), -h);
}

/// Left quotient q_L = shift(shinv_h(v) * u, -h), so u = v q_L + r_L.
template <ShiftDomain D>
  requires(D::shortfall == 0)
typename D::Element quo_left(const D& dom, const typename D::Element& u,
                             const typename D::Element& v,
                             RefineVariant variant = RefineVariant::refine3) {
  RefineStats stats;
  const long h = dom.precision(u) - 1;
  if (h < dom.precision(v) - 1) return dom.whole_shift(u, -(h + 1));
  auto inverse = generic_shinv(dom, v, h, variant, stats);
  return dom.whole_shift(dom.mul(inverse, u), -h);
}

}  // namespace shinv

#pragma once

// Dense univariate polynomials over a coefficient ring, with whole shift,
// whole shifted inverse x^n quo v and quotient/remainder.

#include <algorithm>
#include <cstddef>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "shinv/errors.hpp"
#include "shinv/field.hpp"
#include "shinv/generic.hpp"

namespace shinv {

/// Coefficient i multiplies x^i. The leading coefficient is nonzero; the
/// zero polynomial has no coefficients.
template <CoefficientRing R>
struct DensePoly {
  using Coeff = typename R::Element;
  std::vector<Coeff> coeffs;

  DensePoly() = default;
  explicit DensePoly(std::vector<Coeff> c) : coeffs(std::move(c)) {}

  bool is_zero() const noexcept { return coeffs.empty(); }
  /// -1 for the zero polynomial.
  long degree() const noexcept { return static_cast<long>(coeffs.size()) - 1; }
  /// Number of coefficients, degree + 1.
  long prec() const noexcept { return static_cast<long>(coeffs.size()); }
  const Coeff& lead() const { return coeffs.back(); }
};

template <CoefficientRing R>
void trim(const R& ring, DensePoly<R>& p) {
  while (!p.coeffs.empty() && ring.is_zero(p.coeffs.back())) p.coeffs.pop_back();
}

template <CoefficientRing R>
DensePoly<R> make_poly(const R& ring, std::vector<typename R::Element> coeffs) {
  DensePoly<R> p(std::move(coeffs));
  trim(ring, p);
  return p;
}

template <CoefficientRing R>
bool poly_equal(const R& ring, const DensePoly<R>& a, const DensePoly<R>& b) {
  if (a.coeffs.size() != b.coeffs.size()) return false;
  for (std::size_t i = 0; i < a.coeffs.size(); ++i)
    if (!ring.equal(a.coeffs[i], b.coeffs[i])) return false;
  return true;
}

template <CoefficientRing R>
DensePoly<R> constant_poly(const R& ring, const typename R::Element& c) {
  return make_poly(ring, {c});
}

/// x^n
template <CoefficientRing R>
DensePoly<R> monomial(const R& ring, long n, std::optional<typename R::Element> c = std::nullopt) {
  require(n >= 0, "monomial: negative exponent");
  std::vector<typename R::Element> coeffs(static_cast<std::size_t>(n) + 1, ring.zero());
  coeffs.back() = c ? *c : ring.one();
  return make_poly(ring, std::move(coeffs));
}

/// Whole n-shift: multiply by x^n, dropping terms with negative exponent.
template <CoefficientRing R>
DensePoly<R> pshift(const R& ring, const DensePoly<R>& p, long n) {
  if (p.is_zero()) return p;
  if (n >= 0) {
    std::vector<typename R::Element> coeffs(static_cast<std::size_t>(n), ring.zero());
    coeffs.insert(coeffs.end(), p.coeffs.begin(), p.coeffs.end());
    return DensePoly<R>(std::move(coeffs));
  }
  if (-n >= p.prec()) return {};
  return DensePoly<R>({p.coeffs.begin() + (-n), p.coeffs.end()});
}

template <CoefficientRing R>
DensePoly<R> padd(const R& ring, const DensePoly<R>& a, const DensePoly<R>& b) {
  const auto& big = a.coeffs.size() >= b.coeffs.size() ? a : b;
  const auto& small = a.coeffs.size() >= b.coeffs.size() ? b : a;
  std::vector<typename R::Element> c = big.coeffs;
  for (std::size_t i = 0; i < small.coeffs.size(); ++i)
    c[i] = &big == &a ? ring.add(c[i], small.coeffs[i]) : ring.add(small.coeffs[i], c[i]);
  return make_poly(ring, std::move(c));
}

template <CoefficientRing R>
DensePoly<R> pneg(const R& ring, const DensePoly<R>& a) {
  std::vector<typename R::Element> c;
  c.reserve(a.coeffs.size());
  for (const auto& x : a.coeffs) c.push_back(ring.neg(x));
  return DensePoly<R>(std::move(c));
}

template <CoefficientRing R>
DensePoly<R> psub(const R& ring, const DensePoly<R>& a, const DensePoly<R>& b) {
  std::vector<typename R::Element> c(std::max(a.coeffs.size(), b.coeffs.size()), ring.zero());
  for (std::size_t i = 0; i < a.coeffs.size(); ++i) c[i] = a.coeffs[i];
  for (std::size_t i = 0; i < b.coeffs.size(); ++i) c[i] = ring.sub(c[i], b.coeffs[i]);
  return make_poly(ring, std::move(c));
}

/// Left scalar multiple c * p.
template <CoefficientRing R>
DensePoly<R> pscale_left(const R& ring, const typename R::Element& c, const DensePoly<R>& p) {
  std::vector<typename R::Element> out;
  out.reserve(p.coeffs.size());
  for (const auto& x : p.coeffs) out.push_back(ring.mul(c, x));
  return make_poly(ring, std::move(out));
}

/// Right scalar multiple p * c.
template <CoefficientRing R>
DensePoly<R> pscale_right(const R& ring, const DensePoly<R>& p, const typename R::Element& c) {
  std::vector<typename R::Element> out;
  out.reserve(p.coeffs.size());
  for (const auto& x : p.coeffs) out.push_back(ring.mul(x, c));
  return make_poly(ring, std::move(out));
}

namespace detail {

template <CoefficientRing R>
using CoeffVec = std::vector<typename R::Element>;

// out[i + j] += a[i] * b[j]; operand order is preserved for noncommutative rings.
template <CoefficientRing R>
void poly_mul_basecase(const R& ring, typename R::Element* out, const typename R::Element* a,
                       std::size_t na, const typename R::Element* b, std::size_t nb) {
  for (std::size_t i = 0; i < na; ++i) {
    if (ring.is_zero(a[i])) continue;
    for (std::size_t j = 0; j < nb; ++j) out[i + j] = ring.add(out[i + j], ring.mul(a[i], b[j]));
  }
}

// out (length na + nb - 1, zero on entry) += a * b.
template <CoefficientRing R>
void poly_mul_karatsuba(const R& ring, typename R::Element* out, const typename R::Element* a,
                        std::size_t na, const typename R::Element* b, std::size_t nb,
                        std::size_t threshold) {
  if (na == 0 || nb == 0) return;
  if (std::min(na, nb) < threshold) {
    poly_mul_basecase(ring, out, a, na, b, nb);
    return;
  }
  if (na != nb) {
    // Unbalanced: cut the longer operand into pieces the size of the shorter.
    const bool a_long = na > nb;
    const std::size_t piece = std::min(na, nb);
    const std::size_t total = std::max(na, nb);
    CoeffVec<R> tmp(2 * piece - 1);
    for (std::size_t off = 0; off < total; off += piece) {
      const std::size_t len = std::min(piece, total - off);
      std::fill(tmp.begin(), tmp.end(), ring.zero());
      if (a_long)
        poly_mul_karatsuba(ring, tmp.data(), a + off, len, b, nb, threshold);
      else
        poly_mul_karatsuba(ring, tmp.data(), a, na, b + off, len, threshold);
      const std::size_t used = len + piece - 1;
      for (std::size_t i = 0; i < used; ++i) out[off + i] = ring.add(out[off + i], tmp[i]);
    }
    return;
  }
  const std::size_t n = na;
  const std::size_t m = n / 2;
  const std::size_t hi = n - m;
  CoeffVec<R> low(2 * m - 1, ring.zero());
  CoeffVec<R> high(2 * hi - 1, ring.zero());
  poly_mul_karatsuba(ring, low.data(), a, m, b, m, threshold);
  poly_mul_karatsuba(ring, high.data(), a + m, hi, b + m, hi, threshold);
  CoeffVec<R> sa(hi), sb(hi);
  for (std::size_t i = 0; i < hi; ++i) {
    sa[i] = i < m ? ring.add(a[i], a[m + i]) : a[m + i];
    sb[i] = i < m ? ring.add(b[i], b[m + i]) : b[m + i];
  }
  CoeffVec<R> mid(2 * hi - 1, ring.zero());
  poly_mul_karatsuba(ring, mid.data(), sa.data(), hi, sb.data(), hi, threshold);
  for (std::size_t i = 0; i < low.size(); ++i) mid[i] = ring.sub(mid[i], low[i]);
  for (std::size_t i = 0; i < high.size(); ++i) mid[i] = ring.sub(mid[i], high[i]);
  for (std::size_t i = 0; i < low.size(); ++i) out[i] = ring.add(out[i], low[i]);
  for (std::size_t i = 0; i < high.size(); ++i) out[2 * m + i] = ring.add(out[2 * m + i], high[i]);
  for (std::size_t i = 0; i < mid.size(); ++i) out[m + i] = ring.add(out[m + i], mid[i]);
}

}  // namespace detail

inline constexpr std::size_t kPolyKaratsubaThreshold = 24;

/// a * b, in that order. threshold 0 forces the schoolbook product.
template <CoefficientRing R>
DensePoly<R> pmul(const R& ring, const DensePoly<R>& a, const DensePoly<R>& b,
                  std::size_t threshold = kPolyKaratsubaThreshold) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<typename R::Element> out(a.coeffs.size() + b.coeffs.size() - 1, ring.zero());
  if (threshold == 0) {
    detail::poly_mul_basecase(ring, out.data(), a.coeffs.data(), a.coeffs.size(), b.coeffs.data(),
                              b.coeffs.size());
  } else {
    detail::poly_mul_karatsuba(ring, out.data(), a.coeffs.data(), a.coeffs.size(),
                               b.coeffs.data(), b.coeffs.size(), std::max<std::size_t>(threshold, 2));
  }
  return make_poly(ring, std::move(out));
}

/// (a * b) rem x^n, from the n-coefficient prefixes of the operands.
template <CoefficientRing R>
DensePoly<R> pmul_low(const R& ring, const DensePoly<R>& a, const DensePoly<R>& b, std::size_t n,
                      std::size_t threshold = kPolyKaratsubaThreshold) {
  if (n == 0 || a.is_zero() || b.is_zero()) return {};
  const std::size_t na = std::min(n, a.coeffs.size());
  const std::size_t nb = std::min(n, b.coeffs.size());
  std::vector<typename R::Element> out;
  if (threshold == 0 || std::min(na, nb) < threshold) {
    out.assign(n, ring.zero());
    for (std::size_t i = 0; i < na; ++i) {
      if (ring.is_zero(a.coeffs[i])) continue;
      const std::size_t top = std::min(nb, n - i);
      for (std::size_t j = 0; j < top; ++j)
        out[i + j] = ring.add(out[i + j], ring.mul(a.coeffs[i], b.coeffs[j]));
    }
  } else {
    out.assign(na + nb - 1, ring.zero());
    detail::poly_mul_karatsuba(ring, out.data(), a.coeffs.data(), na, b.coeffs.data(), nb, threshold);
    if (out.size() > n) out.resize(n);
  }
  return make_poly(ring, std::move(out));
}

/// Shift-ring descriptor for R[x] with b = x. No carries, so precision
/// doubles exactly and no guard places are needed.
template <CoefficientRing R>
class PolyDomain {
 public:
  using Element = DensePoly<R>;
  using Diff = DensePoly<R>;
  static constexpr long shortfall = 0;
  static constexpr long guard = 0;
  static constexpr long places_offset = 1;
  static constexpr long final_margin = 0;

  explicit PolyDomain(R ring, std::size_t karatsuba_threshold = kPolyKaratsubaThreshold,
                      bool shadow_check = false)
      : ring_(std::move(ring)), threshold_(karatsuba_threshold), shadow_check_(shadow_check) {}

  const R& ring() const noexcept { return ring_; }

  long precision(const Element& e) const { return e.prec(); }
  Element whole_shift(const Element& e, long n) const { return pshift(ring_, e, n); }
  Element mul(const Element& a, const Element& b) const { return pmul(ring_, a, b, threshold_); }

  /// x^H - v w from the low e + 1 coefficients of v w, e = k + t - ell + g.
  Diff pow_diff(const Element& v, const Element& w, long H, long ell, long g,
                RefineStats& stats) const {
    ++stats.pow_diff_calls;
    ++stats.mults;
    const long e = v.degree() + w.degree() - ell + g;
    Diff out;
    if (ell < 1 || e + 1 >= H || e < 0) {
      ++stats.pow_diff_fallbacks;
      out = psub(ring_, monomial(ring_, H), mul(v, w));
    } else {
      out = pneg(ring_, pmul_low(ring_, v, w, static_cast<std::size_t>(e + 1), threshold_));
    }
    if (shadow_check_) {
      auto full = psub(ring_, monomial(ring_, H), mul(v, w));
      if (!poly_equal(ring_, full, out))
        throw ContractViolation("pow_diff: product is not close to x^H");
    }
    return out;
  }

  Diff mul_diff(const Element& w, const Diff& diff, RefineStats& stats) const {
    ++stats.mults;
    return mul(w, diff);
  }
  Diff shift_diff(const Diff& d, long n) const { return pshift(ring_, d, n); }
  Element add_diff(const Element& w, const Diff& d) const { return padd(ring_, w, d); }

  /// Leading coefficient inverse, or an error when it is not a unit.
  typename R::Element lead_inverse(const Element& v) const {
    if (v.is_zero()) throw DivisionByZero("whole shifted inverse of the zero polynomial");
    auto inv = ring_.inverse(v.lead());
    if (!inv) throw ContractViolation("leading coefficient of the divisor is not invertible");
    return *inv;
  }

  /// Top two quotient terms: x^(k+1) quo v = c x - c v[k-1] c with c = v[k]^-1.
  ShinvState<Element> initial_state(const Element& v, long h) const {
    const auto c = lead_inverse(v);
    const long k = v.degree();
    auto next = k >= 1 ? v.coeffs[static_cast<std::size_t>(k - 1)] : ring_.zero();
    auto w = make_poly(ring_, {ring_.neg(ring_.mul(ring_.mul(c, next), c)), c});
    ShinvState<Element> st{std::move(w)};
    st.ell = 2;
    st.h = h;
    st.k = k;
    st.g = guard;
    st.scale = 1;
    st.prefix = std::max(0L, k - 1);
    return st;
  }

  std::optional<Element> small_case(const Element& v, long h) const {
    const auto c = lead_inverse(v);
    const long k = v.degree();
    if (h < k) return Element{};
    if (k == 0) return monomial(ring_, h, c);
    if (h - k <= 1) return whole_shift(initial_state(v, h).w, h - k - 1);
    return std::nullopt;
  }

  Element finalize(const Element& w, const Element&, long, RefineStats&) const { return w; }

 private:
  R ring_;
  std::size_t threshold_;
  bool shadow_check_;
};

/// x^h - v w, exactly. With a known count `ell` of correct leading
/// coefficients in w only the low coefficient window of v w is formed.
template <CoefficientRing R>
DensePoly<R> ppow_diff(const R& ring, const DensePoly<R>& v, const DensePoly<R>& w, long h,
                       std::optional<long> ell = std::nullopt) {
  require(h >= 0, "ppow_diff: negative exponent");
  if (!ell) return psub(ring, monomial(ring, h), pmul(ring, v, w));
  RefineStats stats;
  return PolyDomain<R>(ring).pow_diff(v, w, h, *ell, 0, stats);
}

/// x^n quo v.
template <Field F>
DensePoly<F> pshinv(const F& field, const DensePoly<F>& v, long n,
                    RefineVariant variant = RefineVariant::refine3,
                    RefineStats* stats = nullptr) {
  require(n >= 0, "pshinv: negative exponent");
  if (v.is_zero()) throw DivisionByZero("whole shifted inverse of the zero polynomial");
  RefineStats local;
  RefineStats& st = stats ? *stats : local;
  // x^n quo v = (x^n quo (v / c)) / c for the leading coefficient c.
  const auto c_inv = field.inverse(v.lead()).value();
  PolyDomain<F> dom(field);
  auto monic = pscale_left(field, c_inv, v);
  return pscale_left(field, c_inv, generic_shinv(dom, monic, n, variant, st));
}

/// (q, r) with u = q v + r and deg r < deg v.
template <Field F>
std::pair<DensePoly<F>, DensePoly<F>> pdivmod(const F& field, const DensePoly<F>& u,
                                              const DensePoly<F>& v,
                                              RefineVariant variant = RefineVariant::refine3) {
  if (v.is_zero()) throw DivisionByZero("polynomial division by zero");
  if (u.degree() < v.degree()) return {DensePoly<F>{}, u};
  const long h = u.degree();
  auto q = pshift(field, pmul(field, u, pshinv(field, v, h, variant)), -h);
  auto r = psub(field, u, pmul(field, q, v));
  return {std::move(q), std::move(r)};
}

/// Low-to-high coefficient list, e.g. "1,2,0,1" for 1 + 2x + x^3.
inline DensePoly<PrimeField> parse_poly(const PrimeField& field, std::string_view text) {
  std::vector<PrimeField::Element> coeffs;
  std::string item;
  std::stringstream in{std::string(text)};
  while (std::getline(in, item, ',')) {
    const auto first = item.find_first_not_of(" \t");
    if (first == std::string::npos) throw std::invalid_argument("empty polynomial coefficient");
    const auto last = item.find_last_not_of(" \t");
    std::size_t used = 0;
    const std::string token = item.substr(first, last - first + 1);
    const long long value = std::stoll(token, &used);
    if (used != token.size()) throw std::invalid_argument("bad polynomial coefficient '" + token + "'");
    coeffs.push_back(field.from_integer(value));
  }
  return make_poly(field, std::move(coeffs));
}

/// Accepts "1,2,0,1 @ F5" and returns the field with the polynomial.
inline std::pair<PrimeField, DensePoly<PrimeField>> parse_poly_with_field(std::string_view text) {
  const auto at = text.find('@');
  if (at == std::string_view::npos) throw std::invalid_argument("expected 'coeffs @ field'");
  PrimeField field = PrimeField::parse(text.substr(at + 1));
  return {field, parse_poly(field, text.substr(0, at))};
}

template <CoefficientRing R>
std::string format_poly(const R& ring, const DensePoly<R>& p) {
  if (p.is_zero()) return "0";
  std::string out;
  for (std::size_t i = 0; i < p.coeffs.size(); ++i) {
    if (i) out += ',';
    out += ring.format(p.coeffs[i]);
  }
  return out;
}

}  // namespace shinv

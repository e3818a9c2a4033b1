#pragma once

// Reference implementations used as ground truth in tests. They share no
// code with the Newton-iteration modules.

#include <algorithm>
#include <utility>
#include <vector>

#include "shinv/errors.hpp"
#include "shinv/field.hpp"
#include "shinv/natural.hpp"
#include "shinv/poly.hpp"

namespace shinv::oracle {

/// Schoolbook product.
Natural school_mult(const Natural& u, const Natural& v);

/// Long division in base B (Knuth's Algorithm D). Checks u = q v + r.
std::pair<Natural, Natural> school_divmod(const Natural& u, const Natural& v);

namespace detail {

template <Field F>
std::vector<typename F::Element> naive_mul(const F& f, const std::vector<typename F::Element>& a,
                                           const std::vector<typename F::Element>& b) {
  if (a.empty() || b.empty()) return {};
  std::vector<typename F::Element> c(a.size() + b.size() - 1, f.zero());
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) c[i + j] = f.add(c[i + j], f.mul(a[i], b[j]));
  return c;
}

template <Field F>
void strip(const F& f, std::vector<typename F::Element>& c) {
  while (!c.empty() && f.is_zero(c.back())) c.pop_back();
}

template <Field F>
void check_multiply_back(const F& f, const DensePoly<F>& u, const DensePoly<F>& v,
                         const DensePoly<F>& q, const DensePoly<F>& r) {
  auto back = naive_mul(f, q.coeffs, v.coeffs);
  back.resize(std::max(back.size(), r.coeffs.size()), f.zero());
  for (std::size_t i = 0; i < r.coeffs.size(); ++i) back[i] = f.add(back[i], r.coeffs[i]);
  strip(f, back);
  bool same = back.size() == u.coeffs.size() && r.degree() < v.degree();
  for (std::size_t i = 0; same && i < back.size(); ++i) same = f.equal(back[i], u.coeffs[i]);
  if (!same) throw std::logic_error("oracle: polynomial multiply-back failed");
}

}  // namespace detail

/// Synthetic long division over a field.
template <Field F>
std::pair<DensePoly<F>, DensePoly<F>> poly_longdiv(const F& f, const DensePoly<F>& u,
                                                   const DensePoly<F>& v) {
  if (v.is_zero()) throw DivisionByZero("polynomial division by zero");
  if (u.degree() < v.degree()) return {DensePoly<F>{}, u};
  const long n = v.degree();
  const long m = u.degree() - n;
  const auto lead_inv = *f.inverse(v.lead());
  std::vector<typename F::Element> rem = u.coeffs;
  std::vector<typename F::Element> quo(static_cast<std::size_t>(m + 1), f.zero());
  for (long i = m; i >= 0; --i) {
    const auto c = f.mul(rem[static_cast<std::size_t>(i + n)], lead_inv);
    quo[static_cast<std::size_t>(i)] = c;
    if (f.is_zero(c)) continue;
    for (long j = 0; j <= n; ++j) {
      auto& slot = rem[static_cast<std::size_t>(i + j)];
      slot = f.sub(slot, f.mul(c, v.coeffs[static_cast<std::size_t>(j)]));
    }
  }
  rem.resize(static_cast<std::size_t>(n));
  detail::strip(f, rem);
  detail::strip(f, quo);
  DensePoly<F> q(std::move(quo)), r(std::move(rem));
  detail::check_multiply_back(f, u, v, q, r);
  return {std::move(q), std::move(r)};
}

/// Quotient through the power-series inverse of the reversed divisor,
/// rev(q) = rev(u) * rev(v)^-1 mod x^(m+1), with m = deg u - deg v.
template <Field F>
std::pair<DensePoly<F>, DensePoly<F>> reverse_newton_divmod(const F& f, const DensePoly<F>& u,
                                                            const DensePoly<F>& v) {
  using Vec = std::vector<typename F::Element>;
  if (v.is_zero()) throw DivisionByZero("polynomial division by zero");
  if (u.degree() < v.degree()) return {DensePoly<F>{}, u};
  const std::size_t m = static_cast<std::size_t>(u.degree() - v.degree());
  Vec rv(v.coeffs.rbegin(), v.coeffs.rend());
  Vec ru(u.coeffs.rbegin(), u.coeffs.rend());
  auto truncate = [&](Vec a, std::size_t n) {
    if (a.size() > n) a.resize(n);
    return a;
  };
  // g <- g (2 - rv g) mod x^len, doubling len.
  Vec g{*f.inverse(rv[0])};
  std::size_t len = 1;
  while (len < m + 1) {
    len = std::min(2 * len, m + 1);
    Vec e = truncate(detail::naive_mul(f, truncate(rv, len), g), len);
    e.resize(len, f.zero());
    for (auto& x : e) x = f.neg(x);
    e[0] = f.add(e[0], f.add(f.one(), f.one()));
    g = truncate(detail::naive_mul(f, g, e), len);
  }
  Vec rq = truncate(detail::naive_mul(f, truncate(ru, m + 1), g), m + 1);
  rq.resize(m + 1, f.zero());
  Vec quo(rq.rbegin(), rq.rend());
  detail::strip(f, quo);
  DensePoly<F> q(std::move(quo));
  Vec back = detail::naive_mul(f, q.coeffs, v.coeffs);
  Vec rem = u.coeffs;
  for (std::size_t i = 0; i < back.size() && i < rem.size(); ++i) rem[i] = f.sub(rem[i], back[i]);
  rem.resize(static_cast<std::size_t>(v.degree()));
  detail::strip(f, rem);
  DensePoly<F> r(std::move(rem));
  detail::check_multiply_back(f, u, v, q, r);
  return {std::move(q), std::move(r)};
}

}  // namespace shinv::oracle

#pragma once

#include <array>
#include <concepts>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "shinv/errors.hpp"

namespace shinv {

/// Coefficient ring contract. `inverse` returns nullopt for non-units.
template <class R>
concept CoefficientRing = std::copy_constructible<R> &&
    requires(const R& r, const typename R::Element& a, const typename R::Element& b) {
      typename R::Element;
      { r.zero() } -> std::same_as<typename R::Element>;
      { r.one() } -> std::same_as<typename R::Element>;
      { r.add(a, b) } -> std::same_as<typename R::Element>;
      { r.sub(a, b) } -> std::same_as<typename R::Element>;
      { r.neg(a) } -> std::same_as<typename R::Element>;
      { r.mul(a, b) } -> std::same_as<typename R::Element>;
      { r.inverse(a) } -> std::same_as<std::optional<typename R::Element>>;
      { r.is_zero(a) } -> std::convertible_to<bool>;
      { r.equal(a, b) } -> std::convertible_to<bool>;
      { r.format(a) } -> std::convertible_to<std::string>;
    };

/// A commutative coefficient ring in which every nonzero element is a unit.
template <class F>
concept Field = CoefficientRing<F> && F::is_field;

/// Integers modulo a prime p < 2^61.
class PrimeField {
 public:
  using Element = std::uint64_t;
  static constexpr bool is_field = true;

  explicit PrimeField(std::uint64_t p);

  /// Accepts "F5", "GF(5)" or "5".
  static PrimeField parse(std::string_view name);

  std::uint64_t modulus() const noexcept { return p_; }

  Element zero() const noexcept { return 0; }
  Element one() const noexcept { return 1; }
  Element from_integer(long long x) const noexcept {
    long long r = x % static_cast<long long>(p_);
    return static_cast<Element>(r < 0 ? r + static_cast<long long>(p_) : r);
  }
  Element add(Element a, Element b) const noexcept {
    Element s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  Element sub(Element a, Element b) const noexcept { return a >= b ? a - b : a + p_ - b; }
  Element neg(Element a) const noexcept { return a == 0 ? 0 : p_ - a; }
  Element mul(Element a, Element b) const noexcept {
    return static_cast<Element>(static_cast<unsigned __int128>(a) * b % p_);
  }
  std::optional<Element> inverse(Element a) const noexcept;
  Element inv(Element a) const;
  bool is_zero(Element a) const noexcept { return a == 0; }
  bool equal(Element a, Element b) const noexcept { return a == b; }
  std::string format(Element a) const { return std::to_string(a); }
  std::string name() const { return "F" + std::to_string(p_); }

  friend bool operator==(const PrimeField&, const PrimeField&) = default;

 private:
  std::uint64_t p_;
};

/// n-by-n matrices over a field. Noncommutative for n >= 2.
template <Field F, std::size_t N>
class MatrixRing {
 public:
  using Scalar = typename F::Element;
  using Element = std::array<Scalar, N * N>;  // row-major
  static constexpr bool is_field = false;

  explicit MatrixRing(F field) : field_(field) {}

  const F& field() const noexcept { return field_; }

  Element zero() const {
    Element z;
    z.fill(field_.zero());
    return z;
  }
  Element one() const {
    Element id = zero();
    for (std::size_t i = 0; i < N; ++i) id[i * N + i] = field_.one();
    return id;
  }
  Element add(const Element& a, const Element& b) const {
    Element c;
    for (std::size_t i = 0; i < N * N; ++i) c[i] = field_.add(a[i], b[i]);
    return c;
  }
  Element sub(const Element& a, const Element& b) const {
    Element c;
    for (std::size_t i = 0; i < N * N; ++i) c[i] = field_.sub(a[i], b[i]);
    return c;
  }
  Element neg(const Element& a) const {
    Element c;
    for (std::size_t i = 0; i < N * N; ++i) c[i] = field_.neg(a[i]);
    return c;
  }
  Element mul(const Element& a, const Element& b) const {
    Element c = zero();
    for (std::size_t i = 0; i < N; ++i)
      for (std::size_t t = 0; t < N; ++t) {
        const Scalar& ait = a[i * N + t];
        if (field_.is_zero(ait)) continue;
        for (std::size_t j = 0; j < N; ++j)
          c[i * N + j] = field_.add(c[i * N + j], field_.mul(ait, b[t * N + j]));
      }
    return c;
  }

  /// Gauss-Jordan inverse; nullopt for singular matrices.
  std::optional<Element> inverse(const Element& a) const {
    Element m = a;
    Element inv = one();
    for (std::size_t col = 0; col < N; ++col) {
      std::size_t pivot = col;
      while (pivot < N && field_.is_zero(m[pivot * N + col])) ++pivot;
      if (pivot == N) return std::nullopt;
      if (pivot != col) {
        for (std::size_t j = 0; j < N; ++j) {
          std::swap(m[pivot * N + j], m[col * N + j]);
          std::swap(inv[pivot * N + j], inv[col * N + j]);
        }
      }
      const Scalar scale = *field_.inverse(m[col * N + col]);
      for (std::size_t j = 0; j < N; ++j) {
        m[col * N + j] = field_.mul(m[col * N + j], scale);
        inv[col * N + j] = field_.mul(inv[col * N + j], scale);
      }
      for (std::size_t row = 0; row < N; ++row) {
        if (row == col) continue;
        const Scalar factor = m[row * N + col];
        if (field_.is_zero(factor)) continue;
        for (std::size_t j = 0; j < N; ++j) {
          m[row * N + j] = field_.sub(m[row * N + j], field_.mul(factor, m[col * N + j]));
          inv[row * N + j] = field_.sub(inv[row * N + j], field_.mul(factor, inv[col * N + j]));
        }
      }
    }
    return inv;
  }

  bool is_zero(const Element& a) const {
    for (const auto& x : a)
      if (!field_.is_zero(x)) return false;
    return true;
  }
  bool equal(const Element& a, const Element& b) const {
    for (std::size_t i = 0; i < N * N; ++i)
      if (!field_.equal(a[i], b[i])) return false;
    return true;
  }
  std::string format(const Element& a) const {
    std::string out = "[";
    for (std::size_t i = 0; i < N; ++i) {
      if (i) out += ";";
      for (std::size_t j = 0; j < N; ++j) {
        if (j) out += " ";
        out += field_.format(a[i * N + j]);
      }
    }
    return out + "]";
  }

  friend bool operator==(const MatrixRing&, const MatrixRing&) = default;

 private:
  F field_;
};

}  // namespace shinv

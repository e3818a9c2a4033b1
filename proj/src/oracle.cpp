#include "shinv/oracle.hpp"

#include <stdexcept>

namespace shinv::oracle {

namespace {

using Wide = unsigned __int128;

std::vector<Digit> raw_mult(const std::vector<Digit>& a, const std::vector<Digit>& b, Wide B) {
  if (a.empty() || b.empty()) return {};
  std::vector<Digit> out(a.size() + b.size(), 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    Wide carry = 0;
    for (std::size_t j = 0; j < b.size(); ++j) {
      Wide t = static_cast<Wide>(a[i]) * b[j] + out[i + j] + carry;
      out[i + j] = static_cast<Digit>(t % B);
      carry = t / B;
    }
    std::size_t pos = i + b.size();
    while (carry != 0) {
      Wide t = out[pos] + carry;
      out[pos] = static_cast<Digit>(t % B);
      carry = t / B;
      ++pos;
    }
  }
  return out;
}

std::vector<Digit> digits_of(const Natural& u) { return {u.digits().begin(), u.digits().end()}; }

}  // namespace

Natural school_mult(const Natural& u, const Natural& v) {
  if (!(u.radix() == v.radix())) throw ContractViolation("school_mult: operands use different bases");
  return Natural::from_digits(u.radix(), raw_mult(digits_of(u), digits_of(v), u.base()));
}

std::pair<Natural, Natural> school_divmod(const Natural& u, const Natural& v) {
  if (v.is_zero()) throw DivisionByZero("division by zero");
  if (!(u.radix() == v.radix())) throw ContractViolation("school_divmod: operands use different bases");
  const Radix radix = u.radix();
  const Wide B = radix.base();
  if (u < v) return {Natural(radix), u};

  const std::size_t n = v.size();
  const std::size_t m = u.size() - n;
  std::vector<Digit> q(m + 1, 0);
  std::vector<Digit> r;

  if (n == 1) {
    Wide rem = 0;
    const Wide d = v.digit(0);
    for (std::size_t i = u.size(); i-- > 0;) {
      Wide cur = rem * B + u.digit(i);
      q[i] = static_cast<Digit>(cur / d);
      rem = cur % d;
    }
    if (rem) r.push_back(static_cast<Digit>(rem));
  } else {
    // Normalize so the top divisor digit is at least B / 2.
    const Wide scale = B / (static_cast<Wide>(v.digit(n - 1)) + 1);
    std::vector<Digit> un = raw_mult(digits_of(u), {static_cast<Digit>(scale)}, B);
    std::vector<Digit> vn = raw_mult(digits_of(v), {static_cast<Digit>(scale)}, B);
    un.resize(u.size() + 1, 0);
    vn.resize(n);
    for (std::size_t j = m + 1; j-- > 0;) {
      const Wide top = static_cast<Wide>(un[j + n]) * B + un[j + n - 1];
      Wide qhat = top / vn[n - 1];
      Wide rhat = top % vn[n - 1];
      while (qhat >= B || qhat * vn[n - 2] > rhat * B + un[j + n - 2]) {
        --qhat;
        rhat += vn[n - 1];
        if (rhat >= B) break;
      }
      // un[j .. j+n] -= qhat * vn
      Wide borrow = 0;
      Wide carry = 0;
      for (std::size_t i = 0; i < n; ++i) {
        Wide p = qhat * vn[i] + carry;
        carry = p / B;
        Wide sub = static_cast<Wide>(p % B) + borrow;
        if (un[i + j] >= sub) {
          un[i + j] = static_cast<Digit>(un[i + j] - sub);
          borrow = 0;
        } else {
          un[i + j] = static_cast<Digit>(un[i + j] + B - sub);
          borrow = 1;
        }
      }
      Wide sub = carry + borrow;
      bool negative = un[j + n] < sub;
      un[j + n] = static_cast<Digit>(negative ? un[j + n] + B - sub : un[j + n] - sub);
      if (negative) {
        --qhat;
        Wide c = 0;
        for (std::size_t i = 0; i < n; ++i) {
          Wide t = static_cast<Wide>(un[i + j]) + vn[i] + c;
          un[i + j] = static_cast<Digit>(t % B);
          c = t / B;
        }
        un[j + n] = static_cast<Digit>((un[j + n] + c) % B);
      }
      q[j] = static_cast<Digit>(qhat);
    }
    // Undo the normalization on the remainder.
    Wide rem = 0;
    r.assign(n, 0);
    for (std::size_t i = n; i-- > 0;) {
      Wide cur = rem * B + un[i];
      r[i] = static_cast<Digit>(cur / scale);
      rem = cur % scale;
    }
  }

  Natural quotient = Natural::from_digits(radix, std::move(q));
  Natural remainder = Natural::from_digits(radix, std::move(r));
  if (!(remainder < v) || !(add(school_mult(quotient, v), remainder) == u)) {
    throw std::logic_error("oracle: integer multiply-back failed");
  }
  return {std::move(quotient), std::move(remainder)};
}

}  // namespace shinv::oracle

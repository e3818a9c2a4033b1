#include "shinv/multiply.hpp"

#include <algorithm>
#include <stdexcept>
#include <vector>

#include "kernels.hpp"
#include "shinv/errors.hpp"

namespace shinv {

std::string_view to_string(MultStrategy strategy) {
  return strategy == MultStrategy::schoolbook ? "schoolbook" : "karatsuba";
}

MultStrategy parse_mult_strategy(std::string_view name) {
  if (name == "schoolbook" || name == "school") return MultStrategy::schoolbook;
  if (name == "karatsuba") return MultStrategy::karatsuba;
  throw std::invalid_argument("unknown multiplication strategy '" + std::string(name) + "'");
}

namespace {

std::vector<Digit> product_digits(const Radix& radix, std::span<const Digit> a,
                                  std::span<const Digit> b, const MultBackend& backend) {
  std::vector<Digit> out(a.size() + b.size());
  kernels::with_split(radix, [&](const auto& s) {
    if (backend.strategy == MultStrategy::karatsuba) {
      kernels::mul_karatsuba(s, out.data(), a.data(), a.size(), b.data(), b.size(),
                             std::max<std::size_t>(backend.karatsuba_threshold, 2));
    } else {
      kernels::mul_basecase(s, out.data(), a.data(), a.size(), b.data(), b.size());
    }
  });
  return out;
}

}  // namespace

Natural mult(const Natural& u, const Natural& v, const MultBackend& backend) {
  if (!(u.radix() == v.radix())) throw ContractViolation("mult: operands use different bases");
  if (u.is_zero() || v.is_zero()) return Natural(u.radix());
  return DigitAccess::adopt(u.radix(), product_digits(u.radix(), u.digits(), v.digits(), backend));
}

Natural mult_mod(const Natural& u, const Natural& v, std::size_t e, const MultBackend& backend) {
  if (!(u.radix() == v.radix())) throw ContractViolation("mult_mod: operands use different bases");
  if (e == 0 || u.is_zero() || v.is_zero()) return Natural(u.radix());
  auto a = u.digits().first(std::min(e, u.size()));
  auto b = v.digits().first(std::min(e, v.size()));
  if (backend.strategy == MultStrategy::schoolbook) {
    std::vector<Digit> out(e);
    kernels::with_split(u.radix(), [&](const auto& s) {
      kernels::mul_low_basecase(s, out.data(), a.data(), a.size(), b.data(), b.size(), e);
    });
    return DigitAccess::adopt(u.radix(), std::move(out));
  }
  std::vector<Digit> full = product_digits(u.radix(), a, b, backend);
  if (full.size() > e) full.resize(e);
  return DigitAccess::adopt(u.radix(), std::move(full));
}

}  // namespace shinv

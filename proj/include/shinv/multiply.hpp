#pragma once

#include <cstddef>
#include <string>
#include <string_view>

#include "shinv/natural.hpp"

namespace shinv {

enum class MultStrategy { schoolbook, karatsuba };

/// Multiplication strategy. Every strategy returns bit-identical products.
struct MultBackend {
  MultStrategy strategy = MultStrategy::karatsuba;
  /// Operands shorter than this many digits use the schoolbook kernel.
  std::size_t karatsuba_threshold = 32;

  static MultBackend schoolbook() { return {MultStrategy::schoolbook, 0}; }
  static MultBackend karatsuba(std::size_t threshold = 32) {
    return {MultStrategy::karatsuba, threshold};
  }
};

std::string_view to_string(MultStrategy strategy);
MultStrategy parse_mult_strategy(std::string_view name);

Natural mult(const Natural& u, const Natural& v, const MultBackend& backend = {});

/// (u * v) rem B^e, computed from the e-digit prefixes of the operands.
Natural mult_mod(const Natural& u, const Natural& v, std::size_t e,
                 const MultBackend& backend = {});

}  // namespace shinv

#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "shinv/generic.hpp"
#include "shinv/multiply.hpp"

namespace shinv::cli {

enum class OutputFormat { text, csv, json };

OutputFormat parse_format(std::string_view name);

/// Quotient and remainder of signed integers under truncated division:
/// sign(q) = sign(u) sign(v), sign(r) = sign(u).
struct SignedDivision {
  std::string q;
  std::string r;
  int delta = 0;
};

SignedDivision signed_divmod(std::string_view u, std::string_view v, std::uint64_t base,
                             RefineVariant variant, const MultBackend& backend,
                             RefineStats* stats = nullptr);

struct BenchPoint {
  long digits = 0;
  std::int64_t median_ns = 0;
  /// median_ns over the previous size's median_ns; 0 for the first size.
  double ratio = 0;
  long iterations = 0;
};

/// Median wall time of shinv(v, 2N) for random N-digit v in base 2^32,
/// after one warmup run.
std::vector<BenchPoint> bench_shinv(const std::vector<long>& sizes, RefineVariant variant,
                                    const MultBackend& backend, int runs = 5,
                                    std::uint64_t seed = 1);

/// Runs one command line. Returns the process exit code: 0 on success,
/// 2 on contract errors such as division by zero.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace shinv::cli

#pragma once

// Exact dynamics of the floor-discretised Newton map
//   S_Z(w) = w + floor(w (1 - (v/u) w))
// and its real counterpart S_R(x) = x (2 - (v/u) x).

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

namespace shinv::dynamics {

mpz_class s_z_map(const mpz_class& u, const mpz_class& v, const mpz_class& w);

mpq_class s_r_map(const mpq_class& x, const mpz_class& u, const mpz_class& v);

/// i-fold S_R in closed form: (u/v) (1 - (1 - (v/u) x)^(2^i)).
mpq_class s_r_iterate(const mpq_class& x, const mpz_class& u, const mpz_class& v, unsigned i);

/// i-fold S_R by repeated application.
mpq_class s_r_iterate_direct(const mpq_class& x, const mpz_class& u, const mpz_class& v, unsigned i);

/// All w with S_Z(w) = w, found by scanning 0 .. floor(u/v). Requires 1 < v < u.
std::vector<mpz_class> fixed_points(const mpz_class& u, const mpz_class& v);

/// {0, 1, floor(u/v)}, plus floor(u/v) - 1 when is_floor_minus_one_fixed.
std::vector<mpz_class> predicted_fixed_points(const mpz_class& u, const mpz_class& v);

/// u/v in (1, 4) or in [j, j + 1/(j - 2)) for some integer j >= 4.
bool is_floor_minus_one_fixed(const mpz_class& u, const mpz_class& v);
bool is_floor_minus_one_fixed(std::int64_t u, std::int64_t v);

/// Number of 1 < v < u for which floor(u/v) - 1 is a fixed point.
/// The v range is split across `threads` workers.
std::int64_t census_floor_minus_one(std::int64_t u, unsigned threads = 1);

/// floor((pi^2 - 5) / 6 * u).
std::int64_t census_estimate(std::int64_t u);

struct CensusRow {
  std::int64_t u = 0;
  std::int64_t actual = 0;
  std::int64_t estimate = 0;
  std::int64_t abs_err = 0;
  double rel_err = 0;
};

CensusRow census_row(std::int64_t u, unsigned threads = 1);

/// "u, actual, estimate, abs_err, rel_err" lines; rel_err like 8.557e-3.
std::string format_census_csv_row(const CensusRow& row);
std::string census_csv_header();
/// Three significant digits, exponent without padding: 8.557e-3.
std::string format_sci(double x);

enum class Outcome { fixed_point, diverged, budget_exceeded };

std::string to_string(Outcome outcome);

struct IterationTrace {
  mpz_class u, v, w0;
  /// w0 first; each entry is S_Z of the previous one.
  std::vector<mpz_class> iterates;
  Outcome outcome = Outcome::budget_exceeded;
  /// Set for fixed_point.
  std::optional<mpz_class> limit;

  /// Map applications before the fixed point was reached.
  std::size_t steps() const { return iterates.empty() ? 0 : iterates.size() - 1; }
};

/// Minimal n >= 0 with u <= v 2^(2^n), i.e. ceil(log2 log2(u/v)) for u/v > 2.
unsigned ceil_log2_log2(const mpz_class& u, const mpz_class& v);

/// 10 + 4 ceil(log2 log2(max(u/v, 4))).
unsigned default_budget(const mpz_class& u, const mpz_class& v);

/// Iterates S_Z from w0 until a fixed point, until an iterate leaves
/// [0, floor(2u/v)], or until `budget` applications.
IterationTrace steps_to_converge(const mpz_class& u, const mpz_class& v, const mpz_class& w0,
                                 std::optional<unsigned> budget = std::nullopt);

/// "11 → 13 → 14 (fixed)".
std::string format_trace(const IterationTrace& trace);

}  // namespace shinv::dynamics

#include "shinv/dynamics.hpp"

#include <cmath>
#include <cstdio>
#include <numbers>
#include <stdexcept>
#include <thread>

#include "shinv/errors.hpp"

namespace shinv::dynamics {

namespace {

void require_ordered(const mpz_class& u, const mpz_class& v) {
  require(1 < v && v < u, "dynamics: requires 1 < v < u");
}

std::int64_t census_range(std::int64_t u, std::int64_t from, std::int64_t to) {
  std::int64_t count = 0;
  for (std::int64_t v = from; v < to; ++v) count += is_floor_minus_one_fixed(u, v) ? 1 : 0;
  return count;
}

}  // namespace

mpz_class s_z_map(const mpz_class& u, const mpz_class& v, const mpz_class& w) {
  require(u > 0, "s_z_map: requires u > 0");
  mpz_class num = w * (u - v * w);
  mpz_class q;
  mpz_fdiv_q(q.get_mpz_t(), num.get_mpz_t(), u.get_mpz_t());
  return w + q;
}

mpq_class s_r_map(const mpq_class& x, const mpz_class& u, const mpz_class& v) {
  mpq_class ratio(v, u);
  ratio.canonicalize();
  mpq_class out = x * (2 - ratio * x);
  out.canonicalize();
  return out;
}

mpq_class s_r_iterate(const mpq_class& x, const mpz_class& u, const mpz_class& v, unsigned i) {
  mpq_class ratio(v, u);
  ratio.canonicalize();
  mpq_class base = 1 - ratio * x;
  mpq_class power;
  mpz_class exponent = mpz_class(1) << i;
  mpz_pow_ui(mpq_numref(power.get_mpq_t()), mpq_numref(base.get_mpq_t()), exponent.get_ui());
  mpz_pow_ui(mpq_denref(power.get_mpq_t()), mpq_denref(base.get_mpq_t()), exponent.get_ui());
  power.canonicalize();
  mpq_class out = mpq_class(u, v) * (1 - power);
  out.canonicalize();
  return out;
}

mpq_class s_r_iterate_direct(const mpq_class& x, const mpz_class& u, const mpz_class& v, unsigned i) {
  mpq_class out = x;
  for (unsigned n = 0; n < i; ++n) out = s_r_map(out, u, v);
  return out;
}

std::vector<mpz_class> fixed_points(const mpz_class& u, const mpz_class& v) {
  require_ordered(u, v);
  const mpz_class top = u / v;
  std::vector<mpz_class> out;
  for (mpz_class w = 0; w <= top; ++w)
    if (s_z_map(u, v, w) == w) out.push_back(w);
  return out;
}

std::vector<mpz_class> predicted_fixed_points(const mpz_class& u, const mpz_class& v) {
  require_ordered(u, v);
  const mpz_class j = u / v;
  std::vector<mpz_class> out{0, 1};
  if (j - 1 > 1 && is_floor_minus_one_fixed(u, v)) out.push_back(j - 1);
  if (j > 1) out.push_back(j);
  return out;
}

bool is_floor_minus_one_fixed(const mpz_class& u, const mpz_class& v) {
  require_ordered(u, v);
  if (u < 4 * v) return true;
  const mpz_class j = u / v;
  // u/v < j + 1/(j - 2)  <=>  u (j - 2) < v (j - 1)^2
  return u * (j - 2) < v * (j - 1) * (j - 1);
}

bool is_floor_minus_one_fixed(std::int64_t u, std::int64_t v) {
  require(1 < v && v < u, "dynamics: requires 1 < v < u");
  if (u < 4 * static_cast<__int128>(v)) return true;
  const __int128 j = u / v;
  return static_cast<__int128>(u) * (j - 2) < static_cast<__int128>(v) * (j - 1) * (j - 1);
}

std::int64_t census_floor_minus_one(std::int64_t u, unsigned threads) {
  require(u > 2, "census: requires u > 2");
  threads = std::max(1u, threads);
  if (threads == 1) return census_range(u, 2, u);
  std::vector<std::int64_t> partial(threads, 0);
  std::vector<std::thread> workers;
  const std::int64_t span = (u - 2 + threads - 1) / threads;
  for (unsigned t = 0; t < threads; ++t) {
    const std::int64_t from = 2 + span * t;
    const std::int64_t to = std::min(u, from + span);
    workers.emplace_back([&, t, from, to] { partial[t] = from < to ? census_range(u, from, to) : 0; });
  }
  for (auto& w : workers) w.join();
  std::int64_t total = 0;
  for (auto p : partial) total += p;
  return total;
}

std::int64_t census_estimate(std::int64_t u) {
  require(u > 2, "census: requires u > 2");
  const long double pi = std::numbers::pi_v<long double>;
  return static_cast<std::int64_t>(std::floor((pi * pi - 5) / 6 * static_cast<long double>(u)));
}

CensusRow census_row(std::int64_t u, unsigned threads) {
  CensusRow row;
  row.u = u;
  row.actual = census_floor_minus_one(u, threads);
  row.estimate = census_estimate(u);
  row.abs_err = row.actual > row.estimate ? row.actual - row.estimate : row.estimate - row.actual;
  row.rel_err = row.actual ? static_cast<double>(row.abs_err) / static_cast<double>(row.actual) : 0.0;
  return row;
}

std::string format_sci(double x) {
  if (x == 0) return "0";
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.3e", x);
  std::string s(buf);
  const auto e = s.find('e');
  const int exponent = std::stoi(s.substr(e + 1));
  return s.substr(0, e) + "e" + std::to_string(exponent);
}

std::string census_csv_header() { return "u, actual, estimate, abs_err, rel_err"; }

std::string format_census_csv_row(const CensusRow& row) {
  return std::to_string(row.u) + ", " + std::to_string(row.actual) + ", " +
         std::to_string(row.estimate) + ", " + std::to_string(row.abs_err) + ", " +
         format_sci(row.rel_err);
}

std::string to_string(Outcome outcome) {
  switch (outcome) {
    case Outcome::fixed_point: return "fixed";
    case Outcome::diverged: return "diverged";
    case Outcome::budget_exceeded: return "budget exceeded";
  }
  return "?";
}

unsigned ceil_log2_log2(const mpz_class& u, const mpz_class& v) {
  require(v > 0, "ceil_log2_log2: requires v > 0");
  unsigned n = 0;
  while (u > v * (mpz_class(1) << (1ul << n))) ++n;
  return n;
}

unsigned default_budget(const mpz_class& u, const mpz_class& v) {
  const mpz_class floor4 = 4 * v;
  return 10 + 4 * ceil_log2_log2(u > floor4 ? u : floor4, v);
}

IterationTrace steps_to_converge(const mpz_class& u, const mpz_class& v, const mpz_class& w0,
                                 std::optional<unsigned> budget) {
  require(u > 0 && v > 0, "steps_to_converge: requires positive u and v");
  IterationTrace trace{u, v, w0, {w0}, Outcome::budget_exceeded, std::nullopt};
  const mpz_class bound = 2 * u / v;
  if (w0 < 0) {
    trace.outcome = Outcome::diverged;
    return trace;
  }
  const unsigned limit = budget ? *budget : default_budget(u, v);
  mpz_class w = w0;
  for (unsigned i = 0; i <= limit; ++i) {
    mpz_class next = s_z_map(u, v, w);
    if (next == w) {
      trace.outcome = Outcome::fixed_point;
      trace.limit = w;
      return trace;
    }
    if (i == limit) break;
    trace.iterates.push_back(next);
    if (next < 0 || next > bound) {
      trace.outcome = Outcome::diverged;
      return trace;
    }
    w = std::move(next);
  }
  trace.outcome = Outcome::budget_exceeded;
  return trace;
}

std::string format_trace(const IterationTrace& trace) {
  std::string out;
  for (std::size_t i = 0; i < trace.iterates.size(); ++i) {
    if (i) out += " → ";
    out += trace.iterates[i].get_str();
  }
  return out + " (" + to_string(trace.outcome) + ")";
}

}  // namespace shinv::dynamics

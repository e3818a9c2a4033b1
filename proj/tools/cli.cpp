#include "cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <chrono>
#include <iomanip>
#include <ostream>
#include <random>
#include <sstream>

#include "shinv/dynamics.hpp"
#include "shinv/errors.hpp"
#include "shinv/int_shinv.hpp"
#include "shinv/poly.hpp"

namespace shinv::cli {

using json = nlohmann::ordered_json;

OutputFormat parse_format(std::string_view name) {
  if (name == "text") return OutputFormat::text;
  if (name == "csv") return OutputFormat::csv;
  if (name == "json") return OutputFormat::json;
  throw std::invalid_argument("unknown output format '" + std::string(name) + "'");
}

namespace {

struct SignedInput {
  bool negative = false;
  Natural magnitude;
};

SignedInput parse_signed(std::string_view text, const Radix& radix) {
  SignedInput in;
  if (!text.empty() && (text[0] == '-' || text[0] == '+')) {
    in.negative = text[0] == '-';
    text.remove_prefix(1);
  }
  in.magnitude = Natural::parse(text, radix);
  if (in.magnitude.is_zero()) in.negative = false;
  return in;
}

std::string signed_string(bool negative, const Natural& magnitude) {
  return (negative && !magnitude.is_zero() ? "-" : "") + magnitude.to_string();
}

std::int64_t elapsed_ns(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration_cast<std::chrono::nanoseconds>(std::chrono::steady_clock::now() - start)
      .count();
}

json stats_json(const RefineStats& stats, std::int64_t wall_ns) {
  return json{{"iterations", stats.iterations}, {"mults", stats.mults}, {"wall_ns", wall_ns}};
}

json envelope(std::string_view command, json inputs, json result, const RefineStats& stats,
              std::int64_t wall_ns) {
  return json{{"command", command},
              {"inputs", std::move(inputs)},
              {"result", std::move(result)},
              {"stats", stats_json(stats, wall_ns)}};
}

std::vector<long> parse_sizes(const std::string& text) {
  std::vector<long> sizes;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    const long n = std::stol(item);
    if (n < 1) throw std::invalid_argument("sizes must be positive");
    sizes.push_back(n);
  }
  if (sizes.empty()) throw std::invalid_argument("no sizes given");
  return sizes;
}

std::vector<std::int64_t> census_points(std::int64_t u_max) {
  std::vector<std::int64_t> points;
  for (std::int64_t u = 10; u <= u_max; u *= 10) {
    points.push_back(u);
    if (u > INT64_MAX / 10) break;
  }
  if (points.empty() || points.back() != u_max) points.push_back(u_max);
  return points;
}

}  // namespace

SignedDivision signed_divmod(std::string_view u, std::string_view v, std::uint64_t base,
                             RefineVariant variant, const MultBackend& backend,
                             RefineStats* stats) {
  const Radix radix(base);
  auto a = parse_signed(u, radix);
  auto b = parse_signed(v, radix);
  IntShinvOptions options;
  options.backend = backend;
  auto res = divmod(a.magnitude, b.magnitude, variant, options, stats);
  return {signed_string(a.negative != b.negative, res.q), signed_string(a.negative, res.r), res.delta};
}

std::vector<BenchPoint> bench_shinv(const std::vector<long>& sizes, RefineVariant variant,
                                    const MultBackend& backend, int runs, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  IntShinvOptions options;
  options.backend = backend;
  std::vector<BenchPoint> points;
  for (long n : sizes) {
    std::vector<Digit> digits(static_cast<std::size_t>(n));
    for (auto& d : digits) d = static_cast<Digit>(rng());
    digits.back() |= 1u << 31;
    const Natural v = Natural::from_digits(Radix{}, std::move(digits));
    RefineStats stats;
    shinv::shinv(v, 2 * n, variant, options, &stats);
    std::vector<std::int64_t> times;
    for (int i = 0; i < std::max(runs, 1); ++i) {
      const auto start = std::chrono::steady_clock::now();
      stats = {};
      shinv::shinv(v, 2 * n, variant, options, &stats);
      times.push_back(elapsed_ns(start));
    }
    std::sort(times.begin(), times.end());
    BenchPoint p{n, times[times.size() / 2], 0.0, stats.iterations};
    if (!points.empty() && points.back().median_ns > 0)
      p.ratio = static_cast<double>(p.median_ns) / static_cast<double>(points.back().median_ns);
    points.push_back(p);
  }
  return points;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact quotients by whole shifted inverse", "shinv"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all");

  std::string format_name = "text";
  std::string variant_name = "refine3";
  std::string mult_name = "karatsuba";
  std::uint64_t base = kWordBase;

  auto add_common = [&](CLI::App* cmd, bool with_base) {
    cmd->add_option("--format", format_name, "text, csv or json")->check(CLI::IsMember({"text", "csv", "json"}));
    if (with_base) {
      cmd->add_option("--base", base, "digit base B")->capture_default_str();
      cmd->add_option("--variant", variant_name, "refine1, refine2 or refine3")->capture_default_str();
      cmd->add_option("--mult", mult_name, "schoolbook or karatsuba")->capture_default_str();
    }
  };

  std::string u_text, v_text, w_text;
  auto* div = app.add_subcommand("div", "quotient and remainder, truncated toward zero");
  div->add_option("u", u_text, "dividend (decimal or 0x hex, may be signed)")->required();
  div->add_option("v", v_text, "divisor")->required();
  add_common(div, true);

  long h = 0;
  auto* shinv_cmd = app.add_subcommand("shinv", "floor(B^h / v)");
  shinv_cmd->add_option("v", v_text, "divisor")->required();
  shinv_cmd->add_option("exponent", h, "shift exponent h")->required()->check(CLI::NonNegativeNumber);
  add_common(shinv_cmd, true);

  std::string field_name = "F5";
  auto* pdiv = app.add_subcommand("pdiv", "polynomial quotient and remainder over a prime field");
  pdiv->add_option("u", u_text, "coefficients low to high, e.g. 1,2,0,1")->required();
  pdiv->add_option("v", v_text, "divisor coefficients")->required();
  pdiv->add_option("--field", field_name, "prime field, e.g. F5")->capture_default_str();
  pdiv->add_option("--variant", variant_name, "refine1, refine2 or refine3")->capture_default_str();
  add_common(pdiv, false);

  std::int64_t u_max = 0;
  unsigned threads = 1;
  auto* census = app.add_subcommand("census", "count v with floor(u/v) - 1 fixed, for u = 10, 100, ..");
  census->add_option("u-max", u_max, "largest u")->required()->check(CLI::Range(std::int64_t{3}, INT64_MAX));
  census->add_option("--threads", threads, "worker threads")->capture_default_str();
  add_common(census, false);

  std::optional<unsigned> budget;
  auto* trace = app.add_subcommand("trace", "iterate w -> w + floor(w (u - v w) / u)");
  trace->add_option("u", u_text)->required();
  trace->add_option("v", v_text)->required();
  trace->add_option("w0", w_text)->required();
  trace->add_option("--budget", budget, "maximum map applications");
  add_common(trace, false);

  std::string sizes_text = "256,512,1024,2048";
  int runs = 5;
  auto* bench = app.add_subcommand("bench", "median shinv time for N-digit divisors, h = 2N");
  bench->add_option("--sizes", sizes_text, "digit counts, base 2^32")->capture_default_str();
  bench->add_option("--runs", runs, "timed runs per size")->capture_default_str()->check(CLI::PositiveNumber);
  bench->add_option("--variant", variant_name)->capture_default_str();
  bench->add_option("--mult", mult_name)->capture_default_str();
  add_common(bench, false);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err);
  }

  try {
    const auto format = parse_format(format_name);
    const auto variant = parse_refine_variant(variant_name);
    MultBackend backend;
    backend.strategy = parse_mult_strategy(mult_name);

    if (div->parsed()) {
      RefineStats stats;
      const auto start = std::chrono::steady_clock::now();
      auto res = signed_divmod(u_text, v_text, base, variant, backend, &stats);
      const auto ns = elapsed_ns(start);
      if (format == OutputFormat::json) {
        out << envelope("div",
                        {{"u", u_text}, {"v", v_text}, {"base", base}, {"variant", variant_name},
                         {"mult", mult_name}},
                        {{"q", res.q}, {"r", res.r}}, stats, ns)
                   .dump()
            << "\n";
      } else if (format == OutputFormat::csv) {
        out << "q,r\n" << res.q << "," << res.r << "\n";
      } else {
        out << "q=" << res.q << " r=" << res.r << "\n";
      }
    } else if (shinv_cmd->parsed()) {
      const Radix radix(base);
      const Natural v = Natural::parse(v_text, radix);
      IntShinvOptions options;
      options.backend = backend;
      RefineStats stats;
      const auto start = std::chrono::steady_clock::now();
      const Natural w = shinv::shinv(v, h, variant, options, &stats);
      const auto ns = elapsed_ns(start);
      std::string w0 = "n/a";
      if (base >= 16 && prec(v) >= 2 && !(power_of_base(radix, h) < add(v, v)))
        w0 = initial_value(v, h).w0.to_string();
      if (format == OutputFormat::json) {
        out << envelope("shinv", {{"v", v_text}, {"h", h}, {"base", base}, {"variant", variant_name}},
                        {{"shinv", w.to_string()}, {"w0", w0}}, stats, ns)
                   .dump()
            << "\n";
      } else if (format == OutputFormat::csv) {
        out << "shinv,w0,iterations\n" << w.to_string() << "," << w0 << "," << stats.iterations << "\n";
      } else {
        out << w.to_string() << "\n"
            << "w0=" << w0 << " iterations=" << stats.iterations << " mults=" << stats.mults << "\n";
      }
    } else if (pdiv->parsed()) {
      const PrimeField field = PrimeField::parse(field_name);
      auto strip_field = [](std::string_view s) { return s.substr(0, s.find('@')); };
      const auto u = parse_poly(field, strip_field(u_text));
      const auto v = parse_poly(field, strip_field(v_text));
      const auto start = std::chrono::steady_clock::now();
      auto [q, r] = pdivmod(field, u, v, variant);
      const auto ns = elapsed_ns(start);
      const auto qs = format_poly(field, q), rs = format_poly(field, r);
      if (format == OutputFormat::json) {
        out << envelope("pdiv", {{"u", u_text}, {"v", v_text}, {"field", field.name()}},
                        {{"q", qs}, {"r", rs}}, RefineStats{}, ns)
                   .dump()
            << "\n";
      } else if (format == OutputFormat::csv) {
        out << "q,r\n\"" << qs << "\",\"" << rs << "\"\n";
      } else {
        out << "q=\"" << qs << "\" r=\"" << rs << "\"\n";
      }
    } else if (census->parsed()) {
      const auto start = std::chrono::steady_clock::now();
      std::vector<dynamics::CensusRow> rows;
      for (auto u : census_points(u_max)) rows.push_back(dynamics::census_row(u, threads));
      const auto ns = elapsed_ns(start);
      if (format == OutputFormat::json) {
        json table = json::array();
        for (const auto& row : rows)
          table.push_back({{"u", row.u}, {"actual", row.actual}, {"estimate", row.estimate},
                           {"abs_err", row.abs_err}, {"rel_err", row.rel_err}});
        out << envelope("census", {{"u_max", u_max}}, table, RefineStats{}, ns).dump() << "\n";
      } else if (format == OutputFormat::csv) {
        out << dynamics::census_csv_header() << "\n";
        for (const auto& row : rows) out << dynamics::format_census_csv_row(row) << "\n";
      } else {
        out << std::setw(14) << "u" << std::setw(14) << "actual" << std::setw(14) << "estimate"
            << std::setw(10) << "abs_err" << std::setw(12) << "rel_err" << "\n";
        for (const auto& row : rows)
          out << std::setw(14) << row.u << std::setw(14) << row.actual << std::setw(14)
              << row.estimate << std::setw(10) << row.abs_err << std::setw(12)
              << dynamics::format_sci(row.rel_err) << "\n";
      }
    } else if (trace->parsed()) {
      const mpz_class u(u_text), v(v_text), w0(w_text);
      auto t = dynamics::steps_to_converge(u, v, w0, budget);
      if (format == OutputFormat::json) {
        json iterates = json::array();
        for (const auto& w : t.iterates) iterates.push_back(w.get_str());
        json result{{"iterates", iterates}, {"outcome", dynamics::to_string(t.outcome)},
                    {"limit", t.limit ? json(t.limit->get_str()) : json(nullptr)}};
        RefineStats stats;
        stats.iterations = static_cast<long>(t.steps());
        out << envelope("trace", {{"u", u_text}, {"v", v_text}, {"w0", w_text}}, result, stats, 0).dump()
            << "\n";
      } else if (format == OutputFormat::csv) {
        out << "step,w\n";
        for (std::size_t i = 0; i < t.iterates.size(); ++i) out << i << "," << t.iterates[i].get_str() << "\n";
      } else {
        out << dynamics::format_trace(t) << "\n";
      }
    } else if (bench->parsed()) {
      const auto points = bench_shinv(parse_sizes(sizes_text), variant, backend, runs);
      if (format == OutputFormat::json) {
        json table = json::array();
        for (const auto& p : points)
          table.push_back({{"digits", p.digits}, {"median_ns", p.median_ns}, {"ratio", p.ratio},
                           {"iterations", p.iterations}});
        out << envelope("bench", {{"sizes", sizes_text}, {"variant", variant_name}, {"mult", mult_name}},
                        table, RefineStats{}, 0)
                   .dump()
            << "\n";
      } else {
        const char* sep = format == OutputFormat::csv ? "," : "  ";
        out << "digits" << sep << "median_ns" << sep << "ratio" << sep << "iterations\n";
        for (const auto& p : points) {
          std::ostringstream ratio;
          ratio << std::fixed << std::setprecision(2) << p.ratio;
          out << p.digits << sep << p.median_ns << sep << (p.ratio > 0 ? ratio.str() : "-") << sep
              << p.iterations << "\n";
        }
      }
    }
  } catch (const DivisionByZero& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const ContractViolation& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::out_of_range& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}

}  // namespace shinv::cli

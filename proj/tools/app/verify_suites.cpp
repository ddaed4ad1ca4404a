#include <algorithm>
#include <cmath>
#include <functional>
#include <map>
#include <numbers>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "app/commands.hpp"
#include "mmo/error.hpp"
#include "mmo/one_round.hpp"
#include "mmo/oracles.hpp"
#include "mmo/potentials.hpp"

namespace mmo::app {
namespace {

constexpr double kPi = std::numbers::pi;

std::string num(double x) {
  std::ostringstream s;
  s.precision(6);
  s << x;
  return s.str();
}

struct NamedFunction {
  std::string name;
  RealFunction f;
  std::vector<double> breakpoints;
  bool even;
};

std::vector<NamedFunction> convex_corpus() {
  return {
      {"x^2", [](double x) { return x * x; }, {}, true},
      {"|x|", [](double x) { return std::abs(x); }, {0.0}, true},
      {"x^4", [](double x) { return x * x * x * x; }, {}, true},
      {"|x|^1.5", [](double x) { return std::pow(std::abs(x), 1.5); }, {0.0}, true},
      {"exp(x)", [](double x) { return std::exp(x); }, {}, false},
      {"exp(-2x)", [](double x) { return std::exp(-2.0 * x); }, {}, false},
      {"softplus", [](double x) { return std::log1p(std::exp(x)); }, {}, false},
      {"hinge(1-x)", [](double x) { return std::max(0.0, 1.0 - x); }, {1.0}, false},
      {"relu", [](double x) { return std::max(0.0, x); }, {0.0}, false},
      {"cosh", [](double x) { return std::cosh(x); }, {}, true},
      // Smooth, but poles near the real axis stall Gauss-Hermite at large variance.
      {"log cosh", [](double x) { return std::log(std::cosh(x)); }, {0.0}, true},
      {"(x-0.3)^2", [](double x) { return (x - 0.3) * (x - 0.3); }, {}, false},
      {"|x-2|", [](double x) { return std::abs(x - 2.0); }, {2.0}, false},
      {"exp(x^2/8)", [](double x) { return std::exp(x * x / 8.0); }, {}, true},
      {"huber", [](double x) { return std::abs(x) <= 1.0 ? 0.5 * x * x : std::abs(x) - 0.5; }, {-1.0, 1.0}, true},
  };
}

std::vector<CheckRow> dominance_suite() {
  std::vector<CheckRow> rows;
  for (const auto& fn : convex_corpus()) {
    const auto r = gaussian_dominance_check(fn.f, fn.breakpoints);
    rows.push_back({"gaussian-dominance", "f=" + fn.name, r.holds,
                    "rademacher=" + num(r.rademacher_side) + " gaussian=" + num(r.gaussian_side)});
  }
  const auto abs_case = gaussian_dominance_check([](double x) { return std::abs(x); }, {0.0});
  rows.push_back({"gaussian-dominance", "equality f=|x|",
                  std::abs(abs_case.rademacher_side - 1.0) <= 1e-8 && std::abs(abs_case.gaussian_side - 1.0) <= 1e-8,
                  "both sides " + num(abs_case.gaussian_side)});
  return rows;
}

std::vector<CheckRow> argmax_suite() {
  std::vector<CheckRow> rows;
  for (double G : {0.5, 1.0, 2.0}) {
    for (double factor : {1.01, 1.5, 3.0}) {
      const double a = factor * 3.0 * kPi * G * G / 4.0;
      for (double eps : {0.5, 1.0, 3.0}) {
        for (int t : {1, 2, 5, 10, 50, 100, 1000}) {
          const auto r = argmax_at_zero_check(eps, a, G, t);
          rows.push_back({"argmax-at-zero",
                          "eps=" + num(eps) + " a=" + num(a) + " G=" + num(G) + " t=" + std::to_string(t), r.holds,
                          "argmax=" + num(r.argmax)});
        }
      }
    }
  }
  return rows;
}

std::vector<CheckRow> conjugate_suite() {
  std::vector<CheckRow> rows;
  Rng rng(20240601);
  for (int i = 0; i < 200; ++i) {
    const double alpha = std::exp(std::log(0.1) + rng.uniform() * std::log(1e4));
    const double beta = std::exp(std::log(0.01) + rng.uniform() * std::log(1e3));
    const double w = 100.0 * rng.uniform();
    const double numeric = conjugate_numeric_auto(
        [&](double x) { return beta * std::exp(x * x / (2.0 * alpha)); }, w, exp_conjugate_search_bound(alpha, w));
    const double bound = exp_conjugate_upper_bound(alpha, beta, w);
    rows.push_back({"conjugate-bound", "alpha=" + num(alpha) + " beta=" + num(beta) + " w=" + num(w),
                    numeric <= bound + 1e-8, "numeric=" + num(numeric) + " bound=" + num(bound)});
  }
  return rows;
}

struct RandomH {
  std::string name;
  ScalarFunction h;
};

RandomH random_h(Regime regime, Rng& rng) {
  const double c = 0.5 + 2.0 * rng.uniform();
  const int pick = static_cast<int>(rng.uniform() * 3.0);
  if (regime == Regime::orthogonal) {
    const double p = 1.0 + 0.95 * rng.uniform();
    const double s = pick == 0 ? 0.0 : 0.2 + 2.0 * rng.uniform();
    return {"c(x^2+s)^(p/2) c=" + num(c) + " p=" + num(p) + " s=" + num(s),
            ScalarFunction([=](double x) { return c * std::pow(x * x + s, p / 2.0); },
                           [=](double x) { return c * p * x * std::pow(x * x + s, p / 2.0 - 1.0); }, {})};
  }
  if (pick == 0) {
    const double k = 1.0 + 4.0 * rng.uniform();
    return {"c exp(x^2/(2k)) c=" + num(c) + " k=" + num(k),
            ScalarFunction([=](double x) { return c * std::exp(x * x / (2.0 * k)); },
                           [=](double x) { return c * x / k * std::exp(x * x / (2.0 * k)); }, {})};
  }
  if (pick == 1) {
    return {"c cosh(x) c=" + num(c), ScalarFunction([=](double x) { return c * std::cosh(x); },
                                                    [=](double x) { return c * std::sinh(x); }, {})};
  }
  const double p = 2.0 + 2.0 * rng.uniform();
  return {"c|x|^p c=" + num(c) + " p=" + num(p),
          ScalarFunction([=](double x) { return c * std::pow(std::abs(x), p); },
                         [=](double x) { return c * p * std::pow(std::abs(x), p - 1.0) * (x < 0 ? -1.0 : 1.0); }, {})};
}

std::vector<CheckRow> one_round_suite(const std::string& regime) {
  if (regime != "all" && regime != "orthogonal" && regime != "parallel") {
    throw std::invalid_argument("--regime must be orthogonal, parallel or all");
  }
  std::vector<CheckRow> rows;
  for (Regime target : {Regime::orthogonal, Regime::parallel}) {
    if (regime != "all" && regime != regime_name(target)) continue;
    Rng rng(target == Regime::orthogonal ? 11 : 12);
    for (int i = 0; i < 50; ++i) {
      const auto rh = random_h(target, rng);
      const double r = 3.0 * rng.uniform();
      const double G = 0.5 + 1.5 * rng.uniform();
      const double angle = 2.0 * kPi * rng.uniform();
      const OneRoundSpec spec{rh.h, Point{r * std::cos(angle), r * std::sin(angle)}, G};
      const Regime got = classify_regime(rh.h, default_probe_grid(r + G + 1.0));
      const auto sol = target == Regime::orthogonal ? solve_orthogonal(spec, rng) : solve_parallel(spec);
      const double grid = solve_scalar_grid(spec);
      const double lower = lower_bound_value(spec);
      const bool agree = std::abs(sol.value - grid) <= 1e-3 * (1.0 + std::abs(sol.value));
      const bool dominates = grid >= lower - 1e-6;
      rows.push_back({"one-round",
                      std::string(regime_name(target)) + " h=" + rh.name + " r=" + num(r) + " G=" + num(G),
                      agree && dominates && got == target,
                      "closed=" + num(sol.value) + " grid=" + num(grid) + " lower=" + num(lower) +
                          " classified=" + std::string(regime_name(got))});
    }
  }
  return rows;
}

std::vector<CheckRow> recursion_suite() {
  std::vector<CheckRow> rows;
  for (double p : {1.0, 1.5, 2.0}) {
    for (int T : {1, 2, 3}) {
      RecursionSpec spec;
      spec.benchmark = ScalarFunction([p](double x) { return std::pow(std::abs(x), p) / p; });
      spec.G = 1.0;
      spec.T = T;
      spec.dim = 2;
      const double value = conditional_value_recursive(spec, 0, 0.0);
      const double expected = std::pow(static_cast<double>(T), p / 2.0) / p;
      rows.push_back({"recursion", "p=" + num(p) + " T=" + std::to_string(T),
                      std::abs(value - expected) <= 1e-2 * expected,
                      "recursive=" + num(value) + " closed=" + num(expected)});
    }
  }
  return rows;
}

std::vector<CheckRow> quadrature_suite() {
  std::vector<CheckRow> rows;
  for (double G : {0.5, 1.0, 2.0}) {
    for (double kappa : {1.25, 1.5, 2.0, 4.0}) {
      const double a = kappa * kPi * G * G / 2.0;
      for (double eps : {0.5, 1.0, 3.0}) {
        for (int T : {1, 4, 16, 64}) {
          const NormalKnownTPotential pot({eps, a, G, T});
          double worst = 0.0;
          for (int t = 0; t < T; ++t) {
            for (int k = 0; k <= 6; ++k) {
              const double x = 3.0 * G * std::sqrt(static_cast<double>(T)) * k / 6.0;
              const double quad = gaussian_expectation(
                  [&](double y) { return eps * std::exp(y * y / (2.0 * a * T)); }, x, (T - t) * kPi / 2.0 * G * G);
              const double closed = pot.value(t, x);
              worst = std::max(worst, std::abs(quad - closed) / std::abs(closed));
            }
          }
          rows.push_back({"quadrature",
                          "eps=" + num(eps) + " a=" + num(a) + " G=" + num(G) + " T=" + std::to_string(T),
                          worst <= 1e-6, "max rel err=" + num(worst)});
        }
      }
    }
  }
  return rows;
}

std::vector<CheckRow> monotone_suite() {
  std::vector<CheckRow> rows;
  for (double a : {1.0, 2.0, 5.0}) {
    for (double c_frac : {0.5, 1.0}) {
      const double c = c_frac * a;
      for (double b_frac : {0.0, 0.5, 1.0}) {
        const double b = b_frac * a / c;
        const bool ok = diff_exp_decreasing_check(a, b, c, std::sqrt(30.0 * c));
        rows.push_back({"monotone-lemmas", "diff_exp a=" + num(a) + " b=" + num(b) + " c=" + num(c), ok, ""});
      }
    }
  }
  for (double b : {0.5, 1.0, 2.0}) {
    for (double factor : {1.5, 2.0, 5.0}) {
      const double a = factor * b;
      rows.push_back({"monotone-lemmas", "fract a=" + num(a) + " b=" + num(b), fract_bound_check(a, b), ""});
    }
  }
  return rows;
}

std::vector<CheckRow> rademacher_gaussian_suite() {
  std::vector<CheckRow> rows;
  for (const auto& fn : convex_corpus()) {
    if (!fn.even || fn.name == "exp(x^2/8)") continue;
    for (double G : {0.5, 1.0}) {
      for (int tau = 0; tau <= 10; ++tau) {
        bool ok = true;
        double worst = -std::numeric_limits<double>::infinity();
        for (int k = 0; k <= 12; ++k) {
          const double x = -3.0 + 0.5 * k;
          const double rad = rademacher_smoothing_exact(fn.f, x, tau, G);
          const double gauss = tau == 0 ? fn.f(x) : gaussian_expectation(fn.f, x, tau * kPi / 2.0 * G * G, 64, fn.breakpoints);
          worst = std::max(worst, rad - gauss);
          ok = ok && rad <= gauss + 1e-8;
        }
        rows.push_back({"rademacher-gaussian", "f=" + fn.name + " G=" + num(G) + " tau=" + std::to_string(tau), ok,
                        "max(rad-gauss)=" + num(worst)});
      }
    }
  }
  return rows;
}

using Suite = std::function<std::vector<CheckRow>(const std::string&)>;

const std::vector<std::pair<std::string, Suite>>& suites() {
  static const std::vector<std::pair<std::string, Suite>> all = {
      {"gaussian-dominance", [](const std::string&) { return dominance_suite(); }},
      {"argmax-at-zero", [](const std::string&) { return argmax_suite(); }},
      {"conjugate-bound", [](const std::string&) { return conjugate_suite(); }},
      {"one-round", [](const std::string& regime) { return one_round_suite(regime); }},
      {"recursion", [](const std::string&) { return recursion_suite(); }},
      {"quadrature", [](const std::string&) { return quadrature_suite(); }},
      {"monotone-lemmas", [](const std::string&) { return monotone_suite(); }},
      {"rademacher-gaussian", [](const std::string&) { return rademacher_gaussian_suite(); }},
  };
  return all;
}

}  // namespace

std::vector<std::string> verify_suite_names() {
  std::vector<std::string> names;
  for (const auto& [name, fn] : suites()) names.push_back(name);
  return names;
}

std::vector<CheckRow> run_verify_suite(const std::string& name, const std::string& regime) {
  for (const auto& [n, fn] : suites()) {
    if (n == name) {
      try {
        return fn(regime);
      } catch (const std::invalid_argument&) {
        throw;
      } catch (const std::exception& e) {
        return {{name, "suite aborted", false, e.what()}};
      }
    }
  }
  throw std::invalid_argument("unknown lemma suite '" + name + "'");
}

int verify_command(const VerifyOptions& options, std::ostream& out, std::ostream& err) {
  std::vector<std::string> selected = options.all ? verify_suite_names() : options.lemmas;
  if (selected.empty()) {
    err << "verify: pass --all or one or more --lemma (";
    for (const auto& n : verify_suite_names()) err << ' ' << n;
    err << " )\n";
    return 2;
  }
  std::vector<CheckRow> failures;
  std::vector<std::tuple<std::string, std::size_t, std::size_t>> matrix;
  for (const auto& name : selected) {
    std::vector<CheckRow> rows;
    try {
      rows = run_verify_suite(name, options.regime);
    } catch (const std::invalid_argument& e) {
      err << "verify: " << e.what() << '\n';
      return 2;
    }
    std::size_t passed = 0;
    for (const auto& r : rows) {
      out << (r.pass ? "PASS " : "FAIL ") << r.suite << " | " << r.label;
      if (!r.detail.empty()) out << " | " << r.detail;
      out << '\n';
      if (r.pass) {
        ++passed;
      } else {
        failures.push_back(r);
      }
    }
    matrix.emplace_back(name, passed, rows.size());
  }
  out << "\nsuite                  passed/total\n";
  for (const auto& [name, passed, total] : matrix) {
    out << name << std::string(name.size() < 23 ? 23 - name.size() : 1, ' ') << passed << '/' << total
        << (passed == total ? "  ok" : "  FAILED") << '\n';
  }
  if (!failures.empty()) {
    err << failures.size() << " failing checks:\n";
    for (const auto& f : failures) err << "  " << f.suite << ": " << f.label << " (" << f.detail << ")\n";
    return 1;
  }
  return 0;
}

}  // namespace mmo::app

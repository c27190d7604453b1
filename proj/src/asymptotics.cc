// Copyright 2026 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "sliders/asymptotics.h"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>
#include <vector>

#include "json.hpp"
#include "sliders/number_format.h"

namespace sliders {
namespace {

constexpr double kBracketLo = 1e-9;
constexpr double kBracketHi = 50.0;

void CheckQ(double q) {
  if (!(q >= 0.0 && q <= 1.0)) {
    throw std::invalid_argument("q must lie in [0, 1]");
  }
}

// (1-q) Q(xi,1) + q Q(xi,2), computed without cancellation near 0.
double Drift(double xi, double q) {
  return (1.0 - q) * PoissonTail(xi, 1) + q * PoissonTail(xi, 2);
}

// Bisection for a sign change of f on [lo, hi] given f(lo) < 0 <= f(hi).
template <typename F>
double Bisect(F f, double lo, double hi) {
  for (int it = 0; it < 400 && hi - lo > 1e-15 * std::max(1.0, hi); ++it) {
    const double mid = 0.5 * (lo + hi);
    if (f(mid) < 0.0) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

// (e^xi - 1 - xi - q xi^2) / xi^2; its root is the minimiser of Psi.
double PsiSlope(double xi, double q) {
  double rest;
  if (xi > 1.0) {
    rest = (std::expm1(xi) - xi - 0.5 * xi * xi) / (xi * xi);
  } else {
    // sum_{k>=3} xi^(k-2) / k!
    rest = 0.0;
    double term = xi / 6.0;
    for (int k = 3; term > 1e-18 * (rest + 1e-300); ++k) {
      rest += term;
      term *= xi / (k + 1);
    }
  }
  return (0.5 - q) + rest;
}

// sum_{j>=3} xi^(j-3) (j - 2 - 2q) / j!, which is e^xi xi^-3 times the
// numerator of FRatio - 2. Only the first term can be negative, so the sign
// is reliable near xi = 0 where FRatio - 2 cancels.
double RatioExcess(double xi, double q) {
  double sum = 0.0;
  double power = 1.0 / 6.0;  // xi^(j-3) / j!
  for (int j = 3; j < 10000; ++j) {
    const double term = power * (j - 2 - 2 * q);
    sum += term;
    if (j > xi && power * j < 1e-17 * std::abs(sum)) break;
    power *= xi / (j + 1);
  }
  return sum;
}

}  // namespace

double PoissonTail(double x, int y) {
  if (!(x >= 0.0)) throw std::invalid_argument("Poisson mean must be >= 0");
  if (y < 0) throw std::invalid_argument("tail index must be >= 0");
  if (y == 0) return 1.0;
  if (x == 0.0) return 0.0;
  if (y == 1) return -std::expm1(-x);
  if (x > y) {
    // Complement of a short head: no cancellation since the head is small.
    double head = 0.0;
    double term = 1.0;
    for (int j = 0; j < y; ++j) {
      head += term;
      term *= x / (j + 1);
    }
    return std::clamp(1.0 - std::exp(-x) * head, 0.0, 1.0);
  }
  // Direct sum of the tail; term ratios x/(j+1) are below 1.
  double term = std::exp(-x + y * std::log(x) - std::lgamma(y + 1.0));
  double sum = 0.0;
  for (int j = y; term > 1e-16 * sum; ++j) {
    sum += term;
    term *= x / (j + 1);
  }
  return std::clamp(sum, 0.0, 1.0);
}

double FRatio(double xi, double q) {
  CheckQ(q);
  if (!(xi > 0.0)) throw std::invalid_argument("f needs xi > 0");
  const double num = xi * Drift(xi, q);
  const double den =
      (1.0 - q) * PoissonTail(xi, 2) + 2.0 * q * PoissonTail(xi, 3);
  return num / den;
}

double Psi(double xi, double q) {
  CheckQ(q);
  if (!(xi > 0.0)) throw std::invalid_argument("psi needs xi > 0");
  return xi / (-std::expm1(-xi) - q * xi * std::exp(-xi));
}

double Delta(double x, double c, double q) {
  CheckQ(q);
  if (!(x >= 0.0 && x <= 1.0)) throw std::invalid_argument("x not in [0,1]");
  if (!(c >= 0.0)) throw std::invalid_argument("c must be >= 0");
  return x - Drift(c * x, q);
}

double CalF(double x, double c, double q) {
  CheckQ(q);
  if (!(x >= 0.0 && x <= 1.0)) throw std::invalid_argument("x not in [0,1]");
  if (!(c > 0.0)) throw std::invalid_argument("c must be > 0");
  const double cx = c * x;
  const double one_minus_gb = Drift(cx, q);
  return 1.0 - one_minus_gb * one_minus_gb +
         (2.0 / c) *
             ((1.0 - q) * PoissonTail(cx, 2) + 2.0 * q * PoissonTail(cx, 3));
}

double XiStar(double q) {
  CheckQ(q);
  if (q <= 0.5) {
    throw std::invalid_argument(
        "f(xi, q) = 2 has no positive root for q <= 1/2");
  }
  auto g = [q](double xi) { return RatioExcess(xi, q); };
  constexpr int kGrid = 4000;
  const double ratio = std::log(kBracketHi / kBracketLo) / kGrid;
  int changes = 0;
  double lo = 0.0, hi = 0.0;
  double prev_x = kBracketLo;
  double prev = g(prev_x);
  for (int i = 1; i <= kGrid; ++i) {
    const double x = kBracketLo * std::exp(ratio * i);
    const double cur = g(x);
    if ((prev < 0.0) != (cur < 0.0)) {
      ++changes;
      lo = prev_x;
      hi = x;
    }
    prev_x = x;
    prev = cur;
  }
  if (changes != 1 || !(g(lo) < 0.0)) {
    throw std::runtime_error("f(xi, q) - 2 changes sign " +
                             std::to_string(changes) + " times on (0, 50)");
  }
  return Bisect(g, lo, hi);
}

double CStar(double q) {
  CheckQ(q);
  if (q <= 0.5) return 1.0 / (1.0 - q);
  const double xs = XiStar(q);
  return xs / Drift(xs, q);
}

double PsiArgmin(double q) {
  CheckQ(q);
  if (q <= 0.5) return 0.0;
  return Bisect([q](double xi) { return PsiSlope(xi, q); }, 0.0, kBracketHi);
}

double CTilde(double q) {
  CheckQ(q);
  if (q <= 0.5) return 1.0 / (1.0 - q);
  const double xm = PsiArgmin(q);
  return xm / Drift(xm, q);
}

FixedPoint SolveXiTilde(double q, double c) {
  CheckQ(q);
  if (!(c >= 0.0)) throw std::invalid_argument("c must be >= 0");
  const double ct = CTilde(q);
  const double tol = 1e-12 * std::max(1.0, ct);
  if (q <= 0.5) {
    if (c <= ct) return {};
  } else {
    if (c < ct - tol) return {};
    if (c <= ct + tol) return {PsiArgmin(q), true};
  }
  // On the increasing branch of Psi, Psi(xi) < c iff xi < c Drift(xi).
  const double lo = PsiArgmin(q);
  return {Bisect([&](double xi) { return xi - c * Drift(xi, q); }, lo, c),
          false};
}

double XTilde(double c, double q) {
  CheckQ(q);
  if (!(c > 0.0)) throw std::invalid_argument("c must be > 0");
  std::vector<double> grid;
  constexpr int kUniform = 20000;
  for (int k = kUniform; k >= 1; --k) grid.push_back(double(k) / kUniform);
  for (double x = 0.5 / kUniform; x > 1e-14; x *= 0.8) grid.push_back(x);
  auto delta = [&](double x) { return x - Drift(c * x, q); };
  for (std::size_t i = 1; i < grid.size(); ++i) {
    if (delta(grid[i]) < 0.0) return Bisect(delta, grid[i], grid[i - 1]);
  }
  return 0.0;
}

CoreFractions PredictCoreFractions(double q, double c) {
  const double xi = XiTilde(q, c);
  CoreFractions out;
  if (xi == 0.0) return out;
  out.n1 = (1.0 - q) * PoissonTail(xi, 2);
  out.n2 = q * PoissonTail(xi, 3);
  out.halfedges = xi * Drift(xi, q);
  out.below_threshold = false;
  return out;
}

double CorePlusFraction(double q, double c) {
  const double xi = XiTilde(q, c);
  if (xi == 0.0) return 0.0;
  return -std::expm1(-xi) - q * xi * std::exp(-xi);
}

double OrientableFractionLimit(double q, double c) {
  const double x = XTilde(c, q);
  return std::min(1.0, CalF(x, c, q));
}

Branching BranchingCoefficients(double q, double c) {
  CheckQ(q);
  if (!(c > CTilde(q))) {
    throw std::invalid_argument("branching coefficients need c above the "
                                "core threshold");
  }
  const double xi = XiTilde(q, c);
  const double e = std::exp(-xi);
  return {(1.0 - q) * e * c, q * 0.5 * xi * c * e};
}

ThresholdReport MakeThresholdReport(double q, std::optional<double> c) {
  ThresholdReport r;
  r.q = q;
  if (q > 0.5) r.xi_star = XiStar(q);
  r.c_star = CStar(q);
  r.c_tilde = CTilde(q);
  if (c) {
    ThresholdReport::AtC a;
    a.c = *c;
    const FixedPoint fp = SolveXiTilde(q, *c);
    a.xi_tilde = fp.xi;
    a.at_threshold = fp.at_threshold;
    a.core = PredictCoreFractions(q, *c);
    a.core_plus_frac = CorePlusFraction(q, *c);
    if (*c > 0.0) {
      a.x_tilde = XTilde(*c, q);
      a.orientable_limit = OrientableFractionLimit(q, *c);
    }
    if (*c > r.c_tilde) a.branching = BranchingCoefficients(q, *c);
    r.at_c = a;
  }
  return r;
}

std::string FormatReportText(const ThresholdReport& r) {
  std::vector<std::pair<std::string, std::string>> rows;
  auto add = [&](std::string k, double v) {
    rows.emplace_back(std::move(k), FormatDouble(v));
  };
  add("q", r.q);
  rows.emplace_back("xi_star", r.xi_star ? FormatDouble(*r.xi_star) : "none");
  add("c_star", r.c_star);
  add("c_tilde", r.c_tilde);
  if (r.at_c) {
    const auto& a = *r.at_c;
    add("c", a.c);
    add("xi_tilde", a.xi_tilde);
    if (a.at_threshold) rows.emplace_back("note", "c at core threshold");
    add("core_n1_frac", a.core.n1);
    add("core_n2_frac", a.core.n2);
    add("core_halfedge_frac", a.core.halfedges);
    add("core_plus_frac", a.core_plus_frac);
    add("x_tilde", a.x_tilde);
    add("orientable_limit", a.orientable_limit);
    if (a.branching) {
      add("p12", a.branching->p12);
      add("p23", a.branching->p23);
    } else {
      rows.emplace_back("p12", "none");
      rows.emplace_back("p23", "none");
    }
  }
  std::size_t width = 0;
  for (const auto& [k, v] : rows) width = std::max(width, k.size());
  std::ostringstream out;
  for (const auto& [k, v] : rows) {
    out << k << std::string(width + 2 - k.size(), ' ') << v << '\n';
  }
  return out.str();
}

std::string FormatReportJson(const ThresholdReport& r) {
  nlohmann::ordered_json j;
  j["q"] = r.q;
  j["xi_star"] = r.xi_star ? nlohmann::ordered_json(*r.xi_star) : nullptr;
  j["c_star"] = r.c_star;
  j["c_tilde"] = r.c_tilde;
  if (r.at_c) {
    const auto& a = *r.at_c;
    j["c"] = a.c;
    j["xi_tilde"] = a.xi_tilde;
    j["at_threshold"] = a.at_threshold;
    j["core_n1_frac"] = a.core.n1;
    j["core_n2_frac"] = a.core.n2;
    j["core_halfedge_frac"] = a.core.halfedges;
    j["core_plus_frac"] = a.core_plus_frac;
    j["x_tilde"] = a.x_tilde;
    j["orientable_limit"] = a.orientable_limit;
    j["p12"] = a.branching ? nlohmann::ordered_json(a.branching->p12) : nullptr;
    j["p23"] = a.branching ? nlohmann::ordered_json(a.branching->p23) : nullptr;
  }
  return j.dump();
}

}  // namespace sliders

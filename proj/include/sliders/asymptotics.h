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

// Large-n limits for G(n, c/n) with each vertex a slider with probability
// 1 - q and free with probability q.

#ifndef SLIDERS_ASYMPTOTICS_H_
#define SLIDERS_ASYMPTOTICS_H_

#include <optional>
#include <string>

namespace sliders {

// P[Poisson(x) >= y]. Throws std::invalid_argument for x < 0 or y < 0.
double PoissonTail(double x, int y);

// xi [(1-q) Q(xi,1) + q Q(xi,2)] / [(1-q) Q(xi,2) + 2q Q(xi,3)], xi > 0.
double FRatio(double xi, double q);

// xi / (1 - e^-xi - q xi e^-xi), xi > 0.
double Psi(double xi, double q);

// x - (1-q) Q(cx,1) - q Q(cx,2), x in [0,1].
double Delta(double x, double c, double q);

// Edge fraction functional whose infimum over [0,1] is the orientable
// fraction, x in [0,1], c > 0.
double CalF(double x, double c, double q);

// Positive root of FRatio(xi, q) = 2 for q in (1/2, 1]. Throws otherwise, and
// also when the sign of FRatio - 2 does not change exactly once.
double XiStar(double q);

// Threshold for a giant rigid component and for loss of orientability.
double CStar(double q);

// Appearance threshold of the 2.5-core: inf over xi > 0 of Psi(xi, q).
double CTilde(double q);

// Minimiser of Psi for q > 1/2, 0 otherwise.
double PsiArgmin(double q);

struct FixedPoint {
  double xi = 0.0;
  // c equals CTilde(q) for q > 1/2 to solver precision; the positive root is
  // reported.
  bool at_threshold = false;
};

// Largest solution of xi = c[(1-q) Q(xi,1) + q Q(xi,2)].
FixedPoint SolveXiTilde(double q, double c);
inline double XiTilde(double q, double c) { return SolveXiTilde(q, c).xi; }

// Largest root of Delta(., c, q) in [0, 1]; 0 when there is none above 0.
double XTilde(double c, double q);

struct CoreFractions {
  double n1 = 0.0;        // sliders in the 2.5-core, per vertex
  double n2 = 0.0;        // free vertices in the 2.5-core, per vertex
  double halfedges = 0.0; // 2 m(core) / n
  bool below_threshold = true;
};

CoreFractions PredictCoreFractions(double q, double c);

// n(core+) / n; 0 below threshold.
double CorePlusFraction(double q, double c);

// Limit of (oriented edges) / (edges) for a maximum admissible orientation.
double OrientableFractionLimit(double q, double c);

struct Branching {
  double p12 = 0.0;
  double p23 = 0.0;
};

// Offspring coefficients of the peeling process inside the core. Throws
// std::invalid_argument when c <= CTilde(q).
Branching BranchingCoefficients(double q, double c);

struct ThresholdReport {
  double q = 0.0;
  std::optional<double> xi_star;
  double c_star = 0.0;
  double c_tilde = 0.0;

  struct AtC {
    double c = 0.0;
    double xi_tilde = 0.0;
    bool at_threshold = false;
    CoreFractions core;
    double core_plus_frac = 0.0;
    double x_tilde = 0.0;
    double orientable_limit = 1.0;
    std::optional<Branching> branching;
  };
  std::optional<AtC> at_c;
};

ThresholdReport MakeThresholdReport(double q, std::optional<double> c);
std::string FormatReportText(const ThresholdReport& r);
std::string FormatReportJson(const ThresholdReport& r);

}  // namespace sliders

#endif  // SLIDERS_ASYMPTOTICS_H_

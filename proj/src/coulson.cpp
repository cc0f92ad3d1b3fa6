// Copyright 2026 The sqenergy Authors
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

#include "sqenergy/coulson.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <numbers>
#include <string>

#include "sqenergy/error.hpp"

namespace sqenergy {
namespace {

// m * 2^-scale, rounded to nearest.
double scaled_to_double(const mpz_class& m, long scale) {
  if (m == 0) return 0.0;
  const long bits = static_cast<long>(mpz_sizeinbase(m.get_mpz_t(), 2));
  if (bits <= 64) {
    return std::ldexp(static_cast<double>(mpz_get_ui(m.get_mpz_t())), static_cast<int>(-scale));
  }
  const long shift = bits - 64;
  mpz_class top;
  mpz_tdiv_q_2exp(top.get_mpz_t(), m.get_mpz_t(), static_cast<mp_bitcnt_t>(shift));
  std::uint64_t word = mpz_get_ui(top.get_mpz_t());
  // Sticky bit: anything shifted out breaks round-half-even ties upward.
  if (mpz_scan1(m.get_mpz_t(), 0) < static_cast<mp_bitcnt_t>(shift)) word |= 1u;
  return std::ldexp(static_cast<double>(word), static_cast<int>(shift - scale));
}

// sum_j c_j u^j
double ascending_horner(const ScaledCounts& s, double u) {
  double acc = s.mantissa.back();
  for (int j = s.max_size - 1; j >= 0; --j) acc = acc * u + s.mantissa[j];
  return acc;
}

// sum_j c_j w^(J-j)
double descending_horner(const ScaledCounts& s, double w) {
  double acc = s.mantissa.front();
  for (int j = 1; j <= s.max_size; ++j) acc = acc * w + s.mantissa[j];
  return acc;
}

void check_t(double t) {
  if (!(t > 0.0)) throw Error(ErrorCode::NonpositiveT, "t must be > 0, got " + std::to_string(t));
}

int deficiency(const ScaledCounts& s) { return s.v - 2 * s.max_size; }

// q * 2^scale * t^power without overflowing on the way when the product
// itself is representable.
double scaled_product(double q, long scale, double t, int power) {
  const double p = std::pow(t, power);
  if (std::isnormal(p) && std::abs(scale) < 900) return std::ldexp(q * p, static_cast<int>(scale));
  const double lp = power * std::log2(t);
  const double whole = std::floor(lp);
  const double total = std::clamp(static_cast<double>(scale) + whole, -1200.0, 1200.0);
  return std::ldexp(q * std::exp2(lp - whole), static_cast<int>(total));
}

template <class F>
class AdaptiveSimpson {
 public:
  AdaptiveSimpson(F f, int max_depth) : f_(std::move(f)), max_depth_(max_depth) {}

  double eval(double x) {
    ++evaluations;
    return f_(x);
  }

  double refine(double a, double b, double fa, double fm, double fb, double whole, double tol,
                int depth) {
    const double m = 0.5 * (a + b);
    const double lm = 0.5 * (a + m);
    const double rm = 0.5 * (m + b);
    const double flm = eval(lm);
    const double frm = eval(rm);
    const double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
    const double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
    const double diff = left + right - whole;
    if (std::abs(diff) <= 15.0 * tol) {
      error += std::abs(diff) / 15.0;
      return left + right + diff / 15.0;
    }
    if (depth >= max_depth_) {
      throw Error(ErrorCode::NoConvergence,
                  "adaptive Simpson reached depth " + std::to_string(depth) + " on [" +
                      std::to_string(a) + ", " + std::to_string(b) + "] with error estimate " +
                      std::to_string(std::abs(diff) / 15.0) + " > " + std::to_string(tol));
    }
    return refine(a, m, fa, flm, fm, left, 0.5 * tol, depth + 1) +
           refine(m, b, fm, frm, fb, right, 0.5 * tol, depth + 1);
  }

  double error = 0.0;
  long evaluations = 0;

 private:
  F f_;
  int max_depth_;
};

struct Panel {
  double a, b, fa, fm, fb, whole;
};

template <class F>
std::vector<Panel> make_panels(AdaptiveSimpson<F>& q, double a, double b, int count) {
  std::vector<Panel> out;
  const double h = (b - a) / count;
  double left = a;
  double f_left = q.eval(left);
  for (int i = 0; i < count; ++i) {
    const double right = (i + 1 == count) ? b : a + h * (i + 1);
    const double mid = 0.5 * (left + right);
    const double f_mid = q.eval(mid);
    const double f_right = q.eval(right);
    out.push_back({left, right, f_left, f_mid, f_right,
                   (right - left) / 6.0 * (f_left + 4.0 * f_mid + f_right)});
    left = right;
    f_left = f_right;
  }
  return out;
}

constexpr int kMainPanels = 16;
constexpr int kTailPanels = 8;

}  // namespace

ScaledCounts ScaledCounts::from(const MatchingCounts& counts) {
  ScaledCounts s;
  s.v = counts.v;
  s.max_size = counts.max_size();
  long bits = 0;
  for (const auto& m : counts.counts) {
    if (m != 0) bits = std::max(bits, static_cast<long>(mpz_sizeinbase(m.get_mpz_t(), 2)));
  }
  s.exponent = bits;
  s.mantissa.reserve(counts.counts.size());
  for (const auto& m : counts.counts) s.mantissa.push_back(scaled_to_double(m, bits));
  return s;
}

ThetaClosedForm::ThetaClosedForm(MatchingCounts counts_g, MatchingCounts counts_f, int k)
    : counts_g_(std::move(counts_g)), counts_f_(std::move(counts_f)), k_(k) {
  if (k < 3 || k % 2 == 0) {
    throw Error(ErrorCode::BadParameters,
                "closed-form theta needs odd k >= 3, got " + std::to_string(k));
  }
  if (counts_g_.v - counts_f_.v != k) {
    throw Error(ErrorCode::BadParameters, "order of G minus order of F must equal k");
  }
  scaled_g_ = ScaledCounts::from(counts_g_);
  scaled_f_ = ScaledCounts::from(counts_f_);
}

ThetaClosedForm ThetaClosedForm::from(const UnicyclicDecomposition& d) {
  return ThetaClosedForm(matching_counts(d.graph), matching_counts(d.forest), d.k);
}

double ThetaClosedForm::large_t_quotient(double u) const {
  const double q = ascending_horner(scaled_f_, u) / ascending_horner(scaled_g_, u);
  return std::ldexp(q, static_cast<int>(scaled_f_.exponent - scaled_g_.exponent));
}

double ThetaClosedForm::ratio(double t) const {
  const long scale = scaled_f_.exponent - scaled_g_.exponent;
  double r;
  if (t >= 1.0) {
    const double u = 1.0 / (t * t);
    const double q = ascending_horner(scaled_f_, u) / ascending_horner(scaled_g_, u);
    r = 2.0 * scaled_product(q, scale, t, -k_);
  } else {
    // M_H(t) = t^(v - 2J) * sum_j m_j (t^2)^(J - j), J the matching number.
    const double w = t * t;
    const double q = descending_horner(scaled_f_, w) / descending_horner(scaled_g_, w);
    r = 2.0 * scaled_product(q, scale, t, deficiency(scaled_f_) - deficiency(scaled_g_));
  }
  return std::min(r, std::numeric_limits<double>::max());
}

void QuadratureParams::validate() const {
  if (!(rel_tol > 0.0) || !(abs_tol > 0.0) || max_depth < 10) {
    throw Error(ErrorCode::BadParameters,
                "quadrature needs rel_tol > 0, abs_tol > 0, max_depth >= 10");
  }
}

double m_ratio(const ThetaClosedForm& cf, double t) {
  check_t(t);
  return cf.ratio(t);
}

double theta_closed(const ThetaClosedForm& cf, double t) {
  check_t(t);
  return cf.sign() * std::atan(cf.ratio(t));
}

double quadrature_split(const ThetaClosedForm& cf) {
  const double edges = cf.counts_g().count(1).get_d();
  return std::max(4.0, 2.0 * std::sqrt(edges));
}

DeltaIntegral delta_integral_detailed(const ThetaClosedForm& cf, const QuadratureParams& qp) {
  qp.validate();
  const double split = quadrature_split(cf);
  const int k = cf.k();
  const double sign = cf.sign();

  // t * Theta(t) on [0, T]; vanishes linearly at 0.
  auto main = [&cf, sign](double t) {
    if (t == 0.0) return 0.0;
    return t * sign * std::atan(cf.ratio(t));
  };
  // With w = 1/t, t dt = -w^-3 dw: integrand w^-3 Theta(1/w) on (0, 1/T].
  // atan(r) / w^3 = (atan(r) / r) * 2 w^(k-3) * quotient, finite at w = 0.
  auto tail = [&cf, sign, k](double w) {
    const double quotient = cf.large_t_quotient(w * w);
    if (w == 0.0) return k == 3 ? sign * 2.0 * quotient : 0.0;
    const double r = 2.0 * std::pow(w, k) * quotient;
    const double atan_over_r = (r < 1e-8) ? 1.0 - r * r / 3.0 : std::atan(r) / r;
    return sign * atan_over_r * 2.0 * std::pow(w, k - 3) * quotient;
  };

  AdaptiveSimpson qmain(main, qp.max_depth);
  AdaptiveSimpson qtail(tail, qp.max_depth);
  auto main_panels = make_panels(qmain, 0.0, split, kMainPanels);
  auto tail_panels = make_panels(qtail, 0.0, 1.0 / split, kTailPanels);

  double coarse = 0.0;
  for (const auto& p : main_panels) coarse += p.whole;
  for (const auto& p : tail_panels) coarse += p.whole;

  const double scale = 4.0 / std::numbers::pi;
  // Tolerance is stated on the delta scale; convert to the raw integral.
  const double tol_delta = std::max(qp.abs_tol, qp.rel_tol * std::abs(scale * coarse));
  const double tol_integral = tol_delta / scale;

  double integral = 0.0;
  for (const auto& p : main_panels) {
    const double tol = 0.5 * tol_integral * (p.b - p.a) / split;
    integral += qmain.refine(p.a, p.b, p.fa, p.fm, p.fb, p.whole, tol, 0);
  }
  for (const auto& p : tail_panels) {
    const double tol = 0.5 * tol_integral * (p.b - p.a) * split;
    integral += qtail.refine(p.a, p.b, p.fa, p.fm, p.fb, p.whole, tol, 0);
  }

  DeltaIntegral out;
  out.value = -scale * integral;
  out.error_estimate = scale * (qmain.error + qtail.error);
  out.split = split;
  out.evaluations = qmain.evaluations + qtail.evaluations;
  return out;
}

double delta_integral(const ThetaClosedForm& cf, const QuadratureParams& qp) {
  return delta_integral_detailed(cf, qp).value;
}

double delta_even(int k) {
  if (k % 2 != 0) throw Error(ErrorCode::OddK, "delta_even called with odd k=" + std::to_string(k));
  return 0.0;
}

}  // namespace sqenergy

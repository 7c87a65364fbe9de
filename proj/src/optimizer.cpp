#include "zetagap/optimizer.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>
#include <string>

#include "zetagap/errors.hpp"

namespace zetagap::optimizer {

namespace {

constexpr double kPi = std::numbers::pi;

void check_degree(int degree) {
  if (degree < 0 || degree > PolynomialF::kMaxDegree)
    throw param_error("optimizer: degree must be in [0, 6], got " + std::to_string(degree));
}

}  // namespace

GapMatrices build_gap_matrices(double c, double r, int degree) {
  (void)FunctionalParams(c, r, GapMode::large_gaps);  // range validation
  check_degree(degree);

  const auto bilinear = series::bilinear_matrix(c, r, degree);
  const auto beta = series::beta_moments(r, 2 * degree);

  GapMatrices m;
  m.c = c;
  m.r = r;
  m.degree = degree;
  const std::size_t n = static_cast<std::size_t>(degree) + 1;
  m.g = linalg::SquareMatrix(n);
  m.s = linalg::SquareMatrix(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      m.g(i, j) = beta[i + j];
      m.s(i, j) = 0.5 * (bilinear[i][j] + bilinear[j][i]);
    }
  return m;
}

OptimalF optimal_f_eigen(double c, double r, int degree, GapMode mode) {
  const GapMatrices m = build_gap_matrices(c, r, degree);
  const std::size_t n = m.g.n;

  // Reduce S a = lambda G a with G = L L^T to the symmetric problem
  // (L^-1 S L^-T) y = lambda y, a = L^-T y.
  const linalg::SquareMatrix l = linalg::cholesky(m.g);
  linalg::SquareMatrix reduced(n);
  // columns of L^-1 S: solve L X = S column-wise, then rows again for L^-T
  for (std::size_t j = 0; j < n; ++j) {
    std::vector<double> col(n);
    for (std::size_t i = 0; i < n; ++i) col[i] = m.s(i, j);
    col = linalg::solve_lower(l, col);
    for (std::size_t i = 0; i < n; ++i) reduced(i, j) = col[i];
  }
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<double> row(n);
    for (std::size_t j = 0; j < n; ++j) row[j] = reduced(i, j);
    row = linalg::solve_lower(l, row);
    for (std::size_t j = 0; j < n; ++j) reduced(i, j) = row[j];
  }
  // enforce exact symmetry before the Jacobi sweep
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      const double v = 0.5 * (reduced(i, j) + reduced(j, i));
      reduced(i, j) = reduced(j, i) = v;
    }

  const auto eig = linalg::jacobi_eigen(std::move(reduced), 1e-14);
  const std::size_t top = n - 1;  // maximal quotient serves both modes
  std::vector<double> y(n);
  for (std::size_t i = 0; i < n; ++i) y[i] = eig.vectors(i, top);
  std::vector<double> a = linalg::solve_lower_transposed(l, y);

  OptimalF out;
  out.rayleigh = eig.values[top];
  out.h_value = c + mode_sign(mode) * (2.0 * r / kPi) * out.rayleigh;

  double scale_ref = 0.0;
  for (double x : a) scale_ref = std::max(scale_ref, std::abs(x));
  if (std::abs(a[0]) > 1e-12 * scale_ref) {
    const double a0 = a[0];
    for (double& x : a) x /= a0;
  } else {
    // a0 ~ 0: a = L^-T y already has unit G-norm since y is normalized
    out.gauge_unit_norm = true;
  }
  out.coeffs = std::move(a);
  return out;
}

namespace {

// Nelder-Mead on (a_1..a_d), a_0 fixed at 1, extremizing h. Plain
// implementation with a restart, adequate as an independent cross-check.
OptimalF nelder_mead(double c, double r, int degree, GapMode mode) {
  const int d = degree;
  const double dir = mode == GapMode::large_gaps ? 1.0 : -1.0;  // minimize dir*h
  auto objective = [&](const std::vector<double>& x) {
    std::vector<double> coeffs(d + 1);
    coeffs[0] = 1.0;
    for (int i = 0; i < d; ++i) coeffs[i + 1] = x[i];
    return dir * eval_h_series(FunctionalParams(c, r, mode), PolynomialF(coeffs));
  };

  std::vector<double> best(d, 0.0);
  double scale = 4.0;
  for (int restart = 0; restart < 4; ++restart) {
    std::vector<std::vector<double>> pts(d + 1, best);
    for (int i = 0; i < d; ++i) pts[i + 1][i] += scale;
    std::vector<double> fv(d + 1);
    for (int i = 0; i <= d; ++i) fv[i] = objective(pts[i]);

    for (int iter = 0; iter < 4000; ++iter) {
      std::vector<int> order(d + 1);
      for (int i = 0; i <= d; ++i) order[i] = i;
      std::sort(order.begin(), order.end(), [&](int i, int j) { return fv[i] < fv[j]; });
      const int lo = order[0], hi = order[d], second = order[d > 0 ? d - 1 : 0];
      if (std::abs(fv[hi] - fv[lo]) < 1e-13 * (std::abs(fv[lo]) + 1e-13)) break;

      std::vector<double> centroid(d, 0.0);
      for (int i = 0; i <= d; ++i)
        if (i != hi)
          for (int k = 0; k < d; ++k) centroid[k] += pts[i][k] / d;

      auto blend = [&](double t) {
        std::vector<double> p(d);
        for (int k = 0; k < d; ++k) p[k] = centroid[k] + t * (pts[hi][k] - centroid[k]);
        return p;
      };
      const auto refl = blend(-1.0);
      const double frefl = objective(refl);
      if (frefl < fv[lo]) {
        const auto expd = blend(-2.0);
        const double fexp = objective(expd);
        if (fexp < frefl) {
          pts[hi] = expd;
          fv[hi] = fexp;
        } else {
          pts[hi] = refl;
          fv[hi] = frefl;
        }
      } else if (frefl < fv[second]) {
        pts[hi] = refl;
        fv[hi] = frefl;
      } else {
        const auto contr = blend(0.5);
        const double fcon = objective(contr);
        if (fcon < fv[hi]) {
          pts[hi] = contr;
          fv[hi] = fcon;
        } else {
          for (int i = 0; i <= d; ++i) {
            if (i == lo) continue;
            for (int k = 0; k < d; ++k) pts[i][k] = 0.5 * (pts[i][k] + pts[lo][k]);
            fv[i] = objective(pts[i]);
          }
        }
      }
    }
    int lo = 0;
    for (int i = 1; i <= d; ++i)
      if (fv[i] < fv[lo]) lo = i;
    best = pts[lo];
    scale *= 8.0;  // widen in case the first simplex was too tight
  }

  OptimalF out;
  out.coeffs.assign(d + 1, 0.0);
  out.coeffs[0] = 1.0;
  for (int i = 0; i < d; ++i) out.coeffs[i + 1] = best[i];
  out.h_value = dir * objective(best);
  out.rayleigh = (out.h_value - c) * mode_sign(mode) * kPi / (2.0 * r);
  return out;
}

}  // namespace

OptimalF optimal_f_search(double c, double r, int degree, GapMode mode) {
  (void)FunctionalParams(c, r, mode);  // range validation
  check_degree(degree);
  if (degree == 0) return optimal_f_eigen(c, r, 0, mode);  // nothing to search
  return nelder_mead(c, r, degree, mode);
}

RBounds::RBounds(double lo_, double hi_) : lo(lo_), hi(hi_) {
  if (!(lo >= 1.0) || !(hi <= 6.0) || lo > hi)
    throw param_error("RBounds: need 1 <= lo <= hi <= 6, got [" + std::to_string(lo_) + ", " +
                      std::to_string(hi_) + "]");
}

namespace {

OptimizationResult make_result(double c, double r, int degree, GapMode mode) {
  const OptimalF opt = optimal_f_eigen(c, r, degree, mode);
  OptimizationResult res;
  res.c = c;
  res.r = r;
  res.mode = mode;
  res.h_value = opt.h_value;
  res.coeffs = opt.coeffs;
  res.gauge_unit_norm = opt.gauge_unit_norm;
  const PolynomialF f(opt.coeffs);
  const FunctionalParams params(c, r, mode);
  res.engine_agreement = std::abs(eval_h_series(params, f) - eval_h_quadrature(params, f));
  return res;
}

}  // namespace

OptimizationResult optimize_r(double c, int degree, GapMode mode, const RBounds& r_bounds) {
  check_degree(degree);
  const double dir = mode == GapMode::large_gaps ? 1.0 : -1.0;
  auto objective = [&](double r) { return dir * optimal_f_eigen(c, r, degree, mode).h_value; };

  double a = r_bounds.lo, b = r_bounds.hi;
  if (b - a > 1e-4) {
    const double invphi = (std::sqrt(5.0) - 1.0) / 2.0;
    double x1 = b - invphi * (b - a);
    double x2 = a + invphi * (b - a);
    double f1 = objective(x1);
    double f2 = objective(x2);
    while (b - a > 1e-4) {
      if (f1 < f2) {
        b = x2;
        x2 = x1;
        f2 = f1;
        x1 = b - invphi * (b - a);
        f1 = objective(x1);
      } else {
        a = x1;
        x1 = x2;
        f1 = f2;
        x2 = a + invphi * (b - a);
        f2 = objective(x2);
      }
    }
  }
  return make_result(c, 0.5 * (a + b), degree, mode);
}

CriticalResult find_critical_c(int degree, GapMode mode, const RBounds& r_bounds,
                               const SearchOptions& options) {
  check_degree(degree);
  const bool large = mode == GapMode::large_gaps;
  double c_lo = options.c_lo > 0.0 ? options.c_lo : (large ? 1.5 : 0.35);
  double c_hi = options.c_hi > 0.0 ? options.c_hi : (large ? 4.0 : 0.9);
  if (!(c_lo > 0.0) || !(c_hi > c_lo))
    throw param_error("find_critical_c: need 0 < c_lo < c_hi");
  if (!(options.step > 0.0) || !(options.resolution > 0.0))
    throw param_error("find_critical_c: step and resolution must be positive");

  auto h_opt = [&](double c) { return optimize_r(c, degree, mode, r_bounds).h_value; };

  CriticalResult result;
  double prev_c = c_lo;
  double prev_f = h_opt(c_lo) - 1.0;
  result.scan.push_back({c_lo, prev_f + 1.0});
  double lo = 0.0, hi = 0.0, f_lo = 0.0;
  bool bracketed = false;
  for (double c = c_lo + options.step; c <= c_hi + 1e-12; c += options.step) {
    const double fc = h_opt(c) - 1.0;
    result.scan.push_back({c, fc + 1.0});
    if (!bracketed && prev_f * fc <= 0.0) {
      lo = prev_c;
      hi = c;
      f_lo = prev_f;
      bracketed = true;
      break;
    }
    prev_c = c;
    prev_f = fc;
  }
  if (!bracketed) {
    std::ostringstream msg;
    msg << "find_critical_c: no sign change of h-1 in [" << c_lo << ", " << c_hi
        << "]; scan table:";
    for (const auto& row : result.scan) msg << " (" << row.c << ", " << row.h_opt << ")";
    throw search_error(msg.str());
  }

  while (hi - lo > options.resolution) {
    const double mid = 0.5 * (lo + hi);
    const double fm = h_opt(mid) - 1.0;
    if ((f_lo < 0.0) == (fm < 0.0)) {
      lo = mid;
      f_lo = fm;
    } else {
      hi = mid;
    }
  }

  // Report the endpoint where the mode's inequality is verified. The scan
  // enters the bracket from below with h < 1 in both modes, so that is the
  // low end for large gaps (h < 1) and the high end for small gaps (h > 1).
  const double certified = (f_lo < 0.0) == large ? lo : hi;
  result.c_star = certified;
  result.witness = optimize_r(certified, degree, mode, r_bounds);
  const bool ok = large ? result.witness.h_value < 1.0 : result.witness.h_value > 1.0;
  if (!ok)
    throw search_error("find_critical_c: witness at c = " + std::to_string(certified) +
                       " failed to verify h on the expected side of 1");
  return result;
}

}  // namespace optimizer

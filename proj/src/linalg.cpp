#include "zetagap/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "zetagap/errors.hpp"

namespace zetagap::linalg {

SquareMatrix cholesky(const SquareMatrix& g) {
  const std::size_t n = g.n;
  SquareMatrix l(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j <= i; ++j) {
      double s = g(i, j);
      for (std::size_t k = 0; k < j; ++k) s -= l(i, k) * l(j, k);
      if (i == j) {
        if (!(s > 0.0))
          throw conditioning_error("cholesky: non-positive pivot at index " + std::to_string(i) +
                                   " (matrix too ill-conditioned; lower the degree)");
        l(i, i) = std::sqrt(s);
      } else {
        l(i, j) = s / l(j, j);
      }
    }
  }
  return l;
}

std::vector<double> solve_lower(const SquareMatrix& l, const std::vector<double>& b) {
  const std::size_t n = l.n;
  std::vector<double> x(b);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = 0; k < i; ++k) x[i] -= l(i, k) * x[k];
    x[i] /= l(i, i);
  }
  return x;
}

std::vector<double> solve_lower_transposed(const SquareMatrix& l, const std::vector<double>& b) {
  const std::size_t n = l.n;
  std::vector<double> x(b);
  for (std::size_t i = n; i-- > 0;) {
    for (std::size_t k = i + 1; k < n; ++k) x[i] -= l(k, i) * x[k];
    x[i] /= l(i, i);
  }
  return x;
}

EigenDecomposition jacobi_eigen(SquareMatrix a, double tol) {
  const std::size_t n = a.n;
  SquareMatrix v(n);
  for (std::size_t i = 0; i < n; ++i) v(i, i) = 1.0;

  double norm = 0.0;
  for (double x : a.a) norm += x * x;
  norm = std::sqrt(norm);
  const double threshold = tol * std::max(norm, 1e-300);

  for (int sweep = 0; sweep < 100; ++sweep) {
    double off = 0.0;
    for (std::size_t p = 0; p < n; ++p)
      for (std::size_t q = p + 1; q < n; ++q) off += 2.0 * a(p, q) * a(p, q);
    if (std::sqrt(off) < threshold) break;

    for (std::size_t p = 0; p < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const double apq = a(p, q);
        if (std::abs(apq) < 1e-300) continue;
        const double theta = (a(q, q) - a(p, p)) / (2.0 * apq);
        const double t = (theta >= 0 ? 1.0 : -1.0) /
                         (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        for (std::size_t k = 0; k < n; ++k) {
          const double akp = a(k, p), akq = a(k, q);
          a(k, p) = c * akp - s * akq;
          a(k, q) = s * akp + c * akq;
        }
        for (std::size_t k = 0; k < n; ++k) {
          const double apk = a(p, k), aqk = a(q, k);
          a(p, k) = c * apk - s * aqk;
          a(q, k) = s * apk + c * aqk;
        }
        for (std::size_t k = 0; k < n; ++k) {
          const double vkp = v(k, p), vkq = v(k, q);
          v(k, p) = c * vkp - s * vkq;
          v(k, q) = s * vkp + c * vkq;
        }
      }
    }
  }

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(),
            [&](std::size_t i, std::size_t j) { return a(i, i) < a(j, j); });

  EigenDecomposition out;
  out.values.resize(n);
  out.vectors = SquareMatrix(n);
  for (std::size_t k = 0; k < n; ++k) {
    out.values[k] = a(order[k], order[k]);
    for (std::size_t i = 0; i < n; ++i) out.vectors(i, k) = v(i, order[k]);
  }
  return out;
}

TridiagEigen tridiag_eigen_first_row(std::vector<double> d, std::vector<double> e) {
  const std::size_t n = d.size();
  e.push_back(0.0);  // e[n-1] sentinel
  std::vector<double> z(n, 0.0);
  if (n > 0) z[0] = 1.0;  // track first row of the accumulated rotations

  for (std::size_t l = 0; l < n; ++l) {
    int iter = 0;
    std::size_t m;
    do {
      for (m = l; m + 1 < n; ++m) {
        const double dd = std::abs(d[m]) + std::abs(d[m + 1]);
        if (std::abs(e[m]) <= 1e-300 + 2.3e-16 * dd) break;
      }
      if (m != l) {
        if (++iter == 60)
          throw accuracy_error("tridiag_eigen: QL iteration failed to converge");
        double g = (d[l + 1] - d[l]) / (2.0 * e[l]);
        double r = std::hypot(g, 1.0);
        g = d[m] - d[l] + e[l] / (g + std::copysign(r, g));
        double s = 1.0, c = 1.0, p = 0.0;
        for (std::size_t i = m; i-- > l;) {
          double f = s * e[i];
          const double b = c * e[i];
          r = std::hypot(f, g);
          e[i + 1] = r;
          if (r == 0.0) {
            d[i + 1] -= p;
            e[m] = 0.0;
            break;
          }
          s = f / r;
          c = g / r;
          g = d[i + 1] - p;
          r = (d[i] - g) * s + 2.0 * c * b;
          p = s * r;
          d[i + 1] = g + p;
          g = c * r - b;
          f = z[i + 1];
          z[i + 1] = s * z[i] + c * f;
          z[i] = c * z[i] - s * f;
        }
        if (r == 0.0 && m - l > 1) continue;
        d[l] -= p;
        e[l] = g;
        e[m] = 0.0;
      }
    } while (m != l);
  }

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(), [&](std::size_t i, std::size_t j) { return d[i] < d[j]; });

  TridiagEigen out;
  out.values.resize(n);
  out.first_components.resize(n);
  for (std::size_t k = 0; k < n; ++k) {
    out.values[k] = d[order[k]];
    out.first_components[k] = z[order[k]];
  }
  return out;
}

}  // namespace zetagap::linalg

#ifndef DUNKL_NUMDIFF_HPP
#define DUNKL_NUMDIFF_HPP

#include <cmath>
#include <vector>

namespace dunkl::numdiff {

struct Estimate {
  double value = 0.0;
  double error = 0.0;  // |last diagonal - previous diagonal| of the tableau
};

/// Central differences at h, h/2, ..., h/2^(levels-1), extrapolated with a
/// Richardson tableau (even error expansion, factors 4^j).
template <class F>
Estimate richardson_derivative(F&& f, double x, double h, int levels = 5) {
  std::vector<std::vector<double>> t(levels);
  double step = h;
  for (int i = 0; i < levels; ++i, step *= 0.5) {
    t[i].resize(i + 1);
    t[i][0] = (f(x + step) - f(x - step)) / (2.0 * step);
    double factor = 4.0;
    for (int j = 1; j <= i; ++j, factor *= 4.0) t[i][j] = t[i][j - 1] + (t[i][j - 1] - t[i - 1][j - 1]) / (factor - 1.0);
  }
  Estimate e;
  e.value = t[levels - 1][levels - 1];
  e.error = levels > 1 ? std::abs(e.value - t[levels - 2][levels - 2]) : 0.0;
  return e;
}

}  // namespace dunkl::numdiff

#endif  // DUNKL_NUMDIFF_HPP

#pragma once

#include <cmath>
#include <queue>
#include <vector>

namespace suprec {

struct QuadratureResult {
  double value = 0.0;
  double error_estimate = 0.0;
  int intervals = 0;
  bool converged = false;
};

namespace detail {

// Gauss-Kronrod 7-15 abscissae and weights (positive half; the rule is
// symmetric).  Last node is the midpoint.
inline constexpr double kGkNodes[8] = {
    0.991455371120813, 0.949107912342759, 0.864864423359769,
    0.741531185599394, 0.586087235467691, 0.405845151377397,
    0.207784955007898, 0.000000000000000};
inline constexpr double kKronrodW[8] = {
    0.022935322010529, 0.063092092629979, 0.104790010322250,
    0.140653259715525, 0.169004726639267, 0.190350578064785,
    0.204432940075298, 0.209482141084728};
// Gauss weights attach to nodes 1, 3, 5, 7.
inline constexpr double kGaussW[4] = {0.129484966168870, 0.279705391489277,
                                      0.381830050505119, 0.417959183673469};

template <class F>
void gk15(const F& f, double a, double b, double& value, double& err) {
  const double center = 0.5 * (a + b);
  const double half = 0.5 * (b - a);
  const double fc = f(center);
  double kronrod = kKronrodW[7] * fc;
  double gauss = kGaussW[3] * fc;
  for (int i = 0; i < 7; ++i) {
    const double dx = half * kGkNodes[i];
    const double fsum = f(center - dx) + f(center + dx);
    kronrod += kKronrodW[i] * fsum;
    if (i % 2 == 1) gauss += kGaussW[i / 2] * fsum;
  }
  value = kronrod * half;
  const double diff = std::abs((kronrod - gauss) * half);
  // QUADPACK-style sharpening of the raw Gauss/Kronrod difference.
  err = std::min(diff, std::pow(200.0 * diff, 1.5));
}

struct Segment {
  double a, b, value, err;
  bool operator<(const Segment& other) const { return err < other.err; }
};

}  // namespace detail

// Adaptive bisection with a fixed-order Gauss-Kronrod 7-15 local rule.
// Always refines the segment with the largest error estimate.  Returns the
// achieved state; converged is false when the interval budget ran out
// before the absolute tolerance was met.
template <class F>
QuadratureResult integrate_adaptive(const F& f, double a, double b,
                                    double abs_tol, int max_intervals = 20000) {
  std::priority_queue<detail::Segment> segments;
  detail::Segment seg{a, b, 0.0, 0.0};
  detail::gk15(f, a, b, seg.value, seg.err);
  segments.push(seg);
  double total_value = seg.value;
  double total_err = seg.err;
  int count = 1;
  while (total_err > abs_tol && count < max_intervals) {
    detail::Segment worst = segments.top();
    segments.pop();
    const double mid = 0.5 * (worst.a + worst.b);
    detail::Segment left{worst.a, mid, 0.0, 0.0};
    detail::Segment right{mid, worst.b, 0.0, 0.0};
    detail::gk15(f, left.a, left.b, left.value, left.err);
    detail::gk15(f, right.a, right.b, right.value, right.err);
    total_value += left.value + right.value - worst.value;
    total_err += left.err + right.err - worst.err;
    segments.push(left);
    segments.push(right);
    ++count;
  }
  QuadratureResult result;
  result.value = total_value;
  result.error_estimate = total_err;
  result.intervals = count;
  result.converged = total_err <= abs_tol;
  return result;
}

}  // namespace suprec

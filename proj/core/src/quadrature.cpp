#include "xop/quadrature.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>

#include "xop/errors.hpp"

namespace xop {

namespace {

constexpr double kHalfPi = std::numbers::pi / 2.0;

// Largest |u| = pi/2 sinh(t) kept by the tanh-sinh rule. exp(-2 * 345) is
// about 1e-300, so endpoint gaps go all the way down to the normal range.
constexpr double kMaxUAlgebraic = 345.0;
// Smooth integrands only need gaps down to roughly machine epsilon.
constexpr double kMaxUSmooth = 18.5;
// exp-sinh keeps x - a inside [1e-304, 1e304].
constexpr double kMaxExpArg = 700.0;

class Accumulator {
 public:
  explicit Accumulator(bool extended) : extended_(extended) {}

  void add(double v) {
    if (extended_) {
      wide_ += v;
      return;
    }
    const double y = v - carry_;
    const double t = sum_ + y;
    carry_ = (t - sum_) - y;
    sum_ = t;
  }

  double value() const { return extended_ ? static_cast<double>(wide_) : sum_; }

 private:
  bool extended_;
  double sum_ = 0.0;
  double carry_ = 0.0;
  long double wide_ = 0.0L;
};

enum class Shape { bounded, lower_half_line, upper_half_line, whole_line };

struct Transform {
  Shape shape;
  double a;
  double b;
  InfiniteMap map;
  double t_max;
};

double t_limit_for_u(double u_max) { return std::asinh(u_max / kHalfPi); }

Transform make_transform(const Interval& d, const QuadratureSpec& spec) {
  const bool lo_inf = std::isinf(d.lower);
  const bool hi_inf = std::isinf(d.upper);
  Transform tr{Shape::bounded, d.lower, d.upper, spec.infinite_map, 0.0};
  if (!lo_inf && !hi_inf) {
    tr.shape = Shape::bounded;
    tr.t_max = t_limit_for_u(spec.endpoints == EndpointMode::algebraic ? kMaxUAlgebraic : kMaxUSmooth);
    return tr;
  }
  if (lo_inf && hi_inf) {
    tr.shape = Shape::whole_line;
  } else if (hi_inf) {
    tr.shape = Shape::upper_half_line;
  } else {
    tr.shape = Shape::lower_half_line;
  }
  tr.t_max = spec.infinite_map == InfiniteMap::exponential ? std::asinh(kMaxExpArg / kHalfPi)
                                                            : t_limit_for_u(kMaxUAlgebraic);
  return tr;
}

// Tanh-sinh node on an interval of width `width`: distance to the nearer
// endpoint, distance to the farther one, and the Jacobian dx/dt.
struct TanhSinhPoint {
  double near;
  double far;
  double jacobian;
};

TanhSinhPoint tanh_sinh_point(double t, double width) {
  const double u = kHalfPi * std::sinh(t);
  const double e = std::exp(-2.0 * std::abs(u));
  const double denom = 1.0 + e;
  return {width * e / denom, width / denom, width * std::numbers::pi * std::cosh(t) * e / (denom * denom)};
}

// Node on (0, inf) measured from the finite endpoint; returns false when the
// node has left the representable range.
bool half_line_point(double t, InfiniteMap map, double& y, double& jacobian) {
  if (map == InfiniteMap::exponential) {
    const double arg = kHalfPi * std::sinh(t);
    y = std::exp(arg);
    jacobian = y * kHalfPi * std::cosh(t);
  } else {
    const TanhSinhPoint p = tanh_sinh_point(t, 1.0);
    const double g_lo = t < 0 ? p.near : p.far;
    const double g_hi = t < 0 ? p.far : p.near;
    if (g_hi == 0.0) return false;
    y = g_lo / g_hi;
    jacobian = (p.jacobian / g_hi) / g_hi;
  }
  return std::isfinite(y) && std::isfinite(jacobian) && y > 0.0;
}

template <class Visit>
void visit_nodes(const Transform& tr, double t, Visit&& visit) {
  switch (tr.shape) {
    case Shape::bounded: {
      const TanhSinhPoint p = tanh_sinh_point(t, tr.b - tr.a);
      if (p.near == 0.0 || p.jacobian == 0.0) return;
      if (t >= 0) {
        visit(QuadNode{tr.b - p.near, p.far, p.near}, p.jacobian);
      } else {
        visit(QuadNode{tr.a + p.near, p.near, p.far}, p.jacobian);
      }
      return;
    }
    case Shape::upper_half_line: {
      double y = 0, jac = 0;
      if (!half_line_point(t, tr.map, y, jac)) return;
      visit(QuadNode{tr.a + y, y, std::numeric_limits<double>::infinity()}, jac);
      return;
    }
    case Shape::lower_half_line: {
      double y = 0, jac = 0;
      if (!half_line_point(t, tr.map, y, jac)) return;
      visit(QuadNode{tr.b - y, std::numeric_limits<double>::infinity(), y}, jac);
      return;
    }
    case Shape::whole_line: {
      double y = 0, jac = 0;
      if (!half_line_point(t, tr.map, y, jac)) return;
      const double inf = std::numeric_limits<double>::infinity();
      visit(QuadNode{y, inf, inf}, jac);
      visit(QuadNode{-y, inf, inf}, jac);
      return;
    }
  }
}

}  // namespace

void QuadratureSpec::validate() const {
  if (!(rel_tol > 0.0) || !(abs_tol > 0.0)) {
    throw DomainError("quadrature tolerances must be strictly positive");
  }
  if (max_depth < 1) {
    throw DomainError("quadrature max_depth must be at least 1");
  }
}

QuadResult integrate_nodes(const NodeIntegrand& f, const Interval& domain, const QuadratureSpec& spec) {
  spec.validate();
  if (!(domain.lower < domain.upper)) {
    throw DomainError("integration interval must satisfy lower < upper");
  }
  const Transform tr = make_transform(domain, spec);

  QuadResult result;
  Accumulator level_sum(spec.extended_accumulation);
  auto add_terms = [&](double t) {
    visit_nodes(tr, t, [&](const QuadNode& node, double jacobian) {
      const double fx = f(node);
      ++result.evaluations;
      if (!std::isfinite(fx)) {
        std::ostringstream msg;
        msg << "integrand is not finite at x = " << node.x;
        throw DomainError(msg.str());
      }
      level_sum.add(fx * jacobian);
    });
  };

  // Level 0: unit step over the integers in [-t_max, t_max].
  double h = 1.0;
  const int k0 = static_cast<int>(std::floor(tr.t_max));
  for (int k = -k0; k <= k0; ++k) add_terms(static_cast<double>(k));
  double estimate = h * level_sum.value();
  double error = std::numeric_limits<double>::infinity();

  for (int level = 1; level <= spec.max_depth; ++level) {
    h /= 2.0;
    const long kmax = static_cast<long>(std::floor(tr.t_max / h));
    for (long k = 1; k <= kmax; k += 2) {
      add_terms(k * h);
      add_terms(-k * h);
    }
    const double next = h * level_sum.value();
    error = std::abs(next - estimate);
    estimate = next;
    result.levels = level;
    if (level >= 2 && error <= std::max(spec.abs_tol, spec.rel_tol * std::abs(estimate))) {
      result.value = estimate;
      result.error_estimate = error;
      return result;
    }
  }
  throw ConvergenceError("quadrature did not reach the requested tolerance", estimate, error);
}

QuadResult integrate(const std::function<double(double)>& f, const Interval& domain, const QuadratureSpec& spec) {
  return integrate_nodes([&f](const QuadNode& n) { return f(n.x); }, domain, spec);
}

}  // namespace xop

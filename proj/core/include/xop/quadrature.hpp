#pragma once

#include <functional>
#include <limits>

namespace xop {

enum class EndpointMode {
  none,       ///< integrand smooth up to the endpoints
  algebraic,  ///< endpoint singularities of the form |x - a|^p, p > -1
};

enum class InfiniteMap {
  rational,     ///< x = a + t / (1 - t) followed by tanh-sinh on (0, 1)
  exponential,  ///< x = a + exp(pi/2 sinh t) (exp-sinh)
};

struct QuadratureSpec {
  double rel_tol = 1e-12;
  double abs_tol = 1e-14;
  int max_depth = 10;
  EndpointMode endpoints = EndpointMode::algebraic;
  InfiniteMap infinite_map = InfiniteMap::rational;
  /// Accumulate node sums in long double instead of Kahan-compensated double.
  bool extended_accumulation = false;

  /// Throws DomainError unless tolerances are positive and max_depth >= 1.
  void validate() const;
};

/// Open interval; either end may be infinite.
struct Interval {
  double lower = 0.0;
  double upper = std::numeric_limits<double>::infinity();
};

/// A quadrature abscissa together with its distances to both endpoints.
/// The distances are computed directly from the transform and stay accurate
/// when x itself rounds onto an endpoint.
struct QuadNode {
  double x;
  double from_lower;
  double from_upper;
};

struct QuadResult {
  double value = 0.0;
  double error_estimate = 0.0;
  int levels = 0;
  long evaluations = 0;
};

using NodeIntegrand = std::function<double(const QuadNode&)>;

QuadResult integrate(const std::function<double(double)>& f, const Interval& domain,
                     const QuadratureSpec& spec = {});

/// Same as integrate() but hands the integrand the endpoint distances, which
/// is what (1 - x)^a type factors need near x = 1.
QuadResult integrate_nodes(const NodeIntegrand& f, const Interval& domain,
                           const QuadratureSpec& spec = {});

}  // namespace xop

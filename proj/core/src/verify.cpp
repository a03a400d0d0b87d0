#include "xop/verify.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <sstream>

#include "xop/classical.hpp"
#include "xop/errors.hpp"
#include "xop/moments.hpp"

namespace xop {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

double abs_eval(const Polynomial& y, double x) {
  double acc = 0.0;
  const double ax = std::abs(x);
  const auto c = y.coefficients();
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * ax + std::abs(*it);
  return acc;
}

std::string fmt(const char* format, double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, format, v);
  return buf;
}

std::string degree_name(const char* prefix, int n) { return std::string(prefix) + ".n" + std::to_string(n); }

double max_relative_diff(const std::vector<double>& a, const std::vector<double>& b) {
  double scale = 0.0, diff = 0.0;
  const std::size_t n = std::max(a.size(), b.size());
  for (std::size_t i = 0; i < n; ++i) {
    const double u = i < a.size() ? a[i] : 0.0;
    const double v = i < b.size() ? b[i] : 0.0;
    scale = std::max(scale, std::abs(u));
    diff = std::max(diff, std::abs(u - v));
  }
  return scale == 0.0 ? diff : diff / scale;
}

double defect(const Polynomial& a, const Polynomial& b) {
  return proportionality_defect(a.coefficients(), b.coefficients());
}

constexpr const char* kAnchorCondition = "exceptional condition at the root of eta";
constexpr const char* kAnchorFlag = "flag y1, (x-xi)^2, ..., (x-xi)^n";
constexpr const char* kAnchorEigen = "natural operator eigen-equation";
constexpr const char* kAnchorOrth = "orthogonality <y_n, y_k> = K_n delta_nk";
constexpr const char* kAnchorNorm = "squared norms K_n";
constexpr const char* kAnchorDet = "determinantal representation via Cramer's rule";
constexpr const char* kAnchorCofactor = "cofactor expansion along the last row";
constexpr const char* kAnchorGS = "Gram-Schmidt over the flag";
constexpr const char* kAnchorMoments = "adjusted moment recursion";
constexpr const char* kAnchorInitial = "initial moments mu0, mu1";
constexpr const char* kAnchorSFactor = "s = q + p'/2 + 2p(eta'/eta - b'/b)";
constexpr const char* kAnchorDarboux3 = "Type III Darboux closed form";
constexpr const char* kAnchorDarbouxJ = "Jacobi Darboux closed form";
constexpr const char* kAnchorX2 = "X2 exceptional conditions at both roots";

}  // namespace

double ConditionValue::relative() const {
  if (scale == 0.0) return value == 0.0 ? 0.0 : kInf;
  return std::abs(value) / scale;
}

ConditionValue exceptional_condition(const Polynomial& p, const Polynomial& eta, const Polynomial& s, double root,
                                     const Polynomial& y) {
  const Polynomial deta = eta.derivative();
  const double d1 = deta(root);
  const double e0 = p(root) * deta.derivative()(root) + p.derivative()(root) * d1 / 2.0 - s(root) * d1;
  const double e1 = 2.0 * p(root) * d1;
  const Polynomial dy = y.derivative();
  ConditionValue cv;
  cv.value = e1 * dy(root) - e0 * y(root);
  cv.scale = std::abs(e1) * abs_eval(dy, root) + std::abs(e0) * abs_eval(y, root);
  return cv;
}

ConditionValue exceptional_condition(const FamilyDescriptor& family, const Polynomial& y) {
  return exceptional_condition(family.p, family.eta, family.s, family.xi, y);
}

double exceptional_condition_value(const FamilyDescriptor& family, const Polynomial& y) {
  return exceptional_condition(family, y).value;
}

std::string_view status_name(CheckStatus s) {
  switch (s) {
    case CheckStatus::pass: return "pass";
    case CheckStatus::fail: return "fail";
    case CheckStatus::informational: return "informational";
  }
  return "unknown";
}

Check make_check(std::string name, std::string anchor, double residual, double tolerance, std::string note) {
  Check c{std::move(name), std::move(anchor), CheckStatus::fail, std::abs(residual), tolerance, std::move(note)};
  if (std::abs(residual) <= tolerance) c.status = CheckStatus::pass;
  return c;
}

Check make_lower_bound_check(std::string name, std::string anchor, double residual, double threshold,
                             std::string note) {
  Check c{std::move(name), std::move(anchor), CheckStatus::fail, std::abs(residual), threshold, std::move(note)};
  if (std::abs(residual) >= threshold) c.status = CheckStatus::pass;
  return c;
}

Check make_info(std::string name, std::string anchor, double residual, std::string note) {
  return Check{std::move(name), std::move(anchor), CheckStatus::informational, std::abs(residual), 0.0,
               std::move(note)};
}

void VerificationReport::append(std::vector<Check> more) {
  for (Check& c : more) checks.push_back(std::move(c));
}

void VerificationReport::sort() {
  std::stable_sort(checks.begin(), checks.end(), [](const Check& a, const Check& b) { return a.name < b.name; });
}

bool VerificationReport::passed() const {
  return std::none_of(checks.begin(), checks.end(), [](const Check& c) { return c.status == CheckStatus::fail; });
}

const Check* VerificationReport::find(std::string_view name) const {
  for (const Check& c : checks)
    if (c.name == name) return &c;
  return nullptr;
}

std::vector<Check> flag_check(const FamilyDescriptor& family, int max_n) {
  if (max_n < 2) throw DomainError("flag_check needs max_n >= 2");
  std::vector<Check> out;
  const bool type3 = family.kind == FamilyKind::laguerre_III;
  const Polynomial first = type3 ? Polynomial::constant(1.0) : to_monomial({family.xi, {family.c10, family.c11}});
  out.push_back(make_check("flag.first", kAnchorFlag, exceptional_condition(family, first).relative(), 1e-10,
                           type3 ? "constant 1" : "y1 = c10 + c11 (x - xi)"));
  for (int k = 2; k <= max_n; ++k) {
    Polynomial v = Polynomial::constant(1.0);
    for (int i = 0; i < k; ++i) v = v * Polynomial::linear_factor(family.xi);
    out.push_back(make_check(degree_name("flag.v", k), kAnchorFlag, exceptional_condition(family, v).relative(),
                             1e-10, "(x - xi)^" + std::to_string(k)));
  }
  const Polynomial excluded = type3 ? Polynomial::monomial(1) : Polynomial::constant(1.0);
  out.push_back(make_lower_bound_check("flag.excluded", kAnchorCondition,
                                       exceptional_condition(family, excluded).relative(), 1e-3,
                                       type3 ? "degree 1 (y = x) is excluded" : "constants are excluded"));
  return out;
}

X2Roots quadratic_roots(const Polynomial& eta) {
  if (eta.degree() != 2) throw DomainError("expected a quadratic");
  const double a = eta.coeff(2), b = eta.coeff(1), c = eta.coeff(0);
  const double disc = b * b - 4.0 * a * c;
  if (disc < 0) throw DomainError("quadratic has complex roots (discriminant " + fmt("%.6g", disc) + ")");
  const double q = -0.5 * (b + std::copysign(std::sqrt(disc), b));
  double r1 = q / a;
  double r2 = q != 0.0 ? c / q : -r1;
  if (r1 > r2) std::swap(r1, r2);
  return {r1, r2};
}

std::vector<X2Candidate> x2_standard_candidates(double alpha, const Polynomial& eta) {
  const X2Roots r = quadratic_roots(eta);
  const Polynomial t1 = Polynomial::linear_factor(r.xi1);
  const Polynomial t2 = Polynomial::linear_factor(r.xi2);
  return {
      {"v2", laguerre_poly(2, alpha).reflected(), true},
      {"v3", t1 * t1 * (t2 + Polynomial::constant(1.0)), true},
      {"v4", t1 * t1 * t2 * t2, true},
      {"x", Polynomial::monomial(1), false},
  };
}

std::vector<Check> x2_flag_check(const Polynomial& eta, const Polynomial& s, const Polynomial& p,
                                 const std::vector<X2Candidate>& candidates, double tol) {
  const X2Roots r = quadratic_roots(eta);
  std::vector<Check> out;
  for (const X2Candidate& c : candidates) {
    const double v1 = exceptional_condition(p, eta, s, r.xi1, c.y).relative();
    const double v2 = exceptional_condition(p, eta, s, r.xi2, c.y).relative();
    const double worst = std::max(v1, v2);
    const std::string note = "relative values " + fmt("%.3e", v1) + " at xi1, " + fmt("%.3e", v2) + " at xi2";
    if (c.expect_in_flag) {
      out.push_back(make_check("x2." + c.name, kAnchorX2, worst, tol, note));
    } else {
      // Excluded: at least one condition must fail.
      out.push_back(make_lower_bound_check("x2.excluded." + c.name, kAnchorX2, worst, tol, note));
    }
  }
  return out;
}

EigenResidual natural_operator_residual(const Polynomial& p, const Polynomial& eta, const Polynomial& s,
                                        const Polynomial& y, double rel_tol) {
  if (y.is_zero()) throw DomainError("eigen-test needs a nonzero polynomial");
  const NaturalOperator op = natural_operator_coeffs(p, eta, s);
  const Polynomial image = reduce_to_polynomial(op.apply(y), rel_tol);
  EigenResidual r;
  r.lambda = image.coeff(y.degree()) / y.leading();
  r.residual = (image - r.lambda * y).max_norm() / y.max_norm();
  return r;
}

EigenResidual natural_operator_residual(const FamilyDescriptor& family, const Polynomial& y, double rel_tol) {
  return natural_operator_residual(family.p, family.eta, family.s, y, rel_tol);
}

double GramMatrix::max_relative_offdiag() const {
  double worst = 0.0;
  for (std::size_t i = 0; i < values.size(); ++i)
    for (std::size_t j = 0; j < values.size(); ++j) {
      if (i == j) continue;
      const double r = std::abs(values[i][j]) / std::sqrt(std::abs(values[i][i] * values[j][j]));
      worst = std::isfinite(r) ? std::max(worst, r) : kInf;
    }
  return worst;
}

QuadResult weighted_inner_product(const FamilyDescriptor& family, const ShiftedPolynomial& f,
                                  const ShiftedPolynomial& g, const QuadratureSpec& spec) {
  return integrate_nodes(
      [&](const QuadNode& n) {
        const double w = family.weight(n);
        return w == 0.0 ? 0.0 : f(n.x) * g(n.x) * w;
      },
      family.interval, spec);
}

GramMatrix orthogonality_matrix(const FamilyDescriptor& family, int max_n, const QuadratureSpec& spec) {
  GramMatrix g;
  for (int n = 0; n <= max_n; ++n)
    if (family.admissible(n)) g.degrees.push_back(n);
  if (g.degrees.empty()) return g;
  const MomentTable mu = generate_moments(family, required_moment_index(g.degrees.back()));
  std::vector<ShiftedPolynomial> ys;
  for (int n : g.degrees) {
    ys.push_back(exceptional_polynomial(family, n, mu).shifted);
    g.Kn.push_back(norm_Kn(family, n));
  }
  const std::size_t m = ys.size();
  g.values.assign(m, std::vector<double>(m, 0.0));
  g.error_estimates.assign(m, std::vector<double>(m, 0.0));
  auto entry = [&](std::size_t i, std::size_t j, const QuadratureSpec& s) {
    try {
      const QuadResult r = weighted_inner_product(family, ys[i], ys[j], s);
      g.values[i][j] = g.values[j][i] = r.value;
      g.error_estimates[i][j] = g.error_estimates[j][i] = r.error_estimate;
    } catch (const ConvergenceError& e) {
      g.values[i][j] = g.values[j][i] = e.best_estimate();
      g.error_estimates[i][j] = g.error_estimates[j][i] = e.error_estimate();
      g.failures.push_back("(" + std::to_string(g.degrees[i]) + "," + std::to_string(g.degrees[j]) + ")");
    }
  };
  for (std::size_t i = 0; i < m; ++i) entry(i, i, spec);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i + 1; j < m; ++j) {
      // Off-diagonal targets are zero, so the absolute tolerance follows the diagonal scale.
      QuadratureSpec s = spec;
      s.abs_tol = std::max(spec.abs_tol, spec.rel_tol * std::sqrt(std::abs(g.values[i][i] * g.values[j][j])));
      entry(i, j, s);
    }
  return g;
}

Polynomial darboux_typeIII(double alpha, int n) {
  if (n < 0 || n == 1) throw InadmissibleDegree("Type III closed form exists for n = 0 and n >= 2 only");
  if (n == 0) return Polynomial::constant(1.0);
  const Polynomial y = laguerre_poly(n - 2, alpha + 1.0);
  const Polynomial a1 = laguerre_poly(1, -alpha - 1.0).reflected();
  const Polynomial a2 = laguerre_poly(2, -alpha - 2.0).reflected();
  return -(Polynomial::monomial(1) * a1 * y.derivative() - 2.0 * a2 * y);
}

DarbouxDiagnostic darboux_jacobi_diagnostic(double alpha, double beta, int n) {
  if (n < 1) throw InadmissibleDegree("Jacobi closed form needs n >= 1");
  const int j = n - 1;
  const Polynomial y = jacobi_poly(j, alpha + 1.0, beta - 1.0);
  const Polynomial factor = jacobi_poly(1, -alpha - 1.0, beta - 1.0);
  DarbouxDiagnostic d;
  d.y = factor * (Polynomial({1.0, -1.0}) * y.derivative() - alpha * y) * (1.0 / (alpha + 1.0 + j));
  const FamilyDescriptor f = make_family(FamilyKind::jacobi, alpha, beta);
  d.defect = defect(d.y, exceptional_polynomial(f, n).monomial);
  d.proportional = d.defect <= 1e-8;
  return d;
}

VerificationReport verify_family(const FamilyDescriptor& family, const ReportOptions& options) {
  if (options.max_degree < 2) throw DomainError("max degree must be at least 2");
  VerificationReport rep;
  rep.family = std::string(family_name(family.kind));
  rep.alpha = family.alpha;
  rep.beta = family.beta;
  rep.has_beta = family.kind == FamilyKind::jacobi;
  const QuadratureSpec& qs = options.quadrature;

  // Moments: recursion against quadrature, and which recursion variants hold.
  const int N = std::max(options.moment_checks, required_moment_index(options.max_degree));
  const MomentTable mu = generate_moments(family, N, qs);
  const MomentTable oracle = quadrature_moments(family, options.moment_checks, qs);
  double worst = 0.0;
  int worst_k = 0;
  for (int k = 0; k <= options.moment_checks; ++k) {
    const auto i = static_cast<std::size_t>(k);
    const double err = std::abs(mu.values[i] - oracle.values[i]) / std::abs(oracle.values[i]);
    if (!(err <= worst)) {
      worst = err;
      worst_k = k;
    }
  }
  std::string validated;
  for (const VariantAgreement& va : compare_recursion_variants(family, oracle, 1e-8, qs)) {
    rep.checks.push_back(make_info("moments.variant." + std::string(variant_name(va.variant)), kAnchorMoments,
                                   va.max_relative_error, va.agrees ? "validated by quadrature" : "rejected by quadrature"));
    if (va.agrees) validated += (validated.empty() ? "" : ", ") + std::string(variant_name(va.variant));
  }
  rep.checks.push_back(make_check("moments.oracle", kAnchorMoments, worst, 1e-8,
                                  "0 <= k <= " + std::to_string(options.moment_checks) + ", worst at k = " +
                                      std::to_string(worst_k) + "; variants matching quadrature: " +
                                      (validated.empty() ? "none" : validated)));
  const InitialMoments im = initial_moments(family, qs);
  rep.checks.push_back(make_check("moments.initial.mu1", kAnchorInitial,
                                  std::abs(im.mu1 - oracle.values[1]) / std::abs(oracle.values[1]), 1e-8,
                                  "closed form " + fmt("%.12g", im.mu1) + " vs quadrature"));
  rep.checks.push_back(make_check("moments.initial.mu0", kAnchorInitial,
                                  std::abs(im.mu0 - oracle.values[0]) / std::abs(oracle.values[0]), 1e-8,
                                  std::string("source ") + std::string(source_name(im.mu0_source))));
  if (im.tabulated_mu0) {
    rep.checks.push_back(make_info("moments.initial.mu0_tabulated", kAnchorInitial, *im.tabulated_mu0_deviation,
                                   "tabulated closed form " + fmt("%.12g", *im.tabulated_mu0) + " vs used " +
                                       fmt("%.12g", im.mu0)));
  }

  // s from the factorization gauge.
  try {
    const FactorizationResult fr = s_via_factorization(family);
    rep.checks.push_back(make_check("s.factorization", kAnchorSFactor, max_relative_diff(
                                        {family.s.coeff(0), family.s.coeff(1)}, {fr.s.coeff(0), fr.s.coeff(1)}),
                                    1e-10, "division remainder " + fmt("%.3e", fr.remainder_ratio)));
  } catch (const NonPolynomialError& e) {
    rep.checks.push_back(make_check("s.factorization", kAnchorSFactor, e.relative_remainder(), 1e-10, e.what()));
  }

  rep.append(flag_check(family, options.max_degree));

  // Per-degree checks on the determinantal output.
  std::vector<double> lambdas;
  for (int n = 0; n <= options.max_degree; ++n) {
    if (!family.admissible(n)) continue;
    ExceptionalPolynomial ep;
    try {
      ep = exceptional_polynomial(family, n, mu);
    } catch (const SingularMatrixError& e) {
      rep.checks.push_back(make_check(degree_name("detrep.solve", n), kAnchorDet, kInf, 0.0, e.what()));
      continue;
    }
    const std::string cond_note = "condition estimate " + fmt("%.3e", ep.condition_estimate) +
                                  (ep.ill_conditioned ? " (ill-conditioned)" : "");

    rep.checks.push_back(make_check(degree_name("condition", n), kAnchorCondition,
                                    exceptional_condition(family, ep.monomial).relative(), 1e-9));
    try {
      const EigenResidual er = natural_operator_residual(family, ep.monomial);
      lambdas.push_back(er.lambda);
      rep.checks.push_back(make_check(degree_name("eigen", n), kAnchorEigen, er.residual, 1e-9,
                                      "lambda = " + fmt("%.12g", er.lambda) + "; " + cond_note));
    } catch (const NonPolynomialError& e) {
      rep.checks.push_back(make_check(degree_name("eigen", n), kAnchorEigen, e.relative_remainder(), 1e-9, e.what()));
    }

    const MomentMatrix mm = build_matrix(family, n, mu);
    const ShiftedPolynomial cof = exceptional_polynomial_cofactor(mm, family.xi);
    rep.checks.push_back(make_check(degree_name("paths.cofactor", n), kAnchorCofactor,
                                    max_relative_diff(ep.shifted.coeffs, cof.coeffs), 1e-10));

    const ShiftedPolynomial gs = gram_schmidt_polynomial(family, n, mu);
    rep.checks.push_back(make_check(degree_name("paths.gram_schmidt", n), kAnchorGS,
                                    proportionality_defect(ep.shifted.coeffs, gs.coeffs), 1e-8, "1 - |cos|"));

    if (n > 0) {
      double scale_worst = 0.0;
      for (double gamma : {1e-3, 1e3}) {
        const ExceptionalPolynomial scaled = exceptional_polynomial(family, n, mu, gamma);
        scale_worst = std::max(scale_worst, max_relative_diff(ep.shifted.coeffs, scaled.shifted.coeffs));
      }
      rep.checks.push_back(make_check(degree_name("paths.row1_scaling", n), kAnchorDet, scale_worst, 1e-12,
                                      "row 1 scaled by 1e-3 and 1e3"));
    }

    if (family.kind == FamilyKind::laguerre_III) {
      rep.checks.push_back(make_check(degree_name("darboux.typeIII", n), kAnchorDarboux3,
                                      defect(darboux_typeIII(family.alpha, n), ep.monomial), 1e-8, "1 - |cos|"));
    }
    if (family.kind == FamilyKind::jacobi) {
      const DarbouxDiagnostic dd = darboux_jacobi_diagnostic(family.alpha, family.beta, n);
      rep.checks.push_back(make_info(degree_name("darboux.jacobi", n), kAnchorDarbouxJ, dd.defect,
                                     dd.proportional ? "proportional to the determinantal output"
                                                     : "not proportional; closed form vanishes at xi"));
    }
  }
  bool monotone = lambdas.size() >= 2;
  const bool increasing = monotone && lambdas[1] > lambdas[0];
  for (std::size_t i = 1; i < lambdas.size(); ++i) {
    monotone = monotone && (increasing ? lambdas[i] > lambdas[i - 1] : lambdas[i] < lambdas[i - 1]);
  }
  rep.checks.push_back(make_info("eigen.monotone", kAnchorEigen, 0.0,
                                 monotone ? "eigenvalues strictly monotone in n" : "eigenvalues not monotone"));

  const GramMatrix gm = orthogonality_matrix(family, options.max_degree, qs);
  std::string gnote = gm.failures.empty() ? "" : "quadrature unconverged at";
  for (const std::string& f : gm.failures) gnote += " " + f;
  rep.checks.push_back(make_check("orthogonality.offdiag", kAnchorOrth, gm.max_relative_offdiag(), 1e-8, gnote));
  for (std::size_t i = 0; i < gm.degrees.size(); ++i) {
    const double diag = gm.values[i][i];
    rep.checks.push_back(make_info(degree_name("norm", gm.degrees[i]), kAnchorNorm,
                                   std::abs(diag - gm.Kn[i]) / std::abs(gm.Kn[i]),
                                   "<y_n, y_n> = " + fmt("%.12g", diag) + ", K_n = " + fmt("%.12g", gm.Kn[i])));
  }

  rep.sort();
  return rep;
}

VerificationReport verify_x2(double alpha, X2Convention convention, double tol) {
  const X2Data d = x2_type1_data(alpha, convention);
  VerificationReport rep;
  rep.family = "lag1";
  rep.alpha = alpha;
  rep.append(x2_flag_check(d.eta, d.s, d.p, x2_standard_candidates(alpha, d.eta), tol));
  rep.sort();
  return rep;
}

}  // namespace xop

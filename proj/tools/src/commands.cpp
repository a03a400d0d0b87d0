#include "xop_cli/commands.hpp"

#include <CLI11.hpp>
#include <cmath>
#include <fstream>
#include <iostream>
#include <sstream>

#include "xop/detrep.hpp"
#include "xop/errors.hpp"
#include "xop/moments.hpp"
#include "xop/verify.hpp"
#include "xop_cli/json_writer.hpp"

namespace xop::cli {

namespace {

FamilyDescriptor family_from(const CliConfig& c) {
  const FamilyKind kind = parse_family(c.family);
  if (kind != FamilyKind::jacobi && c.beta) throw DomainError("--beta only applies to the jacobi family");
  return make_family(kind, c.alpha, c.beta);
}

void write_parameters(JsonWriter& w, const FamilyDescriptor& f) {
  w.begin_object().key("alpha").value(f.alpha);
  if (f.kind == FamilyKind::jacobi) w.key("beta").value(f.beta);
  w.end_object();
}

// Writes to --output when given, otherwise to `out`.
template <class Emit>
int emit(const CliConfig& c, std::ostream& out, std::ostream& err, Emit&& body) {
  if (c.output.empty()) {
    body(out);
    return kExitOk;
  }
  std::ofstream file(c.output);
  if (!file) {
    err << "error: cannot open " << c.output << " for writing\n";
    return kExitFailure;
  }
  body(file);
  return kExitOk;
}

template <class Body>
int guarded(std::ostream& err, Body&& body) {
  try {
    return body();
  } catch (const DomainError& e) {
    err << "error: " << e.what() << '\n';
    return kExitInvalid;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitFailure;
  }
}

}  // namespace

QuadratureSpec CliConfig::quadrature() const {
  QuadratureSpec s;
  if (quad_tol) s.rel_tol = *quad_tol;
  s.validate();
  return s;
}

int cmd_moments(const CliConfig& c, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    if (c.count < 3) throw DomainError("--count must be at least 3");
    const FamilyDescriptor f = family_from(c);
    const QuadratureSpec qs = c.quadrature();
    const MomentTable t = generate_moments(f, c.count - 1, qs);

    int code = kExitOk;
    if (c.check) {
      double worst = 0.0;
      int worst_k = 0;
      for (int k = 0; k < c.count; ++k) {
        const QuadMoment q = moment_by_quadrature(f, k, qs);
        const double rel = std::abs(t[static_cast<std::size_t>(k)] - q.value) / std::abs(q.value);
        if (!(rel <= worst)) {
          worst = rel;
          worst_k = k;
        }
      }
      err << "check: max relative deviation from quadrature " << format_number(worst) << " at k = " << worst_k
          << '\n';
      if (!(worst <= 1e-8)) code = kExitFailure;
    }

    const int io = emit(c, out, err, [&](std::ostream& os) {
      if (c.format == Format::csv) {
        os << "k,value,source,error_estimate\n";
        for (std::size_t k = 0; k < t.size(); ++k) {
          os << k << ',' << format_number(t.values[k]) << ',' << source_name(t.sources[k]) << ',';
          if (std::isfinite(t.error_estimates[k])) os << format_number(t.error_estimates[k]);
          os << '\n';
        }
        return;
      }
      JsonWriter w(os);
      w.begin_object().key("family").value(family_name(f.kind)).key("parameters");
      write_parameters(w, f);
      w.key("moments").begin_array();
      for (std::size_t k = 0; k < t.size(); ++k) {
        w.begin_object()
            .key("k")
            .value(static_cast<int>(k))
            .key("value")
            .value(t.values[k])
            .key("source")
            .value(source_name(t.sources[k]))
            .key("error_estimate")
            .value(t.error_estimates[k])
            .end_object();
      }
      w.end_array().end_object().finish();
    });
    return io != kExitOk ? io : code;
  });
}

int cmd_poly(const CliConfig& c, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const FamilyDescriptor f = family_from(c);
    f.require_admissible(c.degree);
    const MomentTable mu = generate_moments(f, required_moment_index(c.degree), c.quadrature());
    const ExceptionalPolynomial ep = exceptional_polynomial(f, c.degree, mu);
    if (ep.ill_conditioned) err << "warning: condition estimate " << format_number(ep.condition_estimate) << '\n';
    std::vector<double> mono(static_cast<std::size_t>(c.degree) + 1, 0.0);
    for (int i = 0; i <= c.degree; ++i) mono[static_cast<std::size_t>(i)] = ep.monomial.coeff(i);
    return emit(c, out, err, [&](std::ostream& os) {
      JsonWriter w(os);
      w.begin_object().key("family").value(family_name(f.kind)).key("parameters");
      write_parameters(w, f);
      w.key("degree").value(c.degree).key("center").value(f.xi);
      w.key("shifted_coeffs").array(ep.shifted.coeffs);
      w.key("monomial_coeffs").array(mono);
      w.key("condition_estimate").value(ep.condition_estimate);
      w.end_object().finish();
    });
  });
}

int cmd_verify(const CliConfig& c, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const FamilyDescriptor f = family_from(c);
    if (c.x2_flag && f.kind != FamilyKind::laguerre_I) throw DomainError("--x2-flag applies to the lag1 family only");
    ReportOptions opts;
    opts.max_degree = c.max_degree;
    opts.quadrature = c.quadrature();
    VerificationReport rep = verify_family(f, opts);
    if (c.x2_flag) {
      rep.append(verify_x2(f.alpha).checks);
      rep.sort();
    }
    const int io = emit(c, out, err, [&](std::ostream& os) {
      JsonWriter w(os);
      w.begin_object().key("family").value(rep.family).key("params");
      write_parameters(w, f);
      w.key("checks").begin_array();
      for (const Check& ch : rep.checks) {
        w.begin_object()
            .key("name")
            .value(ch.name)
            .key("paper_anchor")
            .value(ch.anchor)
            .key("status")
            .value(status_name(ch.status))
            .key("residual")
            .value(ch.residual)
            .key("tolerance")
            .value(ch.tolerance)
            .key("note")
            .value(ch.note)
            .end_object();
      }
      w.end_array().end_object().finish();
    });
    if (io != kExitOk) return io;
    for (const Check& ch : rep.checks)
      if (ch.status == CheckStatus::fail) err << "FAIL " << ch.name << ": residual " << format_number(ch.residual) << '\n';
    return rep.passed() ? kExitOk : kExitFailure;
  });
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exceptional orthogonal polynomials from adjusted moments", "xop"};
  app.require_subcommand(1);
  CliConfig cfg;
  std::string format = "csv";
  double beta = 0;

  auto common = [&](CLI::App* sub) {
    sub->add_option("--family", cfg.family, "lag1, lag2, lag3 or jacobi")->required();
    sub->add_option("--alpha", cfg.alpha, "alpha parameter")->required();
    sub->add_option("--beta", beta, "beta parameter (jacobi)");
    sub->add_option("--output,-o", cfg.output, "write to a file instead of stdout");
    sub->add_option("--quad-tol", cfg.quad_tol, "quadrature relative tolerance");
  };

  CLI::App* moments = app.add_subcommand("moments", "adjusted moments mu_0 .. mu_{count-1}");
  common(moments);
  moments->add_option("--count", cfg.count, "number of moments")->capture_default_str();
  moments->add_option("--format", format, "csv or json")->check(CLI::IsMember({"csv", "json"}))->capture_default_str();
  moments->add_flag("--check", cfg.check, "compare against direct quadrature");

  CLI::App* poly = app.add_subcommand("poly", "exceptional polynomial of a given degree (JSON)");
  common(poly);
  poly->add_option("--degree", cfg.degree, "polynomial degree")->required();

  CLI::App* verify = app.add_subcommand("verify", "verification report (JSON)");
  common(verify);
  verify->add_option("--max-degree", cfg.max_degree, "highest degree checked")->capture_default_str();
  verify->add_flag("--x2-flag", cfg.x2_flag, "add the X2 Type I flag candidate checks (lag1)");

  try {
    std::vector<std::string> args;
    for (int i = argc - 1; i > 0; --i) args.emplace_back(argv[i]);
    app.parse(args);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    std::ostringstream msg;
    app.exit(e, out, msg);
    err << msg.str();
    return kExitInvalid;
  }

  for (CLI::App* sub : {moments, poly, verify}) {
    if (sub->parsed()) {
      cfg.subcommand = sub->get_name();
      if (sub->count("--beta") > 0) cfg.beta = beta;
    }
  }
  cfg.format = format == "json" ? Format::json : Format::csv;
  if (moments->parsed()) return cmd_moments(cfg, out, err);
  if (poly->parsed()) return cmd_poly(cfg, out, err);
  return cmd_verify(cfg, out, err);
}

}  // namespace xop::cli

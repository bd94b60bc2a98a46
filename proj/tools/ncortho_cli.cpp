// Command line front end: file conversions, polynomial tables, diagnostics.
// Exit codes: 0 success, 1 identity/tolerance failure, 2 malformed input.

#include <CLI11.hpp>

#include <Eigen/Eigenvalues>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>

#include "ncortho/classical_cases.hpp"
#include "ncortho/fock_multivar.hpp"
#include "ncortho/hermitian_jacobi.hpp"
#include "ncortho/io.hpp"
#include "ncortho/ortho_one_var.hpp"
#include "ncortho/schur_params.hpp"
#include "ncortho/szego_kernels.hpp"

using namespace ncortho;
using io::json;

namespace {

struct Options {
  std::string in_path, out_path;
  std::string format = "json";
  double tol = 1e-8;
  int horizon = 8;
  int max_len = 3;
  int depth = 3;
  std::uint64_t seed = 1;
};

void emit_text(const Options& opt, const std::string& text) {
  if (opt.out_path.empty()) {
    std::cout << text;
  } else {
    io::save_text(opt.out_path, text);
  }
}

void emit_json(const Options& opt, const json& j) {
  if (opt.out_path.empty()) {
    std::cout << j.dump(2) << '\n';
  } else {
    io::save_json(opt.out_path, j);
  }
}

// Shared report skeleton; every JSON result carries the tolerance in force
// and the worst residual the command observed.
json make_report(const std::string& command, double tol, double max_residual) {
  return json{{"command", command}, {"tolerance", tol}, {"max_residual", max_residual}};
}

int finish(const Options& opt, json report, double max_residual) {
  const bool ok = max_residual <= report.at("tolerance").get<double>();
  report["ok"] = ok;
  emit_json(opt, report);
  if (!ok) {
    std::cerr << "tolerance exceeded: " << max_residual << "\n";
    return 1;
  }
  return 0;
}

std::string csv_with_header(const Matrix& m, double tol, double residual) {
  std::ostringstream os;
  os << "# tolerance=" << io::format_double(tol)
     << " max_residual=" << io::format_double(residual) << '\n';
  io::write_matrix_csv(os, m);
  return os.str();
}

GammaParams1D random_params(std::mt19937_64& rng, int horizon, double radius) {
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::uniform_real_distribution<double> angle(0.0, 2.0 * M_PI);
  GammaParams1D p(horizon);
  for (int k = 0; k < horizon; ++k)
    for (int j = k + 1; j <= horizon; ++j) {
      const double r = radius * std::sqrt(unit(rng));
      const double t = angle(rng);
      p.set_gamma(k, j, cx(r * std::cos(t), r * std::sin(t)));
    }
  return p;
}

int cmd_params2moments(const Options& opt) {
  const GammaParams1D p = io::gamma_params_from_json(io::load_json(opt.in_path));
  const MomentKernel1D k = moments_from_params(p);
  if (opt.format == "csv") {
    std::ostringstream os;
    io::write_moment_csv(os, k);
    emit_text(opt, os.str());
    return 0;
  }
  json report = make_report("params2moments", opt.tol, 0.0);
  report["ok"] = true;
  report["moments"] = io::matrix_to_json(k.matrix());
  emit_json(opt, report);
  return 0;
}

int cmd_moments2params(const Options& opt) {
  std::istringstream is(io::load_text(opt.in_path));
  const MomentKernel1D k = io::read_moment_csv(is);
  const GammaParams1D p = params_from_moments(k);
  // Residual: reconstruction error of the forward map.
  const double residual =
      (moments_from_params(p).matrix() - k.matrix()).cwiseAbs().maxCoeff();
  json report = make_report("moments2params", opt.tol, residual);
  report["params"] = io::gamma_params_to_json(p);
  return finish(opt, report, residual);
}

int cmd_orthopoly(const Options& opt) {
  std::istringstream is(io::load_text(opt.in_path));
  const MomentKernel1D k = io::read_moment_csv(is);
  const int h = k.horizon();
  const GammaParams1D p = params_from_moments(k);
  const PolyFamily1D rec = ortho_recurrence(p, h, 0);
  const PolyFamily1D gs = ortho_gram_schmidt(k);
  double disagreement = 0.0;
  json table = json::array();
  for (int n = 0; n <= h; ++n) {
    const Vector det_route = ortho_determinant(k, n);
    json row;
    row["n"] = n;
    json rec_c = json::array(), det_c = json::array(), gs_c = json::array();
    for (int i = 0; i <= n; ++i) {
      rec_c.push_back(io::format_complex(rec.phi(n, 0)(i)));
      det_c.push_back(io::format_complex(det_route(i)));
      gs_c.push_back(io::format_complex(gs.phi(n, 0)(i)));
      disagreement = std::max(disagreement, std::abs(rec.phi(n, 0)(i) - det_route(i)));
      disagreement = std::max(disagreement, std::abs(rec.phi(n, 0)(i) - gs.phi(n, 0)(i)));
    }
    row["recurrence"] = std::move(rec_c);
    row["determinant"] = std::move(det_c);
    row["gram_schmidt"] = std::move(gs_c);
    table.push_back(std::move(row));
  }
  json report = make_report("orthopoly", opt.tol, disagreement);
  report["polynomials"] = std::move(table);
  report["family"] = io::poly_family_to_json(rec);
  return finish(opt, report, disagreement);
}

int cmd_catalan(const Options& opt, int offset) {
  const auto terms = lattice_expand(offset);
  std::mt19937_64 rng(opt.seed);
  const GammaParams1D p = random_params(rng, offset, 0.8);
  cx sum(0.0, 0.0);
  for (const auto& t : terms) sum += t.evaluate(p);
  const double residual = std::abs(sum - moments_from_params(p)(0, offset));
  std::ostringstream os;
  for (const auto& t : terms) os << t.str() << '\n';
  os << "count " << terms.size() << " (catalan " << catalan_count(offset) << ")\n";
  std::cout << os.str();
  if (!opt.out_path.empty()) {
    json report = make_report("catalan", opt.tol, residual);
    report["offset"] = offset;
    report["count"] = terms.size();
    json list = json::array();
    for (const auto& t : terms) list.push_back(t.str());
    report["terms"] = std::move(list);
    return finish(opt, report, residual);
  }
  if (residual > opt.tol ||
      static_cast<std::int64_t>(terms.size()) != catalan_count(offset)) {
    std::cerr << "lattice expansion check failed\n";
    return 1;
  }
  return 0;
}

int cmd_szego_limits(const Options& opt) {
  const GammaParams1D p = io::gamma_params_from_json(io::load_json(opt.in_path));
  const int h = p.horizon();
  double residual = 0.0;
  json ratios = json::array();
  for (int r = 0; r < h; ++r)
    for (int q = r + 1; q <= h; ++q) {
      const double det_side = det_principal(p, r, q) / det_principal(p, r + 1, q);
      const PolyFamily1D fam = ortho_recurrence(p, q - r, r);
      const double poly_side = 1.0 / std::norm(fam.phisharp(q - r, r)(0));
      residual = std::max(residual,
                          std::abs(det_side - poly_side) / std::max(1.0, det_side));
      ratios.push_back({{"r", r},
                        {"q", q},
                        {"det_ratio", det_side},
                        {"recip_sharp_sq", poly_side}});
    }
  json first = json::array();
  for (int r = 0; r <= h; ++r)
    first.push_back({{"r", r}, {"g_truncated", szego_first_limit(p, r)}});
  json strong = json::array();
  for (int n = 0; n <= h; ++n) {
    const StrongLimitReport rep = szego_strong_limit(p, n);
    strong.push_back(
        {{"n", n}, {"ratio", rep.ratio}, {"L_truncated", rep.l_truncated}});
  }
  json report = make_report("szego-limits", opt.tol, residual);
  report["ratio_identity"] = std::move(ratios);
  report["first_limit"] = std::move(first);
  report["strong_limit"] = std::move(strong);
  return finish(opt, report, residual);
}

int cmd_spectral_factor(const Options& opt) {
  std::istringstream is(io::load_text(opt.in_path));
  const MomentKernel1D k = io::read_moment_csv(is);
  const TriangularArray theta = spectral_factor(k);
  const double residual =
      (theta.matrix() * theta.matrix().adjoint() - k.matrix()).cwiseAbs().maxCoeff();
  if (opt.format == "csv") {
    emit_text(opt, csv_with_header(theta.matrix(), opt.tol, residual));
    return residual <= opt.tol ? 0 : 1;
  }
  json report = make_report("spectral-factor", opt.tol, residual);
  report["theta"] = io::matrix_to_json(theta.matrix());
  return finish(opt, report, residual);
}

int cmd_gegenbauer(const Options& opt, const std::vector<double>& lambdas, int l_max,
                   int n_max) {
  double residual = 0.0;
  std::ostringstream csv;
  csv << "lambda,l,n,gamma,h,k_lead,phi_at_zero,pipeline_residual\n";
  json rows = json::array();
  for (double lambda : lambdas) {
    for (int l = 0; l <= l_max; ++l) {
      const MomentKernel1D moments = weight_moments_quadrature(lambda, l, n_max);
      const PolyFamily1D gs = ortho_gram_schmidt(moments);
      const GammaParams1D p = params_from_moments(moments);
      for (int n = 1; n <= n_max; ++n) {
        const GegenbauerClosedForm f = gegenbauer_closed({lambda, l, n});
        const double gamma = gegenbauer_gamma(lambda, l, n);
        // Normalized by max(1, |value|); leading coefficients grow large.
        double local = std::abs(gamma - p.gamma(0, n).real());
        local = std::max(local, std::abs(f.k_lead - gs.leading(n, 0)) /
                                    std::max(1.0, std::abs(f.k_lead)));
        local = std::max(local, std::abs(f.phi_at_zero - gs.phi(n, 0)(0).real()) /
                                    std::max(1.0, std::abs(f.phi_at_zero)));
        residual = std::max(residual, local);
        csv << io::format_double(lambda) << ',' << l << ',' << n << ','
            << io::format_double(gamma) << ',' << io::format_double(f.h) << ','
            << io::format_double(f.k_lead) << ',' << io::format_double(f.phi_at_zero)
            << ',' << io::format_double(local) << '\n';
        rows.push_back({{"lambda", lambda},
                        {"l", l},
                        {"n", n},
                        {"gamma", gamma},
                        {"h", f.h},
                        {"k_lead", f.k_lead},
                        {"phi_at_zero", f.phi_at_zero},
                        {"pipeline_residual", local}});
      }
    }
  }
  if (opt.format == "csv") {
    emit_text(opt, csv.str());
    return residual <= opt.tol ? 0 : 1;
  }
  json report = make_report("gegenbauer", opt.tol, residual);
  report["table"] = std::move(rows);
  return finish(opt, report, residual);
}

int cmd_ct_kernel(const Options& opt) {
  const GammaParamsCT p = io::gamma_ct_from_json(io::load_json(opt.in_path));
  const CTKernel kernel = ct_kernel_from_gamma(p);
  Eigen::SelfAdjointEigenSolver<Matrix> es(kernel.dense());
  const double min_eig = es.eigenvalues().minCoeff();
  const double residual = min_eig > 0.0 ? 0.0 : -min_eig;
  json report = make_report("ct-kernel", opt.tol, residual);
  report["min_eigenvalue"] = min_eig;
  report["entries"] = io::ct_kernel_to_json(kernel);
  return finish(opt, report, residual);
}

int cmd_cuntz_check(const Options& opt) {
  const GammaParamsCT p = io::gamma_ct_from_json(io::load_json(opt.in_path));
  const std::vector<Matrix> u = cuntz_isometries(p);
  const int n = p.alphabet();
  double residual = 0.0;
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      Matrix prod = u[static_cast<size_t>(a)].adjoint() * u[static_cast<size_t>(b)];
      if (a == b) prod -= Matrix::Identity(prod.rows(), prod.cols());
      residual = std::max(residual, prod.cwiseAbs().maxCoeff());
    }
  double defect_product = 1.0;
  for (const Word& w : p.words())
    if (!w.empty()) defect_product *= p.d(w);
  if (opt.format == "csv") {
    // U(k) matrices on request, one block per isometry.
    std::ostringstream os;
    os << "# tolerance=" << io::format_double(opt.tol)
       << " max_residual=" << io::format_double(residual)
       << " defect_partial_product=" << io::format_double(defect_product) << '\n';
    for (int k = 0; k < n; ++k) {
      os << "# U(" << (k + 1) << ")\n";
      io::write_matrix_csv(os, u[static_cast<size_t>(k)]);
    }
    emit_text(opt, os.str());
    return residual <= opt.tol ? 0 : 1;
  }
  json report = make_report("cuntz-check", opt.tol, residual);
  report["interior_residual"] = residual;
  report["defect_partial_product"] = defect_product;
  report["defect_partial_product_matches"] =
      std::abs(defect_product - cuntz_condition(p)) <= 1e-12;
  report["regime"] = defect_product > 0.1
                         ? "cuntz-toeplitz (product bounded away from 0 at this truncation)"
                         : "undetermined at finite truncation";
  report["max_len"] = p.max_len();
  return finish(opt, report, residual);
}

int cmd_matrix_units(const Options& opt, const std::string& sigma_text, int alphabet,
                     int dim_factor) {
  const Word sigma = Word::parse(alphabet, sigma_text);
  if (sigma.empty()) throw invalid_input("matrix-units: sigma must be nonempty");
  const auto tuples = matrix_unit_tuples(sigma, dim_factor);
  const int k = sigma.length();
  const int dim = 2 * k * dim_factor;
  const double scale = 1.0 / std::sqrt(std::pow(2.0, k));
  double residual = 0.0;
  Matrix stacked(dim, dim * 2 * k);
  for (int p = 0; p < 2 * k; ++p) {
    const Matrix z_star = tuples[static_cast<size_t>(p)].word_product(sigma).adjoint();
    Matrix expected = Matrix::Zero(dim, dim);
    const int col = p < k ? k + p : p - k;
    expected.block(p * dim_factor, col * dim_factor, dim_factor, dim_factor) =
        scale * Matrix::Identity(dim_factor, dim_factor);
    residual = std::max(residual, (z_star - expected).cwiseAbs().maxCoeff());
    stacked.block(0, p * dim, dim, dim) = z_star;
    for (int len = k; len <= k + 1; ++len)
      for (const Word& tau : enumerate_words(alphabet, len))
        if (tau.length() == len && !(tau == sigma))
          residual = std::max(
              residual,
              tuples[static_cast<size_t>(p)].word_product(tau).cwiseAbs().maxCoeff());
  }
  Eigen::ColPivHouseholderQR<Matrix> qr(stacked);
  const bool full_range = qr.rank() == dim;
  json report = make_report("matrix-units", opt.tol, residual);
  report["sigma"] = sigma.str();
  report["tuples"] = 2 * k;
  report["dim"] = dim;
  report["range_full"] = full_range;
  double margin = 1e300;
  for (const auto& t : tuples) margin = std::min(margin, t.membership_margin());
  report["membership_margin"] = margin;
  json tuple_list = json::array();
  for (const auto& t : tuples) tuple_list.push_back(io::operator_point_to_json(t));
  report["tuples_json"] = std::move(tuple_list);
  if (!full_range) return finish(opt, report, 1.0);
  return finish(opt, report, residual);
}

int cmd_favard(const Options& opt) {
  const JacobiFamily fam = io::jacobi_from_json(io::load_json(opt.in_path));
  const FavardReport rep = favard_roundtrip(fam);
  const HermitianMoments m = moments_from_jacobi(fam, fam.depth());
  const double residual = std::max(rep.max_block_error, rep.max_coeff_error);
  json report = make_report("favard", opt.tol, residual);
  report["block_error"] = rep.max_block_error;
  report["coefficient_error"] = rep.max_coeff_error;
  json moments = json::array();
  for (const Word& w : enumerate_words(fam.alphabet(), 2 * fam.depth()))
    moments.push_back({{"word", w.str()}, {"value", io::format_complex(m.at(w))}});
  report["moments"] = std::move(moments);
  return finish(opt, report, residual);
}

int cmd_szego_kernel(const Options& opt, int samples) {
  std::mt19937_64 rng(opt.seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::uniform_real_distribution<double> angle(0.0, 2.0 * M_PI);
  auto disk = [&](double radius) {
    const double r = radius * std::sqrt(unit(rng));
    const double t = angle(rng);
    return cx(r * std::cos(t), r * std::sin(t));
  };
  const int h = opt.horizon;
  std::vector<PointB1> pts;
  for (int i = 0; i < samples; ++i) {
    std::vector<cx> z;
    for (int n = 0; n < h; ++n) z.push_back(disk(0.9));
    pts.emplace_back(std::move(z));
  }
  // Positivity of the sequence-ball kernel, level by level.
  double min_eig = 1e300;
  for (int n = 0; n <= h; ++n) {
    Matrix g(samples, samples);
    for (int i = 0; i < samples; ++i)
      for (int j = 0; j < samples; ++j)
        g(i, j) = szego_eval(pts[static_cast<size_t>(i)], pts[static_cast<size_t>(j)])(n);
    Eigen::SelfAdjointEigenSolver<Matrix> es(0.5 * (g + g.adjoint()));
    min_eig = std::min(min_eig, es.eigenvalues().minCoeff());
  }
  // Reproducing identity on a random finitely supported array.
  Matrix theta = Matrix::Zero(h + 1, h + 1);
  for (int i = 0; i <= h; ++i)
    for (int j = 0; j <= i; ++j) theta(i, j) = disk(1.0);
  double reproducing_residual = 0.0;
  for (const auto& z : pts)
    reproducing_residual =
        std::max(reproducing_residual,
                 (h2_eval(theta, z) - h2_eval_reproducing(theta, z)).cwiseAbs().maxCoeff());
  // Span evidence: residuals of projecting the array columns onto growing
  // spans of kernel sections; expected to decrease, reported not asserted.
  json span = json::array();
  for (int used = 1; used <= samples; ++used) {
    double worst = 0.0;
    for (int n = 0; n <= h; ++n) {
      Matrix basis(h + 1 - n, used);
      for (int i = 0; i < used; ++i)
        basis.col(i) = s_z_array(pts[static_cast<size_t>(i)]).col(n).tail(h + 1 - n);
      const Vector target = theta.col(n).tail(h + 1 - n);
      const Vector coef = basis.colPivHouseholderQr().solve(target);
      worst = std::max(worst, (basis * coef - target).norm());
    }
    span.push_back({{"sections", used}, {"projection_residual", worst}});
  }
  // Operator-ball kernel positivity: tuples from --in when given, otherwise
  // sampled from the seed.
  std::vector<OperatorPoint> ops;
  if (!opt.in_path.empty()) {
    for (const json& entry : io::load_json(opt.in_path))
      ops.push_back(io::operator_point_from_json(entry));
  } else {
    for (int i = 0; i < 3; ++i) {
      std::vector<Matrix> tuple;
      Matrix sum = Matrix::Zero(2, 2);
      for (int k = 0; k < 2; ++k) {
        Matrix m(2, 2);
        for (int r = 0; r < 2; ++r)
          for (int c = 0; c < 2; ++c) m(r, c) = disk(1.0);
        tuple.push_back(m);
        sum += m * m.adjoint();
      }
      Eigen::SelfAdjointEigenSolver<Matrix> es(sum);
      const double scale = 0.9 / std::sqrt(std::max(es.eigenvalues().maxCoeff(), 1e-12));
      for (Matrix& m : tuple) m *= scale;
      ops.emplace_back(std::move(tuple));
    }
  }
  double op_min_eig = 1e300;
  if (!ops.empty()) {
    const int d = ops[0].dim();
    Matrix block(static_cast<Eigen::Index>(ops.size()) * d,
                 static_cast<Eigen::Index>(ops.size()) * d);
    for (size_t i = 0; i < ops.size(); ++i)
      for (size_t j = 0; j < ops.size(); ++j)
        block.block(static_cast<Eigen::Index>(i) * d, static_cast<Eigen::Index>(j) * d, d,
                    d) = fock_szego_kernel(ops[i], ops[j], opt.max_len);
    Eigen::SelfAdjointEigenSolver<Matrix> es(0.5 * (block + block.adjoint()));
    op_min_eig = es.eigenvalues().minCoeff();
  }
  const double residual = std::max({reproducing_residual, -min_eig, -op_min_eig, 0.0});
  json report = make_report("szego-kernel", opt.tol, residual);
  report["min_eigenvalue"] = min_eig;
  report["operator_kernel_min_eigenvalue"] = op_min_eig;
  report["reproducing_residual"] = reproducing_residual;
  report["span_residuals"] = std::move(span);
  report["samples"] = samples;
  report["seed"] = opt.seed;
  return finish(opt, report, residual);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Schur-parameter kernels and noncommutative orthogonal polynomials"};
  app.require_subcommand(1);
  Options opt;
  int offset = 3;
  int samples = 6;
  int l_max = 4, n_max = 8;
  std::vector<double> lambdas = {0.5, 1.0, 2.5};
  std::string sigma_text = "1";
  int alphabet = 2;
  int dim_factor = 1;

  auto add_common = [&](CLI::App* cmd, bool needs_in) {
    if (needs_in) cmd->add_option("--in", opt.in_path, "input file")->required();
    cmd->add_option("--out", opt.out_path, "output file (stdout when omitted)");
    cmd->add_option("--format", opt.format, "json|csv")
        ->check(CLI::IsMember({"json", "csv"}));
    cmd->add_option("--tol", opt.tol, "tolerance for asserted identities");
    cmd->add_option("--seed", opt.seed, "seed for randomized checks");
    cmd->add_option("--horizon", opt.horizon, "working horizon");
    cmd->add_option("--max-len", opt.max_len, "word length bound");
    cmd->add_option("--depth", opt.depth, "jacobi family depth");
  };

  CLI::App* c_p2m = app.add_subcommand("params2moments", "forward map to a moment kernel");
  add_common(c_p2m, true);
  CLI::App* c_m2p = app.add_subcommand("moments2params", "inverse map to parameters");
  add_common(c_m2p, true);
  CLI::App* c_ortho =
      app.add_subcommand("orthopoly", "orthonormal polynomial tables by three routes");
  add_common(c_ortho, true);
  CLI::App* c_catalan = app.add_subcommand("catalan", "lattice expansion of one moment");
  add_common(c_catalan, false);
  c_catalan->add_option("--l", offset, "offset of the expanded moment")->required();
  CLI::App* c_limits = app.add_subcommand("szego-limits", "determinant ratio tables");
  add_common(c_limits, true);
  CLI::App* c_factor = app.add_subcommand("spectral-factor", "cholesky-type factor");
  add_common(c_factor, true);
  CLI::App* c_geg =
      app.add_subcommand("gegenbauer", "closed forms against the quadrature pipeline");
  add_common(c_geg, false);
  c_geg->add_option("--lambda", lambdas, "weight parameters");
  c_geg->add_option("--l-max", l_max, "largest shift");
  c_geg->add_option("--n-max", n_max, "largest degree");
  CLI::App* c_ct =
      app.add_subcommand("ct-kernel", "sparse stationary kernel from word parameters");
  add_common(c_ct, true);
  CLI::App* c_cuntz = app.add_subcommand(
      "cuntz-check", "isometry residuals and the defect partial product");
  add_common(c_cuntz, true);
  CLI::App* c_mu = app.add_subcommand("matrix-units", "matrix-unit tuple verification");
  add_common(c_mu, false);
  c_mu->add_option("--sigma", sigma_text, "word to pin")->required();
  c_mu->add_option("--alphabet", alphabet, "number of generators");
  c_mu->add_option("--dim-factor", dim_factor, "block dimension");
  CLI::App* c_favard = app.add_subcommand("favard", "jacobi family roundtrip report");
  add_common(c_favard, true);
  CLI::App* c_szk = app.add_subcommand("szego-kernel", "positivity sample report");
  add_common(c_szk, false);
  c_szk->add_option("--samples", samples, "number of sampled points");
  c_szk->add_option("--in", opt.in_path, "optional JSON list of operator tuples");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (c_p2m->parsed()) return cmd_params2moments(opt);
    if (c_m2p->parsed()) return cmd_moments2params(opt);
    if (c_ortho->parsed()) return cmd_orthopoly(opt);
    if (c_catalan->parsed()) return cmd_catalan(opt, offset);
    if (c_limits->parsed()) return cmd_szego_limits(opt);
    if (c_factor->parsed()) return cmd_spectral_factor(opt);
    if (c_geg->parsed()) return cmd_gegenbauer(opt, lambdas, l_max, n_max);
    if (c_ct->parsed()) return cmd_ct_kernel(opt);
    if (c_cuntz->parsed()) return cmd_cuntz_check(opt);
    if (c_mu->parsed()) return cmd_matrix_units(opt, sigma_text, alphabet, dim_factor);
    if (c_favard->parsed()) return cmd_favard(opt);
    if (c_szk->parsed()) return cmd_szego_kernel(opt, samples);
  } catch (const invalid_input& e) {
    json err{{"error", e.what()}, {"kind", "invalid_input"}};
    std::cerr << err.dump(2) << '\n';
    return 2;
  } catch (const numeric_failure& e) {
    json err{{"error", e.what()}, {"kind", "numeric_failure"}};
    std::cerr << err.dump(2) << '\n';
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 2;
}

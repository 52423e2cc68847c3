// Command-line front end: convolve polynomial files, evaluate transforms,
// sweep the root-bound checkers, and run the random-matrix verification
// campaigns. Every command is deterministic given its flags; seeded
// commands record the seed in their reports.
//
// Exit codes: 0 success / all satisfied, 2 parse failure, 3 domain or
// budget violation, 4 a checked bound or exact identity was violated.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <iostream>
#include <limits>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "ffc/cheby.hpp"
#include "ffc/convolve.hpp"
#include "ffc/io.hpp"
#include "ffc/pinch.hpp"
#include "ffc/real_roots.hpp"
#include "ffc/rmt.hpp"
#include "ffc/rng.hpp"
#include "ffc/transforms.hpp"

namespace {

using nlohmann::ordered_json;

constexpr int kExitOk = 0;
constexpr int kExitParse = 2;
constexpr int kExitDomain = 3;
constexpr int kExitViolation = 4;

struct ExitCode {
  int code;
};

void emit(const std::string& out_path, const std::string& content) {
  if (out_path.empty())
    std::cout << content;
  else
    ffc::write_text_file(out_path, content);
}

std::string dump(const ordered_json& j) { return j.dump(2) + "\n"; }

std::pair<int, int> parse_range(const std::string& text) {
  auto pos = text.find("..");
  try {
    if (pos == std::string::npos) {
      int v = std::stoi(text);
      return {v, v};
    }
    int lo = std::stoi(text.substr(0, pos));
    int hi = std::stoi(text.substr(pos + 2));
    if (hi < lo) throw std::invalid_argument("range");
    return {lo, hi};
  } catch (const std::exception&) {
    throw ffc::ParseError("bad range: " + text + " (want N or LO..HI)");
  }
}

ffc::ConvolutionKind kind_from_name(const std::string& name) {
  if (name == "sym-add") return ffc::ConvolutionKind::SymAdditive;
  if (name == "sym-mult") return ffc::ConvolutionKind::SymMultiplicative;
  return ffc::ConvolutionKind::AsymAdditive;
}

// ---------------------------------------------------------------- conv ----

int run_conv(const std::string& kind, const std::string& p_file,
             const std::string& q_file, int d_flag, bool validate,
             const std::string& out_path) {
  ffc::Polynomial p = ffc::read_polynomial_file(p_file);
  ffc::Polynomial q = ffc::read_polynomial_file(q_file);
  int d = d_flag >= 0 ? d_flag : std::max(p.degree(), q.degree());
  ffc::Polynomial r = ffc::convolve(kind_from_name(kind), p, q, d, validate);
  // The output is itself a polynomial file, so results can feed back in.
  emit(out_path, dump(ffc::polynomial_to_json(r)));
  return kExitOk;
}

// ----------------------------------------------------------- transform ----

int run_transform(const std::string& which, const std::string& p_file,
                  const std::vector<double>& points, const std::string& format,
                  const std::string& out_path) {
  ffc::Polynomial p = ffc::read_polynomial_file(p_file);
  std::vector<std::pair<double, double>> rows;
  for (double x : points) {
    double v = 0;
    if (which == "cauchy")
      v = ffc::cauchy_transform(p, x);
    else if (which == "invcauchy")
      v = ffc::inverse_cauchy(p, x);
    else if (which == "rtrans")
      v = ffc::r_transform(p, x);
    else if (which == "mtrans")
      v = ffc::m_transform(p, x);
    else
      v = ffc::s_transform_variant(p, x);
    rows.emplace_back(x, v);
  }
  if (format == "csv") {
    std::ostringstream os;
    os << "transform,point,value\n";
    for (auto& [x, v] : rows)
      os << which << ',' << ffc::format_double(x) << ',' << ffc::format_double(v)
         << '\n';
    emit(out_path, os.str());
  } else {
    ordered_json j;
    j["transform"] = which;
    auto& arr = j["values"] = ordered_json::array();
    for (auto& [x, v] : rows) arr.push_back(ordered_json{{"point", x}, {"value", v}});
    emit(out_path, dump(j));
  }
  return kExitOk;
}

// -------------------------------------------------------------- bounds ----

int run_bounds(const std::string& theorem, const std::string& p_file,
               const std::string& q_file, std::vector<double> alpha_grid,
               std::vector<double> w_grid, int d_flag, const std::string& format,
               const std::string& out_path) {
  ffc::Polynomial p = ffc::read_polynomial_file(p_file);
  ffc::Polynomial q = ffc::read_polynomial_file(q_file);
  int d = d_flag >= 0 ? d_flag : std::max(p.degree(), q.degree());
  if (alpha_grid.empty()) alpha_grid = {0.25, 1.0, 4.0};
  if (w_grid.empty()) w_grid = {0.25, 1.0, 4.0};

  std::vector<ffc::BoundReport> reports;
  std::vector<std::string> param1;
  if (theorem == "sqsum") {
    for (double a : alpha_grid) {
      reports.push_back(ffc::check_sqsum_bound(p, q, a, d));
      param1.push_back(ffc::format_double(a));
    }
  } else if (theorem == "recsum") {
    for (double a : alpha_grid) {
      reports.push_back(ffc::check_recsum_bound(p, q, a, d));
      param1.push_back(ffc::format_double(a));
    }
  } else if (theorem == "mult") {
    for (double w : w_grid) {
      reports.push_back(ffc::check_mult_bound(p, q, w, d));
      param1.push_back(ffc::format_double(w));
    }
  } else if (theorem == "walsh") {
    reports.push_back(
        ffc::check_classical_bounds(p, q, ffc::ConvolutionKind::SymAdditive, d));
    param1.push_back("");
  } else {  // szego
    reports.push_back(ffc::check_classical_bounds(
        p, q, ffc::ConvolutionKind::SymMultiplicative, d));
    param1.push_back("");
  }

  bool all_ok = true;
  if (format == "json") {
    ordered_json j;
    j["theorem"] = theorem;
    j["d"] = d;
    auto& arr = j["reports"] = ordered_json::array();
    for (size_t i = 0; i < reports.size(); ++i) {
      auto row = ffc::bound_report_to_json(reports[i]);
      if (!param1[i].empty()) row["param"] = param1[i];
      arr.push_back(row);
      all_ok = all_ok && reports[i].satisfied;
    }
    emit(out_path, dump(j));
  } else {
    std::ostringstream os;
    os << ffc::kCsvHeader << '\n';
    for (size_t i = 0; i < reports.size(); ++i) {
      os << ffc::csv_row(reports[i], param1[i], std::to_string(d)) << '\n';
      all_ok = all_ok && reports[i].satisfied;
    }
    emit(out_path, os.str());
  }
  return all_ok ? kExitOk : kExitViolation;
}

// --------------------------------------------------------------- pinch ----

int run_pinch(const std::string& p_file, const std::string& kind, double alpha,
              double w, int k, const std::string& out_path) {
  ffc::Polynomial p = ffc::read_polynomial_file(p_file);
  ffc::PinchResult r;
  if (kind == "mult")
    r = ffc::mult_pinch(p, w, p.degree());
  else if (kind == "rec")
    r = ffc::rec_pinch(p, alpha, p.degree());
  else
    r = ffc::pinch(p, alpha, k);
  ordered_json j;
  j["kind"] = kind;
  if (kind == "mult")
    j["w"] = w;
  else
    j["alpha"] = alpha;
  j["mu"] = r.mu;
  j["rho"] = r.rho;
  j["t"] = r.t;
  j["p_til"] = r.p_til.coeffs();
  j["p_hat"] = r.p_hat.coeffs();
  emit(out_path, dump(j));
  return kExitOk;
}

// --------------------------------------------------------------- cheby ----

int run_cheby(const std::string& check, const std::string& d_range, double alpha,
              double lambda, double mu, double grid_lo, double grid_hi, int grid_n,
              const std::string& format, const std::string& out_path) {
  std::ostringstream os;
  ordered_json jout;
  auto& arr = jout["reports"] = ordered_json::array();
  os << ffc::kCsvHeader << '\n';
  bool all_ok = true;

  auto add = [&](const ffc::BoundReport& r, const std::string& p1,
                 const std::string& p2) {
    all_ok = all_ok && r.satisfied;
    if (format == "json") {
      auto row = ffc::bound_report_to_json(r);
      row["param1"] = p1;
      row["param2"] = p2;
      arr.push_back(row);
    } else {
      os << ffc::csv_row(r, p1, p2) << '\n';
    }
  };

  if (check == "coth") {
    auto grid = ffc::log_spaced(grid_lo > 0 ? grid_lo : 0.01,
                                grid_hi > 0 ? grid_hi : 0.99, grid_n);
    auto reports = ffc::check_coth_convexity(alpha, grid);
    for (size_t i = 0; i < reports.size(); ++i)
      add(reports[i], ffc::format_double(alpha), ffc::format_double(grid[i]));
  } else {
    auto [dlo, dhi] = parse_range(d_range);
    for (int d = dlo; d <= dhi; ++d) {
      std::vector<double> grid;
      std::vector<ffc::BoundReport> reports;
      if (check == "barrier") {
        grid = ffc::log_spaced(grid_lo > 0 ? grid_lo : 1e-2,
                               grid_hi > 0 ? grid_hi : 1e2, grid_n);
        for (auto& t : grid) t += 1.0;
        reports = ffc::check_cheby_barrier(d, grid);
      } else if (check == "ratio") {
        grid = ffc::log_spaced(grid_lo > 0 ? grid_lo : 1e-2,
                               grid_hi > 0 ? grid_hi : 1e2, grid_n);
        for (auto& t : grid) t += 1.0;
        reports = ffc::check_cheby_ratio(d, grid);
      } else {  // p1q1
        double edge = std::sqrt(lambda) + std::sqrt(mu);
        grid = ffc::log_spaced(grid_lo > 0 ? grid_lo : 1e-2,
                               grid_hi > 0 ? grid_hi : 1e2, grid_n);
        for (auto& t : grid) t = edge * (1.0 + t);
        reports = ffc::check_p1q1_cauchy(d, lambda, mu, grid);
      }
      for (size_t i = 0; i < reports.size(); ++i)
        add(reports[i], std::to_string(d), ffc::format_double(grid[i]));
    }
  }

  emit(out_path, format == "json" ? dump(jout) : os.str());
  return all_ok ? kExitOk : kExitViolation;
}

// -------------------------------------------------------------- verify ----

ffc::RationalMatrix random_int_matrix(int d, ffc::CounterRng& rng, bool symmetric) {
  ffc::RationalMatrix m(d);
  for (int i = 0; i < d; ++i)
    for (int j = symmetric ? i : 0; j < d; ++j) {
      ffc::Rational v(static_cast<int>(rng.next_int(-3, 3)));
      m.at(i, j) = v;
      if (symmetric) m.at(j, i) = v;
    }
  return m;
}

ffc::RationalMatrix random_int_psd(int d, ffc::CounterRng& rng) {
  ffc::RationalMatrix l(d);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j)
      l.at(i, j) = ffc::Rational(static_cast<int>(rng.next_int(-2, 2)));
  return l * l.transposed();
}

int run_verify_quadrature(const std::string& op, int dlo, int dhi, int instances,
                          std::uint64_t seed, const std::string& out_path) {
  if (op == "sym-mult")
    throw std::invalid_argument("verify quadrature: no multiplicative quadrature");
  bool do_sym = op != "asym-add";
  bool do_asym = op != "sym-add";
  if (do_sym && dhi > ffc::kQuadSymMaxDim)
    throw std::domain_error("quadrature budget: symmetric enumeration needs d <= 6");
  if (do_asym && dhi > ffc::kQuadAsymMaxDim)
    throw std::domain_error("quadrature budget: pair enumeration needs d <= 4");

  ffc::CounterRng rng(seed);
  ordered_json j;
  j["mode"] = "quadrature";
  j["op"] = op;
  j["seed"] = seed;
  j["instances_per_d"] = instances;
  auto& arr = j["instances"] = ordered_json::array();
  bool all_match = true;
  for (int d = std::max(1, dlo); d <= dhi; ++d) {
    for (int i = 0; i < instances; ++i) {
      if (do_sym) {
        ffc::RationalMatrix a = random_int_matrix(d, rng, true);
        ffc::RationalMatrix b = random_int_matrix(d, rng, true);
        ffc::Polynomial lhs = ffc::quad_sym_additive(a, b);
        ffc::Polynomial rhs =
            ffc::sym_additive(ffc::charpoly_exact(a), ffc::charpoly_exact(b), d);
        bool match = lhs == rhs;
        all_match = all_match && match;
        arr.push_back(ordered_json{{"op", "sym-add"},
                                   {"d", d},
                                   {"index", i},
                                   {"a", ffc::rational_matrix_to_json(a)},
                                   {"b", ffc::rational_matrix_to_json(b)},
                                   {"average", ffc::polynomial_to_json(lhs)},
                                   {"match", match}});
      }
      if (do_asym) {
        ffc::RationalMatrix a = random_int_matrix(d, rng, false);
        ffc::RationalMatrix b = random_int_matrix(d, rng, false);
        ffc::Polynomial lhs = ffc::quad_asym_additive(a, b);
        ffc::Polynomial rhs =
            ffc::asym_additive(ffc::charpoly_exact(a * a.transposed()),
                               ffc::charpoly_exact(b * b.transposed()), d);
        bool match = lhs == rhs;
        all_match = all_match && match;
        arr.push_back(ordered_json{{"op", "asym-add"},
                                   {"d", d},
                                   {"index", i},
                                   {"a", ffc::rational_matrix_to_json(a)},
                                   {"b", ffc::rational_matrix_to_json(b)},
                                   {"average", ffc::polynomial_to_json(lhs)},
                                   {"match", match}});
      }
    }
  }
  j["all_match"] = all_match;
  emit(out_path, dump(j));
  return all_match ? kExitOk : kExitViolation;
}

int run_verify_montecarlo(const std::string& op, int dlo, int dhi, std::int64_t n,
                          std::uint64_t seed, const std::string& out_path) {
  ffc::CounterRng rng(seed);
  ordered_json j;
  j["mode"] = "montecarlo";
  j["op"] = op;
  j["seed"] = seed;
  j["n"] = n;
  auto& arr = j["runs"] = ordered_json::array();
  bool all_ok = true;

  auto z_scores = [&](const ffc::MonteCarloEstimate& est, const ffc::Polynomial& exact,
                      int d) {
    ordered_json coeffs = ordered_json::array();
    double z_max = 0.0;
    auto sc = ffc::to_signed_coeffs(exact, d);
    for (int k = 1; k <= d; ++k) {
      double target = ffc::to_double(sc.a[k]);
      double diff = est.coeff_mean[k] - target;
      double z;
      if (est.coeff_stderr[k] > 0)
        z = diff / est.coeff_stderr[k];
      else
        z = std::abs(diff) <= 1e-9 ? 0.0 : std::numeric_limits<double>::infinity();
      z_max = std::max(z_max, std::abs(z));
      coeffs.push_back(ordered_json{{"k", k},
                                    {"mean", est.coeff_mean[k]},
                                    {"stderr", est.coeff_stderr[k]},
                                    {"exact", target},
                                    {"z", z}});
    }
    return std::make_pair(coeffs, z_max);
  };

  std::uint64_t run_index = 0;
  for (int d = std::max(1, dlo); d <= dhi; ++d) {
    std::vector<std::string> ops;
    if (op == "all")
      ops = {"sym-add", "sym-mult", "asym-add"};
    else
      ops = {op};
    for (const auto& o : ops) {
      std::uint64_t run_seed = seed + 1000003 * run_index++;
      ffc::Polynomial exact;
      ffc::MonteCarloEstimate est;
      if (o == "sym-add") {
        auto a = random_int_matrix(d, rng, true), b = random_int_matrix(d, rng, true);
        exact = ffc::sym_additive(ffc::charpoly_exact(a), ffc::charpoly_exact(b), d);
        est = ffc::mc_sym_additive(ffc::to_matrix_d(a), ffc::to_matrix_d(b), n, run_seed);
      } else if (o == "sym-mult") {
        auto a = random_int_psd(d, rng), b = random_int_psd(d, rng);
        exact = ffc::sym_multiplicative(ffc::charpoly_exact(a), ffc::charpoly_exact(b), d);
        est = ffc::mc_sym_multiplicative(ffc::to_matrix_d(a), ffc::to_matrix_d(b), n, run_seed);
      } else {
        auto a = random_int_matrix(d, rng, false), b = random_int_matrix(d, rng, false);
        exact = ffc::asym_additive(ffc::charpoly_exact(a * a.transposed()),
                                   ffc::charpoly_exact(b * b.transposed()), d);
        est = ffc::mc_asym_additive(ffc::to_matrix_d(a), ffc::to_matrix_d(b), n, run_seed);
      }
      auto [coeffs, z_max] = z_scores(est, exact, d);
      bool ok = z_max < 4.0;
      all_ok = all_ok && ok;
      arr.push_back(ordered_json{
          {"op", o}, {"d", d}, {"z_max", z_max}, {"ok", ok}, {"coeffs", coeffs}});
    }
  }
  j["all_ok"] = all_ok;
  emit(out_path, dump(j));
  return all_ok ? kExitOk : kExitViolation;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"finite free convolutions of polynomials"};
  app.require_subcommand(1);

  std::string p_file, q_file, out_path, format = "csv";
  int d_flag = -1;
  bool validate = false;

  // conv
  auto* conv = app.add_subcommand("conv", "convolve two polynomial files");
  std::string conv_kind;
  conv->add_option("kind", conv_kind, "convolution kind")
      ->required()
      ->check(CLI::IsMember({"sym-add", "sym-mult", "asym-add"}));
  conv->add_option("p", p_file)->required();
  conv->add_option("q", q_file)->required();
  conv->add_option("--d", d_flag, "convolution level (default: max degree)");
  conv->add_flag("--validate", validate, "check root-location preconditions");
  conv->add_option("--out", out_path);

  // transform
  auto* tr = app.add_subcommand("transform", "evaluate a transform at points");
  std::string tr_kind;
  std::vector<double> tr_points;
  tr->add_option("kind", tr_kind)
      ->required()
      ->check(CLI::IsMember({"cauchy", "invcauchy", "rtrans", "mtrans", "strans"}));
  tr->add_option("p", p_file)->required();
  tr->add_option("--points", tr_points, "evaluation points")->required()->delimiter(',');
  tr->add_option("--format", format)->check(CLI::IsMember({"csv", "json"}));
  tr->add_option("--out", out_path);

  // bounds
  auto* bounds = app.add_subcommand("bounds", "check a root-bound theorem");
  std::string theorem;
  std::vector<double> alpha_grid, w_grid;
  bounds->add_option("theorem", theorem)
      ->required()
      ->check(CLI::IsMember({"sqsum", "recsum", "mult", "walsh", "szego"}));
  bounds->add_option("p", p_file)->required();
  bounds->add_option("q", q_file)->required();
  bounds->add_option("--alpha-grid", alpha_grid)->delimiter(',');
  bounds->add_option("--w-grid", w_grid)->delimiter(',');
  bounds->add_option("--d", d_flag);
  bounds->add_option("--format", format)->check(CLI::IsMember({"csv", "json"}));
  bounds->add_option("--out", out_path);

  // pinch
  auto* pinch_cmd = app.add_subcommand("pinch", "pinch two roots, keep the barrier root");
  std::string pinch_kind = "pinch";
  double pinch_alpha = 1.0, pinch_w = 1.0;
  int pinch_k = 0;
  pinch_cmd->add_option("p", p_file)->required();
  pinch_cmd->add_option("--kind", pinch_kind)
      ->check(CLI::IsMember({"pinch", "mult", "rec"}));
  pinch_cmd->add_option("--alpha", pinch_alpha);
  pinch_cmd->add_option("--w", pinch_w);
  pinch_cmd->add_option("--k", pinch_k, "1-based index of the root to merge");
  pinch_cmd->add_option("--out", out_path);

  // cheby
  auto* cheby_cmd = app.add_subcommand("cheby", "grid checks of the Chebyshev bounds");
  std::string cheby_check, cheby_d = "1..10";
  double cheby_alpha = 1.0, cheby_lambda = 1.0, cheby_mu = 1.0;
  double grid_lo = -1.0, grid_hi = -1.0;
  int grid_n = 50;
  cheby_cmd->add_option("check", cheby_check)
      ->required()
      ->check(CLI::IsMember({"barrier", "ratio", "coth", "p1q1"}));
  cheby_cmd->add_option("--d", cheby_d, "degree or LO..HI range");
  cheby_cmd->add_option("--alpha", cheby_alpha);
  cheby_cmd->add_option("--lambda", cheby_lambda);
  cheby_cmd->add_option("--mu", cheby_mu);
  cheby_cmd->add_option("--grid-lo", grid_lo);
  cheby_cmd->add_option("--grid-hi", grid_hi);
  cheby_cmd->add_option("--grid-n", grid_n);
  cheby_cmd->add_option("--format", format)->check(CLI::IsMember({"csv", "json"}));
  cheby_cmd->add_option("--out", out_path);

  // verify
  auto* verify = app.add_subcommand("verify", "random-matrix verification campaigns");
  std::string verify_mode, verify_d = "2..3", verify_op = "all";
  int instances = 10;
  std::int64_t mc_n = 100000;
  std::uint64_t seed = 1;
  verify->add_option("mode", verify_mode)
      ->required()
      ->check(CLI::IsMember({"quadrature", "montecarlo"}));
  verify->add_option("--d", verify_d, "dimension or LO..HI range");
  verify->add_option("--instances", instances);
  verify->add_option("--n", mc_n);
  verify->add_option("--seed", seed);
  verify->add_option("--op", verify_op)
      ->check(CLI::IsMember({"all", "sym-add", "sym-mult", "asym-add"}));
  verify->add_option("--out", out_path);

  try {
    app.parse(argc, argv);
    if (conv->parsed())
      return run_conv(conv_kind, p_file, q_file, d_flag, validate, out_path);
    if (tr->parsed())
      return run_transform(tr_kind, p_file, tr_points, format, out_path);
    if (bounds->parsed())
      return run_bounds(theorem, p_file, q_file, alpha_grid, w_grid, d_flag, format,
                        out_path);
    if (pinch_cmd->parsed())
      return run_pinch(p_file, pinch_kind, pinch_alpha, pinch_w, pinch_k, out_path);
    if (cheby_cmd->parsed())
      return run_cheby(cheby_check, cheby_d, cheby_alpha, cheby_lambda, cheby_mu,
                       grid_lo, grid_hi, grid_n, format, out_path);
    if (verify->parsed()) {
      auto [dlo, dhi] = parse_range(verify_d);
      if (verify_mode == "quadrature")
        return run_verify_quadrature(verify_op == "all" ? "all" : verify_op, dlo, dhi,
                                     instances, seed, out_path);
      return run_verify_montecarlo(verify_op, dlo, dhi, mc_n, seed, out_path);
    }
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? kExitOk : kExitParse;
  } catch (const ffc::ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kExitParse;
  } catch (const std::domain_error& e) {
    std::cerr << "domain error: " << e.what() << "\n";
    return kExitDomain;
  } catch (const std::invalid_argument& e) {
    std::cerr << "domain error: " << e.what() << "\n";
    return kExitDomain;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return kExitOk;
}

// fvinv: command-line front end for the series, Riordan, subdivision,
// complex and verification routines. All output goes to stdout; errors go
// to stderr with a nonzero exit status.

#include <algorithm>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "fvinv/errors.hpp"
#include "fvinv/expr.hpp"
#include "fvinv/io.hpp"
#include "fvinv/riordan.hpp"
#include "fvinv/simplicial.hpp"
#include "fvinv/subdivision.hpp"
#include "fvinv/verify.hpp"

namespace {

using fvinv::io::json;

constexpr std::size_t kDefaultPrecision = 32;

// Thrown when a verification ran fine but its check failed.
struct CheckFailed {};

struct PairArgs {
  std::string beta, alpha;

  fvinv::RiordanPair build(std::size_t prec) const {
    return {fvinv::eval(beta, prec), fvinv::eval(alpha, prec)};
  }
};

void add_pair_options(CLI::App* cmd, PairArgs& pair, const std::string& suffix = "") {
  cmd->add_option("--beta" + suffix, pair.beta, "numerator series beta")->required();
  cmd->add_option("--alpha" + suffix, pair.alpha, "denominator series alpha")->required();
}

struct ComplexArgs {
  std::string file;
  std::string maximal;

  fvinv::Complex load() const {
    if (file.empty() == maximal.empty())
      throw std::invalid_argument("give exactly one of --file or --maximal");
    json j;
    if (!file.empty()) {
      std::ifstream in(file);
      if (!in) throw std::runtime_error("cannot open '" + file + "'");
      j = json::parse(in);
    } else {
      j = json::parse(maximal);
      if (j.is_array()) j = json{{"maximal", j}};
    }
    return fvinv::io::complex_from_json(j);
  }
};

void add_complex_options(CLI::App* cmd, ComplexArgs& args) {
  auto* file = cmd->add_option("--file", args.file, "complex JSON file {\"maximal\": [...]}");
  auto* inline_ = cmd->add_option("--maximal", args.maximal,
                                  "inline maximal faces, e.g. '[[0,1,2],[2,3]]'");
  file->excludes(inline_);
}

std::string pass_fail(bool ok) { return ok ? "PASS" : "FAIL"; }

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact Riordan-group, barycentric-subdivision and Euler-characteristic toolkit"};
  app.require_subcommand(1);

  std::size_t prec = kDefaultPrecision;

  // series
  auto* series = app.add_subcommand("series", "formal power series");
  series->require_subcommand(1);
  auto* series_eval = series->add_subcommand("eval", "evaluate an expression in x");
  std::string expr_text;
  bool as_poly = false;
  series_eval->add_option("expr", expr_text, "expression, e.g. \"1/(1+x)\"")->required();
  series_eval->add_option("--prec", prec, "number of coefficients")->check(CLI::PositiveNumber);
  series_eval->add_flag("--poly", as_poly, "print as a polynomial expression");
  series_eval->callback([&] {
    const auto s = fvinv::eval(expr_text, prec);
    std::cout << (as_poly ? fvinv::to_polynomial_string(s) : fvinv::io::to_json(s).dump()) << '\n';
  });

  // riordan
  auto* riordan = app.add_subcommand("riordan", "Riordan group elements T(beta|alpha)");
  riordan->require_subcommand(1);
  PairArgs pair, pair2;
  std::string series_text;

  auto* r_apply = riordan->add_subcommand("apply", "apply T to a series");
  add_pair_options(r_apply, pair);
  r_apply->add_option("--series", series_text, "series to act on")->required();
  r_apply->add_option("--prec", prec)->check(CLI::PositiveNumber);
  r_apply->callback([&] {
    const auto out = fvinv::apply(pair.build(prec), fvinv::eval(series_text, prec));
    std::cout << fvinv::io::to_json(out).dump() << '\n';
  });

  auto* r_mul = riordan->add_subcommand("mul", "group product T1 T2");
  add_pair_options(r_mul, pair);
  add_pair_options(r_mul, pair2, "2");
  r_mul->add_option("--prec", prec)->check(CLI::PositiveNumber);
  r_mul->callback([&] {
    std::cout << fvinv::io::to_json(fvinv::multiply(pair.build(prec), pair2.build(prec))).dump()
              << '\n';
  });

  auto* r_inv = riordan->add_subcommand("inv", "group inverse");
  add_pair_options(r_inv, pair);
  r_inv->add_option("--prec", prec)->check(CLI::PositiveNumber);
  r_inv->callback([&] {
    std::cout << fvinv::io::to_json(fvinv::inverse(pair.build(prec))).dump() << '\n';
  });

  std::size_t row = 0, col = 0, size = 0;
  auto* r_entry = riordan->add_subcommand("entry", "matrix entry (row, col)");
  add_pair_options(r_entry, pair);
  r_entry->add_option("--row", row)->required();
  r_entry->add_option("--col", col)->required();
  auto* entry_prec = r_entry->add_option("--prec", prec)->check(CLI::PositiveNumber);
  r_entry->callback([&] {
    const std::size_t n = entry_prec->count() ? prec : std::max(prec, std::max(row, col) + 1);
    std::cout << fvinv::to_string(fvinv::entry(pair.build(n), row, col)) << '\n';
  });

  auto* r_matrix = riordan->add_subcommand("matrix", "(size+1) x (size+1) window");
  add_pair_options(r_matrix, pair);
  r_matrix->add_option("--size", size)->required();
  auto* matrix_prec = r_matrix->add_option("--prec", prec)->check(CLI::PositiveNumber);
  r_matrix->callback([&] {
    const std::size_t n = matrix_prec->count() ? prec : std::max(prec, size + 1);
    std::cout << fvinv::io::to_json(fvinv::to_matrix(pair.build(n), size)).dump() << '\n';
  });

  // stirling
  auto* stirling = app.add_subcommand("stirling", "Stirling number table, rows 0..max");
  std::string kind = "second";
  std::size_t max_index = 10;
  stirling->add_option("--kind", kind)->check(CLI::IsMember({"first", "second"}));
  stirling->add_option("--max", max_index);
  stirling->callback([&] {
    const fvinv::StirlingTable table(
        kind == "first" ? fvinv::StirlingKind::first : fvinv::StirlingKind::second, max_index);
    json out = json::array();
    for (std::size_t i = 0; i <= max_index; ++i) {
      json r = json::array();
      for (std::size_t j = 0; j <= max_index; ++j) r.push_back(fvinv::to_string(table(i, j)));
      out.push_back(r);
    }
    std::cout << out.dump() << '\n';
  });

  // bmatrix
  auto* bmatrix = app.add_subcommand("bmatrix", "subdivision matrices B, S, D, S^-1");
  std::string which = "B";
  bmatrix->add_option("--size", size, "window index m, giving (m+1) x (m+1)")->required();
  bmatrix->add_option("--which", which)->check(CLI::IsMember({"B", "S", "D", "Sinv"}));
  bmatrix->callback([&] {
    const fvinv::ExactMatrix m = which == "B"   ? fvinv::matrix_B(size)
                                 : which == "S" ? fvinv::matrix_S(size)
                                 : which == "D" ? fvinv::matrix_D(size)
                                                : fvinv::matrix_S_inverse(size);
    std::cout << fvinv::io::to_json(m).dump() << '\n';
  });

  // complex
  auto* cx = app.add_subcommand("complex", "finite simplicial complexes");
  cx->require_subcommand(1);
  ComplexArgs complex_args;

  auto* cx_fvec = cx->add_subcommand("fvec", "f-vector (f_0, ..., f_m)");
  add_complex_options(cx_fvec, complex_args);
  cx_fvec->callback([&] {
    std::cout << fvinv::io::to_json(fvinv::f_vector(complex_args.load())).dump() << '\n';
  });

  auto* cx_chi = cx->add_subcommand("chi", "Euler characteristic, or sum g_k f_k with --weights");
  add_complex_options(cx_chi, complex_args);
  std::string weights;
  cx_chi->add_option("--weights", weights, "weight series g");
  cx_chi->add_option("--prec", prec)->check(CLI::PositiveNumber);
  cx_chi->callback([&] {
    const auto c = complex_args.load();
    if (weights.empty())
      std::cout << fvinv::to_string(fvinv::chi(c)) << '\n';
    else
      std::cout << fvinv::to_string(fvinv::chi_weighted(fvinv::eval(weights, prec), c)) << '\n';
  });

  auto* cx_sd = cx->add_subcommand("sd", "barycentric subdivision");
  add_complex_options(cx_sd, complex_args);
  unsigned iterations = 1;
  std::string out_file;
  cx_sd->add_option("--iterations", iterations);
  cx_sd->add_option("--out", out_file, "write the complex here instead of stdout");
  cx_sd->callback([&] {
    const std::string text =
        fvinv::io::to_json(fvinv::iterate_sd(complex_args.load(), iterations)).dump();
    if (out_file.empty()) {
      std::cout << text << '\n';
    } else {
      std::ofstream out(out_file);
      if (!(out << text << '\n')) throw std::runtime_error("cannot write '" + out_file + "'");
    }
  });

  // verify
  auto* verify = app.add_subcommand("verify", "finite-window checks");
  verify->require_subcommand(1);

  std::size_t max_window = 20;
  auto* v_eigen = verify->add_subcommand("eigen", "fixed space of B_m for m = 0..max-window");
  v_eigen->add_option("--max-window", max_window);
  v_eigen->callback([&] {
    bool all = true;
    for (const auto& w : fvinv::eigen_report(max_window)) {
      std::cout << "window=" << w.m << " dim=" << w.space.dimension << " basis=";
      for (std::size_t i = 0; i < w.space.basis.size(); ++i)
        std::cout << (i ? ";" : "") << fvinv::format_vector(w.space.basis[i]);
      std::cout << ' ' << pass_fail(w.pass) << '\n';
      all = all && w.pass;
    }
    if (!all) throw CheckFailed{};
  });

  std::vector<std::string> ks{"1"};
  auto* v_unique = verify->add_subcommand(
      "uniqueness", "weight series taking the value k on every simplex");
  v_unique->add_option("--k", ks, "values of k (rationals)");
  auto* unique_prec = v_unique->add_option("--prec", prec)->check(CLI::PositiveNumber);
  v_unique->callback([&] {
    const std::size_t n = unique_prec->count() ? prec : 64;
    bool all = true;
    for (const auto& text : ks) {
      const auto k = fvinv::parse_coefficient(text);
      const auto g = fvinv::homotopy_unique(k, n);
      const bool ok = g == fvinv::Series::geometric(k, -1, n) && g.precision() == n;
      std::cout << "k=" << fvinv::to_string(k) << " prec=" << n
                << " series=" << fvinv::format_vector(g.coeffs()) << ' ' << pass_fail(ok) << '\n';
      all = all && ok;
    }
    if (!all) throw CheckFailed{};
  });

  auto* v_sdinv = verify->add_subcommand("sdinv", "is the series fixed by B?");
  v_sdinv->add_option("--series", series_text)->required();
  v_sdinv->add_option("--prec", prec)->check(CLI::PositiveNumber);
  v_sdinv->callback([&] {
    const auto r = fvinv::check_sd_invariant(fvinv::eval(series_text, prec));
    std::cout << "invariant=" << (r.invariant ? "true" : "false");
    if (r.first_difference) std::cout << " first_difference=" << *r.first_difference;
    std::cout << '\n';
  });

  unsigned kmax = 2;
  auto* v_report = verify->add_subcommand("report", "chi of sd^k(C), two ways, k = 0..kmax");
  add_complex_options(v_report, complex_args);
  v_report->add_option("--kmax", kmax);
  v_report->callback([&] {
    const auto steps = fvinv::chi_sd_report(complex_args.load(), kmax);
    for (const auto& s : steps)
      std::cout << "k=" << s.k << " fvector=" << fvinv::format_vector(s.combinatorial_fvector)
                << " fBk=" << fvinv::format_vector(s.matrix_fvector)
                << " chi_combinatorial=" << fvinv::to_string(s.chi_combinatorial)
                << " chi_matrix=" << fvinv::to_string(s.chi_matrix) << ' '
                << pass_fail(s.consistent()) << '\n';
    const bool ok = fvinv::chi_sd_report_holds(steps);
    std::cout << "chi_constant=" << (ok ? "true" : "false") << '\n';
    if (!ok) throw CheckFailed{};
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  } catch (const CheckFailed&) {
    return 1;
  } catch (const fvinv::ParseError& e) {
    std::cerr << "fvinv: parse error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "fvinv: " << e.what() << '\n';
    return 2;
  }
  return 0;
}

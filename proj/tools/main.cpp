#include <CLI11.hpp>
#include <json.hpp>

#include <atomic>
#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <string>
#include <thread>
#include <vector>

#include "thetab/boolean.hpp"
#include "thetab/io.hpp"
#include "thetab/orthopoly.hpp"
#include "thetab/sphere.hpp"
#include "thetab/symmetry.hpp"

using nlohmann::ordered_json;
using namespace thetab;

namespace {

std::string decimal6(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6f", x);
  return buf;
}

std::string poly_line(const UniPoly& p) {
  if (p.is_zero()) return "0";
  std::string out;
  for (int i = 0; i <= p.degree(); ++i) {
    if (i) out += ' ';
    out += p.coeff(i).str();
  }
  return out;
}

ordered_json poly_json(const UniPoly& p) {
  ordered_json coeffs = ordered_json::array();
  for (int i = 0; i <= p.degree(); ++i) coeffs.push_back(p.coeff(i).str());
  if (p.is_zero()) coeffs.push_back("0");
  return coeffs;
}

void print_bound(const Rational& bound, bool json, const char* op, ordered_json extra = {}) {
  if (json) {
    ordered_json j;
    j["op"] = op;
    for (auto& [k, v] : extra.items()) j[k] = v;
    j["bound"] = bound.str();
    j["bound_decimal"] = bound.to_double();
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "bound = " << bound.str();
    if (!bound.is_integer()) std::cout << " (" << decimal6(bound.to_double()) << ")";
    std::cout << "\n";
  }
}

struct TableRow {
  int n;
  int d;
  Rational bound;
};

std::vector<TableRow> hamming_table(int n_max, int workers) {
  std::vector<std::pair<int, int>> cells;
  for (int n = 1; n <= n_max; ++n)
    for (int d = 1; d <= n + 1; ++d) cells.emplace_back(n, d);
  std::vector<TableRow> rows(cells.size());
  std::atomic<size_t> next{0};
  auto work = [&]() {
    for (;;) {
      size_t i = next.fetch_add(1);
      if (i >= cells.size()) return;
      auto [n, d] = cells[i];
      rows[i] = TableRow{n, d, boolean::delsarte_lp_bound(n, d)};
    }
  };
  if (workers <= 1) {
    work();
  } else {
    std::vector<std::thread> pool;
    for (int w = 0; w < workers; ++w) pool.emplace_back(work);
    for (auto& t : pool) t.join();
  }
  return rows;  // cells were generated sorted by (n, d)
}

int default_workers() {
  if (const char* env = std::getenv("THETA_BOUNDS_WORKERS")) {
    int v = std::atoi(env);
    if (v >= 1) return v;
  }
  unsigned hw = std::thread::hardware_concurrency();
  return hw ? static_cast<int>(hw) : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact theta-function bounds for packing problems"};
  app.require_subcommand(1);

  // krawtchouk
  int kw_n = 0, kw_k = 0;
  bool kw_json = false;
  auto* kw = app.add_subcommand("krawtchouk", "Krawtchouk polynomial coefficients");
  kw->add_option("--n", kw_n, "cube dimension")->required();
  kw->add_option("--k", kw_k, "degree")->required();
  kw->add_flag("--json", kw_json, "JSON output");

  // jacobi
  int jc_n = 0, jc_k = 0;
  bool jc_json = false;
  auto* jc = app.add_subcommand("jacobi", "normalized Jacobi polynomial coefficients");
  jc->add_option("--n", jc_n, "ambient dimension")->required();
  jc->add_option("--k", jc_k, "degree")->required();
  jc->add_flag("--json", jc_json, "JSON output");

  // hamming-lp
  int hl_n = 0, hl_d = 0;
  bool hl_json = false, hl_float = false;
  auto* hl = app.add_subcommand("hamming-lp", "Delsarte LP bound for A(n, d)");
  hl->add_option("--n", hl_n, "cube dimension")->required();
  hl->add_option("--d", hl_d, "minimum distance")->required();
  hl->add_flag("--json", hl_json, "JSON output");
  hl->add_flag("--float", hl_float, "approximate float-mode solve");

  // hamming-table
  int ht_nmax = 0, ht_workers = 0;
  std::string ht_format = "csv";
  auto* ht = app.add_subcommand("hamming-table", "Delsarte LP bounds for all n <= n-max");
  ht->add_option("--n-max", ht_nmax, "largest cube dimension")->required();
  ht->add_option("--format", ht_format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
  ht->add_option("--workers", ht_workers, "worker threads (THETA_BOUNDS_WORKERS overrides)");

  // sphere-lp
  int sl_n = 0, sl_degree = -1;
  std::string sl_cos, sl_emit;
  bool sl_json = false, sl_float = false;
  auto* sl = app.add_subcommand("sphere-lp", "LP bound for spherical codes");
  sl->add_option("--n", sl_n, "ambient dimension")->required();
  sl->add_option("--cos-theta", sl_cos, "cosine of the minimal angle, as p/q")->required();
  sl->add_option("--degree", sl_degree, "polynomial degree cap");
  sl->add_option("--emit-cert", sl_emit, "write the certificate JSON to this file");
  sl->add_flag("--json", sl_json, "JSON output");
  sl->add_flag("--float", sl_float, "approximate float-mode solve (no certificate)");

  // verify
  std::string vf_file;
  bool vf_json = false;
  auto* vf = app.add_subcommand("verify", "verify a certificate file");
  vf->add_option("--certificate", vf_file, "certificate JSON file")->required();
  vf->add_flag("--json", vf_json, "JSON output");

  // theta
  std::string th_file;
  bool th_alpha = false, th_json = false;
  auto* th = app.add_subcommand("theta", "reduced theta-prime of a symmetric graph");
  th->add_option("--input", th_file, "graph + group JSON file")->required();
  th->add_flag("--alpha", th_alpha, "also report the brute-force stability number");
  th->add_flag("--json", th_json, "JSON output");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (*kw) {
      UniPoly p = orthopoly::krawtchouk(kw_n, kw_k);
      if (kw_json) {
        ordered_json j{{"op", "krawtchouk"}, {"n", kw_n}, {"k", kw_k}, {"coeffs", poly_json(p)}};
        std::cout << j.dump(2) << "\n";
      } else {
        std::cout << poly_line(p) << "\n";
      }
    } else if (*jc) {
      UniPoly p = orthopoly::jacobi(jc_n, jc_k);
      if (jc_json) {
        ordered_json j{{"op", "jacobi"}, {"n", jc_n}, {"k", jc_k}, {"coeffs", poly_json(p)}};
        std::cout << j.dump(2) << "\n";
      } else {
        std::cout << poly_line(p) << "\n";
      }
    } else if (*hl) {
      if (hl_float) {
        double b = boolean::delsarte_lp_bound_float(hl_n, hl_d);
        if (hl_json) {
          ordered_json j{{"op", "hamming-lp"}, {"n", hl_n}, {"d", hl_d}, {"mode", "float"},
                         {"bound_decimal", b}};
          std::cout << j.dump(2) << "\n";
        } else {
          std::cout << "bound ~ " << decimal6(b) << "\n";
        }
      } else {
        Rational b = boolean::delsarte_lp_bound(hl_n, hl_d);
        print_bound(b, hl_json, "hamming-lp", ordered_json{{"n", hl_n}, {"d", hl_d}});
      }
    } else if (*ht) {
      int workers = ht_workers >= 1 ? ht_workers : 0;
      if (const char* env = std::getenv("THETA_BOUNDS_WORKERS")) {
        int v = std::atoi(env);
        if (v >= 1) workers = v;
      }
      if (workers < 1) workers = default_workers();
      auto rows = hamming_table(ht_nmax, workers);
      if (ht_format == "csv") {
        std::cout << "n,d,bound_exact,bound_decimal\n";
        for (const auto& r : rows)
          std::cout << r.n << ',' << r.d << ',' << r.bound.str() << ','
                    << decimal6(r.bound.to_double()) << "\n";
      } else {
        ordered_json rows_json = ordered_json::array();
        for (const auto& r : rows)
          rows_json.push_back(ordered_json{{"n", r.n},
                                           {"d", r.d},
                                           {"bound", r.bound.str()},
                                           {"bound_decimal", r.bound.to_double()}});
        ordered_json j{{"op", "hamming-table"}, {"n_max", ht_nmax}, {"rows", rows_json}};
        std::cout << j.dump(2) << "\n";
      }
    } else if (*sl) {
      Rational c = Rational::from_string(sl_cos);
      int degree = sl_degree;
      if (degree < 0) degree = c.is_zero() ? 2 : 10;
      if (sl_float) {
        if (!sl_emit.empty())
          throw DomainError("--emit-cert requires exact mode (drop --float)");
        double b = sphere::dgs_lp_bound_float(sl_n, c.to_double(), degree);
        if (sl_json) {
          ordered_json j{{"op", "sphere-lp"}, {"n", sl_n},       {"cos_theta", c.str()},
                         {"degree", degree},  {"mode", "float"}, {"bound_decimal", b}};
          std::cout << j.dump(2) << "\n";
        } else {
          std::cout << "bound ~ " << decimal6(b) << "\n";
        }
      } else {
        sphere::Certificate cert = sphere::dgs_lp_bound(sl_n, c, degree);
        if (!sl_emit.empty()) io::write_file(sl_emit, io::certificate_to_json(cert));
        if (sl_json) {
          ordered_json coeffs = ordered_json::array();
          for (const auto& f : cert.coeffs) coeffs.push_back(f.str());
          ordered_json j{{"op", "sphere-lp"},
                         {"n", cert.n},
                         {"cos_theta", cert.cos_theta.str()},
                         {"degree", cert.degree},
                         {"coeffs", coeffs},
                         {"bound", cert.bound.str()},
                         {"bound_decimal", cert.bound.to_double()}};
          std::cout << j.dump(2) << "\n";
        } else {
          std::cout << "bound = " << cert.bound.str();
          if (!cert.bound.is_integer()) std::cout << " (" << decimal6(cert.bound.to_double()) << ")";
          std::cout << "\n";
        }
      }
    } else if (*vf) {
      sphere::Certificate cert = io::certificate_from_json(io::read_file(vf_file));
      auto result = sphere::verify_certificate(cert);
      if (vf_json) {
        ordered_json j{{"op", "verify"},
                       {"valid", result.valid},
                       {"reason", sphere::verify_reason_name(result.reason)},
                       {"bound", cert.bound.str()}};
        std::cout << j.dump(2) << "\n";
      } else if (result.valid) {
        std::cout << "VALID bound=" << cert.bound.str() << "\n";
      } else {
        std::cout << "INVALID reason=" << sphere::verify_reason_name(result.reason) << "\n";
      }
      return result.valid ? 0 : 1;
    } else if (*th) {
      auto [graph, group] = io::graph_group_from_json(io::read_file(th_file));
      double theta = symmetry::theta_prime_reduced(graph, group);
      int alpha = -1;
      if (th_alpha) alpha = symmetry::stable_set_bruteforce(graph);
      if (th_json) {
        ordered_json j{{"op", "theta"}, {"theta_prime", theta}};
        if (th_alpha) j["alpha"] = alpha;
        std::cout << j.dump(2) << "\n";
      } else {
        std::cout << "theta_prime = " << decimal6(theta) << "\n";
        if (th_alpha) std::cout << "alpha = " << alpha << "\n";
      }
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}

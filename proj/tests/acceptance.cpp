// Acceptance suite: one pass/fail line per criterion, with the stated
// tolerances and runtime budgets. Criteria phrased against the CLI run the
// actual binary (path given as argv[1]); the rest use the library.
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "thetab/boolean.hpp"
#include "thetab/io.hpp"
#include "thetab/linalg.hpp"
#include "thetab/orthopoly.hpp"
#include "thetab/sphere.hpp"
#include "thetab/symmetry.hpp"

using namespace thetab;
using nlohmann::ordered_json;
using clock_type = std::chrono::steady_clock;

namespace {

std::string g_cli;
int g_failures = 0;

double seconds_since(clock_type::time_point start) {
  return std::chrono::duration<double>(clock_type::now() - start).count();
}

struct CliResult {
  int exit_code;
  std::string output;
};

CliResult run_cli(const std::string& args) {
  std::string cmd = g_cli + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return {-1, ""};
  std::string out;
  char buf[4096];
  size_t got;
  while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, got);
  int status = pclose(pipe);
  int code = (status >= 0 && WIFEXITED(status)) ? WEXITSTATUS(status) : -1;
  return {code, out};
}

void report(int criterion, bool pass, const std::string& detail, double elapsed) {
  std::printf("[%s] criterion %d: %s (%.1fs)\n", pass ? "PASS" : "FAIL", criterion,
              detail.c_str(), elapsed);
  std::fflush(stdout);
  if (!pass) ++g_failures;
}

void run(int criterion, double budget_s, const std::string& what,
         const std::function<bool(std::string&)>& body) {
  auto start = clock_type::now();
  std::string detail = what;
  bool ok = false;
  try {
    ok = body(detail);
  } catch (const std::exception& e) {
    detail += std::string(" [exception: ") + e.what() + "]";
  }
  double elapsed = seconds_since(start);
  if (ok && elapsed > budget_s) {
    ok = false;
    detail += " [over the " + std::to_string(budget_s) + "s budget]";
  }
  report(criterion, ok, detail, elapsed);
}

// Hamming cube distance graph and its automorphism generators.
symmetry::FiniteGraph cube_graph(int n, int d) {
  std::vector<std::pair<int, int>> e;
  int size = 1 << n;
  for (int x = 0; x < size; ++x)
    for (int y = x + 1; y < size; ++y) {
      int dist = std::popcount(static_cast<unsigned>(x ^ y));
      if (dist >= 1 && dist <= d - 1) e.emplace_back(x, y);
    }
  return symmetry::make_graph(size, e);
}

symmetry::PermGroup cube_group(int n) {
  symmetry::PermGroup g;
  g.degree = 1 << n;
  auto coord_perm = [n](const std::vector<int>& perm) {
    std::vector<int> images(size_t{1} << n);
    for (int x = 0; x < (1 << n); ++x) {
      int y = 0;
      for (int i = 0; i < n; ++i)
        if (x & (1 << i)) y |= 1 << perm[static_cast<size_t>(i)];
      images[static_cast<size_t>(x)] = y;
    }
    return images;
  };
  if (n >= 2) {
    std::vector<int> swap01(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) swap01[static_cast<size_t>(i)] = i;
    std::swap(swap01[0], swap01[1]);
    g.generators.push_back(coord_perm(swap01));
    std::vector<int> cyc(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) cyc[static_cast<size_t>(i)] = (i + 1) % n;
    g.generators.push_back(coord_perm(cyc));
  }
  std::vector<int> flip(size_t{1} << n);
  for (int x = 0; x < (1 << n); ++x) flip[static_cast<size_t>(x)] = x ^ 1;
  g.generators.push_back(flip);
  return g;
}

sphere::MultiPoly random_homogeneous(int n, int d, std::mt19937& rng) {
  std::uniform_int_distribution<int> coeff(-9, 9);
  std::uniform_int_distribution<int> den(1, 4);
  sphere::MultiPoly p(n);
  std::function<void(sphere::Exponents&, int)> rec = [&](sphere::Exponents& cur, int left) {
    if (static_cast<int>(cur.size()) == n - 1) {
      cur.push_back(left);
      p.add_term(cur, Rational(Integer(coeff(rng)), Integer(den(rng))));
      cur.pop_back();
      return;
    }
    for (int e = 0; e <= left; ++e) {
      cur.push_back(e);
      rec(cur, left - e);
      cur.pop_back();
    }
  };
  sphere::Exponents cur;
  rec(cur, d);
  return p;
}

}  // namespace

int main(int argc, char** argv) {
  if (argc < 2) {
    std::cerr << "usage: acceptance <path-to-thetabounds-cli>\n";
    return 2;
  }
  g_cli = argv[1];

  run(1, 30.0, "kissing number n=8: sphere-lp returns exactly 240", [](std::string& detail) {
    auto r = run_cli("sphere-lp --n 8 --cos-theta 1/2 --degree 10 --json");
    if (r.exit_code != 0) return false;
    auto j = ordered_json::parse(r.output);
    detail += " [bound=" + j["bound"].get<std::string>() + "]";
    return j["bound"].get<std::string>() == "240";
  });

  run(2, 300.0, "kissing number n=24: sphere-lp returns exactly 196560", [](std::string& detail) {
    auto r = run_cli("sphere-lp --n 24 --cos-theta 1/2 --degree 12 --json");
    if (r.exit_code != 0) return false;
    auto j = ordered_json::parse(r.output);
    detail += " [bound=" + j["bound"].get<std::string>() + "]";
    return j["bound"].get<std::string>() == "196560";
  });

  run(3, 600.0, "cross polytope: sphere-lp gives 2n with coefficients (0, n, n-1) for n=3..16",
      [](std::string& detail) {
        for (int n = 3; n <= 16; ++n) {
          auto r = run_cli("sphere-lp --n " + std::to_string(n) + " --cos-theta 0 --degree 2 --json");
          if (r.exit_code != 0) return false;
          auto j = ordered_json::parse(r.output);
          if (j["bound"].get<std::string>() != std::to_string(2 * n)) {
            detail += " [n=" + std::to_string(n) + " bound=" + j["bound"].get<std::string>() + "]";
            return false;
          }
          std::vector<std::string> expect = {"0", std::to_string(n), std::to_string(n - 1)};
          if (j["coeffs"].get<std::vector<std::string>>() != expect) {
            detail += " [n=" + std::to_string(n) + " wrong coefficients]";
            return false;
          }
        }
        return true;
      });

  run(4, 60.0, "cube sandwich: exact Delsarte bound >= brute-force alpha for n<=5, d<=n",
      [](std::string& detail) {
        for (int n = 1; n <= 5; ++n) {
          for (int d = 1; d <= n; ++d) {
            Rational bound = boolean::delsarte_lp_bound(n, d);
            int alpha = symmetry::stable_set_bruteforce(cube_graph(n, d));
            if (bound < Rational(alpha)) {
              detail += " [violated at n=" + std::to_string(n) + " d=" + std::to_string(d) + "]";
              return false;
            }
          }
        }
        return true;
      });

  run(5, 600.0, "hamming-table --n-max 64 exact sweep, monotone nonincreasing in d",
      [](std::string& detail) {
        auto r = run_cli("hamming-table --n-max 64 --format csv");
        if (r.exit_code != 0) return false;
        std::istringstream in(r.output);
        std::string line;
        std::getline(in, line);
        if (line != "n,d,bound_exact,bound_decimal") {
          detail += " [bad header]";
          return false;
        }
        int rows = 0;
        int prev_n = -1;
        Rational prev_bound;
        while (std::getline(in, line)) {
          if (line.empty()) continue;
          std::istringstream ls(line);
          std::string n_s, d_s, b_s, dec_s;
          std::getline(ls, n_s, ',');
          std::getline(ls, d_s, ',');
          std::getline(ls, b_s, ',');
          std::getline(ls, dec_s, ',');
          int n = std::stoi(n_s);
          Rational b = Rational::from_string(b_s);
          if (n == prev_n && b > prev_bound) {
            detail += " [not monotone at n=" + n_s + " d=" + d_s + "]";
            return false;
          }
          prev_n = n;
          prev_bound = b;
          ++rows;
        }
        detail += " [" + std::to_string(rows) + " rows]";
        return rows == 64 * 65 / 2 + 64;  // sum over n of (n+1) rows
      });

  run(6, 180.0,
      "exact identities: Krawtchouk orthogonality n<=64, zonal sums n<=12, characters n<=10",
      [](std::string& detail) {
        auto t0 = clock_type::now();
        for (int n = 1; n <= 64; ++n) {
          orthopoly::KrawtchoukFamily fam(n);
          std::vector<std::vector<Rational>> values(static_cast<size_t>(n) + 1);
          for (int k = 0; k <= n; ++k) {
            values[static_cast<size_t>(k)].resize(static_cast<size_t>(n) + 1);
            for (int t = 0; t <= n; ++t)
              values[static_cast<size_t>(k)][static_cast<size_t>(t)] =
                  fam.poly(k).eval(Rational(t));
          }
          for (int k = 0; k <= n; ++k) {
            for (int kp = 0; kp < k; ++kp) {
              Rational sum;
              for (int t = 0; t <= n; ++t)
                sum += Rational(binomial(n, t)) * values[static_cast<size_t>(k)][static_cast<size_t>(t)] *
                       values[static_cast<size_t>(kp)][static_cast<size_t>(t)];
              if (!sum.is_zero()) {
                detail += " [orthogonality fails at n=" + std::to_string(n) + "]";
                return false;
              }
            }
          }
        }
        double t_orth = seconds_since(t0);

        t0 = clock_type::now();
        for (int n = 1; n <= 12; ++n) {
          orthopoly::KrawtchoukFamily fam(n);
          for (int k = 0; k <= n; ++k)
            for (int t = 0; t <= n; ++t)
              if (Rational(static_cast<long>(boolean::zonal_sum(n, k, t))) !=
                  fam.poly(k).eval(Rational(t))) {
                detail += " [zonal sum fails]";
                return false;
              }
        }
        double t_zonal = seconds_since(t0);

        t0 = clock_type::now();
        for (int n = 1; n <= 10; ++n) {
          size_t size = size_t{1} << n;
          for (std::uint64_t y = 0; y < size; ++y) {
            std::vector<Rational> vals(size);
            for (std::uint64_t x = 0; x < size; ++x)
              vals[x] = Rational(
                  boolean::character_eval(boolean::cube_point(n, y), boolean::cube_point(n, x)));
            auto fhat = boolean::walsh_transform(boolean::function_table(n, std::move(vals)));
            for (std::uint64_t z = 0; z < size; ++z) {
              if (fhat.values[z] != (z == y ? Rational(1) : Rational(0))) {
                detail += " [characters not orthonormal]";
                return false;
              }
            }
          }
        }
        double t_chars = seconds_since(t0);
        if (t_orth > 60 || t_zonal > 60 || t_chars > 60) {
          detail += " [a suite exceeded its 60s budget]";
          return false;
        }
        char buf[96];
        std::snprintf(buf, sizeof buf, " [%.1fs/%.1fs/%.1fs]", t_orth, t_zonal, t_chars);
        detail += buf;
        return true;
      });

  run(7, 300.0,
      "harmonic machinery: dimensions, decomposition, adjointness, zonal kernels",
      [](std::string& detail) {
        // harm_dim against the exact kernel dimension of the Laplacian
        for (int n = 2; n <= 4; ++n) {
          for (int k = 0; k <= 8; ++k) {
            std::vector<sphere::Exponents> dom, img;
            std::function<void(sphere::Exponents&, int, std::vector<sphere::Exponents>&)> gen =
                [&](sphere::Exponents& cur, int left, std::vector<sphere::Exponents>& out) {
                  if (static_cast<int>(cur.size()) == n - 1) {
                    cur.push_back(left);
                    out.push_back(cur);
                    cur.pop_back();
                    return;
                  }
                  for (int e = 0; e <= left; ++e) {
                    cur.push_back(e);
                    gen(cur, left - e, out);
                    cur.pop_back();
                  }
                };
            sphere::Exponents cur;
            gen(cur, k, dom);
            if (k >= 2) gen(cur, k - 2, img);
            RatMatrix M;
            for (const auto& e : dom) {
              auto lap = sphere::MultiPoly::monomial(n, e, Rational(1)).laplacian();
              RatVector row(img.size());
              for (size_t j = 0; j < img.size(); ++j) row[j] = lap.coeff(img[j]);
              M.push_back(std::move(row));
            }
            long kernel = static_cast<long>(dom.size()) - (img.empty() ? 0 : rank(M));
            if (kernel != sphere::harm_dim(n, k)) {
              detail += " [harm_dim mismatch]";
              return false;
            }
          }
        }
        // 100 random reconstructions and 100 adjointness checks
        std::mt19937 rng(2024);
        for (int trial = 0; trial < 100; ++trial) {
          int n = 2 + trial % 3;
          int d = 1 + trial % 8;
          auto p = random_homogeneous(n, d, rng);
          auto parts = sphere::harmonic_decompose(p);
          sphere::MultiPoly sum(n);
          auto om = sphere::MultiPoly::omega(n);
          for (size_t j = 0; j < parts.size(); ++j) {
            if (!parts[j].laplacian().is_zero()) {
              detail += " [component not harmonic]";
              return false;
            }
            auto term = parts[j];
            for (size_t i = 0; i < j; ++i) term = term * om;
            sum += term;
          }
          if (!(sum == p)) {
            detail += " [reconstruction fails]";
            return false;
          }
          int dd = 2 + trial % 5;
          auto f = random_homogeneous(n, dd - 2, rng);
          auto g = random_homogeneous(n, dd, rng);
          auto [lhs, rhs] = sphere::adjoint_check(f, g);
          if (lhs != rhs) {
            detail += " [adjointness fails]";
            return false;
          }
        }
        // zonal kernels proportional to Jacobi with Q(1) = h_k
        for (int n : {3, 4, 5}) {
          for (int k = 0; k <= 4; ++k) {
            UniPoly q = sphere::zonal_kernel(n, k);
            UniPoly jac = orthopoly::jacobi(n, k);
            Rational alpha = k == 0 ? q.coeff(0) : q.leading() / jac.leading();
            if (alpha.sign() <= 0 || !(q == alpha * jac) ||
                q.eval(Rational(1)) != Rational(Integer(sphere::harm_dim(n, k)))) {
              detail += " [zonal kernel fails at n=" + std::to_string(n) +
                        " k=" + std::to_string(k) + "]";
              return false;
            }
          }
        }
        return true;
      });

  run(8, 120.0, "symmetry reduction: pentagon, Petersen, cube cross-check, Hamming eigenmatrix",
      [](std::string& detail) {
        using namespace symmetry;
        PermGroup d5;
        d5.degree = 5;
        d5.generators.push_back({1, 2, 3, 4, 0});
        d5.generators.push_back({0, 4, 3, 2, 1});
        std::vector<std::pair<int, int>> pentagon_edges;
        for (int i = 0; i < 5; ++i) pentagon_edges.emplace_back(i, (i + 1) % 5);
        double theta5 = theta_prime_reduced(make_graph(5, pentagon_edges), d5);
        if (std::abs(theta5 - std::sqrt(5.0)) > 1e-6) {
          detail += " [pentagon]";
          return false;
        }

        // Petersen graph with the induced S_5 action
        std::vector<std::pair<int, int>> pairs;
        for (int a = 0; a < 5; ++a)
          for (int b = a + 1; b < 5; ++b) pairs.emplace_back(a, b);
        auto induced = [&](const std::vector<int>& sigma) {
          std::vector<int> images(pairs.size());
          for (size_t i = 0; i < pairs.size(); ++i) {
            int a = sigma[static_cast<size_t>(pairs[i].first)];
            int b = sigma[static_cast<size_t>(pairs[i].second)];
            if (a > b) std::swap(a, b);
            for (size_t j = 0; j < pairs.size(); ++j)
              if (pairs[j] == std::make_pair(a, b)) images[i] = static_cast<int>(j);
          }
          return images;
        };
        std::vector<std::pair<int, int>> pet_edges;
        for (size_t i = 0; i < pairs.size(); ++i)
          for (size_t j = i + 1; j < pairs.size(); ++j) {
            auto [a, b] = pairs[i];
            auto [c, d] = pairs[j];
            if (a != c && a != d && b != c && b != d)
              pet_edges.emplace_back(static_cast<int>(i), static_cast<int>(j));
          }
        PermGroup s5;
        s5.degree = 10;
        s5.generators.push_back(induced({1, 0, 2, 3, 4}));
        s5.generators.push_back(induced({1, 2, 3, 4, 0}));
        double theta_p = theta_prime_reduced(make_graph(10, pet_edges), s5);
        if (std::abs(theta_p - 4.0) > 1e-6) {
          detail += " [Petersen]";
          return false;
        }

        for (int n = 2; n <= 5; ++n) {
          for (int d = 1; d <= n; ++d) {
            double theta = theta_prime_reduced(cube_graph(n, d), cube_group(n));
            double exact = boolean::delsarte_lp_bound(n, d).to_double();
            if (std::abs(theta - exact) > 1e-6) {
              detail += " [cube n=" + std::to_string(n) + " d=" + std::to_string(d) + "]";
              return false;
            }
          }
        }

        auto se = scheme_eigenmatrix(orbit_pairs(cube_group(3)));
        orthopoly::KrawtchoukFamily fam(3);
        if (se.P.size() != 4) {
          detail += " [Hamming scheme size]";
          return false;
        }
        for (size_t k = 0; k < 4; ++k) {
          for (int j = 0; j < 4; ++j) {
            long rounded = std::lround(se.P[k][j]);
            if (std::abs(se.P[k][j] - static_cast<double>(rounded)) > 1e-9 ||
                Rational(rounded) != fam.poly(j).eval(Rational(static_cast<long>(k)))) {
              detail += " [Hamming eigenmatrix]";
              return false;
            }
          }
        }
        return true;
      });

  run(9, 120.0, "certificate round trip and three rejected corruptions",
      [](std::string& detail) {
        std::string cert_path = "acceptance_cert_n4.json";
        auto r = run_cli("sphere-lp --n 4 --cos-theta 0 --degree 2 --emit-cert " + cert_path);
        if (r.exit_code != 0) {
          detail += " [emit failed]";
          return false;
        }
        auto v = run_cli("verify --certificate " + cert_path);
        if (v.exit_code != 0 || v.output.find("VALID bound=8") != 0) {
          detail += " [round trip failed]";
          return false;
        }
        // also round-trip the n=8 kissing certificate
        std::string cert8 = "acceptance_cert_n8.json";
        auto r8 = run_cli("sphere-lp --n 8 --cos-theta 1/2 --degree 10 --emit-cert " + cert8);
        if (r8.exit_code != 0 || run_cli("verify --certificate " + cert8).exit_code != 0) {
          detail += " [n=8 round trip failed]";
          return false;
        }

        auto base = ordered_json::parse(io::read_file(cert_path));
        struct Corruption {
          const char* name;
          std::function<void(ordered_json&)> apply;
          const char* reason;
        };
        std::vector<Corruption> corruptions = {
            {"negative coefficient",
             [](ordered_json& j) { j["coeffs"][1] = "-4"; },
             "NegativeCoefficient"},
            {"wrong bound", [](ordered_json& j) { j["bound"] = "9"; }, "BoundMismatch"},
            {"loosened interval", [](ordered_json& j) { j["cos_theta"] = "3/5"; },
             "IntervalViolation"},
        };
        for (const auto& c : corruptions) {
          ordered_json bad = base;
          c.apply(bad);
          std::string path = "acceptance_cert_bad.json";
          io::write_file(path, bad.dump());
          auto res = run_cli("verify --certificate " + path);
          if (res.exit_code != 1 ||
              res.output.find(std::string("INVALID reason=") + c.reason) != 0) {
            detail += std::string(" [") + c.name + " not rejected with " + c.reason + "]";
            return false;
          }
        }
        return true;
      });

  std::printf("%s: %d criterion(s) failed\n", g_failures == 0 ? "ACCEPTANCE PASSED" : "ACCEPTANCE FAILED",
              g_failures);
  return g_failures == 0 ? 0 : 1;
}

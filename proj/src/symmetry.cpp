#include "thetab/symmetry.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <queue>
#include <random>

#include "thetab/lp.hpp"

namespace thetab::symmetry {

FiniteGraph make_graph(int vertices, const std::vector<std::pair<int, int>>& edges) {
  if (vertices < 1) throw DomainError("graph needs at least one vertex");
  FiniteGraph g;
  g.vertices = vertices;
  for (auto [a, b] : edges) {
    if (a == b) throw DomainError("graph has a loop");
    if (a < 0 || b < 0 || a >= vertices || b >= vertices)
      throw DomainError("edge endpoint out of range");
    g.edges.emplace(std::min(a, b), std::max(a, b));
  }
  return g;
}

Orbitals orbit_pairs(const PermGroup& group) {
  const int n = group.degree;
  if (n < 1) throw DomainError("group degree must be positive");
  for (const auto& gen : group.generators) {
    if (static_cast<int>(gen.size()) != n)
      throw InvalidPermutation("generator length differs from degree");
    std::vector<bool> seen(static_cast<size_t>(n), false);
    for (int img : gen) {
      if (img < 0 || img >= n || seen[static_cast<size_t>(img)])
        throw InvalidPermutation("generator is not a bijection");
      seen[static_cast<size_t>(img)] = true;
    }
  }

  Orbitals orb;
  orb.n = n;
  orb.class_of.assign(static_cast<size_t>(n), std::vector<int>(static_cast<size_t>(n), -1));
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      if (orb.class_of[static_cast<size_t>(x)][static_cast<size_t>(y)] != -1) continue;
      int cls = orb.class_count++;
      std::queue<std::pair<int, int>> todo;
      orb.class_of[static_cast<size_t>(x)][static_cast<size_t>(y)] = cls;
      todo.emplace(x, y);
      while (!todo.empty()) {
        auto [a, b] = todo.front();
        todo.pop();
        for (const auto& gen : group.generators) {
          int ua = gen[static_cast<size_t>(a)];
          int ub = gen[static_cast<size_t>(b)];
          if (orb.class_of[static_cast<size_t>(ua)][static_cast<size_t>(ub)] == -1) {
            orb.class_of[static_cast<size_t>(ua)][static_cast<size_t>(ub)] = cls;
            todo.emplace(ua, ub);
          }
        }
      }
    }
  }
  orb.symmetric_class.assign(static_cast<size_t>(orb.class_count), true);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      if (orb.class_of[static_cast<size_t>(x)][static_cast<size_t>(y)] !=
          orb.class_of[static_cast<size_t>(y)][static_cast<size_t>(x)])
        orb.symmetric_class[static_cast<size_t>(
            orb.class_of[static_cast<size_t>(x)][static_cast<size_t>(y)])] = false;
  return orb;
}

std::vector<std::vector<Rational>> group_average(const std::vector<std::vector<Rational>>& M,
                                                 const Orbitals& orbitals) {
  const int n = orbitals.n;
  if (static_cast<int>(M.size()) != n) throw ShapeMismatch("group_average: row count");
  for (const auto& row : M)
    if (static_cast<int>(row.size()) != n) throw ShapeMismatch("group_average: column count");
  std::vector<Rational> sums(static_cast<size_t>(orbitals.class_count));
  std::vector<long> counts(static_cast<size_t>(orbitals.class_count), 0);
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      int c = orbitals.class_of[static_cast<size_t>(x)][static_cast<size_t>(y)];
      sums[static_cast<size_t>(c)] += M[static_cast<size_t>(x)][static_cast<size_t>(y)];
      ++counts[static_cast<size_t>(c)];
    }
  }
  std::vector<std::vector<Rational>> out(static_cast<size_t>(n),
                                         std::vector<Rational>(static_cast<size_t>(n)));
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      int c = orbitals.class_of[static_cast<size_t>(x)][static_cast<size_t>(y)];
      out[static_cast<size_t>(x)][static_cast<size_t>(y)] =
          sums[static_cast<size_t>(c)] / Rational(counts[static_cast<size_t>(c)]);
    }
  }
  return out;
}

namespace {

// Exact commutation check of the 0/1 indicator matrices.
bool classes_commute(const Orbitals& orb) {
  const int n = orb.n;
  const int m = orb.class_count;
  // (C_a C_b)(x, y) counted via the class table directly
  for (int a = 0; a < m; ++a) {
    for (int b = a + 1; b < m; ++b) {
      for (int x = 0; x < n; ++x) {
        for (int y = 0; y < n; ++y) {
          int ab = 0, ba = 0;
          for (int z = 0; z < n; ++z) {
            if (orb.class_of[static_cast<size_t>(x)][static_cast<size_t>(z)] == a &&
                orb.class_of[static_cast<size_t>(z)][static_cast<size_t>(y)] == b)
              ++ab;
            if (orb.class_of[static_cast<size_t>(x)][static_cast<size_t>(z)] == b &&
                orb.class_of[static_cast<size_t>(z)][static_cast<size_t>(y)] == a)
              ++ba;
          }
          if (ab != ba) return false;
        }
      }
    }
  }
  return true;
}

}  // namespace

SchemeEigen scheme_eigenmatrix(const Orbitals& orb) {
  const int n = orb.n;
  const int m = orb.class_count;
  for (bool sym : orb.symmetric_class)
    if (!sym)
      throw NoncommutativeCommutant(
          "orbital classes are not symmetric; the real multiplicity-free reduction does not apply");
  if (!classes_commute(orb))
    throw NoncommutativeCommutant("orbital indicator matrices do not commute");

  // Simultaneous diagonalization through a random combination; degenerate
  // draws are detected by the reconstruction residual and retried.
  std::mt19937 rng(0x5eed);
  std::uniform_int_distribution<int> pick(1, 997);
  const double kResidualTol = 1e-9;
  for (int attempt = 0; attempt < 3; ++attempt) {
    Eigen::MatrixXd A = Eigen::MatrixXd::Zero(n, n);
    std::vector<double> weights(static_cast<size_t>(m));
    for (auto& w : weights) w = static_cast<double>(pick(rng));
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y)
        A(x, y) = weights[static_cast<size_t>(
            orb.class_of[static_cast<size_t>(x)][static_cast<size_t>(y)])];

    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(A);
    if (es.info() != Eigen::Success) continue;
    const Eigen::MatrixXd& V = es.eigenvectors();

    // Eigenvalue of each class on each eigenvector via Rayleigh quotients,
    // then cluster identical eigenvalue tuples into eigenspaces.
    Eigen::MatrixXd lam(m, n);
    bool clean = true;
    for (int j = 0; j < m && clean; ++j) {
      Eigen::MatrixXd Cj = Eigen::MatrixXd::Zero(n, n);
      for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
          if (orb.class_of[static_cast<size_t>(x)][static_cast<size_t>(y)] == j) Cj(x, y) = 1.0;
      Eigen::MatrixXd CV = Cj * V;
      for (int v = 0; v < n; ++v) {
        double val = V.col(v).dot(CV.col(v));
        if ((CV.col(v) - val * V.col(v)).norm() > 1e-7 * std::max(1.0, CV.col(v).norm())) {
          clean = false;
          break;
        }
        lam(j, v) = val;
      }
    }
    if (!clean) continue;

    std::vector<int> space_of(static_cast<size_t>(n), -1);
    std::vector<std::vector<double>> rows;
    std::vector<int> mult;
    for (int v = 0; v < n; ++v) {
      bool placed = false;
      for (size_t k = 0; k < rows.size() && !placed; ++k) {
        bool same = true;
        for (int j = 0; j < m; ++j)
          if (std::abs(rows[k][static_cast<size_t>(j)] - lam(j, v)) > 1e-6) same = false;
        if (same) {
          ++mult[k];
          space_of[static_cast<size_t>(v)] = static_cast<int>(k);
          placed = true;
        }
      }
      if (!placed) {
        std::vector<double> row(static_cast<size_t>(m));
        for (int j = 0; j < m; ++j) row[static_cast<size_t>(j)] = lam(j, v);
        rows.push_back(std::move(row));
        mult.push_back(1);
        space_of[static_cast<size_t>(v)] = static_cast<int>(rows.size()) - 1;
      }
    }

    // Reconstruction: C_j == sum_k P[k][j] E_k with E_k the projector onto
    // eigenspace k, checked entrywise.
    double worst = 0.0;
    for (int j = 0; j < m; ++j) {
      Eigen::MatrixXd R = Eigen::MatrixXd::Zero(n, n);
      for (int v = 0; v < n; ++v)
        R += lam(j, v) * (V.col(v) * V.col(v).transpose());
      for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) {
          double want =
              (orb.class_of[static_cast<size_t>(x)][static_cast<size_t>(y)] == j) ? 1.0 : 0.0;
          worst = std::max(worst, std::abs(R(x, y) - want));
        }
    }
    if (worst > kResidualTol) continue;

    // Deterministic order: lexicographically descending rows (with noise
    // tolerance) puts the valency row (all-ones eigenvector) first.
    std::vector<int> perm(rows.size());
    std::iota(perm.begin(), perm.end(), 0);
    std::sort(perm.begin(), perm.end(), [&](int a, int b) {
      const auto& ra = rows[static_cast<size_t>(a)];
      const auto& rb = rows[static_cast<size_t>(b)];
      for (size_t j = 0; j < ra.size(); ++j)
        if (std::abs(ra[j] - rb[j]) > 1e-6) return ra[j] > rb[j];
      return false;
    });
    SchemeEigen out;
    for (int k : perm) {
      out.P.push_back(rows[static_cast<size_t>(k)]);
      out.multiplicities.push_back(mult[static_cast<size_t>(k)]);
    }
    return out;
  }
  throw Error("scheme_eigenmatrix: eigen-reconstruction failed after 3 attempts");
}

double theta_prime_reduced(const FiniteGraph& graph, const PermGroup& group) {
  if (graph.vertices != group.degree)
    throw ShapeMismatch("graph and group act on different vertex sets");
  Orbitals orb = orbit_pairs(group);
  const int n = orb.n;
  const int m = orb.class_count;

  int diag_class = orb.class_of[0][0];
  for (int x = 0; x < n; ++x) {
    if (orb.class_of[static_cast<size_t>(x)][static_cast<size_t>(x)] != diag_class)
      throw NotTransitive("group is not vertex-transitive (diagonal splits into classes)");
  }
  // edge set must be a union of classes
  std::vector<int> edge_status(static_cast<size_t>(m), -1);  // -1 unseen, 0 non-edge, 1 edge
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      if (x == y) continue;
      int c = orb.class_of[static_cast<size_t>(x)][static_cast<size_t>(y)];
      int e = graph.edges.count({std::min(x, y), std::max(x, y)}) ? 1 : 0;
      if (edge_status[static_cast<size_t>(c)] == -1)
        edge_status[static_cast<size_t>(c)] = e;
      else if (edge_status[static_cast<size_t>(c)] != e)
        throw NotInvariant("edge set is not constant on pair orbits");
    }
  }

  SchemeEigen se = scheme_eigenmatrix(orb);
  const int spaces = static_cast<int>(se.P.size());

  // Column order: diagonal class, then non-edge classes (kernel value
  // -1 - b_j, b_j >= 0), then edge classes (free, split p - q).
  std::vector<int> nonedge, edge;
  for (int j = 0; j < m; ++j) {
    if (j == diag_class) continue;
    if (edge_status[static_cast<size_t>(j)] == 1)
      edge.push_back(j);
    else
      nonedge.push_back(j);
  }

  // Variables: lambda, b_j (non-edges), p_j, q_j (edges); all >= 0.
  // PSD rows: (lambda - 1) P[k][diag] + sum_j a_j P[k][j] >= 0 per
  // eigenspace k, with P[k][diag] = 1.
  const size_t nb = nonedge.size();
  const size_t ne = edge.size();
  lp::Problem<double> prob;
  prob.sense = lp::Sense::Minimize;
  prob.costs.assign(1 + nb + 2 * ne, 0.0);
  prob.costs[0] = 1.0;
  for (int k = 0; k < spaces; ++k) {
    lp::Row<double> row;
    row.rel = lp::Relation::GreaterEq;
    row.coeffs.assign(1 + nb + 2 * ne, 0.0);
    row.coeffs[0] = 1.0;  // lambda
    double rhs = 1.0;     // from the diagonal kernel value lambda - 1
    for (size_t i = 0; i < nb; ++i) {
      double pkj = se.P[static_cast<size_t>(k)][static_cast<size_t>(nonedge[i])];
      row.coeffs[1 + i] = -pkj;  // a_j = -1 - b_j
      rhs += pkj;
    }
    for (size_t i = 0; i < ne; ++i) {
      double pkj = se.P[static_cast<size_t>(k)][static_cast<size_t>(edge[i])];
      row.coeffs[1 + nb + 2 * i] = pkj;
      row.coeffs[1 + nb + 2 * i + 1] = -pkj;
    }
    row.rhs = rhs;
    prob.rows.push_back(std::move(row));
  }
  auto sol = lp::simplex_solve(prob);
  if (sol.status != lp::Status::Optimal)
    throw Error("reduced theta LP did not reach an optimum");
  return sol.objective;
}

namespace {

int mis_recurse(const std::vector<std::uint64_t>& adj, std::uint64_t candidates, int current,
                int& best) {
  if (candidates == 0) {
    best = std::max(best, current);
    return best;
  }
  int remaining = std::popcount(candidates);
  if (current + remaining <= best) return best;  // bound
  // branch on a candidate of maximum degree within the candidate set
  int pick = -1, pick_deg = -1;
  std::uint64_t scan = candidates;
  while (scan) {
    int v = std::countr_zero(scan);
    scan &= scan - 1;
    int deg = std::popcount(adj[static_cast<size_t>(v)] & candidates);
    if (deg > pick_deg) {
      pick_deg = deg;
      pick = v;
    }
  }
  std::uint64_t bit = std::uint64_t{1} << pick;
  // include
  mis_recurse(adj, candidates & ~(adj[static_cast<size_t>(pick)] | bit), current + 1, best);
  // exclude
  mis_recurse(adj, candidates & ~bit, current, best);
  return best;
}

}  // namespace

int stable_set_bruteforce(const FiniteGraph& graph, int limit) {
  const int n = graph.vertices;
  if (n > limit || n > 64) throw TooLarge("graph exceeds the brute-force vertex limit");
  std::vector<std::uint64_t> adj(static_cast<size_t>(n), 0);
  for (auto [a, b] : graph.edges) {
    adj[static_cast<size_t>(a)] |= std::uint64_t{1} << b;
    adj[static_cast<size_t>(b)] |= std::uint64_t{1} << a;
  }
  // greedy start: repeatedly take a minimum-degree vertex
  std::uint64_t cand = (n == 64) ? ~std::uint64_t{0} : ((std::uint64_t{1} << n) - 1);
  int greedy = 0;
  std::uint64_t c = cand;
  while (c) {
    int pick = -1, deg = 65;
    std::uint64_t scan = c;
    while (scan) {
      int v = std::countr_zero(scan);
      scan &= scan - 1;
      int d = std::popcount(adj[static_cast<size_t>(v)] & c);
      if (d < deg) {
        deg = d;
        pick = v;
      }
    }
    ++greedy;
    c &= ~(adj[static_cast<size_t>(pick)] | (std::uint64_t{1} << pick));
  }
  int best = greedy;
  mis_recurse(adj, cand, 0, best);
  return best;
}

}  // namespace thetab::symmetry

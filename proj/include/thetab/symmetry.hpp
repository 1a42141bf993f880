#pragma once

#include <set>
#include <utility>
#include <vector>

#include "thetab/rational.hpp"

namespace thetab::symmetry {

// Permutation group on {0, ..., degree-1} given by generators (image arrays).
struct PermGroup {
  int degree = 0;
  std::vector<std::vector<int>> generators;
};

struct FiniteGraph {
  int vertices = 0;
  std::set<std::pair<int, int>> edges;  // ordered pairs (i < j), no loops
};

FiniteGraph make_graph(int vertices, const std::vector<std::pair<int, int>>& edges);

// Partition of V x V into orbits of the diagonal action (x,y) -> (ux,uy).
struct Orbitals {
  int n = 0;
  std::vector<std::vector<int>> class_of;  // n x n class indices
  int class_count = 0;
  std::vector<bool> symmetric_class;  // transpose-closed classes
};

// Orbit closure under the generators; no full group enumeration. Throws
// InvalidPermutation when a generator is not a bijection.
Orbitals orbit_pairs(const PermGroup& group);

// Projection onto invariant matrices: each entry replaced by the mean of
// its orbital class. Idempotent, linear, fixes invariant matrices.
std::vector<std::vector<Rational>> group_average(const std::vector<std::vector<Rational>>& M,
                                                 const Orbitals& orbitals);

// Common eigenspace data of the orbital indicator matrices: P[k][j] is the
// eigenvalue of class j on eigenspace k, multiplicities are the eigenspace
// dimensions. Requires a commutative commutant with symmetric classes
// (multiplicity-free case); throws NoncommutativeCommutant otherwise.
struct SchemeEigen {
  std::vector<std::vector<double>> P;
  std::vector<int> multiplicities;
};

SchemeEigen scheme_eigenmatrix(const Orbitals& orbitals);

// Reduced theta-prime for a vertex-transitive graph: the invariant-kernel
// LP over orbital coefficients with eigenvalue rows as the positivity
// constraints. Float-mode LP; result is within 1e-6 of the reduced
// optimum and bounds the stability number from above.
double theta_prime_reduced(const FiniteGraph& graph, const PermGroup& group);

// Exact maximum stable set by branch and bound. Throws TooLarge above the
// vertex limit.
int stable_set_bruteforce(const FiniteGraph& graph, int limit = 64);

}  // namespace thetab::symmetry

#include "thetab/sphere.hpp"

#include <algorithm>

#include "thetab/linalg.hpp"
#include "thetab/lp.hpp"
#include "thetab/orthopoly.hpp"
#include "thetab/sturm.hpp"

namespace thetab::sphere {

namespace {

// All exponent vectors of the given total degree, lexicographic.
void monomials_rec(int nvars, int degree, Exponents& cur, std::vector<Exponents>& out) {
  if (static_cast<int>(cur.size()) == nvars - 1) {
    cur.push_back(degree);
    out.push_back(cur);
    cur.pop_back();
    return;
  }
  for (int e = degree; e >= 0; --e) {
    cur.push_back(e);
    monomials_rec(nvars, degree - e, cur, out);
    cur.pop_back();
  }
}

std::vector<Exponents> monomials(int nvars, int degree) {
  std::vector<Exponents> out;
  Exponents cur;
  monomials_rec(nvars, degree, cur, out);
  return out;
}

}  // namespace

MultiPoly harmonic_projection(const MultiPoly& p) {
  if (!p.is_homogeneous()) throw NotHomogeneous();
  if (p.is_zero()) return p;
  const int n = p.nvars();
  const int d = p.total_degree();
  if (d <= 1) return p;
  // h = sum_j c_j omega^j Delta^j p with c_0 = 1 and
  // c_{j+1} = -c_j / (2 (j+1) (n + 2d - 2j - 4)); Delta h = 0 exactly.
  MultiPoly h = p;
  MultiPoly power = p;
  MultiPoly om = MultiPoly::omega(n);
  Rational c(1);
  for (int j = 0; 2 * (j + 1) <= d; ++j) {
    power = power.laplacian();
    if (power.is_zero()) break;
    long denom = 2L * (j + 1) * (n + 2L * d - 2 * j - 4);
    c = -c / Rational(denom);
    MultiPoly term = power;
    for (int i = 0; i <= j; ++i) term = term * om;
    h += c * term;
  }
  return h;
}

std::vector<MultiPoly> harmonic_decompose(const MultiPoly& p) {
  if (!p.is_homogeneous()) throw NotHomogeneous();
  std::vector<MultiPoly> parts;
  MultiPoly rest = p;
  int d = p.total_degree();
  for (int k = d; k >= 0; k -= 2) {
    if (rest.is_zero()) {
      parts.emplace_back(p.nvars());
      continue;
    }
    MultiPoly h = harmonic_projection(rest);
    parts.push_back(h);
    rest -= h;
    if (k >= 2) rest = rest.divide_by_omega();
  }
  return parts;
}

long harm_dim(int n, int k) {
  if (n < 2 || k < 0) throw DomainError("harm_dim: need n >= 2, k >= 0");
  Integer a = binomial(n + k - 1, n - 1);
  Integer b = (n + k - 3 >= 0) ? binomial(n + k - 3, n - 1) : Integer(0);
  Integer r = a - b;
  return r.get_si();
}

Rational sphere_monomial_average(const Exponents& exponents) {
  long total = 0;
  for (int e : exponents) {
    if (e < 0) throw DomainError("negative exponent");
    if (e % 2) return Rational(0);
    total += e;
  }
  const long n = static_cast<long>(exponents.size());
  // prod_i (a_i - 1)!! / prod_{j=0}^{total/2 - 1} (n + 2j)
  Integer num = 1;
  for (int e : exponents)
    for (int f = e - 1; f >= 1; f -= 2) num *= f;
  Integer den = 1;
  for (long j = 0; 2 * j < total; ++j) den *= n + 2 * j;
  return Rational(num, den);
}

Rational sphere_inner(const MultiPoly& f, const MultiPoly& g) {
  Rational total;
  Exponents e(static_cast<size_t>(f.nvars()));
  if (f.nvars() != g.nvars()) throw DomainError("variable count mismatch");
  for (const auto& [ef, cf] : f.terms()) {
    for (const auto& [eg, cg] : g.terms()) {
      for (size_t i = 0; i < e.size(); ++i) e[i] = ef[i] + eg[i];
      Rational avg = sphere_monomial_average(e);
      if (!avg.is_zero()) total += cf * cg * avg;
    }
  }
  return total;
}

UniPoly zonal_kernel(int n, int k) {
  if (n < 2 || k < 0) throw DomainError("zonal_kernel: need n >= 2, k >= 0");
  if (k == 0) return UniPoly::constant(Rational(1));

  // Harmonic basis: projections of degree-k monomials, thinned to a
  // linearly independent set of size harm_dim(n, k).
  const auto monos = monomials(n, k);
  std::vector<MultiPoly> span;
  RatMatrix coeff_rows;
  for (const auto& e : monos) {
    MultiPoly h = harmonic_projection(MultiPoly::monomial(n, e, Rational(1)));
    RatVector row(monos.size());
    for (size_t j = 0; j < monos.size(); ++j) row[j] = h.coeff(monos[j]);
    span.push_back(std::move(h));
    coeff_rows.push_back(std::move(row));
  }
  std::vector<int> keep = independent_rows(coeff_rows);
  const long hk = harm_dim(n, k);
  if (static_cast<long>(keep.size()) != hk)
    throw Error("zonal_kernel: harmonic span has unexpected dimension");

  // Orthogonalize (not orthonormalize) under the averaged sphere measure.
  std::vector<MultiPoly> basis;
  std::vector<Rational> norms;
  for (int idx : keep) {
    MultiPoly g = span[static_cast<size_t>(idx)];
    for (size_t j = 0; j < basis.size(); ++j) {
      Rational c = sphere_inner(g, basis[j]) / norms[j];
      g -= c * basis[j];
    }
    Rational norm = sphere_inner(g, g);
    if (norm.sign() <= 0) throw Error("zonal_kernel: degenerate Gram-Schmidt step");
    basis.push_back(std::move(g));
    norms.push_back(std::move(norm));
  }

  // Z(x, y) = sum_i g_i(x) g_i(y) / (g_i, g_i) at x = e_1,
  // y = (t, s, 0, ...); s^2 rewritten as 1 - t^2. Any surviving odd
  // power of s means the kernel is not a function of x.y alone.
  UniPoly q_even;  // s^0, s^2, ... collapsed into polynomials in t
  UniPoly q_odd;   // coefficient of the residual single power of s
  std::vector<Rational> point_e1(static_cast<size_t>(n), Rational(0));
  point_e1[0] = Rational(1);

  UniPoly one_minus_t2({Rational(1), Rational(0), Rational(-1)});
  for (size_t i = 0; i < basis.size(); ++i) {
    Rational at_pole = basis[i].eval(point_e1);
    if (at_pole.is_zero()) continue;
    Rational w = at_pole / norms[i];
    for (const auto& [e, c] : basis[i].terms()) {
      bool supported = true;
      for (size_t v = 2; v < e.size(); ++v)
        if (e[v] != 0) supported = false;
      if (!supported) continue;
      int a = e[0];
      int b = e[1];
      // c * t^a * s^b with s^2 = 1 - t^2
      UniPoly term = UniPoly::monomial(a, w * c);
      for (int h = 0; h < b / 2; ++h) term = term * one_minus_t2;
      if (b % 2)
        q_odd += term;
      else
        q_even += term;
    }
  }
  if (!q_odd.is_zero())
    throw ReductionFailure("zonal kernel has odd residual in the normal coordinate");

  // Exact proportionality to the Jacobi polynomial with positive constant.
  UniPoly jac = orthopoly::jacobi(n, k);
  if (q_even.degree() != jac.degree())
    throw ReductionFailure("zonal kernel degree mismatch with Jacobi polynomial");
  Rational alpha = q_even.leading() / jac.leading();
  if (alpha.sign() <= 0 || q_even != alpha * jac)
    throw ReductionFailure("zonal kernel is not a positive multiple of the Jacobi polynomial");
  return q_even;
}

std::pair<Rational, Rational> adjoint_check(const MultiPoly& f, const MultiPoly& g) {
  if (!f.is_homogeneous() || !g.is_homogeneous()) throw NotHomogeneous();
  if (f.nvars() != g.nvars()) throw DomainError("variable count mismatch");
  if (f.is_zero() || g.is_zero()) return {Rational(0), Rational(0)};
  const int d = g.total_degree();
  if (f.total_degree() != d - 2) throw DegreeMismatch("adjoint_check: need deg f = deg g - 2");

  // apolar pairing sum_m p_m q_m m! / deg!; both sides of the adjointness
  // identity share the normalizer of deg g.
  auto apolar = [](const MultiPoly& p, const MultiPoly& q, int deg) {
    Rational total;
    Integer dfact;
    mpz_fac_ui(dfact.get_mpz_t(), static_cast<unsigned long>(deg));
    for (const auto& [e, c] : p.terms()) {
      Rational qc = q.coeff(e);
      if (qc.is_zero()) continue;
      Integer mfact = 1;
      for (int x : e) {
        Integer f1;
        mpz_fac_ui(f1.get_mpz_t(), static_cast<unsigned long>(x));
        mfact *= f1;
      }
      total += c * qc * Rational(mfact, dfact);
    }
    return total;
  };

  MultiPoly om = MultiPoly::omega(f.nvars());
  Rational lhs = apolar(om * f, g, d);
  Rational rhs = apolar(f, g.laplacian(), d);
  return {lhs, rhs};
}

MultiPoly inner_product_kernel_apply(const MultiPoly& f) {
  // (T_K f)(x) = avg_y (x.y) f(y) = sum_i x_i avg(y_i f(y)); always a
  // linear polynomial in x.
  const int n = f.nvars();
  MultiPoly out(n);
  for (int i = 0; i < n; ++i) {
    Exponents yi(static_cast<size_t>(n), 0);
    yi[static_cast<size_t>(i)] = 1;
    MultiPoly yif = MultiPoly::monomial(n, yi, Rational(1)) * f;
    Rational avg;
    for (const auto& [e, c] : yif.terms()) avg += c * sphere_monomial_average(e);
    if (!avg.is_zero()) out.add_term(yi, avg);
  }
  return out;
}

Rational inner_product_kernel_eigenvalue(int n) {
  if (n < 2) throw DomainError("inner_product_kernel_eigenvalue: need n >= 2");
  Exponents e1(static_cast<size_t>(n), 0);
  e1[0] = 1;
  MultiPoly x1 = MultiPoly::monomial(n, e1, Rational(1));
  MultiPoly image = inner_product_kernel_apply(x1);
  Rational lambda = image.coeff(e1);
  if (!(image == lambda * x1)) throw Error("inner product kernel does not fix the coordinate line");
  return lambda;
}

const char* verify_reason_name(VerifyReason r) {
  switch (r) {
    case VerifyReason::Valid: return "Valid";
    case VerifyReason::Malformed: return "Malformed";
    case VerifyReason::NegativeCoefficient: return "NegativeCoefficient";
    case VerifyReason::BoundMismatch: return "BoundMismatch";
    case VerifyReason::IntervalViolation: return "IntervalViolation";
  }
  return "Unknown";
}

VerifyResult verify_certificate(const Certificate& cert) {
  if (cert.space != "sphere" || cert.n < 2 || cert.degree < 0 ||
      cert.coeffs.size() != static_cast<size_t>(cert.degree) + 1 ||
      cert.cos_theta <= Rational(-1) || cert.cos_theta >= Rational(1))
    return {false, VerifyReason::Malformed};
  Rational sum;
  for (const auto& f : cert.coeffs) {
    if (f.sign() < 0) return {false, VerifyReason::NegativeCoefficient};
    sum += f;
  }
  if (cert.bound != Rational(1) + sum) return {false, VerifyReason::BoundMismatch};
  orthopoly::JacobiFamily fam(cert.n);
  UniPoly F;
  for (int k = 0; k <= cert.degree; ++k)
    F += cert.coeffs[static_cast<size_t>(k)] * fam.poly(k);
  UniPoly G = F + UniPoly::constant(Rational(1));
  if (!sturm_nonpositive(G, Rational(-1), cert.cos_theta))
    return {false, VerifyReason::IntervalViolation};
  return {true, VerifyReason::Valid};
}

namespace {

lp::Problem<Rational> certificate_lp(orthopoly::JacobiFamily& fam, int degree,
                                     const std::vector<Rational>& points) {
  lp::Problem<Rational> p;
  p.sense = lp::Sense::Minimize;
  p.costs.assign(static_cast<size_t>(degree) + 1, Rational(1));  // F(1) = sum f_k
  for (const auto& t : points) {
    lp::Row<Rational> row;
    row.rel = lp::Relation::LessEq;
    row.rhs = Rational(-1);
    row.coeffs.resize(static_cast<size_t>(degree) + 1);
    for (int k = 0; k <= degree; ++k) row.coeffs[static_cast<size_t>(k)] = fam.poly(k).eval(t);
    p.rows.push_back(std::move(row));
  }
  return p;
}

}  // namespace

namespace {

Certificate make_certificate(int n, const Rational& cos_theta, const std::vector<Rational>& values,
                             const Rational& objective) {
  Certificate cert;
  cert.n = n;
  cert.cos_theta = cos_theta;
  cert.coeffs = values;
  // trim trailing zeros; degree is the highest contributing k
  while (cert.coeffs.size() > 1 && cert.coeffs.back().is_zero()) cert.coeffs.pop_back();
  cert.degree = static_cast<int>(cert.coeffs.size()) - 1;
  cert.bound = Rational(1) + objective;
  return cert;
}

UniPoly assemble(orthopoly::JacobiFamily& fam, const std::vector<Rational>& f, int degree) {
  UniPoly F;
  for (int k = 0; k <= degree; ++k) F += f[static_cast<size_t>(k)] * fam.poly(k);
  return F;
}

// Rational of small height near each violating maximum: the simplest
// rational strictly between the constraint points bracketing the witness,
// plus the bracket endpoints themselves. Optimal certificates touch -1 at
// such points, so forcing exact tangency there resolves the degenerate
// optimal face that plain cutting cannot leave.
void touch_candidates(const std::vector<Rational>& sorted_points, const Rational& witness,
                      std::vector<Rational>& out) {
  auto it = std::upper_bound(sorted_points.begin(), sorted_points.end(), witness);
  if (it == sorted_points.begin() || it == sorted_points.end()) return;
  const Rational& right = *it;
  const Rational& left = *std::prev(it);
  for (const Rational& c : {simplest_between(left, right), left, right})
    if (c.denominator() <= 64 && std::find(out.begin(), out.end(), c) == out.end())
      out.push_back(c);
}

}  // namespace

Certificate dgs_lp_bound(int n, const Rational& cos_theta, int degree) {
  if (n < 2) throw DomainError("dgs_lp_bound: need n >= 2");
  if (degree < 1) throw DomainError("dgs_lp_bound: need degree >= 1");
  if (cos_theta <= Rational(-1) || cos_theta >= Rational(1))
    throw DomainError("dgs_lp_bound: need -1 < cos_theta < 1");

  orthopoly::JacobiFamily fam(n);
  // Initial grid: 64 equispaced rational points on [-1, c].
  std::vector<Rational> points;
  const int kGrid = 64;
  Rational lo(-1);
  Rational width = cos_theta - lo;
  for (int j = 0; j < kGrid; ++j)
    points.push_back(lo + Rational(Integer(j), Integer(kGrid - 1)) * width);

  const int kMaxRounds = 50;
  for (int round = 0; round < kMaxRounds; ++round) {
    auto prob = certificate_lp(fam, degree, points);
    auto sol = lp::solve_active_set(prob);
    if (sol.status != lp::Status::Optimal)
      throw InfeasibleAtDegree("no certificate of degree " + std::to_string(degree) +
                               " (finite LP " + (sol.status == lp::Status::Infeasible
                                                     ? "infeasible"
                                                     : "unbounded") +
                               ")");
    UniPoly G = assemble(fam, sol.values, degree) + UniPoly::constant(Rational(1));
    auto violations = positive_witnesses(G, lo, cos_theta);
    if (violations.empty()) return make_certificate(n, cos_theta, sol.values, sol.objective);

    // Polish: force exact tangency F = -1, F' = 0 at small-height touch
    // candidates near the violations, at the smallest degree the touch
    // structure allows (endpoint touches are simple roots, interior ones
    // double). Accepted only when the optimum value is unchanged and the
    // result is Sturm-feasible on the whole interval.
    std::vector<Rational> sorted_points = points;
    std::sort(sorted_points.begin(), sorted_points.end());
    std::vector<Rational> candidates;
    for (const auto& w : violations) touch_candidates(sorted_points, w, candidates);
    for (const auto& t : sorted_points) {
      // existing tight touch points of small height stay pinned
      if (t.denominator() <= 64 && G.eval(t).is_zero() &&
          std::find(candidates.begin(), candidates.end(), t) == candidates.end())
        candidates.push_back(t);
    }
    if (!candidates.empty()) {
      int minimal = 0;
      for (const auto& r : candidates) minimal += (r > lo && r < cos_theta) ? 2 : 1;
      std::vector<int> degree_tries;
      for (int d : {minimal, minimal + 1, minimal + 2, degree})
        if (d >= 1 && d <= degree &&
            std::find(degree_tries.begin(), degree_tries.end(), d) == degree_tries.end())
          degree_tries.push_back(d);

      for (int d : degree_tries) {
        auto polish = certificate_lp(fam, d, points);
        for (const auto& r : candidates) {
          lp::Row<Rational> eq;
          eq.rel = lp::Relation::Eq;
          eq.rhs = Rational(-1);
          for (int k = 0; k <= d; ++k) eq.coeffs.push_back(fam.poly(k).eval(r));
          polish.rows.push_back(std::move(eq));
          if (r > lo && r < cos_theta) {
            lp::Row<Rational> flat;
            flat.rel = lp::Relation::Eq;
            flat.rhs = Rational(0);
            for (int k = 0; k <= d; ++k) flat.coeffs.push_back(fam.poly(k).derivative().eval(r));
            polish.rows.push_back(std::move(flat));
          }
        }
        try {
          auto psol = lp::solve_active_set(polish);
          if (psol.status == lp::Status::Optimal && psol.objective == sol.objective) {
            UniPoly Gp = assemble(fam, psol.values, d) + UniPoly::constant(Rational(1));
            if (sturm_nonpositive(Gp, lo, cos_theta))
              return make_certificate(n, cos_theta, psol.values, psol.objective);
          }
        } catch (const Error&) {
          // polish is opportunistic; fall through to plain cutting
        }
      }
      // Candidates also join the point set: once the true touch points are
      // ordinary constraints, the finite optimum coincides with the
      // semi-infinite one and the polish test above becomes exact.
      for (const auto& r : candidates)
        if (std::find(points.begin(), points.end(), r) == points.end()) points.push_back(r);
    }

    // Optima with irrational touch points are never attained by a rational
    // vertex; once the violation is tiny, certify max G <= eps by Sturm
    // and scale F by 1/(1 - eps). The result is exactly feasible and its
    // bound exceeds the finite LP lower bound by at most kRelativeGap.
    Rational emax(0);
    for (const auto& w : violations) {
      Rational v = G.eval(w);
      if (v > emax) emax = v;
    }
    if (emax.sign() > 0 && emax < Rational(Integer(1), Integer(4))) {
      Rational eps = Rational(2) * emax;
      bool covered = false;
      for (int i = 0; i < 10 && eps < Rational(Integer(1), Integer(2)); ++i) {
        if (sturm_nonpositive(G + UniPoly::constant(-eps), lo, cos_theta)) {
          covered = true;
          break;
        }
        eps *= Rational(2);
      }
      const Rational kRelativeGap(Integer(1), Integer(1000000000));
      if (covered && eps / (Rational(1) - eps) <= kRelativeGap) {
        Rational scale = Rational(1) / (Rational(1) - eps);
        std::vector<Rational> scaled = sol.values;
        for (auto& f : scaled) f *= scale;
        return make_certificate(n, cos_theta, scaled, sol.objective * scale);
      }
    }
    for (auto& t : violations) points.push_back(std::move(t));
  }
  throw InfeasibleAtDegree("exchange method did not settle within 50 rounds at degree " +
                           std::to_string(degree));
}

double dgs_lp_bound_float(int n, double cos_theta, int degree) {
  if (n < 2 || degree < 1 || cos_theta <= -1.0 || cos_theta >= 1.0)
    throw DomainError("dgs_lp_bound_float: bad parameters");
  orthopoly::JacobiFamily fam(n);
  const int kGrid = 512;
  lp::Problem<double> p;
  p.sense = lp::Sense::Minimize;
  p.costs.assign(static_cast<size_t>(degree) + 1, 1.0);
  for (int j = 0; j < kGrid; ++j) {
    double t = -1.0 + (cos_theta + 1.0) * j / (kGrid - 1);
    lp::Row<double> row;
    row.rel = lp::Relation::LessEq;
    row.rhs = -1.0;
    for (int k = 0; k <= degree; ++k) row.coeffs.push_back(fam.poly(k).eval_double(t));
    p.rows.push_back(std::move(row));
  }
  auto sol = lp::simplex_solve(p);
  if (sol.status != lp::Status::Optimal)
    throw InfeasibleAtDegree("float grid LP not optimal at degree " + std::to_string(degree));
  return 1.0 + sol.objective;
}

}  // namespace thetab::sphere

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "thetab/boolean.hpp"
#include "thetab/linalg.hpp"
#include "thetab/orthopoly.hpp"
#include "thetab/sphere.hpp"
#include "thetab/sturm.hpp"
#include "thetab/symmetry.hpp"

namespace py = pybind11;
using namespace thetab;

namespace {

std::vector<std::string> poly_strings(const UniPoly& p) {
  std::vector<std::string> out;
  if (p.is_zero()) return {"0"};
  for (int i = 0; i <= p.degree(); ++i) out.push_back(p.coeff(i).str());
  return out;
}

UniPoly poly_from_strings(const std::vector<std::string>& coeffs) {
  std::vector<Rational> c;
  c.reserve(coeffs.size());
  for (const auto& s : coeffs) c.push_back(Rational::from_string(s));
  return UniPoly(std::move(c));
}

py::dict certificate_dict(const sphere::Certificate& cert) {
  py::dict d;
  d["space"] = cert.space;
  d["n"] = cert.n;
  d["cos_theta"] = cert.cos_theta.str();
  d["degree"] = cert.degree;
  py::list coeffs;
  for (const auto& f : cert.coeffs) coeffs.append(f.str());
  d["coeffs"] = coeffs;
  d["bound"] = cert.bound.str();
  return d;
}

sphere::Certificate certificate_from_dict(const py::dict& d) {
  sphere::Certificate cert;
  cert.space = py::cast<std::string>(d["space"]);
  cert.n = py::cast<int>(d["n"]);
  cert.cos_theta = Rational::from_string(py::cast<std::string>(d["cos_theta"]));
  cert.degree = py::cast<int>(d["degree"]);
  for (auto item : d["coeffs"])
    cert.coeffs.push_back(Rational::from_string(py::cast<std::string>(item)));
  cert.bound = Rational::from_string(py::cast<std::string>(d["bound"]));
  return cert;
}

symmetry::FiniteGraph graph_from_py(int vertices, const std::vector<std::pair<int, int>>& edges) {
  return symmetry::make_graph(vertices, edges);
}

}  // namespace

PYBIND11_MODULE(_thetabounds, m) {
  m.doc() = "exact theta-function bounds for packing problems";

  py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);
  static py::exception<Error> base_exc(m, "ThetabError", PyExc_RuntimeError);

  m.def(
      "krawtchouk",
      [](int n, int k) { return poly_strings(orthopoly::krawtchouk(n, k)); },
      py::arg("n"), py::arg("k"),
      "Krawtchouk polynomial coefficients (ascending, exact rational strings)");

  m.def(
      "jacobi", [](int n, int k) { return poly_strings(orthopoly::jacobi(n, k)); }, py::arg("n"),
      py::arg("k"), "Normalized Jacobi polynomial coefficients (ascending)");

  m.def(
      "poly_eval",
      [](const std::vector<std::string>& coeffs, const std::string& t) {
        return poly_from_strings(coeffs).eval(Rational::from_string(t)).str();
      },
      py::arg("coeffs"), py::arg("t"), "Evaluate a polynomial with rational-string coefficients");

  m.def(
      "sturm_nonpositive",
      [](const std::vector<std::string>& coeffs, const std::string& a, const std::string& b) {
        return sturm_nonpositive(poly_from_strings(coeffs), Rational::from_string(a),
                                 Rational::from_string(b));
      },
      py::arg("coeffs"), py::arg("a"), py::arg("b"),
      "True iff the polynomial is nonpositive on [a, b] (exact Sturm analysis)");

  m.def(
      "solve_linear",
      [](const std::vector<std::vector<std::string>>& A, const std::vector<std::string>& b) {
        RatMatrix M;
        for (const auto& row : A) {
          RatVector r;
          for (const auto& s : row) r.push_back(Rational::from_string(s));
          M.push_back(std::move(r));
        }
        RatVector rhs;
        for (const auto& s : b) rhs.push_back(Rational::from_string(s));
        auto x = solve_linear(M, rhs);
        std::vector<std::string> out;
        for (const auto& v : x) out.push_back(v.str());
        return out;
      },
      py::arg("A"), py::arg("b"), "Exact solution of a rational linear system");

  m.def(
      "hamming_distance",
      [](int n, std::uint64_t x, std::uint64_t y) {
        return boolean::hamming_distance(boolean::cube_point(n, x), boolean::cube_point(n, y));
      },
      py::arg("n"), py::arg("x"), py::arg("y"));

  m.def(
      "walsh_transform",
      [](const std::vector<std::string>& values) {
        std::vector<Rational> v;
        for (const auto& s : values) v.push_back(Rational::from_string(s));
        int n = 0;
        while ((size_t{1} << n) < v.size()) ++n;
        auto out = boolean::walsh_transform(boolean::function_table(n, std::move(v)));
        std::vector<std::string> res;
        for (const auto& x : out.values) res.push_back(x.str());
        return res;
      },
      py::arg("values"), "Walsh/Fourier coefficients of a rational table of length 2^n");

  m.def("zonal_sum", &boolean::zonal_sum, py::arg("n"), py::arg("k"), py::arg("t"));

  m.def(
      "delsarte_lp_bound",
      [](int n, int d) { return boolean::delsarte_lp_bound(n, d).str(); }, py::arg("n"),
      py::arg("d"), "Exact Delsarte LP bound on A(n, d), as a rational string");

  m.def("harm_dim", &sphere::harm_dim, py::arg("n"), py::arg("k"));

  m.def(
      "sphere_monomial_average",
      [](const std::vector<int>& exponents) { return sphere::sphere_monomial_average(exponents).str(); },
      py::arg("exponents"));

  m.def(
      "dgs_lp_bound",
      [](int n, const std::string& cos_theta, int degree) {
        return certificate_dict(sphere::dgs_lp_bound(n, Rational::from_string(cos_theta), degree));
      },
      py::arg("n"), py::arg("cos_theta"), py::arg("degree"),
      "LP bound for spherical codes; returns a verified certificate dict");

  m.def(
      "verify_certificate",
      [](const py::dict& cert) {
        auto r = sphere::verify_certificate(certificate_from_dict(cert));
        return py::make_tuple(r.valid, std::string(sphere::verify_reason_name(r.reason)));
      },
      py::arg("certificate"), "Exact certificate check; returns (valid, reason)");

  m.def(
      "theta_prime_reduced",
      [](int vertices, const std::vector<std::pair<int, int>>& edges,
         const std::vector<std::vector<int>>& generators) {
        symmetry::PermGroup g;
        g.degree = vertices;
        g.generators = generators;
        return symmetry::theta_prime_reduced(graph_from_py(vertices, edges), g);
      },
      py::arg("vertices"), py::arg("edges"), py::arg("generators"),
      "Reduced theta-prime bound of a vertex-transitive graph");

  m.def(
      "stable_set_bruteforce",
      [](int vertices, const std::vector<std::pair<int, int>>& edges, int limit) {
        return symmetry::stable_set_bruteforce(graph_from_py(vertices, edges), limit);
      },
      py::arg("vertices"), py::arg("edges"), py::arg("limit") = 64,
      "Exact stability number by branch and bound");

  m.def(
      "scheme_eigenmatrix",
      [](int degree, const std::vector<std::vector<int>>& generators) {
        symmetry::PermGroup g;
        g.degree = degree;
        g.generators = generators;
        auto se = symmetry::scheme_eigenmatrix(symmetry::orbit_pairs(g));
        return py::make_tuple(se.P, se.multiplicities);
      },
      py::arg("degree"), py::arg("generators"),
      "Eigenvalue matrix and multiplicities of the pair-orbit scheme");
}

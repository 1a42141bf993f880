#include "thetab/io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

namespace thetab::io {

using nlohmann::ordered_json;

std::string certificate_to_json(const sphere::Certificate& cert) {
  ordered_json j;
  j["space"] = cert.space;
  j["n"] = cert.n;
  j["cos_theta"] = cert.cos_theta.str();
  j["degree"] = cert.degree;
  ordered_json coeffs = ordered_json::array();
  for (const auto& f : cert.coeffs) coeffs.push_back(f.str());
  j["coeffs"] = std::move(coeffs);
  j["bound"] = cert.bound.str();
  return j.dump(2) + "\n";
}

sphere::Certificate certificate_from_json(const std::string& text) {
  sphere::Certificate cert;
  ordered_json j;
  try {
    j = ordered_json::parse(text);
    cert.space = j.at("space").get<std::string>();
    cert.n = j.at("n").get<int>();
    cert.cos_theta = Rational::from_string(j.at("cos_theta").get<std::string>());
    cert.degree = j.at("degree").get<int>();
    for (const auto& c : j.at("coeffs")) cert.coeffs.push_back(Rational::from_string(c.get<std::string>()));
    cert.bound = Rational::from_string(j.at("bound").get<std::string>());
  } catch (const ordered_json::exception& e) {
    throw DomainError(std::string("malformed certificate JSON: ") + e.what());
  }
  return cert;
}

std::pair<symmetry::FiniteGraph, symmetry::PermGroup> graph_group_from_json(
    const std::string& text) {
  try {
    ordered_json j = ordered_json::parse(text);
    int vertices = j.at("vertices").get<int>();
    std::vector<std::pair<int, int>> edges;
    for (const auto& e : j.at("edges")) {
      if (!e.is_array() || e.size() != 2) throw DomainError("edge is not a pair");
      edges.emplace_back(e[0].get<int>(), e[1].get<int>());
    }
    symmetry::PermGroup group;
    group.degree = vertices;
    for (const auto& g : j.at("generators"))
      group.generators.push_back(g.get<std::vector<int>>());
    return {symmetry::make_graph(vertices, edges), std::move(group)};
  } catch (const ordered_json::exception& e) {
    throw DomainError(std::string("malformed graph JSON: ") + e.what());
  }
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DomainError("cannot open file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw DomainError("cannot write file: " + path);
  out << content;
}

}  // namespace thetab::io

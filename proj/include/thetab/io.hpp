#pragma once

#include <string>
#include <utility>

#include "thetab/sphere.hpp"
#include "thetab/symmetry.hpp"

namespace thetab::io {

// Certificate JSON: {"space":"sphere","n":8,"cos_theta":"1/2","degree":6,
// "coeffs":["p/q",...],"bound":"240"} with rationals as strings and
// coefficients ascending in k.
std::string certificate_to_json(const sphere::Certificate& cert);
sphere::Certificate certificate_from_json(const std::string& text);

// Graph + group input: {"vertices": N, "edges": [[i,j],...],
// "generators": [[image array],...]} with 0-based indices.
std::pair<symmetry::FiniteGraph, symmetry::PermGroup> graph_group_from_json(
    const std::string& text);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

}  // namespace thetab::io

#pragma once

#include <functional>
#include <string>
#include <string_view>

#include "rrr/graph.hpp"
#include "rrr/radical.hpp"

namespace rrr {

// A degree-based bond contribution f(du, dv). Indices of this shape are
// sums of f over the edges of the graph; all four built-in ones evaluate
// to exact RadicalSum values.
struct EdgeFunctional {
    std::string name;
    std::function<RadicalSum(int, int)> eval;
};

// Sum of f.eval(deg(u), deg(v)) over all edges uv.
RadicalSum index_value(const Graph& g, const EdgeFunctional& f);

// Built-in functionals. References stay valid for the program lifetime.
const EdgeFunctional& rrr_functional();
const EdgeFunctional& randic_functional();
const EdgeFunctional& abc_functional();
const EdgeFunctional& azi_functional();

// Lookup by name ("rrr", "randic", "abc", "azi"); throws ParseError on
// anything else.
const EdgeFunctional& edge_functional(std::string_view name);

// Convenience wrappers.
RadicalSum reduced_reciprocal_randic(const Graph& g);
RadicalSum randic_index(const Graph& g);
RadicalSum atom_bond_connectivity(const Graph& g);
RadicalSum augmented_zagreb(const Graph& g);

}  // namespace rrr

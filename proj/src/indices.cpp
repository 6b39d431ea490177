#include "rrr/indices.hpp"

#include <cstdint>

#include "rrr/errors.hpp"

namespace rrr {

RadicalSum index_value(const Graph& g, const EdgeFunctional& f) {
    RadicalSum total;
    for (const auto& [u, v] : g.edges()) total += f.eval(g.degree(u), g.degree(v));
    return total;
}

const EdgeFunctional& rrr_functional() {
    static const EdgeFunctional f{"rrr", [](int du, int dv) {
        return sqrt_int(static_cast<std::uint64_t>(du - 1) * static_cast<std::uint64_t>(dv - 1));
    }};
    return f;
}

const EdgeFunctional& randic_functional() {
    static const EdgeFunctional f{"randic", [](int du, int dv) {
        Rational r(1, static_cast<long>(du) * dv);
        r.canonicalize();
        return sqrt_rational(r);
    }};
    return f;
}

const EdgeFunctional& abc_functional() {
    static const EdgeFunctional f{"abc", [](int du, int dv) {
        Rational r(du + dv - 2, static_cast<long>(du) * dv);
        r.canonicalize();
        return sqrt_rational(r);
    }};
    return f;
}

const EdgeFunctional& azi_functional() {
    static const EdgeFunctional f{"azi", [](int du, int dv) {
        if (du + dv == 2)
            throw UndefinedTermError("azi is undefined on an edge with degree sum 2");
        Rational r(static_cast<long>(du) * dv, du + dv - 2);
        r.canonicalize();
        // (du*dv / (du+dv-2))^3, exact.
        Rational cube = r * r * r;
        return RadicalSum(cube);
    }};
    return f;
}

const EdgeFunctional& edge_functional(std::string_view name) {
    if (name == "rrr") return rrr_functional();
    if (name == "randic") return randic_functional();
    if (name == "abc") return abc_functional();
    if (name == "azi") return azi_functional();
    throw ParseError("unknown index name: " + std::string(name));
}

RadicalSum reduced_reciprocal_randic(const Graph& g) { return index_value(g, rrr_functional()); }
RadicalSum randic_index(const Graph& g) { return index_value(g, randic_functional()); }
RadicalSum atom_bond_connectivity(const Graph& g) { return index_value(g, abc_functional()); }
RadicalSum augmented_zagreb(const Graph& g) { return index_value(g, azi_functional()); }

}  // namespace rrr

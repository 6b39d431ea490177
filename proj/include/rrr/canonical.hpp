#ifndef RRR_CANONICAL_HPP
#define RRR_CANONICAL_HPP

#include <string>
#include <vector>

#include "rrr/graph.hpp"

namespace rrr {

// Label-invariant encoding of an isomorphism class: the graph6 string of the
// graph under its canonical labeling.  Equal certificates iff isomorphic.
struct CanonicalCertificate {
    std::string bytes;

    bool operator==(const CanonicalCertificate&) const = default;
    auto operator<=>(const CanonicalCertificate&) const = default;
};

// Requires g.vertex_count() <= 64 (throws TooLargeError beyond that).
CanonicalCertificate canonical_certificate(const Graph& g);

// Permutation p with p[old_label] = canonical_label.
std::vector<int> canonical_labeling(const Graph& g);

bool are_isomorphic(const Graph& a, const Graph& b);

}  // namespace rrr

#endif

#pragma once

#include <cstdint>
#include <vector>

#include <apnae/progression.hpp>

namespace apnae {

/// k-uniform hypergraph on Z_n whose edges are arithmetic progressions.
/// Edges form an ordered multiset (sampling is with replacement).
struct ApHypergraph {
    std::uint32_t n = 0;
    std::uint32_t k = 3;
    std::vector<Progression> edges;

    std::uint64_t edge_count() const { return edges.size(); }
    double density() const { return n ? double(edges.size()) / n : 0.0; }
};

/// NAE clause: a progression plus one sign bit per literal (bit i set =
/// literal i negated). Literal i is true under assignment s iff
/// s(vertex_i) != sign_i.
struct SignedClause {
    Progression prog;
    std::uint32_t signs = 0;

    bool sign(std::uint32_t i) const { return (signs >> i) & 1u; }
};

/// k-AP-NAE-SAT instance: an ordered multiset of signed clauses over Z_n.
struct Formula {
    std::uint32_t n = 0;
    std::uint32_t k = 3;
    std::vector<SignedClause> clauses;

    std::uint64_t clause_count() const { return clauses.size(); }
    double density() const { return n ? double(clauses.size()) / n : 0.0; }
};

/// Clauses with all-positive signs: an edge is bichromatic under a coloring
/// exactly when the corresponding clause is NAE-satisfied.
Formula to_nae_formula(const ApHypergraph& h);

/// m = round(r*n) with ties (exact .5) rounded up.
std::uint64_t clause_count_for_density(double r, std::uint32_t n);

} // namespace apnae

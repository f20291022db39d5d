#include <apnae/instances.hpp>

#include <cmath>

namespace apnae {

Formula to_nae_formula(const ApHypergraph& h) {
    Formula f;
    f.n = h.n;
    f.k = h.k;
    f.clauses.reserve(h.edges.size());
    for (const Progression& e : h.edges) f.clauses.push_back({e, 0});
    return f;
}

std::uint64_t clause_count_for_density(double r, std::uint32_t n) {
    double v = r * double(n);
    return std::uint64_t(std::floor(v + 0.5));
}

} // namespace apnae

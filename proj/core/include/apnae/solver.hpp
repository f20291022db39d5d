#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include <apnae/coloring.hpp>
#include <apnae/instances.hpp>

namespace apnae {

enum class SolveStatus { Sat, Unsat, Unknown };

std::string to_string(SolveStatus s);

struct SolveResult {
    SolveStatus status = SolveStatus::Unknown;
    std::optional<Coloring> witness;      // present iff status == Sat
    std::optional<std::uint64_t> count;   // exhaustive mode only
    std::uint64_t nodes_explored = 0;     // decision nodes (branch points)
    bool budget_exhausted = false;        // true iff status == Unknown
};

/// True iff every clause has at least one true and one false literal under s
/// (literal i is true iff s(vertex_i) != sign_i). Empty formula: true.
bool nae_evaluate(const Formula& f, const Coloring& s);

/// True iff every edge has both colors among its vertices.
bool bichromatic_evaluate(const ApHypergraph& h, const Coloring& s);

inline constexpr std::uint32_t kExhaustiveVarLimit = 26;

/// Counts NAE-satisfying assignments by full 2^n enumeration (bit-parallel,
/// 64 assignments per word). Throws if n exceeds max_vars.
SolveResult count_nae_exhaustive(const Formula& f, std::uint32_t max_vars = kExhaustiveVarLimit);

/// Counts proper 2-colorings of h the same way.
SolveResult count_2col_exhaustive(const ApHypergraph& h, std::uint32_t max_vars = kExhaustiveVarLimit);

inline constexpr std::uint64_t kDefaultNodeBudget = std::uint64_t(1) << 62;

/// Backtracking decision solver with NAE unit propagation: a clause whose
/// assigned literals are all-equal and which has exactly one open slot forces
/// that literal to differ. Branching: lowest unassigned variable index, value
/// false first. Deterministic: same instance and budget give the same status,
/// witness and nodes_explored. Returns Unknown only when the decision-node
/// budget runs out.
SolveResult decide_nae(const Formula& f, std::uint64_t node_budget = kDefaultNodeBudget);

/// 2-colorability via the all-positive-signs NAE reduction.
SolveResult decide_2col(const ApHypergraph& h, std::uint64_t node_budget = kDefaultNodeBudget);

} // namespace apnae

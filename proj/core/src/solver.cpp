#include <apnae/solver.hpp>

#include <bit>
#include <stdexcept>
#include <string>
#include <vector>

namespace apnae {

std::string to_string(SolveStatus s) {
    switch (s) {
        case SolveStatus::Sat: return "SAT";
        case SolveStatus::Unsat: return "UNSAT";
        default: return "UNKNOWN";
    }
}

namespace {

bool clause_nae_satisfied(const SignedClause& c, std::uint32_t k, std::uint32_t n,
                          const Coloring& s) {
    bool first = s.test(vertex_at(c.prog, 0, n)) != c.sign(0);
    for (std::uint32_t i = 1; i < k; ++i) {
        bool v = s.test(vertex_at(c.prog, i, n)) != c.sign(i);
        if (v != first) return true;
    }
    return false;
}

} // namespace

bool nae_evaluate(const Formula& f, const Coloring& s) {
    if (s.size() != f.n) throw std::invalid_argument("assignment size mismatch");
    for (const SignedClause& c : f.clauses) {
        if (!clause_nae_satisfied(c, f.k, f.n, s)) return false;
    }
    return true;
}

bool bichromatic_evaluate(const ApHypergraph& h, const Coloring& s) {
    return nae_evaluate(to_nae_formula(h), s);
}

// ---------------------------------------------------------------------------
// Exhaustive counting, 64 assignments per machine word. The low lane_bits
// variables vary across the lanes of a word (fixed bit patterns); the
// remaining variables are enumerated by the outer counter.
// ---------------------------------------------------------------------------

SolveResult count_nae_exhaustive(const Formula& f, std::uint32_t max_vars) {
    const std::uint32_t n = f.n;
    if (n > max_vars)
        throw std::invalid_argument("exhaustive counting limited to n <= " +
                                    std::to_string(max_vars) + ", got n = " + std::to_string(n));

    static constexpr std::uint64_t kLane[6] = {
        0xAAAAAAAAAAAAAAAAull, 0xCCCCCCCCCCCCCCCCull, 0xF0F0F0F0F0F0F0F0ull,
        0xFF00FF00FF00FF00ull, 0xFFFF0000FFFF0000ull, 0xFFFFFFFF00000000ull};

    const std::uint32_t lane_bits = n < 6 ? n : 6;
    const std::uint64_t full = n < 6 ? (std::uint64_t(1) << (std::uint64_t(1) << n)) - 1 : ~std::uint64_t(0);
    const std::uint64_t highs = std::uint64_t(1) << (n - lane_bits);
    const std::uint32_t k = f.k;

    struct Slot {
        std::uint32_t var;
        bool sign;
    };
    std::vector<Slot> slots;
    slots.reserve(f.clauses.size() * k);
    for (const SignedClause& c : f.clauses) {
        for (std::uint32_t i = 0; i < k; ++i) slots.push_back({vertex_at(c.prog, i, n), c.sign(i)});
    }

    std::uint64_t count = 0;
    bool have_witness = false;
    std::uint64_t wit_high = 0;
    std::uint32_t wit_lane = 0;

    for (std::uint64_t high = 0; high < highs; ++high) {
        std::uint64_t acc = full;
        const Slot* s = slots.data();
        for (std::size_t c = 0; c < f.clauses.size(); ++c, s += k) {
            auto value = [&](const Slot& sl) {
                std::uint64_t base = sl.var < lane_bits
                                         ? kLane[sl.var]
                                         : ((high >> (sl.var - lane_bits)) & 1 ? ~std::uint64_t(0) : 0);
                return sl.sign ? ~base : base;
            };
            std::uint64_t v0 = value(s[0]);
            std::uint64_t diff = 0;
            for (std::uint32_t i = 1; i < k; ++i) diff |= v0 ^ value(s[i]);
            acc &= diff;  // lanes where literal values are not all equal
            if (!acc) break;
        }
        count += std::uint64_t(std::popcount(acc));
        if (acc && !have_witness) {
            have_witness = true;
            wit_high = high;
            wit_lane = std::uint32_t(std::countr_zero(acc));
        }
    }

    SolveResult res;
    res.count = count;
    res.status = count > 0 ? SolveStatus::Sat : SolveStatus::Unsat;
    if (have_witness) {
        std::vector<bool> bits(n);
        for (std::uint32_t v = 0; v < n; ++v) {
            bits[v] = v < lane_bits ? (wit_lane >> v) & 1 : (wit_high >> (v - lane_bits)) & 1;
        }
        res.witness = Coloring::from_vector(bits);
    }
    return res;
}

SolveResult count_2col_exhaustive(const ApHypergraph& h, std::uint32_t max_vars) {
    return count_nae_exhaustive(to_nae_formula(h), max_vars);
}

// ---------------------------------------------------------------------------
// DPLL with NAE unit propagation.
// ---------------------------------------------------------------------------

namespace {

class NaeSearch {
public:
    NaeSearch(const Formula& f, std::uint64_t budget)
        : n_(f.n), k_(f.k), budget_(budget), assign_(f.n, -1),
          n_true_(f.clauses.size(), 0), n_false_(f.clauses.size(), 0), occ_(f.n) {
        slots_.reserve(f.clauses.size() * k_);
        for (std::size_t c = 0; c < f.clauses.size(); ++c) {
            for (std::uint32_t i = 0; i < k_; ++i) {
                std::uint32_t var = vertex_at(f.clauses[c].prog, i, n_);
                slots_.push_back({var, f.clauses[c].sign(i)});
                occ_[var].push_back(std::uint32_t(c * k_ + i));
            }
        }
    }

    SolveResult run() {
        SolveResult res;
        bool sat = search();
        res.nodes_explored = nodes_;
        if (aborted_) {
            res.status = SolveStatus::Unknown;
            res.budget_exhausted = true;
            return res;
        }
        if (sat) {
            std::vector<bool> bits(n_);
            for (std::uint32_t v = 0; v < n_; ++v) bits[v] = assign_[v] == 1;
            res.status = SolveStatus::Sat;
            res.witness = Coloring::from_vector(bits);
        } else {
            res.status = SolveStatus::Unsat;
        }
        return res;
    }

private:
    struct Slot {
        std::uint32_t var;
        bool sign;
    };

    // Applies var := val and runs NAE unit propagation to the fixed point.
    // Returns false on conflict. All assignments land on the trail.
    bool assign_and_propagate(std::uint32_t var, std::int8_t val) {
        queue_.clear();
        queue_.push_back({var, val});
        std::size_t qi = 0;
        while (qi < queue_.size()) {
            auto [v, value] = queue_[qi++];
            if (assign_[v] != -1) {
                if (assign_[v] != value) return false;
                continue;
            }
            assign_[v] = value;
            trail_.push_back(v);
            for (std::uint32_t slot : occ_[v]) {
                std::uint32_t c = slot / k_;
                bool lit_true = (value != 0) != slots_[slot].sign;
                std::uint8_t& nt = n_true_[c];
                std::uint8_t& nf = n_false_[c];
                lit_true ? ++nt : ++nf;
                std::uint32_t assigned = nt + nf;
                if (nt != 0 && nf != 0) continue;  // clause already NAE-satisfied
                if (assigned == k_) return false;  // all literals equal
                if (assigned == k_ - 1) {
                    // One open slot: its literal must break the tie.
                    const Slot* base = &slots_[c * k_];
                    for (std::uint32_t i = 0; i < k_; ++i) {
                        if (assign_[base[i].var] == -1) {
                            std::int8_t forced = nf == 0 ? std::int8_t(base[i].sign)
                                                         : std::int8_t(!base[i].sign);
                            queue_.push_back({base[i].var, forced});
                            break;
                        }
                    }
                }
            }
        }
        return true;
    }

    void undo_to(std::size_t mark) {
        while (trail_.size() > mark) {
            std::uint32_t v = trail_.back();
            trail_.pop_back();
            std::int8_t value = assign_[v];
            for (std::uint32_t slot : occ_[v]) {
                std::uint32_t c = slot / k_;
                bool lit_true = (value != 0) != slots_[slot].sign;
                lit_true ? --n_true_[c] : --n_false_[c];
            }
            assign_[v] = -1;
        }
    }

    std::uint32_t pick_var() const {
        for (std::uint32_t v = 0; v < n_; ++v)
            if (assign_[v] == -1) return v;
        return n_;
    }

    bool search() {
        std::uint32_t var = pick_var();
        if (var == n_) return true;  // complete, conflict-free assignment
        if (nodes_ >= budget_) {
            aborted_ = true;
            return false;
        }
        ++nodes_;
        for (std::int8_t val : {std::int8_t(0), std::int8_t(1)}) {
            std::size_t mark = trail_.size();
            if (assign_and_propagate(var, val) && search()) return true;
            undo_to(mark);
            if (aborted_) return false;
        }
        return false;
    }

    std::uint32_t n_, k_;
    std::uint64_t budget_;
    std::uint64_t nodes_ = 0;
    bool aborted_ = false;
    std::vector<std::int8_t> assign_;
    std::vector<std::uint8_t> n_true_, n_false_;
    std::vector<std::vector<std::uint32_t>> occ_;
    std::vector<Slot> slots_;
    std::vector<std::uint32_t> trail_;
    std::vector<std::pair<std::uint32_t, std::int8_t>> queue_;
};

} // namespace

SolveResult decide_nae(const Formula& f, std::uint64_t node_budget) {
    if (f.k > 250) throw std::invalid_argument("clause width too large for counter-based solver");
    return NaeSearch(f, node_budget).run();
}

SolveResult decide_2col(const ApHypergraph& h, std::uint64_t node_budget) {
    return decide_nae(to_nae_formula(h), node_budget);
}

} // namespace apnae

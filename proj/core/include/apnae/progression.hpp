#pragma once

#include <cstdint>
#include <vector>

#include <apnae/prime.hpp>

namespace apnae {

/// Arithmetic progression start, start+step, ..., start+(length-1)*step over Z_n.
/// step == 0 is the trivial progression (all vertices equal); it counts as a
/// progression unless a generator was asked to exclude it.
struct Progression {
    std::uint32_t start = 0;
    std::uint32_t step = 0;
    std::uint32_t length = 3;

    bool trivial() const { return step == 0; }
    bool operator==(const Progression&) const = default;
};

/// Vertex at position i, (start + i*step) mod n.
inline std::uint32_t vertex_at(const Progression& p, std::uint32_t i, std::uint32_t n) {
    return static_cast<std::uint32_t>((p.start + std::uint64_t(i) * p.step) % n);
}

/// All length vertices in order. Throws std::invalid_argument if length >= n.
std::vector<std::uint32_t> progression_vertices(const Progression& p, const PrimeModulus& n);

/// The same progression traversed backwards: start' = last vertex, step' = -step.
Progression reversed(const Progression& p, std::uint32_t n);

/// Lazy enumeration of all progressions of a given length over Z_n in
/// lexicographic (start, step) order: n^2 items, or n*(n-1) when trivial
/// progressions are excluded.
class ProgressionRange {
public:
    ProgressionRange(const PrimeModulus& n, std::uint32_t length, bool exclude_trivial);

    class iterator {
    public:
        using value_type = Progression;

        Progression operator*() const { return {start_, step_, length_}; }
        iterator& operator++();
        bool operator!=(const iterator& o) const { return start_ != o.start_ || step_ != o.step_; }

    private:
        friend class ProgressionRange;
        iterator(std::uint32_t n, std::uint32_t length, std::uint32_t start, std::uint32_t step,
                 bool exclude_trivial)
            : n_(n), length_(length), start_(start), step_(step), exclude_trivial_(exclude_trivial) {}

        std::uint32_t n_, length_, start_, step_;
        bool exclude_trivial_;
    };

    iterator begin() const;
    iterator end() const;
    std::uint64_t size() const;

private:
    std::uint32_t n_;
    std::uint32_t length_;
    bool exclude_trivial_;
};

/// Eager version of ProgressionRange.
std::vector<Progression> all_progressions(const PrimeModulus& n, std::uint32_t length,
                                          bool exclude_trivial = false);

} // namespace apnae

#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "sepalg/errors.hpp"

namespace sepalg::spectrum {

/// A point label on the circle spectrum: either the finite cyclic subgroup
/// C_m (m >= 1) or the full circle subgroup, together with an opaque
/// chromatic tag carried through unchanged.
struct PrimeLabel {
    std::optional<std::uint64_t> m;  // nullopt = the full circle subgroup
    std::string tag;

    static PrimeLabel cyclic(std::uint64_t m, std::string tag = "") {
        if (m < 1) throw Error("cyclic subgroup index must be >= 1");
        return PrimeLabel{m, std::move(tag)};
    }
    static PrimeLabel circle(std::string tag = "") { return PrimeLabel{std::nullopt, std::move(tag)}; }

    bool is_circle() const { return !m.has_value(); }

    friend bool operator==(const PrimeLabel& a, const PrimeLabel& b) {
        return a.m == b.m && a.tag == b.tag;
    }
};

/// Image of a point label under the map induced by the degree-n self-map:
/// C_m goes to C_{lcm(m,n)/n}, the circle goes to itself, tags pass through.
inline PrimeLabel phi(std::uint64_t n, const PrimeLabel& p) {
    if (n < 1) throw Error("degree must be >= 1");
    if (p.is_circle()) return p;
    std::uint64_t m = *p.m;
    return PrimeLabel{std::lcm(m, n) / n, p.tag};
}

/// All m >= 1 with lcm(m, n) = n*N, i.e. the cyclic indices mapping to N
/// under the degree-n map, sorted ascending. Every such m divides n*N, so
/// the divisors of n*N are enumerated.
inline std::vector<std::uint64_t> fiber(std::uint64_t n, std::uint64_t N) {
    if (n < 1 || N < 1) throw Error("degree and target index must be >= 1");
    std::uint64_t target = n * N;
    std::vector<std::uint64_t> out;
    for (std::uint64_t m = 1; m * m <= target; ++m) {
        if (target % m != 0) continue;
        std::uint64_t other = target / m;
        if (std::lcm(m, n) == target) out.push_back(m);
        if (other != m && std::lcm(other, n) == target) out.push_back(other);
    }
    std::sort(out.begin(), out.end());
    return out;
}

struct FiberRow {
    std::uint64_t N = 0;
    std::vector<std::uint64_t> members;

    std::size_t cardinality() const { return members.size(); }
};

/// Fiber table for N = 1..N_max. Each row is round-trip checked: every
/// listed m satisfies phi(n, C_m) = C_N.
inline std::vector<FiberRow> fiber_table(std::uint64_t n, std::uint64_t N_max) {
    if (N_max < 1) throw Error("N_max must be >= 1");
    std::vector<FiberRow> rows;
    for (std::uint64_t N = 1; N <= N_max; ++N) {
        FiberRow row{N, fiber(n, N)};
        for (std::uint64_t m : row.members)
            if (phi(n, PrimeLabel::cyclic(m)) != PrimeLabel::cyclic(N))
                throw Error("fiber round-trip failed for n=" + std::to_string(n) +
                            ", N=" + std::to_string(N) + ", m=" + std::to_string(m));
        rows.push_back(std::move(row));
    }
    return rows;
}

/// Compares phi(n2, phi(n1, C_m)) with phi(n1*n2, C_m) for m = 1..m_max and
/// returns the number of disagreements. Whether the two always agree is not
/// asserted anywhere; callers report the count.
inline std::uint64_t composition_mismatches(std::uint64_t n1, std::uint64_t n2,
                                            std::uint64_t m_max) {
    std::uint64_t mismatches = 0;
    for (std::uint64_t m = 1; m <= m_max; ++m) {
        auto two_step = phi(n2, phi(n1, PrimeLabel::cyclic(m)));
        auto one_step = phi(n1 * n2, PrimeLabel::cyclic(m));
        if (!(two_step == one_step)) ++mismatches;
    }
    return mismatches;
}

}  // namespace sepalg::spectrum

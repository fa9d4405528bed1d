#pragma once

#include <algorithm>
#include <map>
#include <utility>
#include <vector>

#include "sepalg/errors.hpp"
#include "sepalg/matrix.hpp"
#include "sepalg/scalar.hpp"

namespace sepalg {

/// Complete description of the solutions of a linear system over a field:
/// none, a single point, or an affine subspace (particular + kernel basis).
template <class Ring>
struct SolutionSet {
    enum class Kind { Empty, Unique, Affine };
    using Elem = typename Ring::Elem;

    Kind kind = Kind::Empty;
    std::vector<Elem> particular;              // Unique and Affine
    std::vector<std::vector<Elem>> kernel;     // Affine: basis of the homogeneous kernel

    bool empty() const { return kind == Kind::Empty; }
    bool unique() const { return kind == Kind::Unique; }
    int kernel_rank() const { return static_cast<int>(kernel.size()); }
};

/// Incremental exact Gaussian elimination over a field, on sparse rows.
/// Rows are reduced against the current echelon basis as they arrive, so
/// large structured systems (most rows two-term) stay cheap.
template <class Ring>
class AffineSolver {
    static_assert(Ring::is_field, "AffineSolver requires a field");

public:
    using Elem = typename Ring::Elem;
    using Term = std::pair<int, Elem>;  // (column, coefficient)

    AffineSolver(Ring ring, int unknowns) : ring_(std::move(ring)), unknowns_(unknowns) {}

    int unknowns() const { return unknowns_; }
    bool consistent() const { return consistent_; }
    int rank() const { return static_cast<int>(pivots_.size()); }

    /// Adds the equation  sum_i coeff_i * x_{col_i} = rhs.
    /// Terms need not be sorted; duplicate columns are combined.
    void add_row(std::vector<Term> terms, Elem rhs) {
        if (!consistent_) return;
        normalize_terms(terms);
        // Reduce against pivots until the leading column is pivot-free.
        while (!terms.empty()) {
            auto it = pivots_.find(terms.front().first);
            if (it == pivots_.end()) break;
            const Row& pivot = rows_[it->second];
            Elem f = terms.front().second;  // pivot rows have leading coefficient 1
            subtract_scaled(terms, rhs, f, pivot);
        }
        if (terms.empty()) {
            if (!rhs.is_zero()) consistent_ = false;
            return;
        }
        // Normalize to leading coefficient 1 and install as a new pivot.
        Elem lead = terms.front().second;
        if (!(lead == ring_.one())) {
            auto inv = *ring_.invert(lead);
            for (auto& t : terms) t.second = t.second * inv;
            rhs = rhs * inv;
        }
        int col = terms.front().first;
        pivots_.emplace(col, static_cast<int>(rows_.size()));
        rows_.push_back(Row{std::move(terms), std::move(rhs)});
    }

    /// Convenience overload for dense coefficient rows.
    void add_dense_row(const std::vector<Elem>& coeffs, Elem rhs) {
        std::vector<Term> terms;
        for (std::size_t j = 0; j < coeffs.size(); ++j)
            if (!coeffs[j].is_zero()) terms.emplace_back(static_cast<int>(j), coeffs[j]);
        add_row(std::move(terms), std::move(rhs));
    }

    SolutionSet<Ring> solve() const {
        SolutionSet<Ring> out;
        if (!consistent_) return out;

        std::vector<int> free_cols;
        for (int c = 0; c < unknowns_; ++c)
            if (!pivots_.count(c)) free_cols.push_back(c);

        out.particular = back_substitute(/*free_col=*/-1);
        if (free_cols.empty()) {
            out.kind = SolutionSet<Ring>::Kind::Unique;
            return out;
        }
        out.kind = SolutionSet<Ring>::Kind::Affine;
        for (int f : free_cols) out.kernel.push_back(back_substitute(f));
        return out;
    }

private:
    struct Row {
        std::vector<Term> terms;  // sorted by column, leading coefficient 1
        Elem rhs;
    };

    void normalize_terms(std::vector<Term>& terms) const {
        std::sort(terms.begin(), terms.end(),
                  [](const Term& a, const Term& b) { return a.first < b.first; });
        std::vector<Term> merged;
        for (auto& t : terms) {
            if (!merged.empty() && merged.back().first == t.first)
                merged.back().second = merged.back().second + t.second;
            else
                merged.push_back(std::move(t));
        }
        merged.erase(std::remove_if(merged.begin(), merged.end(),
                                    [](const Term& t) { return t.second.is_zero(); }),
                     merged.end());
        terms = std::move(merged);
    }

    // terms/rhs -= f * pivot (sorted sparse merge).
    void subtract_scaled(std::vector<Term>& terms, Elem& rhs, const Elem& f,
                         const Row& pivot) const {
        std::vector<Term> out;
        out.reserve(terms.size() + pivot.terms.size());
        std::size_t i = 0, j = 0;
        while (i < terms.size() || j < pivot.terms.size()) {
            if (j == pivot.terms.size() ||
                (i < terms.size() && terms[i].first < pivot.terms[j].first)) {
                out.push_back(std::move(terms[i++]));
            } else if (i == terms.size() || pivot.terms[j].first < terms[i].first) {
                out.emplace_back(pivot.terms[j].first, -(f * pivot.terms[j].second));
                ++j;
            } else {
                Elem v = terms[i].second - f * pivot.terms[j].second;
                if (!v.is_zero()) out.emplace_back(terms[i].first, std::move(v));
                ++i;
                ++j;
            }
        }
        terms = std::move(out);
        rhs = rhs - f * pivot.rhs;
    }

    // Solves with all free columns set to 0, except free_col set to 1 with a
    // zero right-hand side (kernel vector); free_col = -1 gives the
    // particular solution with the true right-hand side.
    std::vector<Elem> back_substitute(int free_col) const {
        std::vector<Elem> x(unknowns_, ring_.zero());
        if (free_col >= 0) x[free_col] = ring_.one();
        for (auto it = pivots_.rbegin(); it != pivots_.rend(); ++it) {
            const Row& row = rows_[it->second];
            Elem v = free_col < 0 ? row.rhs : ring_.zero();
            for (std::size_t k = 1; k < row.terms.size(); ++k)
                v = v - row.terms[k].second * x[row.terms[k].first];
            x[it->first] = std::move(v);
        }
        return x;
    }

    Ring ring_;
    int unknowns_;
    std::map<int, int> pivots_;  // pivot column -> index into rows_
    std::vector<Row> rows_;
    bool consistent_ = true;
};

/// All exact solutions of system * x = rhs over a field scalar spec.
/// Refuses Z (IntegerSpecUnsupported).
template <class Ring>
SolutionSet<Ring> solve_affine(const Matrix<Ring>& system, const Matrix<Ring>& rhs) {
    if constexpr (!Ring::is_field) {
        throw IntegerSpecUnsupported("solve_affine is defined over field scalars only");
    } else {
        if (!(system.ring() == rhs.ring()))
            throw ScalarSpecMismatch("system and right-hand side over different scalar specs");
        if (rhs.cols() != 1 || rhs.rows() != system.rows())
            throw DimensionMismatch("right-hand side must be a column matching the system");
        AffineSolver<Ring> solver(system.ring(), system.cols());
        for (int i = 0; i < system.rows(); ++i)
            solver.add_dense_row(system.row_vector(i), rhs.at(i, 0));
        return solver.solve();
    }
}

/// Basis of the kernel of a square-or-rectangular matrix over a field.
template <class Ring>
std::vector<std::vector<typename Ring::Elem>> nullspace(const Matrix<Ring>& m) {
    Matrix<Ring> zero(m.ring(), m.rows(), 1);
    auto sol = solve_affine(m, zero);
    return sol.kernel;
}

}  // namespace sepalg

#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "sepalg/algebra.hpp"
#include "sepalg/errors.hpp"
#include "sepalg/matrix.hpp"
#include "sepalg/solve.hpp"

namespace sepalg {

enum class Verdict { StronglySeparable, Degenerate };

/// Why the trace form fails to be invertible over the base ring. Over a
/// field only SingularTraceForm can occur; over Z a nonzero non-unit
/// determinant is a distinct (and mathematically meaningful) failure.
enum class DegeneracyKind { None, SingularTraceForm, NonUnitDeterminant };

struct AxiomOutcome {
    bool passed = false;
    std::string witness;  // empty when passed; first failing index otherwise
};

using AxiomResults = std::vector<std::pair<std::string, AxiomOutcome>>;

inline bool all_passed(const AxiomResults& results) {
    for (const auto& [name, r] : results)
        if (!r.passed) return false;
    return true;
}

inline const AxiomOutcome* find_axiom(const AxiomResults& results, const std::string& name) {
    for (const auto& [n, r] : results)
        if (n == name) return &r;
    return nullptr;
}

/// Comultiplication and counit of the special symmetric Frobenius structure.
/// The comultiplication is stored as a d^2 x d matrix whose column a holds
/// the tensor-square coefficients of Delta(e_a); the counit is the trace map.
template <class Ring>
struct FrobeniusStructure {
    Matrix<Ring> comultiplication;              // d^2 x d
    std::vector<typename Ring::Elem> counit;    // length d
};

template <class Ring>
struct SeparabilityReport {
    std::string algebra_name;
    ScalarSpec spec;
    int dim = 0;
    bool commutative = false;
    BilinearForm<Ring> trace_form;
    typename Ring::Elem determinant;
    Verdict verdict = Verdict::Degenerate;
    DegeneracyKind degeneracy = DegeneracyKind::None;
    std::optional<std::vector<typename Ring::Elem>> kernel_witness;
    std::optional<TensorSquare<Ring>> kappa;
    std::optional<FrobeniusStructure<Ring>> frobenius;
    AxiomResults axiom_results;

    bool strongly_separable() const { return verdict == Verdict::StronglySeparable; }
};

/// kappa = sum_ij (T^-1)[i][j] e_i (x) e_j, the unique symmetric separability
/// idempotent of an algebra with invertible trace form T.
template <class Ring>
TensorSquare<Ring> compute_kappa(const FinAlgebra<Ring>& A, const BilinearForm<Ring>& T) {
    if (T.rows() != A.dim() || T.cols() != A.dim())
        throw DimensionMismatch("trace form shape does not match the algebra");
    auto inv = try_invert(T);
    if (!inv.ok())
        throw NotInvertible(A.ring().str(inv.det),
                            "trace form of " + A.name() + " is not invertible (det = " +
                                A.ring().str(inv.det) + ")");
    return TensorSquare<Ring>{std::move(*inv.inverse)};
}

/// Exact check of the four separability-idempotent axioms for a candidate
/// kappa:
///   kappa1:  mu . kappa = u
///   kappa2:  (1 (x) mu)(kappa (x) 1) = (mu (x) 1)(1 (x) kappa)
///   kappa3:  kappa = tau . kappa (coefficient matrix symmetric)
///   kappa4:  mu . tau . kappa = u
/// Failures carry a first witness index.
template <class Ring>
AxiomResults verify_kappa_axioms(const FinAlgebra<Ring>& A, const TensorSquare<Ring>& kappa) {
    const int d = A.dim();
    if (kappa.coeffs.rows() != d || kappa.coeffs.cols() != d)
        throw DimensionMismatch("kappa coefficient matrix does not match the algebra");
    const Ring& ring = A.ring();
    const auto& K = kappa.coeffs;
    AxiomResults out;

    auto check_mu_kappa = [&](bool swapped) {
        AxiomOutcome r{true, ""};
        for (int k = 0; k < d && r.passed; ++k) {
            auto v = ring.zero();
            for (int i = 0; i < d; ++i)
                for (int j = 0; j < d; ++j) {
                    const auto& cijk = swapped ? A.c(j, i, k) : A.c(i, j, k);
                    if (!cijk.is_zero()) v = v + K.at(i, j) * cijk;
                }
            if (v != A.unit()[k]) {
                r.passed = false;
                r.witness = "component " + std::to_string(k) + ": got " + ring.str(v) +
                            ", unit has " + ring.str(A.unit()[k]);
            }
        }
        return r;
    };

    out.emplace_back("kappa1", check_mu_kappa(false));

    {
        AxiomOutcome r{true, ""};
        for (int a = 0; a < d && r.passed; ++a)
            for (int p = 0; p < d && r.passed; ++p)
                for (int q = 0; q < d && r.passed; ++q) {
                    auto lhs = ring.zero();
                    for (int j = 0; j < d; ++j) {
                        const auto& cjaq = A.c(j, a, q);
                        if (!cjaq.is_zero()) lhs = lhs + K.at(p, j) * cjaq;
                    }
                    auto rhs = ring.zero();
                    for (int i = 0; i < d; ++i) {
                        const auto& caip = A.c(a, i, p);
                        if (!caip.is_zero()) rhs = rhs + caip * K.at(i, q);
                    }
                    if (lhs != rhs) {
                        r.passed = false;
                        r.witness = "input e" + std::to_string(a) + ", component (" +
                                    std::to_string(p) + "," + std::to_string(q) + "): " +
                                    ring.str(lhs) + " vs " + ring.str(rhs);
                    }
                }
        out.emplace_back("kappa2", r);
    }

    {
        AxiomOutcome r{true, ""};
        for (int i = 0; i < d && r.passed; ++i)
            for (int j = i + 1; j < d; ++j)
                if (K.at(i, j) != K.at(j, i)) {
                    r.passed = false;
                    r.witness = "entry (" + std::to_string(i) + "," + std::to_string(j) + ")";
                    break;
                }
        out.emplace_back("kappa3", r);
    }

    out.emplace_back("kappa4", check_mu_kappa(true));
    return out;
}

/// The bimodule section derived from kappa: sigma(e_a) = (1 (x) mu)(kappa (x) e_a),
/// returned as the d^2 x d matrix with column a holding the tensor-square
/// coefficients of sigma(e_a). Satisfies sigma . u = kappa by unitality.
template <class Ring>
Matrix<Ring> sigma_from_kappa(const FinAlgebra<Ring>& A, const TensorSquare<Ring>& kappa) {
    const int d = A.dim();
    const Ring& ring = A.ring();
    const auto& K = kappa.coeffs;
    Matrix<Ring> S(ring, d * d, d);
    for (int a = 0; a < d; ++a)
        for (int p = 0; p < d; ++p)
            for (int q = 0; q < d; ++q) {
                auto v = ring.zero();
                for (int j = 0; j < d; ++j) {
                    const auto& cjaq = A.c(j, a, q);
                    if (!cjaq.is_zero()) v = v + K.at(p, j) * cjaq;
                }
                S.at(p * d + q, a) = std::move(v);
            }
    return S;
}

/// sigma1 (mu . sigma = id) and sigma2 (sigma is an (A,A)-bimodule map),
/// both as exact matrix identities.
template <class Ring>
AxiomResults verify_sigma_axioms(const FinAlgebra<Ring>& A, const Matrix<Ring>& sigma) {
    const int d = A.dim();
    const Ring& ring = A.ring();
    auto M = A.multiplication_matrix();
    auto I = Matrix<Ring>::identity(ring, d);
    AxiomResults out;

    auto diff_witness = [&](const Matrix<Ring>& x, const Matrix<Ring>& y) -> AxiomOutcome {
        for (int i = 0; i < x.rows(); ++i)
            for (int j = 0; j < x.cols(); ++j)
                if (x.at(i, j) != y.at(i, j))
                    return {false, "entry (" + std::to_string(i) + "," + std::to_string(j) +
                                       "): " + ring.str(x.at(i, j)) + " vs " +
                                       ring.str(y.at(i, j))};
        return {true, ""};
    };

    out.emplace_back("sigma1", diff_witness(mat_mul(M, sigma), I));

    auto left = mat_mul(kron(I, M), kron(sigma, I));   // (1 (x) mu)(sigma (x) 1)
    auto mid = mat_mul(sigma, M);                      // sigma . mu
    auto right = mat_mul(kron(M, I), kron(I, sigma));  // (mu (x) 1)(1 (x) sigma)
    auto r1 = diff_witness(left, mid);
    auto r2 = diff_witness(mid, right);
    AxiomOutcome both{r1.passed && r2.passed, r1.passed ? r2.witness : r1.witness};
    out.emplace_back("sigma2", both);
    return out;
}

/// The special symmetric Frobenius structure induced by kappa:
/// Delta(e_a) = (mu (x) 1)(e_a (x) kappa), counit = trace map.
template <class Ring>
FrobeniusStructure<Ring> frobenius_structure(const FinAlgebra<Ring>& A,
                                             const TensorSquare<Ring>& kappa) {
    const int d = A.dim();
    const Ring& ring = A.ring();
    const auto& K = kappa.coeffs;
    Matrix<Ring> D(ring, d * d, d);
    for (int a = 0; a < d; ++a)
        for (int p = 0; p < d; ++p)
            for (int q = 0; q < d; ++q) {
                auto v = ring.zero();
                for (int i = 0; i < d; ++i) {
                    const auto& caip = A.c(a, i, p);
                    if (!caip.is_zero()) v = v + caip * K.at(i, q);
                }
                D.at(p * d + q, a) = std::move(v);
            }
    return FrobeniusStructure<Ring>{std::move(D), A.trace_map()};
}

/// The five Frobenius-structure laws as exact matrix identities:
/// coassociativity, the two counit laws (reported jointly), the Frobenius
/// law (both equalities), specialness (mu . Delta = id) and symmetry of the
/// form counit . mu.
template <class Ring>
AxiomResults verify_frobenius(const FinAlgebra<Ring>& A, const FrobeniusStructure<Ring>& F) {
    const int d = A.dim();
    const Ring& ring = A.ring();
    const auto& D = F.comultiplication;
    auto M = A.multiplication_matrix();
    auto I = Matrix<Ring>::identity(ring, d);
    auto cu = Matrix<Ring>::row(ring, F.counit);
    AxiomResults out;

    auto diff_witness = [&](const Matrix<Ring>& x, const Matrix<Ring>& y) -> AxiomOutcome {
        for (int i = 0; i < x.rows(); ++i)
            for (int j = 0; j < x.cols(); ++j)
                if (x.at(i, j) != y.at(i, j))
                    return {false, "entry (" + std::to_string(i) + "," + std::to_string(j) +
                                       "): " + ring.str(x.at(i, j)) + " vs " +
                                       ring.str(y.at(i, j))};
        return {true, ""};
    };
    auto merge = [](const AxiomOutcome& a, const AxiomOutcome& b) -> AxiomOutcome {
        return {a.passed && b.passed, a.passed ? b.witness : a.witness};
    };

    out.emplace_back("coassoc", diff_witness(mat_mul(kron(D, I), D), mat_mul(kron(I, D), D)));
    out.emplace_back("counital", merge(diff_witness(mat_mul(kron(cu, I), D), I),
                                       diff_witness(mat_mul(kron(I, cu), D), I)));
    {
        auto left = mat_mul(kron(I, M), kron(D, I));
        auto mid = mat_mul(D, M);
        auto right = mat_mul(kron(M, I), kron(I, D));
        out.emplace_back("frobenius_law", merge(diff_witness(left, mid), diff_witness(mid, right)));
    }
    out.emplace_back("special", diff_witness(mat_mul(M, D), I));
    {
        AxiomOutcome r{true, ""};
        auto form = mat_mul(cu, M);  // 1 x d^2 row of the form counit . mu
        for (int i = 0; i < d && r.passed; ++i)
            for (int j = i + 1; j < d; ++j)
                if (form.at(0, i * d + j) != form.at(0, j * d + i)) {
                    r.passed = false;
                    r.witness = "pair (" + std::to_string(i) + "," + std::to_string(j) + ")";
                    break;
                }
        out.emplace_back("symmetric_form", r);
    }
    return out;
}

/// Trace-form decision procedure: the verdict is StronglySeparable exactly
/// when the trace form is invertible over the base ring. On success the
/// report carries kappa, the Frobenius structure and all axiom checks; on
/// failure it carries the determinant diagnostic (plus a kernel vector over
/// fields, or the unit/non-unit distinction over Z).
template <class Ring>
SeparabilityReport<Ring> decide_strong_separability(const FinAlgebra<Ring>& A) {
    auto T = A.trace_form();
    auto inv = try_invert(T);
    SeparabilityReport<Ring> rep{A.name(),  A.ring().spec(), A.dim(), A.is_commutative(),
                                 T,         inv.det,         Verdict::Degenerate,
                                 DegeneracyKind::None,       std::nullopt,
                                 std::nullopt, std::nullopt, {}};
    if (!inv.ok()) {
        if (inv.det.is_zero()) {
            rep.degeneracy = DegeneracyKind::SingularTraceForm;
            if constexpr (Ring::is_field) {
                auto kernel = nullspace(T);
                if (!kernel.empty()) rep.kernel_witness = kernel.front();
            }
        } else {
            rep.degeneracy = DegeneracyKind::NonUnitDeterminant;
        }
        return rep;
    }
    rep.verdict = Verdict::StronglySeparable;
    rep.kappa = TensorSquare<Ring>{std::move(*inv.inverse)};
    rep.frobenius = frobenius_structure(A, *rep.kappa);
    rep.axiom_results = verify_kappa_axioms(A, *rep.kappa);
    auto sigma = sigma_from_kappa(A, *rep.kappa);
    for (auto& r : verify_sigma_axioms(A, sigma)) rep.axiom_results.push_back(std::move(r));
    for (auto& r : verify_frobenius(A, *rep.frobenius)) rep.axiom_results.push_back(std::move(r));
    return rep;
}

/// Independent separability oracle: poses sigma1 and sigma2 as one linear
/// system in the d^3 unknown coefficients of a section sigma and reports
/// whether any exact solution exists. Never consults the trace form.
template <class Ring>
bool oracle_sigma_exists(const FinAlgebra<Ring>& A) {
    if constexpr (!Ring::is_field) {
        throw IntegerSpecUnsupported("sigma-existence oracle is defined over field scalars only");
    } else {
        const int d = A.dim();
        const Ring& ring = A.ring();
        using Term = typename AffineSolver<Ring>::Term;
        auto idx = [d](int p, int q, int a) { return (p * d + q) * d + a; };
        AffineSolver<Ring> solver(ring, d * d * d);

        // sigma1: mu(sigma(e_a)) = e_a, componentwise.
        for (int a = 0; a < d; ++a)
            for (int k = 0; k < d; ++k) {
                std::vector<Term> row;
                for (int p = 0; p < d; ++p)
                    for (int q = 0; q < d; ++q) {
                        const auto& cpqk = A.c(p, q, k);
                        if (!cpqk.is_zero()) row.emplace_back(idx(p, q, a), cpqk);
                    }
                solver.add_row(std::move(row), a == k ? ring.one() : ring.zero());
                if (!solver.consistent()) return false;
            }

        // sigma2, first equality: (1 (x) mu)(sigma (x) 1) = sigma . mu
        // on e_a (x) e_b, component e_x (x) e_y.
        for (int a = 0; a < d; ++a)
            for (int b = 0; b < d; ++b)
                for (int x = 0; x < d; ++x)
                    for (int y = 0; y < d; ++y) {
                        std::vector<Term> row;
                        for (int q = 0; q < d; ++q) {
                            const auto& cqby = A.c(q, b, y);
                            if (!cqby.is_zero()) row.emplace_back(idx(x, q, a), cqby);
                        }
                        for (int k = 0; k < d; ++k) {
                            const auto& cabk = A.c(a, b, k);
                            if (!cabk.is_zero()) row.emplace_back(idx(x, y, k), -cabk);
                        }
                        solver.add_row(std::move(row), ring.zero());
                        if (!solver.consistent()) return false;
                    }

        // sigma2, second equality: sigma . mu = (mu (x) 1)(1 (x) sigma).
        for (int a = 0; a < d; ++a)
            for (int b = 0; b < d; ++b)
                for (int x = 0; x < d; ++x)
                    for (int y = 0; y < d; ++y) {
                        std::vector<Term> row;
                        for (int k = 0; k < d; ++k) {
                            const auto& cabk = A.c(a, b, k);
                            if (!cabk.is_zero()) row.emplace_back(idx(x, y, k), cabk);
                        }
                        for (int p = 0; p < d; ++p) {
                            const auto& capx = A.c(a, p, x);
                            if (!capx.is_zero()) row.emplace_back(idx(p, y, b), -capx);
                        }
                        solver.add_row(std::move(row), ring.zero());
                        if (!solver.consistent()) return false;
                    }

        return solver.consistent();
    }
}

enum class KappaAxiom { K1, K2, K3, K4 };

/// Solution set of the chosen kappa-axiom subsystem, in the d^2 unknown
/// coefficients of kappa (flattened row-major). Field scalars only.
template <class Ring>
SolutionSet<Ring> solve_kappa_system(const FinAlgebra<Ring>& A,
                                     const std::vector<KappaAxiom>& axioms) {
    if constexpr (!Ring::is_field) {
        throw IntegerSpecUnsupported("kappa solution sets are defined over field scalars only");
    } else {
        const int d = A.dim();
        const Ring& ring = A.ring();
        using Term = typename AffineSolver<Ring>::Term;
        auto idx = [d](int i, int j) { return i * d + j; };
        AffineSolver<Ring> solver(ring, d * d);

        auto has = [&](KappaAxiom a) {
            for (auto x : axioms)
                if (x == a) return true;
            return false;
        };

        auto add_mu_rows = [&](bool swapped) {
            for (int k = 0; k < d; ++k) {
                std::vector<Term> row;
                for (int i = 0; i < d; ++i)
                    for (int j = 0; j < d; ++j) {
                        const auto& cc = swapped ? A.c(j, i, k) : A.c(i, j, k);
                        if (!cc.is_zero()) row.emplace_back(idx(i, j), cc);
                    }
                solver.add_row(std::move(row), A.unit()[k]);
            }
        };

        if (has(KappaAxiom::K1)) add_mu_rows(false);
        if (has(KappaAxiom::K2)) {
            for (int a = 0; a < d; ++a)
                for (int p = 0; p < d; ++p)
                    for (int q = 0; q < d; ++q) {
                        std::vector<Term> row;
                        for (int j = 0; j < d; ++j) {
                            const auto& cjaq = A.c(j, a, q);
                            if (!cjaq.is_zero()) row.emplace_back(idx(p, j), cjaq);
                        }
                        for (int i = 0; i < d; ++i) {
                            const auto& caip = A.c(a, i, p);
                            if (!caip.is_zero()) row.emplace_back(idx(i, q), -caip);
                        }
                        solver.add_row(std::move(row), ring.zero());
                    }
        }
        if (has(KappaAxiom::K3)) {
            for (int i = 0; i < d; ++i)
                for (int j = i + 1; j < d; ++j)
                    solver.add_row({{idx(i, j), ring.one()}, {idx(j, i), -ring.one()}},
                                   ring.zero());
        }
        if (has(KappaAxiom::K4)) add_mu_rows(true);

        return solver.solve();
    }
}

/// Uniqueness oracle: the full solution set of kappa1 + kappa2 + kappa3.
/// For an algebra with nondegenerate trace form this is a single point equal
/// to compute_kappa's output.
template <class Ring>
SolutionSet<Ring> oracle_symmetric_kappa_unique(const FinAlgebra<Ring>& A) {
    return solve_kappa_system(A, {KappaAxiom::K1, KappaAxiom::K2, KappaAxiom::K3});
}

/// Reshapes a flat d^2 solution vector into a tensor-square element.
template <class Ring>
TensorSquare<Ring> tensor_square_from_flat(const Ring& ring, int d,
                                           const std::vector<typename Ring::Elem>& flat) {
    Matrix<Ring> K(ring, d, d);
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) K.at(i, j) = flat[i * d + j];
    return TensorSquare<Ring>{std::move(K)};
}

}  // namespace sepalg

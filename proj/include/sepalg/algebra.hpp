#pragma once

#include <string>
#include <utility>
#include <vector>

#include "sepalg/errors.hpp"
#include "sepalg/matrix.hpp"
#include "sepalg/scalar.hpp"

namespace sepalg {

/// Element of A (x) A for a d-dimensional algebra, stored as the d x d
/// coefficient matrix in the basis e_i (x) e_j. Carrier for kappa and
/// Delta(unit).
template <class Ring>
struct TensorSquare {
    Matrix<Ring> coeffs;

    bool is_symmetric() const { return coeffs.is_symmetric(); }

    /// Column vector of length d*d in the row-major tensor basis
    /// (e_i (x) e_j at flat index i*d + j).
    Matrix<Ring> as_column() const {
        int d = coeffs.rows();
        Matrix<Ring> v(coeffs.ring(), d * d, 1);
        for (int i = 0; i < d; ++i)
            for (int j = 0; j < d; ++j) v.at(i * d + j, 0) = coeffs.at(i, j);
        return v;
    }

    friend bool operator==(const TensorSquare& a, const TensorSquare& b) {
        return a.coeffs == b.coeffs;
    }
};

/// Gram matrix of a bilinear form on A: entries[i][j] = form(e_i, e_j).
template <class Ring>
using BilinearForm = Matrix<Ring>;

/// Finite-dimensional unital associative algebra over an exact base ring,
/// presented by structure constants c[i][j][k] with
/// e_i * e_j = sum_k c[i][j][k] e_k. Associativity and unitality are
/// verified exhaustively at construction. Immutable.
template <class Ring>
class FinAlgebra {
public:
    using Elem = typename Ring::Elem;

    FinAlgebra(std::string name, Ring ring, int dim, std::vector<std::string> basis_labels,
               std::vector<Elem> structure, std::vector<Elem> unit)
        : name_(std::move(name)),
          ring_(std::move(ring)),
          dim_(dim),
          labels_(std::move(basis_labels)),
          c_(std::move(structure)),
          unit_(std::move(unit)) {
        if (dim_ < 1) throw SchemaError("algebra dimension must be >= 1");
        if (static_cast<int>(labels_.size()) != dim_)
            throw SchemaError("expected " + std::to_string(dim_) + " basis labels");
        if (c_.size() != static_cast<std::size_t>(dim_) * dim_ * dim_)
            throw SchemaError("expected d^3 structure constants");
        if (static_cast<int>(unit_.size()) != dim_)
            throw SchemaError("unit vector has wrong length");
        check_unital();
        check_associative();
    }

    const std::string& name() const { return name_; }
    const Ring& ring() const { return ring_; }
    int dim() const { return dim_; }
    const std::vector<std::string>& basis_labels() const { return labels_; }
    const std::vector<Elem>& unit() const { return unit_; }

    /// Structure constant c[i][j][k]: coefficient of e_k in e_i * e_j.
    const Elem& c(int i, int j, int k) const {
        return c_[(static_cast<std::size_t>(i) * dim_ + j) * dim_ + k];
    }

    std::vector<Elem> basis_vector(int i) const {
        std::vector<Elem> v(dim_, ring_.zero());
        v[i] = ring_.one();
        return v;
    }

    /// Product of two coefficient vectors: (a*b)_k = sum_{ij} a_i b_j c[i][j][k].
    std::vector<Elem> multiply(const std::vector<Elem>& a, const std::vector<Elem>& b) const {
        require_length(a);
        require_length(b);
        std::vector<Elem> out(dim_, ring_.zero());
        for (int i = 0; i < dim_; ++i) {
            if (a[i].is_zero()) continue;
            for (int j = 0; j < dim_; ++j) {
                if (b[j].is_zero()) continue;
                Elem f = a[i] * b[j];
                for (int k = 0; k < dim_; ++k) {
                    const Elem& cijk = c(i, j, k);
                    if (!cijk.is_zero()) out[k] = out[k] + f * cijk;
                }
            }
        }
        return out;
    }

    /// Matrix of left multiplication by a: (L_a)[k][j] = sum_i a_i c[i][j][k],
    /// so L_a applied to the coefficient vector of b gives a*b.
    Matrix<Ring> left_mult_matrix(const std::vector<Elem>& a) const {
        require_length(a);
        Matrix<Ring> L(ring_, dim_, dim_);
        for (int i = 0; i < dim_; ++i) {
            if (a[i].is_zero()) continue;
            for (int j = 0; j < dim_; ++j)
                for (int k = 0; k < dim_; ++k) {
                    const Elem& cijk = c(i, j, k);
                    if (!cijk.is_zero()) L.at(k, j) = L.at(k, j) + a[i] * cijk;
                }
        }
        return L;
    }

    /// The linear functional a |-> trace of left multiplication by a, as the
    /// row vector of its values on the basis: tr(e_i) = sum_j c[i][j][j].
    std::vector<Elem> trace_map() const {
        std::vector<Elem> tr(dim_, ring_.zero());
        for (int i = 0; i < dim_; ++i)
            for (int j = 0; j < dim_; ++j) tr[i] = tr[i] + c(i, j, j);
        return tr;
    }

    /// Gram matrix of the trace form: T[i][j] = tr(e_i * e_j).
    BilinearForm<Ring> trace_form() const {
        auto tr = trace_map();
        Matrix<Ring> T(ring_, dim_, dim_);
        for (int i = 0; i < dim_; ++i)
            for (int j = 0; j < dim_; ++j) {
                Elem v = ring_.zero();
                for (int k = 0; k < dim_; ++k) {
                    const Elem& cijk = c(i, j, k);
                    if (!cijk.is_zero()) v = v + cijk * tr[k];
                }
                T.at(i, j) = std::move(v);
            }
        return T;
    }

    /// Multiplication as a d x d^2 matrix on the row-major tensor basis.
    Matrix<Ring> multiplication_matrix() const {
        Matrix<Ring> M(ring_, dim_, dim_ * dim_);
        for (int i = 0; i < dim_; ++i)
            for (int j = 0; j < dim_; ++j)
                for (int k = 0; k < dim_; ++k) M.at(k, i * dim_ + j) = c(i, j, k);
        return M;
    }

    bool is_commutative() const {
        for (int i = 0; i < dim_; ++i)
            for (int j = i + 1; j < dim_; ++j)
                for (int k = 0; k < dim_; ++k)
                    if (c(i, j, k) != c(j, i, k)) return false;
        return true;
    }

private:
    void require_length(const std::vector<Elem>& v) const {
        if (static_cast<int>(v.size()) != dim_)
            throw DimensionMismatch("coefficient vector of length " + std::to_string(v.size()) +
                                    " for algebra of dimension " + std::to_string(dim_));
    }

    void check_unital() {
        for (int j = 0; j < dim_; ++j) {
            auto ej = basis_vector(j);
            if (multiply(unit_, ej) != ej || multiply(ej, unit_) != ej)
                throw NotUnital(j, "unit fails on basis element " + std::to_string(j) +
                                       " of " + name_);
        }
    }

    void check_associative() {
        for (int i = 0; i < dim_; ++i)
            for (int j = 0; j < dim_; ++j)
                for (int k = 0; k < dim_; ++k)
                    for (int l = 0; l < dim_; ++l) {
                        Elem lhs = ring_.zero(), rhs = ring_.zero();
                        for (int m = 0; m < dim_; ++m) {
                            lhs = lhs + c(i, j, m) * c(m, k, l);
                            rhs = rhs + c(j, k, m) * c(i, m, l);
                        }
                        if (lhs != rhs)
                            throw NotAssociative(i, j, k,
                                                 "(e" + std::to_string(i) + " e" +
                                                     std::to_string(j) + ") e" +
                                                     std::to_string(k) +
                                                     " != e.. (e.. e..) in " + name_);
                    }
    }

    std::string name_;
    Ring ring_;
    int dim_;
    std::vector<std::string> labels_;
    std::vector<Elem> c_;      // flat, index ((i*d)+j)*d + k
    std::vector<Elem> unit_;
};

/// Cayley table of the cyclic group of order n: table[i][j] = (i+j) mod n.
inline std::vector<std::vector<int>> cyclic_cayley_table(int n) {
    std::vector<std::vector<int>> t(n, std::vector<int>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) t[i][j] = (i + j) % n;
    return t;
}

/// Group algebra R[G] from a Cayley table (entries are element indices).
/// The table is verified to be a group: closure/shape, two-sided identity,
/// inverses, associativity.
template <class Ring>
FinAlgebra<Ring> make_group_algebra(Ring ring, const std::string& name,
                                    const std::vector<std::vector<int>>& cayley) {
    int n = static_cast<int>(cayley.size());
    if (n < 1) throw NotAGroup("empty Cayley table");
    for (const auto& row : cayley) {
        if (static_cast<int>(row.size()) != n) throw NotAGroup("Cayley table is not square");
        for (int v : row)
            if (v < 0 || v >= n) throw NotAGroup("Cayley entry out of range");
    }
    int e = -1;
    for (int i = 0; i < n && e < 0; ++i) {
        bool ok = true;
        for (int j = 0; j < n; ++j)
            if (cayley[i][j] != j || cayley[j][i] != j) {
                ok = false;
                break;
            }
        if (ok) e = i;
    }
    if (e < 0) throw NotAGroup("no two-sided identity element");
    for (int i = 0; i < n; ++i) {
        bool has_inverse = false;
        for (int j = 0; j < n; ++j)
            if (cayley[i][j] == e && cayley[j][i] == e) {
                has_inverse = true;
                break;
            }
        if (!has_inverse) throw NotAGroup("element " + std::to_string(i) + " has no inverse");
    }
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k)
                if (cayley[cayley[i][j]][k] != cayley[i][cayley[j][k]])
                    throw NotAGroup("Cayley table not associative at (" + std::to_string(i) +
                                    "," + std::to_string(j) + "," + std::to_string(k) + ")");

    using Elem = typename Ring::Elem;
    std::vector<Elem> c(static_cast<std::size_t>(n) * n * n, ring.zero());
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            c[(static_cast<std::size_t>(i) * n + j) * n + cayley[i][j]] = ring.one();
    std::vector<Elem> unit(n, ring.zero());
    unit[e] = ring.one();
    std::vector<std::string> labels;
    for (int i = 0; i < n; ++i) labels.push_back("g" + std::to_string(i));
    return FinAlgebra<Ring>(name, ring, n, std::move(labels), std::move(c), std::move(unit));
}

/// Full matrix algebra M_n(R): basis e_ij (row-major), e_ij e_kl = [j=k] e_il.
template <class Ring>
FinAlgebra<Ring> make_matrix_algebra(Ring ring, int n) {
    if (n < 1) throw SchemaError("matrix algebra needs n >= 1");
    using Elem = typename Ring::Elem;
    int d = n * n;
    auto unit_index = [n](int i, int j) { return i * n + j; };
    std::vector<Elem> c(static_cast<std::size_t>(d) * d * d, ring.zero());
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k)
                for (int l = 0; l < n; ++l)
                    if (j == k) {
                        int a = unit_index(i, j), b = unit_index(k, l), out = unit_index(i, l);
                        c[(static_cast<std::size_t>(a) * d + b) * d + out] = ring.one();
                    }
    std::vector<Elem> unit(d, ring.zero());
    for (int i = 0; i < n; ++i) unit[unit_index(i, i)] = ring.one();
    std::vector<std::string> labels;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            labels.push_back("e" + std::to_string(i + 1) + std::to_string(j + 1));
    return FinAlgebra<Ring>("M" + std::to_string(n), ring, d, std::move(labels), std::move(c),
                            std::move(unit));
}

/// Direct product A x B with componentwise operations: block-diagonal
/// structure constants, unit (u_A, u_B).
template <class Ring>
FinAlgebra<Ring> product_algebra(const FinAlgebra<Ring>& A, const FinAlgebra<Ring>& B) {
    if (!(A.ring() == B.ring()))
        throw ScalarSpecMismatch("product of algebras over different scalar specs");
    using Elem = typename Ring::Elem;
    const Ring& ring = A.ring();
    int da = A.dim(), db = B.dim(), d = da + db;
    std::vector<Elem> c(static_cast<std::size_t>(d) * d * d, ring.zero());
    auto put = [&](int i, int j, int k, const Elem& v) {
        c[(static_cast<std::size_t>(i) * d + j) * d + k] = v;
    };
    for (int i = 0; i < da; ++i)
        for (int j = 0; j < da; ++j)
            for (int k = 0; k < da; ++k) put(i, j, k, A.c(i, j, k));
    for (int i = 0; i < db; ++i)
        for (int j = 0; j < db; ++j)
            for (int k = 0; k < db; ++k) put(da + i, da + j, da + k, B.c(i, j, k));
    std::vector<Elem> unit;
    unit.insert(unit.end(), A.unit().begin(), A.unit().end());
    unit.insert(unit.end(), B.unit().begin(), B.unit().end());
    std::vector<std::string> labels;
    for (const auto& l : A.basis_labels()) labels.push_back("l." + l);
    for (const auto& l : B.basis_labels()) labels.push_back("r." + l);
    return FinAlgebra<Ring>(A.name() + "x" + B.name(), ring, d, std::move(labels), std::move(c),
                            std::move(unit));
}

}  // namespace sepalg

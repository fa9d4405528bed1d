#pragma once

#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "sepalg/errors.hpp"
#include "sepalg/scalar.hpp"

namespace sepalg {

/// Dense row-major matrix over an exact ring. Immutable by convention once
/// built (mutating accessors exist for construction code only).
template <class Ring>
class Matrix {
public:
    using Elem = typename Ring::Elem;

    Matrix(Ring ring, int rows, int cols)
        : ring_(std::move(ring)),
          rows_(rows),
          cols_(cols),
          data_(static_cast<std::size_t>(rows) * cols, ring_.zero()) {}

    static Matrix identity(Ring ring, int n) {
        Matrix m(ring, n, n);
        for (int i = 0; i < n; ++i) m.at(i, i) = ring.one();
        return m;
    }

    static Matrix from_rows(Ring ring, std::vector<std::vector<Elem>> rows) {
        int r = static_cast<int>(rows.size());
        int c = r == 0 ? 0 : static_cast<int>(rows[0].size());
        Matrix m(ring, r, c);
        for (int i = 0; i < r; ++i) {
            if (static_cast<int>(rows[i].size()) != c)
                throw DimensionMismatch("ragged row list");
            for (int j = 0; j < c; ++j) m.at(i, j) = rows[i][j];
        }
        return m;
    }

    /// Column vector from coefficients.
    static Matrix column(Ring ring, const std::vector<Elem>& v) {
        Matrix m(ring, static_cast<int>(v.size()), 1);
        for (std::size_t i = 0; i < v.size(); ++i) m.at(static_cast<int>(i), 0) = v[i];
        return m;
    }

    /// Row vector from coefficients.
    static Matrix row(Ring ring, const std::vector<Elem>& v) {
        Matrix m(ring, 1, static_cast<int>(v.size()));
        for (std::size_t i = 0; i < v.size(); ++i) m.at(0, static_cast<int>(i)) = v[i];
        return m;
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    const Ring& ring() const { return ring_; }

    const Elem& at(int i, int j) const { return data_[static_cast<std::size_t>(i) * cols_ + j]; }
    Elem& at(int i, int j) { return data_[static_cast<std::size_t>(i) * cols_ + j]; }

    bool is_square() const { return rows_ == cols_; }

    bool is_zero() const {
        for (const Elem& x : data_)
            if (!x.is_zero()) return false;
        return true;
    }

    bool is_symmetric() const {
        if (!is_square()) return false;
        for (int i = 0; i < rows_; ++i)
            for (int j = i + 1; j < cols_; ++j)
                if (at(i, j) != at(j, i)) return false;
        return true;
    }

    Matrix transpose() const {
        Matrix t(ring_, cols_, rows_);
        for (int i = 0; i < rows_; ++i)
            for (int j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
        return t;
    }

    std::vector<Elem> row_vector(int i) const {
        std::vector<Elem> v;
        v.reserve(cols_);
        for (int j = 0; j < cols_; ++j) v.push_back(at(i, j));
        return v;
    }

    std::vector<Elem> col_vector(int j) const {
        std::vector<Elem> v;
        v.reserve(rows_);
        for (int i = 0; i < rows_; ++i) v.push_back(at(i, j));
        return v;
    }

    friend bool operator==(const Matrix& a, const Matrix& b) {
        require_compatible(a, b);
        if (a.rows_ != b.rows_ || a.cols_ != b.cols_) return false;
        for (std::size_t k = 0; k < a.data_.size(); ++k)
            if (a.data_[k] != b.data_[k]) return false;
        return true;
    }
    friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

    friend Matrix operator+(const Matrix& a, const Matrix& b) {
        require_compatible(a, b);
        if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
            throw DimensionMismatch("matrix addition shape mismatch");
        Matrix c(a.ring_, a.rows_, a.cols_);
        for (std::size_t k = 0; k < a.data_.size(); ++k) c.data_[k] = a.data_[k] + b.data_[k];
        return c;
    }

    friend Matrix operator-(const Matrix& a, const Matrix& b) {
        require_compatible(a, b);
        if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
            throw DimensionMismatch("matrix subtraction shape mismatch");
        Matrix c(a.ring_, a.rows_, a.cols_);
        for (std::size_t k = 0; k < a.data_.size(); ++k) c.data_[k] = a.data_[k] - b.data_[k];
        return c;
    }

    std::string str() const {
        std::ostringstream os;
        os << "[";
        for (int i = 0; i < rows_; ++i) {
            os << (i ? ", [" : "[");
            for (int j = 0; j < cols_; ++j) os << (j ? "," : "") << ring_.str(at(i, j));
            os << "]";
        }
        os << "]";
        return os.str();
    }

private:
    static void require_compatible(const Matrix& a, const Matrix& b) {
        if (!(a.ring_ == b.ring_))
            throw ScalarSpecMismatch("matrices over different scalar specs");
    }

    Ring ring_;
    int rows_, cols_;
    std::vector<Elem> data_;
};

/// Exact matrix product.
template <class Ring>
Matrix<Ring> mat_mul(const Matrix<Ring>& a, const Matrix<Ring>& b) {
    if (!(a.ring() == b.ring()))
        throw ScalarSpecMismatch("matrix product over different scalar specs");
    if (a.cols() != b.rows())
        throw DimensionMismatch("matrix product shape " + std::to_string(a.rows()) + "x" +
                                std::to_string(a.cols()) + " * " + std::to_string(b.rows()) +
                                "x" + std::to_string(b.cols()));
    Matrix<Ring> c(a.ring(), a.rows(), b.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int k = 0; k < a.cols(); ++k) {
            const auto& aik = a.at(i, k);
            if (aik.is_zero()) continue;
            for (int j = 0; j < b.cols(); ++j) {
                const auto& bkj = b.at(k, j);
                if (bkj.is_zero()) continue;
                c.at(i, j) = c.at(i, j) + aik * bkj;
            }
        }
    return c;
}

template <class Ring>
Matrix<Ring> operator*(const Matrix<Ring>& a, const Matrix<Ring>& b) {
    return mat_mul(a, b);
}

/// Kronecker product in the row-major tensor-basis convention:
/// (a (x) b)[i*p+r][j*q+s] = a[i][j] * b[r][s].
template <class Ring>
Matrix<Ring> kron(const Matrix<Ring>& a, const Matrix<Ring>& b) {
    if (!(a.ring() == b.ring()))
        throw ScalarSpecMismatch("kronecker product over different scalar specs");
    Matrix<Ring> c(a.ring(), a.rows() * b.rows(), a.cols() * b.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j) {
            const auto& aij = a.at(i, j);
            if (aij.is_zero()) continue;
            for (int r = 0; r < b.rows(); ++r)
                for (int s = 0; s < b.cols(); ++s)
                    c.at(i * b.rows() + r, j * b.cols() + s) = aij * b.at(r, s);
        }
    return c;
}

/// Exact determinant by fraction-free (Bareiss) elimination; valid over any
/// of the supported rings since the interior divisions are exact.
template <class Ring>
typename Ring::Elem determinant(const Matrix<Ring>& m) {
    if (!m.is_square()) throw NonSquare("determinant of non-square matrix");
    const Ring& ring = m.ring();
    int n = m.rows();
    if (n == 0) return ring.one();
    Matrix<Ring> w = m;
    bool negate = false;
    auto prev = ring.one();
    for (int k = 0; k + 1 < n; ++k) {
        if (w.at(k, k).is_zero()) {
            int swap = -1;
            for (int i = k + 1; i < n; ++i)
                if (!w.at(i, k).is_zero()) {
                    swap = i;
                    break;
                }
            if (swap < 0) return ring.zero();
            for (int j = 0; j < n; ++j) std::swap(w.at(k, j), w.at(swap, j));
            negate = !negate;
        }
        for (int i = k + 1; i < n; ++i)
            for (int j = k + 1; j < n; ++j)
                w.at(i, j) = ring.div_exact(w.at(i, j) * w.at(k, k) - w.at(i, k) * w.at(k, j), prev);
        prev = w.at(k, k);
    }
    auto det = w.at(n - 1, n - 1);
    return negate ? -det : det;
}

/// Result of try_invert: the determinant is always reported; the inverse is
/// present exactly when the matrix is invertible over its base ring (nonzero
/// determinant over a field, unit determinant over Z).
template <class Ring>
struct InversionResult {
    std::optional<Matrix<Ring>> inverse;
    typename Ring::Elem det;

    bool ok() const { return inverse.has_value(); }
};

namespace detail {

// Gauss-Jordan over a field; tracks det as signed pivot product.
template <class Ring>
InversionResult<Ring> invert_field(const Matrix<Ring>& m) {
    static_assert(Ring::is_field);
    const Ring& ring = m.ring();
    int n = m.rows();
    Matrix<Ring> w = m;
    Matrix<Ring> inv = Matrix<Ring>::identity(ring, n);
    auto det = ring.one();
    for (int k = 0; k < n; ++k) {
        int pivot = -1;
        for (int i = k; i < n; ++i)
            if (!w.at(i, k).is_zero()) {
                pivot = i;
                break;
            }
        if (pivot < 0) return {std::nullopt, ring.zero()};
        if (pivot != k) {
            for (int j = 0; j < n; ++j) {
                std::swap(w.at(k, j), w.at(pivot, j));
                std::swap(inv.at(k, j), inv.at(pivot, j));
            }
            det = -det;
        }
        auto p = w.at(k, k);
        det = det * p;
        auto pinv = *ring.invert(p);
        for (int j = 0; j < n; ++j) {
            w.at(k, j) = w.at(k, j) * pinv;
            inv.at(k, j) = inv.at(k, j) * pinv;
        }
        for (int i = 0; i < n; ++i) {
            if (i == k) continue;
            auto f = w.at(i, k);
            if (f.is_zero()) continue;
            for (int j = 0; j < n; ++j) {
                w.at(i, j) = w.at(i, j) - f * w.at(k, j);
                inv.at(i, j) = inv.at(i, j) - f * inv.at(k, j);
            }
        }
    }
    return {std::move(inv), det};
}

}  // namespace detail

inline Matrix<Rationals> to_rationals(const Matrix<Integers>& m) {
    Matrix<Rationals> out(Rationals{}, m.rows(), m.cols());
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j)
            out.at(i, j) = Rational(mpq_class(m.at(i, j).value()));
    return out;
}

/// Inverse of a square matrix over its base ring, or the determinant
/// diagnostic when none exists. Over Z the inverse exists iff det = +-1.
template <class Ring>
InversionResult<Ring> try_invert(const Matrix<Ring>& m) {
    if (!m.is_square()) throw NonSquare("inverse of non-square matrix");
    if constexpr (Ring::is_field) {
        return detail::invert_field(m);
    } else {
        auto det = determinant(m);
        if (!m.ring().is_unit(det)) return {std::nullopt, det};
        // det is a unit, so the rational inverse has integer entries.
        auto rat = detail::invert_field(to_rationals(m));
        Matrix<Integers> inv(m.ring(), m.rows(), m.cols());
        for (int i = 0; i < m.rows(); ++i)
            for (int j = 0; j < m.cols(); ++j) {
                const mpq_class& q = rat.inverse->at(i, j).value();
                assert(q.get_den() == 1);
                inv.at(i, j) = Integer(q.get_num());
            }
        return {std::move(inv), det};
    }
}

}  // namespace sepalg

#pragma once

#include <gmpxx.h>

#include <cassert>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>

#include "sepalg/errors.hpp"

namespace sepalg {

namespace detail {

inline bool is_prime_i64(std::int64_t p) {
    if (p < 2) return false;
    for (std::int64_t d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

}  // namespace detail

/// Runtime descriptor of the base ring: Q, F_p (p prime) or Z. Immutable.
class ScalarSpec {
public:
    enum class Kind { Q, Fp, Z };

    // Residues are kept in machine words; products must fit in int64.
    static constexpr std::int64_t max_prime = (std::int64_t{1} << 31) - 1;

    static ScalarSpec rationals() { return ScalarSpec(Kind::Q, 0); }
    static ScalarSpec integers() { return ScalarSpec(Kind::Z, 0); }
    static ScalarSpec prime_field(std::int64_t p) {
        if (p < 2 || p > max_prime)
            throw InvalidScalarSpec("prime field modulus out of range: " + std::to_string(p));
        if (!detail::is_prime_i64(p))
            throw InvalidScalarSpec("modulus is not prime: " + std::to_string(p));
        return ScalarSpec(Kind::Fp, p);
    }

    Kind kind() const { return kind_; }
    std::int64_t p() const { return p_; }
    bool is_field() const { return kind_ != Kind::Z; }

    std::string str() const {
        switch (kind_) {
            case Kind::Q: return "Q";
            case Kind::Fp: return "F" + std::to_string(p_);
            case Kind::Z: return "Z";
        }
        return {};
    }

    friend bool operator==(const ScalarSpec& a, const ScalarSpec& b) {
        return a.kind_ == b.kind_ && a.p_ == b.p_;
    }
    friend bool operator!=(const ScalarSpec& a, const ScalarSpec& b) { return !(a == b); }

private:
    ScalarSpec(Kind k, std::int64_t p) : kind_(k), p_(p) {}

    Kind kind_;
    std::int64_t p_;
};

/// Exact rational, always reduced with positive denominator (GMP keeps
/// canonical form through arithmetic).
class Rational {
public:
    Rational() : v_(0) {}
    explicit Rational(long n) : v_(n) {}
    explicit Rational(mpq_class v) : v_(std::move(v)) { v_.canonicalize(); }

    const mpq_class& value() const { return v_; }
    bool is_zero() const { return sgn(v_) == 0; }

    friend Rational operator+(const Rational& a, const Rational& b) { return raw(a.v_ + b.v_); }
    friend Rational operator-(const Rational& a, const Rational& b) { return raw(a.v_ - b.v_); }
    friend Rational operator*(const Rational& a, const Rational& b) { return raw(a.v_ * b.v_); }
    Rational operator-() const { return raw(-v_); }
    friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }

private:
    // Results of mpq arithmetic on canonical operands are canonical.
    static Rational raw(mpq_class v) {
        Rational r;
        r.v_ = std::move(v);
        return r;
    }

    mpq_class v_;
};

/// Residue in F_p, stored in [0, p). A default-constructed value is a zero
/// with unbound modulus; it binds to the other operand's modulus on use.
class Fp {
public:
    Fp() = default;
    Fp(std::int64_t v, std::int64_t p) : p_(p) {
        assert(p >= 2);
        v_ = v % p;
        if (v_ < 0) v_ += p;
    }

    std::int64_t residue() const { return v_; }
    std::int64_t modulus() const { return p_; }
    bool is_zero() const { return v_ == 0; }

    friend Fp operator+(const Fp& a, const Fp& b) {
        std::int64_t p = merged(a, b);
        if (p == 0) return Fp();
        return Fp(a.v_ + b.v_, p);
    }
    friend Fp operator-(const Fp& a, const Fp& b) {
        std::int64_t p = merged(a, b);
        if (p == 0) return Fp();
        return Fp(a.v_ - b.v_, p);
    }
    friend Fp operator*(const Fp& a, const Fp& b) {
        std::int64_t p = merged(a, b);
        if (p == 0) return Fp();
        return Fp(a.v_ * b.v_, p);
    }
    Fp operator-() const { return p_ == 0 ? Fp() : Fp(-v_, p_); }
    friend bool operator==(const Fp& a, const Fp& b) {
        merged(a, b);
        return a.v_ == b.v_;
    }
    friend bool operator!=(const Fp& a, const Fp& b) { return !(a == b); }

private:
    static std::int64_t merged(const Fp& a, const Fp& b) {
        if (a.p_ == 0) return b.p_;
        if (b.p_ == 0) return a.p_;
        if (a.p_ != b.p_)
            throw ScalarSpecMismatch("mixed moduli " + std::to_string(a.p_) + " and " +
                                     std::to_string(b.p_));
        return a.p_;
    }

    std::int64_t v_ = 0;
    std::int64_t p_ = 0;
};

/// Arbitrary-precision integer.
class Integer {
public:
    Integer() : v_(0) {}
    explicit Integer(long n) : v_(n) {}
    explicit Integer(mpz_class v) : v_(std::move(v)) {}

    const mpz_class& value() const { return v_; }
    bool is_zero() const { return sgn(v_) == 0; }

    friend Integer operator+(const Integer& a, const Integer& b) { return Integer(mpz_class(a.v_ + b.v_)); }
    friend Integer operator-(const Integer& a, const Integer& b) { return Integer(mpz_class(a.v_ - b.v_)); }
    friend Integer operator*(const Integer& a, const Integer& b) { return Integer(mpz_class(a.v_ * b.v_)); }
    Integer operator-() const { return Integer(mpz_class(-v_)); }
    friend bool operator==(const Integer& a, const Integer& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Integer& a, const Integer& b) { return !(a == b); }

private:
    mpz_class v_;
};

namespace detail {

inline void require_plain_integer_string(const std::string& s) {
    if (s.empty()) throw SchemaError("empty scalar string");
    std::size_t i = (s[0] == '-') ? 1 : 0;
    if (i == s.size()) throw SchemaError("bad integer string: '" + s + "'");
    for (; i < s.size(); ++i)
        if (s[i] < '0' || s[i] > '9') throw SchemaError("bad integer string: '" + s + "'");
}

}  // namespace detail

/// Ring descriptor for Q. Stateless; Elem carries everything.
struct Rationals {
    using Elem = Rational;
    static constexpr bool is_field = true;

    Elem zero() const { return Rational(); }
    Elem one() const { return Rational(1); }
    Elem from_long(long n) const { return Rational(n); }

    std::optional<Elem> invert(const Elem& x) const {
        if (x.is_zero()) return std::nullopt;
        return Rational(mpq_class(1 / x.value()));
    }
    Elem div_exact(const Elem& a, const Elem& b) const {
        assert(!b.is_zero());
        return Rational(mpq_class(a.value() / b.value()));
    }
    bool is_unit(const Elem& x) const { return !x.is_zero(); }

    /// Accepts "a" or "a/b" in base 10.
    Elem parse(const std::string& s) const {
        auto slash = s.find('/');
        if (slash == std::string::npos) {
            detail::require_plain_integer_string(s);
        } else {
            detail::require_plain_integer_string(s.substr(0, slash));
            detail::require_plain_integer_string(s.substr(slash + 1));
        }
        mpq_class v;
        if (v.set_str(s, 10) != 0) throw SchemaError("bad rational string: '" + s + "'");
        if (sgn(v.get_den()) == 0) throw SchemaError("zero denominator in '" + s + "'");
        return Rational(std::move(v));
    }
    std::string str(const Elem& x) const { return x.value().get_str(); }

    ScalarSpec spec() const { return ScalarSpec::rationals(); }
    friend bool operator==(const Rationals&, const Rationals&) { return true; }
};

/// Ring descriptor for F_p with runtime modulus.
struct PrimeField {
    using Elem = Fp;
    static constexpr bool is_field = true;

    explicit PrimeField(std::int64_t p) : p_(ScalarSpec::prime_field(p).p()) {}

    std::int64_t p() const { return p_; }

    Elem zero() const { return Fp(0, p_); }
    Elem one() const { return Fp(1, p_); }
    Elem from_long(long n) const { return Fp(n, p_); }

    std::optional<Elem> invert(const Elem& x) const {
        if (x.is_zero()) return std::nullopt;
        // extended Euclid on (residue, p)
        std::int64_t a = x.residue(), m = p_;
        std::int64_t t0 = 0, t1 = 1;
        while (a != 0) {
            std::int64_t q = m / a;
            std::int64_t r = m - q * a;
            m = a;
            a = r;
            std::int64_t t2 = t0 - q * t1;
            t0 = t1;
            t1 = t2;
        }
        assert(m == 1);
        return Fp(t0, p_);
    }
    Elem div_exact(const Elem& a, const Elem& b) const {
        auto inv = invert(b);
        assert(inv);
        return a * *inv;
    }
    bool is_unit(const Elem& x) const { return !x.is_zero(); }

    /// Accepts a decimal integer (any size; reduced mod p).
    Elem parse(const std::string& s) const {
        detail::require_plain_integer_string(s);
        mpz_class big(s, 10);
        mpz_class r = big % p_;
        return Fp(r.get_si(), p_);
    }
    std::string str(const Elem& x) const { return std::to_string(x.residue()); }

    ScalarSpec spec() const { return ScalarSpec::prime_field(p_); }
    friend bool operator==(const PrimeField& a, const PrimeField& b) { return a.p_ == b.p_; }

private:
    std::int64_t p_;
};

/// Ring descriptor for Z. Not a field: only +1/-1 invert.
struct Integers {
    using Elem = Integer;
    static constexpr bool is_field = false;

    Elem zero() const { return Integer(); }
    Elem one() const { return Integer(1); }
    Elem from_long(long n) const { return Integer(n); }

    std::optional<Elem> invert(const Elem& x) const {
        if (!is_unit(x)) return std::nullopt;
        return x;  // 1 and -1 are self-inverse
    }
    Elem div_exact(const Elem& a, const Elem& b) const {
        assert(!b.is_zero());
        mpz_class q;
        mpz_divexact(q.get_mpz_t(), a.value().get_mpz_t(), b.value().get_mpz_t());
        return Integer(std::move(q));
    }
    bool is_unit(const Elem& x) const {
        return x.value() == 1 || x.value() == -1;
    }

    Elem parse(const std::string& s) const {
        detail::require_plain_integer_string(s);
        return Integer(mpz_class(s, 10));
    }
    std::string str(const Elem& x) const { return x.value().get_str(); }

    ScalarSpec spec() const { return ScalarSpec::integers(); }
    friend bool operator==(const Integers&, const Integers&) { return true; }
};

/// Calls f with the ring descriptor matching a runtime ScalarSpec.
template <class F>
decltype(auto) with_ring(const ScalarSpec& s, F&& f) {
    switch (s.kind()) {
        case ScalarSpec::Kind::Q: return f(Rationals{});
        case ScalarSpec::Kind::Fp: return f(PrimeField{s.p()});
        case ScalarSpec::Kind::Z: return f(Integers{});
    }
    throw InvalidScalarSpec("unknown scalar kind");
}

}  // namespace sepalg

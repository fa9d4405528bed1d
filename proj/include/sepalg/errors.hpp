#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace sepalg {

/// Base class for every error thrown by this library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class DimensionMismatch : public Error {
public:
    using Error::Error;
};

class ScalarSpecMismatch : public Error {
public:
    using Error::Error;
};

class NonSquare : public Error {
public:
    using Error::Error;
};

/// A matrix that was required to be invertible over its base ring is not.
/// Carries the determinant (as a string in the ring's notation) as diagnostic.
class NotInvertible : public Error {
public:
    NotInvertible(const std::string& det, const std::string& what)
        : Error(what), det_(det) {}
    const std::string& determinant() const { return det_; }

private:
    std::string det_;
};

/// Operation defined over field scalars only was asked to run over Z.
class IntegerSpecUnsupported : public Error {
public:
    using Error::Error;
};

class InvalidScalarSpec : public Error {
public:
    using Error::Error;
};

/// Malformed input document (JSON shape, scalar strings, corpus lines).
class SchemaError : public Error {
public:
    using Error::Error;
};

/// Structure constants fail associativity; carries the witness triple.
class NotAssociative : public Error {
public:
    NotAssociative(int i, int j, int k, const std::string& what)
        : Error(what), i_(i), j_(j), k_(k) {}
    int i() const { return i_; }
    int j() const { return j_; }
    int k() const { return k_; }

private:
    int i_, j_, k_;
};

/// Declared unit vector is not a two-sided unit; carries the witness index.
class NotUnital : public Error {
public:
    NotUnital(int j, const std::string& what) : Error(what), witness_(j) {}
    int witness() const { return witness_; }

private:
    int witness_;
};

class NotAGroup : public Error {
public:
    using Error::Error;
};

/// Diagram-term syntax error; position is a 0-based character offset.
class ParseError : public Error {
public:
    ParseError(std::size_t position, const std::string& what)
        : Error(what), position_(position) {}
    std::size_t position() const { return position_; }

private:
    std::size_t position_;
};

/// Diagram-term wire-type error (composition/tensor shape mismatch).
class TypeError : public Error {
public:
    TypeError(std::size_t position, const std::string& what)
        : Error(what), position_(position) {}
    std::size_t position() const { return position_; }

private:
    std::size_t position_;
};

/// Evaluation needed kappa or delta but none was supplied.
class MissingExtra : public Error {
public:
    using Error::Error;
};

}  // namespace sepalg

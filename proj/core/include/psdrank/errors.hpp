#pragma once

#include <stdexcept>
#include <string>

namespace psdrank {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

/// Input text or JSON that does not match the documented formats.
class ParseError : public Error {
public:
    explicit ParseError(const std::string& msg) : Error("parse error: " + msg) {}
};

/// Trial division left a residual factor above limit^2 that cannot be split.
class FactorizationLimitExceeded : public Error {
public:
    explicit FactorizationLimitExceeded(const std::string& msg)
        : Error("factorization limit exceeded: " + msg) {}
};

class DivisionByZero : public Error {
public:
    DivisionByZero() : Error("division by zero") {}
};

class NotSymmetric : public Error {
public:
    explicit NotSymmetric(const std::string& msg = "matrix is not symmetric") : Error(msg) {}
};

class NotRankOne : public Error {
public:
    explicit NotRankOne(const std::string& msg = "matrix has rank greater than one") : Error(msg) {}
};

class NotPsd : public Error {
public:
    explicit NotPsd(const std::string& msg = "matrix is not positive semidefinite") : Error(msg) {}
};

class DimensionMismatch : public Error {
public:
    explicit DimensionMismatch(const std::string& msg) : Error("dimension mismatch: " + msg) {}
};

class NotSquare : public Error {
public:
    NotSquare() : Error("matrix is not square") {}
};

/// rank_one_forced was called with a size k admitting no triangular submatrix.
class BoundMismatch : public Error {
public:
    explicit BoundMismatch(const std::string& msg) : Error(msg) {}
};

/// The matrix has an all-zero row or column where none is allowed.
class ZeroLine : public Error {
public:
    explicit ZeroLine(const std::string& msg) : Error(msg) {}
};

class NotFullDimensional : public Error {
public:
    explicit NotFullDimensional(const std::string& msg) : Error(msg) {}
};

class NegativeSlack : public Error {
public:
    explicit NegativeSlack(const std::string& msg) : Error(msg) {}
};

}  // namespace psdrank

#pragma once

#include "psdrank/rational.hpp"

#include <map>
#include <string>
#include <vector>

namespace psdrank {

/// Trial-division bound for square-class computations. A wrong square-free
/// part would silently invalidate certificates, so anything that cannot be
/// factored below this bound fails loudly instead.
inline const Integer kDefaultFactorLimit = 1'000'000;

/// r = cofactor^2 * radicand, radicand square-free.
struct SquareFreeDecomposition {
    Rational cofactor;
    Integer radicand;
};

/// Exact square-free decomposition of a positive rational by trial division
/// up to `limit`. Throws FactorizationLimitExceeded when a residual above
/// limit^2 remains unsplit, std::invalid_argument when r <= 0.
SquareFreeDecomposition squarefree_part(const Rational& r, const Integer& limit = kDefaultFactorLimit);

/// Distinct prime factors of a positive integer, ascending. Same failure
/// contract as squarefree_part.
std::vector<Integer> prime_factors(const Integer& n, const Integer& limit = kDefaultFactorLimit);

/// Element of a multiquadratic extension of the rationals: a finite sum
/// sum_s c_s * sqrt(s) over square-free positive integers s. The term map is
/// canonical (no zero coefficients), so two values are equal iff their maps
/// are; in particular the value is zero iff the map is empty.
class RadScalar {
public:
    RadScalar() = default;
    RadScalar(const Rational& value);  // NOLINT(google-explicit-constructor): rationals embed
    RadScalar(int value) : RadScalar(Rational(value)) {}

    /// c * sqrt(s); s must already be square-free and positive.
    static RadScalar radical(const Rational& coefficient, const Integer& radicand);

    /// The positive square root of r, via squarefree_part.
    static RadScalar sqrt_of(const Rational& r, const Integer& limit = kDefaultFactorLimit);

    bool is_zero() const { return terms_.empty(); }
    /// True iff the value lies in the rationals (terms within radicand 1).
    bool is_rational() const;
    /// The rational value; throws std::logic_error when is_rational() is false.
    Rational rational_value() const;

    const std::map<Integer, Rational>& terms() const { return terms_; }

    RadScalar operator-() const;
    RadScalar& operator+=(const RadScalar& rhs);
    RadScalar& operator-=(const RadScalar& rhs);
    RadScalar& operator*=(const RadScalar& rhs);

    friend RadScalar operator+(RadScalar lhs, const RadScalar& rhs) { return lhs += rhs; }
    friend RadScalar operator-(RadScalar lhs, const RadScalar& rhs) { return lhs -= rhs; }
    friend RadScalar operator*(const RadScalar& lhs, const RadScalar& rhs);
    friend RadScalar operator/(const RadScalar& lhs, const RadScalar& rhs) { return lhs * rhs.inverse(); }

    /// Exact multiplicative inverse by iterated conjugation: one prime is
    /// split off at a time, so the denominator stays in a strictly smaller
    /// multiquadratic field. Throws DivisionByZero on zero.
    RadScalar inverse() const;

    /// Exact sign of the real value: -1, 0, or +1.
    int sign() const;

    bool operator==(const RadScalar& rhs) const { return terms_ == rhs.terms_; }

    /// Rounded double value, for diagnostics and float conversions.
    double approx() const;

    /// e.g. "1/2 + 3*sqrt(2)"; "0" when zero.
    std::string str() const;

private:
    std::map<Integer, Rational> terms_;

    void set_term(const Integer& radicand, const Rational& coefficient);
};

inline RadScalar rad_add(const RadScalar& a, const RadScalar& b) { return a + b; }
inline RadScalar rad_mul(const RadScalar& a, const RadScalar& b) { return a * b; }
inline RadScalar rad_inv(const RadScalar& a) { return a.inverse(); }
inline bool rad_is_rational(const RadScalar& a) { return a.is_rational(); }
inline int rad_sign(const RadScalar& a) { return a.sign(); }

std::string to_string(const RadScalar& a);

}  // namespace psdrank

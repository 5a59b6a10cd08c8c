#include "psdrank/radical.hpp"

#include "psdrank/errors.hpp"

#include <cassert>
#include <cmath>
#include <sstream>
#include <stdexcept>
#include <utility>

namespace psdrank {

namespace {

// Factor n by trial division up to `limit`, collecting (prime, exponent)
// pairs. A residual r > 1 with no factor <= limit is handled by the caller:
// it is prime whenever r <= limit^2, and may still be a perfect square.
Integer trial_divide(Integer n, const Integer& limit, std::vector<std::pair<Integer, unsigned>>& out) {
    auto strip = [&](const Integer& p) {
        unsigned e = 0;
        while (n % p == 0) {
            n /= p;
            ++e;
        }
        if (e > 0) out.emplace_back(p, e);
    };
    strip(2);
    strip(3);
    for (Integer f = 5; f <= limit && f * f <= n; f += 6) {
        strip(f);
        strip(f + 2);
    }
    return n;
}

}  // namespace

SquareFreeDecomposition squarefree_part(const Rational& r, const Integer& limit) {
    if (r <= 0) throw std::invalid_argument("squarefree_part requires a positive rational");
    // r = n/d = (n*d)/d^2, so the square class of r is that of the integer n*d.
    const Integer n = numerator(r) * denominator(r);

    std::vector<std::pair<Integer, unsigned>> factors;
    const Integer residual = trial_divide(n, limit, factors);

    Integer cof = 1;
    Integer rad = 1;
    for (const auto& [p, e] : factors) {
        if (e >= 2) cof *= pow(p, e / 2);
        if (e % 2 == 1) rad *= p;
    }
    if (residual > 1) {
        const Integer root = sqrt(residual);
        if (root * root == residual) {
            cof *= root;
        } else if (residual <= limit * limit) {
            rad *= residual;  // no factor <= limit and below limit^2: prime
        } else {
            throw FactorizationLimitExceeded("residual " + residual.str() + " above " + limit.str() + "^2");
        }
    }
    return SquareFreeDecomposition{Rational(cof, denominator(r)), rad};
}

std::vector<Integer> prime_factors(const Integer& n, const Integer& limit) {
    if (n <= 0) throw std::invalid_argument("prime_factors requires a positive integer");
    std::vector<std::pair<Integer, unsigned>> factors;
    Integer m = n;
    const Integer residual = trial_divide(std::move(m), limit, factors);
    std::vector<Integer> primes;
    primes.reserve(factors.size() + 1);
    for (const auto& [p, e] : factors) primes.push_back(p);
    if (residual > 1) {
        if (residual > limit * limit) {
            throw FactorizationLimitExceeded("residual " + residual.str() + " above " + limit.str() + "^2");
        }
        primes.push_back(residual);
    }
    return primes;
}

RadScalar::RadScalar(const Rational& value) {
    set_term(1, value);
}

RadScalar RadScalar::radical(const Rational& coefficient, const Integer& radicand) {
    if (radicand <= 0) throw std::invalid_argument("radicand must be positive");
    RadScalar out;
    out.set_term(radicand, coefficient);
    return out;
}

RadScalar RadScalar::sqrt_of(const Rational& r, const Integer& limit) {
    if (r == 0) return RadScalar{};
    const SquareFreeDecomposition d = squarefree_part(r, limit);
    return radical(d.cofactor, d.radicand);
}

void RadScalar::set_term(const Integer& radicand, const Rational& coefficient) {
    if (coefficient == 0) {
        terms_.erase(radicand);
    } else {
        terms_[radicand] = coefficient;
    }
}

bool RadScalar::is_rational() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == 1);
}

Rational RadScalar::rational_value() const {
    if (terms_.empty()) return Rational(0);
    if (!is_rational()) throw std::logic_error("RadScalar is irrational: " + str());
    return terms_.begin()->second;
}

RadScalar RadScalar::operator-() const {
    RadScalar out;
    for (const auto& [s, c] : terms_) out.terms_.emplace(s, -c);
    return out;
}

RadScalar& RadScalar::operator+=(const RadScalar& rhs) {
    for (const auto& [s, c] : rhs.terms_) {
        auto it = terms_.find(s);
        if (it == terms_.end()) {
            terms_.emplace(s, c);
        } else {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }
    return *this;
}

RadScalar& RadScalar::operator-=(const RadScalar& rhs) {
    return *this += -rhs;
}

RadScalar operator*(const RadScalar& lhs, const RadScalar& rhs) {
    // sqrt(s) * sqrt(t) = g * sqrt(st/g^2) with g = gcd(s, t); the product of
    // two square-free radicands stays square-free.
    RadScalar out;
    for (const auto& [s, cs] : lhs.terms_) {
        for (const auto& [t, ct] : rhs.terms_) {
            const Integer g = gcd(s, t);
            const Integer u = (s / g) * (t / g);
            const Rational coeff = cs * ct * g;
            auto it = out.terms_.find(u);
            if (it == out.terms_.end()) {
                out.terms_.emplace(u, coeff);
            } else {
                it->second += coeff;
                if (it->second == 0) out.terms_.erase(it);
            }
        }
    }
    return out;
}

RadScalar& RadScalar::operator*=(const RadScalar& rhs) {
    *this = *this * rhs;
    return *this;
}

namespace {

// Smallest prime dividing any radicand > 1, or 0 when the value is rational.
Integer pick_split_prime(const std::map<Integer, Rational>& terms) {
    Integer best = 0;
    for (const auto& [s, c] : terms) {
        if (s == 1) continue;
        for (const Integer& p : prime_factors(s)) {
            if (best == 0 || p < best) best = p;
        }
    }
    return best;
}

// a = lo + hi * sqrt(p), with lo and hi in the subfield avoiding p.
void split_by_prime(const RadScalar& a, const Integer& p, RadScalar& lo, RadScalar& hi) {
    lo = RadScalar{};
    hi = RadScalar{};
    for (const auto& [s, c] : a.terms()) {
        if (s % p == 0) {
            hi += RadScalar::radical(c, s / p);
        } else {
            lo += RadScalar::radical(c, s);
        }
    }
}

RadScalar times_sqrt(const RadScalar& a, const Integer& p) {
    return a * RadScalar::radical(1, p);
}

}  // namespace

RadScalar RadScalar::inverse() const {
    if (is_zero()) throw DivisionByZero{};
    if (is_rational()) {
        return RadScalar(Rational(1) / rational_value());
    }
    const Integer p = pick_split_prime(terms_);
    RadScalar lo, hi;
    split_by_prime(*this, p, lo, hi);
    // (lo + hi*sqrt(p)) * (lo - hi*sqrt(p)) = lo^2 - p*hi^2 lives in the
    // subfield without sqrt(p) and is nonzero because sqrt(p) does not.
    const RadScalar conj = lo - times_sqrt(hi, p);
    const RadScalar norm = *this * conj;
    assert(!norm.is_zero());
    return conj * norm.inverse();
}

int RadScalar::sign() const {
    if (is_zero()) return 0;
    if (is_rational()) return sign_of(rational_value());
    bool all_positive = true;
    bool all_negative = true;
    for (const auto& [s, c] : terms_) {
        (c > 0 ? all_negative : all_positive) = false;
    }
    if (all_positive) return 1;
    if (all_negative) return -1;
    const Integer p = pick_split_prime(terms_);
    RadScalar lo, hi;
    split_by_prime(*this, p, lo, hi);
    const int sign_lo = lo.sign();
    const int sign_hi = hi.sign();
    if (sign_lo == 0) return sign_hi;
    if (sign_hi == 0) return sign_lo;
    if (sign_lo == sign_hi) return sign_lo;
    // Opposite halves: |lo| vs |hi|*sqrt(p) decides, i.e. the sign of
    // lo^2 - p*hi^2 taken on lo's side. Equality would make sqrt(p) lie in
    // the subfield, which it cannot.
    const RadScalar discriminant = lo * lo - RadScalar(Rational(p)) * hi * hi;
    const int s = discriminant.sign();
    assert(s != 0);
    return sign_lo * s;
}

double RadScalar::approx() const {
    double total = 0.0;
    for (const auto& [s, c] : terms_) {
        total += static_cast<double>(c) * std::sqrt(static_cast<double>(s));
    }
    return total;
}

std::string RadScalar::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [s, c] : terms_) {
        if (!first) out << (c > 0 ? " + " : " - ");
        const Rational mag = first ? c : Rational(abs(numerator(c)), denominator(c));
        if (s == 1) {
            out << to_string(mag);
        } else if (mag == 1) {
            out << "sqrt(" << s.str() << ")";
        } else if (mag == -1) {
            out << "-sqrt(" << s.str() << ")";
        } else {
            out << to_string(mag) << "*sqrt(" << s.str() << ")";
        }
        first = false;
    }
    return out.str();
}

std::string to_string(const RadScalar& a) {
    return a.str();
}

}  // namespace psdrank

#ifndef QGKIT_SCALAR_HPP
#define QGKIT_SCALAR_HPP

#include "qgkit/rational.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace qgkit {

/// Root order of the ground variable: all exponents are integer multiples
/// of 1/m, stored internally in units of 1/m (so q = t^m with t = q^(1/m)).
struct RootOrder {
    int m = 6;

    explicit RootOrder(int order = 6) : m(order) {
        if (m < 1)
            throw config_error("root order must be >= 1");
    }
    bool operator==(const RootOrder&) const = default;
};

/// Laurent polynomial in t = q^(1/m) with exact rational coefficients.
/// Canonical form: no zero coefficients stored.
class LaurentPoly {
public:
    using Map = std::map<long, Rational>; // exponent (units of 1/m) -> coeff

    LaurentPoly() = default;
    explicit LaurentPoly(const Rational& c);
    static LaurentPoly monomial(const Rational& c, long exp);

    bool is_zero() const { return coeffs_.empty(); }
    const Map& coeffs() const { return coeffs_; }

    long low_exp() const;  // smallest exponent; requires nonzero
    long high_exp() const; // largest exponent; requires nonzero
    const Rational& leading_coeff() const; // coefficient at high_exp()

    LaurentPoly operator+(const LaurentPoly& o) const;
    LaurentPoly operator-(const LaurentPoly& o) const;
    LaurentPoly operator-() const;
    LaurentPoly operator*(const LaurentPoly& o) const;
    LaurentPoly shifted(long delta) const; // multiply by t^delta
    LaurentPoly scaled(const Rational& c) const;

    bool operator==(const LaurentPoly& o) const { return coeffs_ == o.coeffs_; }

    Rational eval(const Rational& t0) const;

    void set(long exp, const Rational& c); // drops zeros

private:
    Map coeffs_;
};

/// Polynomial gcd over Q[t] of the shifted ordinary parts; result has
/// lowest exponent 0 and leading coefficient 1.
LaurentPoly laurent_gcd(const LaurentPoly& a, const LaurentPoly& b);
/// Exact division; throws math_error if the division leaves a remainder.
LaurentPoly laurent_div_exact(const LaurentPoly& a, const LaurentPoly& b);

/// Exact rational function in t = q^(1/m).
///
/// Canonical form: den has lowest exponent 0 and leading coefficient 1,
/// and num/den carry no common polynomial factor.  Equality of Scalars is
/// therefore structural equality.
class Scalar {
public:
    Scalar() : m_(6) {} // zero at default root order
    explicit Scalar(RootOrder order) : m_(order.m) {}
    Scalar(const Rational& c, RootOrder order);

    static Scalar from_int(long v, RootOrder order = RootOrder());
    static Scalar rational(const Rational& c, RootOrder order = RootOrder());
    /// q^e with e a rational exponent; e*m must be an integer.
    static Scalar q_power(const Rational& e, RootOrder order = RootOrder());
    static Scalar q(RootOrder order = RootOrder()) { return q_power(1, order); }
    /// Ratio of Laurent polynomials (den nonzero), normalized.
    static Scalar ratio(LaurentPoly num, LaurentPoly den, RootOrder order);

    int root_order() const { return m_; }
    const LaurentPoly& num() const { return num_; }
    const LaurentPoly& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const;
    bool is_polynomial() const; // den == 1

    Scalar operator+(const Scalar& o) const;
    Scalar operator-(const Scalar& o) const;
    Scalar operator-() const;
    Scalar operator*(const Scalar& o) const;
    Scalar operator/(const Scalar& o) const;
    Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
    Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
    Scalar& operator*=(const Scalar& o) { return *this = *this * o; }
    Scalar inv() const;

    bool operator==(const Scalar& o) const;

    /// Exact substitution t -> t0 (t = q^(1/m)).  Throws eval_error if the
    /// denominator vanishes at t0 or t0 = 0 with negative exponents present.
    Rational eval_at(const Rational& t0) const;

    std::string str() const;

private:
    int m_;
    LaurentPoly num_;
    LaurentPoly den_; // canonical: low_exp 0, monic, nonzero
    void normalize();
    void check_same_order(const Scalar& o) const;
    friend Scalar scalar_add(const Scalar&, const Scalar&);
};

std::string print_laurent(const LaurentPoly& p, int m);
std::string print_scalar(const Scalar& s);

} // namespace qgkit

#endif

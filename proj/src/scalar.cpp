#include "qgkit/scalar.hpp"

#include <sstream>

namespace qgkit {

LaurentPoly::LaurentPoly(const Rational& c) {
    if (c != 0)
        coeffs_[0] = c;
}

LaurentPoly LaurentPoly::monomial(const Rational& c, long exp) {
    LaurentPoly p;
    if (c != 0)
        p.coeffs_[exp] = c;
    return p;
}

long LaurentPoly::low_exp() const {
    if (is_zero())
        throw math_error("low_exp of zero polynomial");
    return coeffs_.begin()->first;
}

long LaurentPoly::high_exp() const {
    if (is_zero())
        throw math_error("high_exp of zero polynomial");
    return coeffs_.rbegin()->first;
}

const Rational& LaurentPoly::leading_coeff() const {
    if (is_zero())
        throw math_error("leading_coeff of zero polynomial");
    return coeffs_.rbegin()->second;
}

void LaurentPoly::set(long exp, const Rational& c) {
    if (c == 0)
        coeffs_.erase(exp);
    else
        coeffs_[exp] = c;
}

LaurentPoly LaurentPoly::operator+(const LaurentPoly& o) const {
    LaurentPoly r = *this;
    for (const auto& [e, c] : o.coeffs_) {
        auto it = r.coeffs_.find(e);
        if (it == r.coeffs_.end()) {
            r.coeffs_[e] = c;
        } else {
            it->second += c;
            if (it->second == 0)
                r.coeffs_.erase(it);
        }
    }
    return r;
}

LaurentPoly LaurentPoly::operator-() const {
    LaurentPoly r;
    for (const auto& [e, c] : coeffs_)
        r.coeffs_[e] = -c;
    return r;
}

LaurentPoly LaurentPoly::operator-(const LaurentPoly& o) const {
    return *this + (-o);
}

LaurentPoly LaurentPoly::operator*(const LaurentPoly& o) const {
    LaurentPoly r;
    for (const auto& [e1, c1] : coeffs_)
        for (const auto& [e2, c2] : o.coeffs_) {
            Rational prod = c1 * c2;
            auto it = r.coeffs_.find(e1 + e2);
            if (it == r.coeffs_.end()) {
                if (prod != 0)
                    r.coeffs_[e1 + e2] = prod;
            } else {
                it->second += prod;
                if (it->second == 0)
                    r.coeffs_.erase(it);
            }
        }
    return r;
}

LaurentPoly LaurentPoly::shifted(long delta) const {
    LaurentPoly r;
    for (const auto& [e, c] : coeffs_)
        r.coeffs_[e + delta] = c;
    return r;
}

LaurentPoly LaurentPoly::scaled(const Rational& c) const {
    LaurentPoly r;
    if (c == 0)
        return r;
    for (const auto& [e, k] : coeffs_)
        r.coeffs_[e] = k * c;
    return r;
}

Rational LaurentPoly::eval(const Rational& t0) const {
    if (is_zero())
        return 0;
    if (t0 == 0) {
        if (low_exp() < 0)
            throw eval_error("negative exponent at t = 0");
        auto it = coeffs_.find(0);
        return it == coeffs_.end() ? Rational(0) : it->second;
    }
    // Horner over the exponent range, walking down from high_exp.
    Rational acc = 0;
    long prev = high_exp();
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        for (long k = prev; k > it->first; --k)
            acc *= t0;
        acc += it->second;
        prev = it->first;
    }
    if (prev > 0) {
        for (long k = 0; k < prev; ++k)
            acc *= t0;
    } else if (prev < 0) {
        Rational inv = 1 / t0;
        for (long k = 0; k > prev; --k)
            acc *= inv;
    }
    return acc;
}

namespace {

// Ordinary polynomial division step machinery on shifted Laurent parts.
// Both inputs must have low_exp >= 0.
LaurentPoly poly_mod(LaurentPoly a, const LaurentPoly& b) {
    while (!a.is_zero() && a.high_exp() >= b.high_exp()) {
        Rational factor = a.leading_coeff() / b.leading_coeff();
        long shift = a.high_exp() - b.high_exp();
        a = a - b.shifted(shift).scaled(factor);
    }
    return a;
}

LaurentPoly to_ordinary(const LaurentPoly& p) {
    return p.is_zero() ? p : p.shifted(-p.low_exp());
}

LaurentPoly make_monic(const LaurentPoly& p) {
    if (p.is_zero())
        return p;
    return p.scaled(1 / p.leading_coeff());
}

} // namespace

LaurentPoly laurent_gcd(const LaurentPoly& a, const LaurentPoly& b) {
    LaurentPoly x = to_ordinary(a), y = to_ordinary(b);
    while (!y.is_zero()) {
        LaurentPoly r = poly_mod(x, y);
        x = y;
        y = r;
    }
    return make_monic(to_ordinary(x));
}

LaurentPoly laurent_div_exact(const LaurentPoly& a, const LaurentPoly& b) {
    if (b.is_zero())
        throw math_error("division by zero polynomial");
    if (a.is_zero())
        return a;
    long shift = a.low_exp() - b.low_exp();
    LaurentPoly x = to_ordinary(a);
    const LaurentPoly y = to_ordinary(b);
    LaurentPoly quot;
    while (!x.is_zero() && x.high_exp() >= y.high_exp()) {
        Rational factor = x.leading_coeff() / y.leading_coeff();
        long d = x.high_exp() - y.high_exp();
        quot.set(d, factor);
        x = x - y.shifted(d).scaled(factor);
    }
    if (!x.is_zero())
        throw math_error("inexact polynomial division");
    return quot.shifted(shift);
}

Scalar::Scalar(const Rational& c, RootOrder order) : m_(order.m) {
    num_ = LaurentPoly(c);
    den_ = LaurentPoly(Rational(1));
}

Scalar Scalar::from_int(long v, RootOrder order) {
    return Scalar(Rational(v), order);
}

Scalar Scalar::rational(const Rational& c, RootOrder order) {
    return Scalar(c, order);
}

Scalar Scalar::q_power(const Rational& e, RootOrder order) {
    Rational units = e * order.m;
    if (units.get_den() != 1)
        throw config_error("exponent " + e.get_str() +
                           " is not a multiple of 1/" + std::to_string(order.m));
    Scalar s((RootOrder(order)));
    s.num_ = LaurentPoly::monomial(1, units.get_num().get_si());
    s.den_ = LaurentPoly(Rational(1));
    return s;
}

Scalar Scalar::ratio(LaurentPoly num, LaurentPoly den, RootOrder order) {
    if (den.is_zero())
        throw math_error("scalar with zero denominator");
    Scalar s((RootOrder(order)));
    s.num_ = std::move(num);
    s.den_ = std::move(den);
    s.normalize();
    return s;
}

bool Scalar::is_one() const {
    return num_ == LaurentPoly(Rational(1)) && den_ == LaurentPoly(Rational(1));
}

bool Scalar::is_polynomial() const {
    return den_ == LaurentPoly(Rational(1));
}

void Scalar::normalize() {
    if (num_.is_zero()) {
        den_ = LaurentPoly(Rational(1));
        return;
    }
    LaurentPoly g = laurent_gcd(num_, den_);
    if (!(g == LaurentPoly(Rational(1)))) {
        num_ = laurent_div_exact(num_, g);
        den_ = laurent_div_exact(den_, g);
    }
    // den: lowest exponent 0, leading coefficient 1
    long shift = den_.low_exp();
    if (shift != 0) {
        den_ = den_.shifted(-shift);
        num_ = num_.shifted(-shift);
    }
    Rational lead = den_.leading_coeff();
    if (lead != 1) {
        den_ = den_.scaled(1 / lead);
        num_ = num_.scaled(1 / lead);
    }
}

void Scalar::check_same_order(const Scalar& o) const {
    if (m_ != o.m_)
        throw config_error("mismatched root orders " + std::to_string(m_) +
                           " and " + std::to_string(o.m_));
}

Scalar Scalar::operator+(const Scalar& o) const {
    check_same_order(o);
    Scalar r((RootOrder(m_)));
    r.num_ = num_ * o.den_ + o.num_ * den_;
    r.den_ = den_ * o.den_;
    r.normalize();
    return r;
}

Scalar Scalar::operator-() const {
    Scalar r = *this;
    r.num_ = -r.num_;
    return r;
}

Scalar Scalar::operator-(const Scalar& o) const {
    return *this + (-o);
}

Scalar Scalar::operator*(const Scalar& o) const {
    check_same_order(o);
    Scalar r((RootOrder(m_)));
    r.num_ = num_ * o.num_;
    r.den_ = den_ * o.den_;
    r.normalize();
    return r;
}

Scalar Scalar::inv() const {
    if (is_zero())
        throw math_error("inverse of zero scalar");
    Scalar r((RootOrder(m_)));
    r.num_ = den_;
    r.den_ = num_;
    r.normalize();
    return r;
}

Scalar Scalar::operator/(const Scalar& o) const {
    return *this * o.inv();
}

bool Scalar::operator==(const Scalar& o) const {
    return m_ == o.m_ && num_ == o.num_ && den_ == o.den_;
}

Rational Scalar::eval_at(const Rational& t0) const {
    Rational d = den_.eval(t0);
    if (d == 0)
        throw eval_error("denominator vanishes at evaluation point");
    return num_.eval(t0) / d;
}

namespace {

std::string exponent_str(long units, int m) {
    Rational e = Rational(units) / m;
    e.canonicalize();
    if (e == 1)
        return "q";
    return "q^(" + e.get_str() + ")";
}

} // namespace

std::string print_laurent(const LaurentPoly& p, int m) {
    if (p.is_zero())
        return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [e, c] : p.coeffs()) {
        Rational a = c;
        if (first) {
            if (a < 0) {
                out << "-";
                a = -a;
            }
            first = false;
        } else {
            out << (a < 0 ? " - " : " + ");
            if (a < 0)
                a = -a;
        }
        if (e == 0) {
            out << a.get_str();
        } else if (a == 1) {
            out << exponent_str(e, m);
        } else {
            out << a.get_str() << "*" << exponent_str(e, m);
        }
    }
    return out.str();
}

std::string print_scalar(const Scalar& s) {
    if (s.is_polynomial())
        return print_laurent(s.num(), s.root_order());
    std::string num = print_laurent(s.num(), s.root_order());
    std::string den = print_laurent(s.den(), s.root_order());
    bool wrap_num = s.num().coeffs().size() > 1 || num.front() == '-';
    std::string out = wrap_num ? "(" + num + ")" : num;
    return out + "/(" + den + ")";
}

std::string Scalar::str() const {
    return print_scalar(*this);
}

} // namespace qgkit

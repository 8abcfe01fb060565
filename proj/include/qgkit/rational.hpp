#ifndef QGKIT_RATIONAL_HPP
#define QGKIT_RATIONAL_HPP

#include <gmpxx.h>
#include <stdexcept>
#include <string>

namespace qgkit {

using Rational = mpq_class;

struct config_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct math_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct eval_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct input_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct resource_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// mpq_class(p, q) does not canonicalize on its own.
inline Rational make_rational(long num, long den = 1) {
    if (den == 0)
        throw math_error("rational with zero denominator");
    Rational r(num, den);
    r.canonicalize();
    return r;
}

inline std::string to_string(const Rational& r) {
    return r.get_str();
}

} // namespace qgkit

#endif

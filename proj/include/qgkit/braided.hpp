#ifndef QGKIT_BRAIDED_HPP
#define QGKIT_BRAIDED_HPP

#include "qgkit/freealg.hpp"
#include "qgkit/linalg.hpp"

#include <vector>

namespace qgkit {

/// Two-slot R-matrix q^nu * [[q,.,.,.],[.,1,q-q^-1,.],[.,.,1,.],[.,.,.,q]],
/// with the off-diagonal entry in row 12, column 21.  That orientation is
/// the one under which the braid kernels below are nontrivial; see the
/// convention tests.
struct NormalizedR {
    Rational nu;
    TensorOperator op; // slots = 2
};

NormalizedR r_matrix(const Rational& nu, RootOrder order = RootOrder());

/// B = sigma R (flip composed with R).
TensorOperator braid(const NormalizedR& r);

/// Yang-Baxter residual R12 R13 R23 - R23 R13 R12 on three slots.
Matrix ybe_residual(const NormalizedR& r);

/// Hecke residual (B - q^(1+nu)) (B + q^(nu-1)).
Matrix hecke_residual(const NormalizedR& r);

struct BinomialOperator {
    int n_slots;
    int n;
    TensorOperator op;
};

/// Braided binomial operator [N n]_B built generically: expand the 2^N
/// letter words of (x_1+y_1)...(x_N+y_N), repeatedly replace x at slot i
/// immediately left of y at slot i+1 by y,x while composing the embedded
/// braid on the left of the carried operator, and read off the operator
/// attached to the normal-ordered word with n leading y letters.
BinomialOperator binomial_operator(const TensorOperator& braid_op, int n_slots, int n);

/// All of [N 0], ..., [N N] in one pass.
std::vector<TensorOperator> binomial_operators(const TensorOperator& braid_op, int n_slots);

/// Same construction with the braid composed on the right of the carried
/// operator; kept for the convention-fixing tests.
std::vector<TensorOperator> binomial_operators_right(const TensorOperator& braid_op,
                                                     int n_slots);

/// Vertical stack of [N n]_B for n = 1..N-1; (N-1) 2^N rows.
Matrix binomial_stack(const TensorOperator& braid_op, int n_slots);

/// Deterministic kernel basis of the binomial stack at the given nu.
std::vector<OmegaTensor> solve_omega(int n_slots, const Rational& nu,
                                     RootOrder order = RootOrder());

/// Kernel dimension for each candidate normalization exponent, in grid order.
std::vector<std::pair<Rational, int>>
scan_normalizations(int n_slots, const std::vector<Rational>& grid,
                    RootOrder order = RootOrder());

enum class GeneratorFamily { E, F };

/// The degree-N relation sum_w omega^w g_{w_1} ... g_{w_N} on the given
/// two-generator family (generator for letter 1 first), canonicalized.
NcPoly relations_from_omega(const OmegaTensor& omega, GeneratorFamily family,
                            const GeneratorTable& table,
                            const std::string& letter1, const std::string& letter2);

/// Normalization exponent at which the order-N kernels are nontrivial:
/// nu = (3 - N) / (N - 1), i.e. 1, 0, -1/3 for N = 2, 3, 4.
Rational default_nu(int n_slots);

/// The printed one-, two- and three-parameter kernel solutions for
/// N = 2, 3, 4 (unit value for one parameter, the others zero), used as
/// golden data.
std::vector<OmegaTensor> reference_omegas(int n_slots, RootOrder order = RootOrder());

} // namespace qgkit

#endif

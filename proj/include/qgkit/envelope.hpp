#ifndef QGKIT_ENVELOPE_HPP
#define QGKIT_ENVELOPE_HPP

#include "qgkit/braided.hpp"
#include "qgkit/freealg.hpp"

namespace qgkit {

/// 2x2 symmetrizable Cartan matrix with positive integer symmetrizer d,
/// d_i a_ij = d_j a_ji.
struct CartanMatrix {
    int a[2][2];
    int d[2];

    CartanMatrix(int a11, int a12, int a21, int a22);
    /// The matrix [[2,-1],[-(N-1),2]] attached to order-N relations,
    /// with symmetrizer (N-1, 1).
    static CartanMatrix for_order(int n);
};

/// Symmetric q-binomial [n k] at q -> q^base: [m] = (q^(bm) - q^(-bm)) /
/// (q^b - q^(-b)).  Always a Laurent polynomial.
Scalar qbinom(int n, int k, RootOrder order = RootOrder(),
              const Rational& base = 1);

/// q-Serre relations sum_r (-1)^r [1-a_ij, r]_{q_i} X_i^(1-a_ij-r) X_j X_i^r
/// for i != j, with q_i = q^(d_i * base).  Generators named x1, x2 unless a
/// table and names are supplied.
std::vector<NcPoly> serre_relations(const CartanMatrix& cartan,
                                    const GeneratorTable& table,
                                    const std::string& x1, const std::string& x2,
                                    RootOrder order = RootOrder(),
                                    const Rational& base = 1);

struct DJPresentation {
    GeneratorTable table;
    RelationSet relations;
};

/// Drinfeld-Jimbo presentation on {k1, kb1, k2, kb2, X1p, X1m, X2p, X2m}
/// with the Cartan generators entering relations through their squares.
DJPresentation dj_relations(const CartanMatrix& cartan,
                            RootOrder order = RootOrder(),
                            const Rational& base = 1);

/// Same relations with K_i = k_i^2 collapsed to a single generator
/// {K1, Kb1, K2, Kb2, ...}; the form used for image checks.
DJPresentation dj_relations_squared(const CartanMatrix& cartan,
                                    RootOrder order = RootOrder(),
                                    const Rational& base = 1);

/// Componentwise reading of the mixed commutation relation between the
/// row and column generator families: E_j F^i - F^i E_j = sign (T-U)
/// indexed either straight (^i_j) or transposed (^j_i).
enum class EfConvention { plus_ij, minus_ij, plus_ji, minus_ji };

/// The triangular generator arrangement: T lower-triangular on {a, b, c},
/// U upper-triangular on {x, y, z}, row {d, e}, column {f, g}.
struct InhomogeneousPreset {
    GeneratorTable table;
    RelationSet relations;
    std::map<std::string, NcPoly> delta;  // over tensor_table(table, {_l,_r})
    std::map<std::string, Scalar> counit;
    Rational nu;
    RootOrder order{6};
};

/// All nontrivial component relations of the eight matrix equations at the
/// given normalization exponent.  The raw (unnormalized) expansion is kept
/// so scaling behaviour in nu stays visible.
RelationSet build_inhomogeneous_relations(const NormalizedR& r,
                                          EfConvention ef = EfConvention::plus_ij);

InhomogeneousPreset inhomogeneous_preset(const Rational& nu,
                                         RootOrder order = RootOrder(),
                                         EfConvention ef = EfConvention::plus_ij);

/// Order-N relations on the row family (letters d, e) and column family
/// (letters f, g) from the printed kernel solutions.
RelationSet omega_relation_set(int n, const GeneratorTable& table,
                               RootOrder order = RootOrder());

/// The distinguished relation (one letter d among e's, e.g. e*e*d - ...).
NcPoly distinguished_e_relation(int n, const GeneratorTable& table,
                                RootOrder order = RootOrder());
/// The remaining order-N relations on d, e.
std::vector<NcPoly> nondistinguished_e_relations(int n, const GeneratorTable& table,
                                                 RootOrder order = RootOrder());

enum class DependencySubset { bcde, full };

/// System for the dependency run: the two distinguished quadratic
/// relations + the order-N distinguished relation + component relations
/// (restricted to letters {b,c,d,e}, or the full preset).
RelationSet dependency_system(int n, DependencySubset subset,
                              bool include_distinguished,
                              RootOrder order = RootOrder());

/// Checks that the non-distinguished order-N relations are ideal members
/// of the dependency system; widens from the {b,c,d,e} subset to the full
/// preset when needed and reports which system certified each relation.
Report check_dependency(int n, int bound, RootOrder order = RootOrder(),
                        const CompletionOptions& opts = {});

/// Builds the source algebra (preset + order-N relations + adjoined
/// inverses + identification), solves the normalization scalars from the
/// rank-one commutator relations, then checks every Drinfeld-Jimbo
/// relation image.  The target deformation base is q^(1/(N-1)).
Report verify_dj_image(int n, int bound, RootOrder order = RootOrder(),
                       const CompletionOptions& opts = {});

/// Bialgebra compatibility of the preset at the frozen convention.
Report check_preset_bialgebra(const Rational& nu, int bound,
                              RootOrder order = RootOrder(),
                              EfConvention ef = EfConvention::plus_ij,
                              const CompletionOptions& opts = {});

} // namespace qgkit

#endif

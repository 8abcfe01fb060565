#ifndef QGKIT_OSCILLATOR_HPP
#define QGKIT_OSCILLATOR_HPP

#include "qgkit/freealg.hpp"

namespace qgkit {

/// Generators A, B with A B = q^2 B A + 1; normal-form basis B^m A^n.
/// The table orders B before A so the defining rule rewrites A B.
GeneratorTable oscillator_table();
NcPoly oscillator_relation(RootOrder order = RootOrder());

/// Combined algebra on {x, y, z, B, A}: the coefficient letters commute
/// with A and B and collect on the left.
GeneratorTable combined_table(bool second_grouplike = false);
RewriteSystem combined_system(RootOrder order = RootOrder(),
                              bool second_grouplike = false);

/// Coaction images of A and B inside the combined algebra, at most linear
/// in {A, B}.
struct CoactionMap {
    NcPoly image_a;
    NcPoly image_b;
};

CoactionMap standard_coaction(RootOrder order = RootOrder());
/// Variant with a second group-like z' in front of B.
CoactionMap generalized_coaction(RootOrder order = RootOrder());

struct Constraint {
    std::string oscillator_word; // "A", "B", "1", ...
    NcPoly poly;                 // over the coefficient letters only
};

/// Substitute the coaction into the oscillator relation, normal-order, and
/// collect the coefficient of every oscillator basis word.  The nonzero
/// coefficients are the necessary relations on the coefficient letters.
std::vector<Constraint> covariance_constraints(const NcPoly& rel,
                                               const CoactionMap& coaction,
                                               RootOrder order = RootOrder(),
                                               bool second_grouplike = false);

/// Coefficient bialgebra: table {x, y, z} and its relation set derived
/// from the covariance constraints.
GeneratorTable coefficient_table();
RelationSet coefficient_relations(RootOrder order = RootOrder());

/// Coproduct of the coefficient bialgebra over the doubled table, and the
/// counit forced by the comodule axiom.
std::map<std::string, NcPoly> coefficient_delta(RootOrder order = RootOrder());
std::map<std::string, Scalar> coefficient_counit(RootOrder order = RootOrder());

/// Comodule axioms for the coaction: (Delta x id) delta = (id x delta) delta
/// and (counit x id) delta = id on A and B, in the three-leg algebra.
Report check_comodule(const CoactionMap& coaction,
                      const std::map<std::string, NcPoly>& delta,
                      const std::map<std::string, Scalar>& counit,
                      RootOrder order = RootOrder());

/// Coassociativity of the coefficient coproduct on x, y, z.
Report check_coassociativity(const std::map<std::string, NcPoly>& delta,
                             RootOrder order = RootOrder());

/// Standard rank-one presentation {K, Kb, Xp, Xm, s}: K Kb = 1,
/// K X± = q^(±1) X± K, X+ X- - X- X+ = (K^2 - Kb^2)/(q - q^(-1)),
/// s central with s^2 = q - q^(-1).
GeneratorTable sl2_table();
RelationSet sl2_relations(RootOrder order = RootOrder(), bool with_square = true);

/// Substitute z -> Kb^2, x -> s Kb X+, y -> s X- Kb and verify that the
/// coefficient relations reduce to zero (with s entering only through its
/// square) and that the target coproduct reproduces the coefficient one.
Report verify_sl2_substitution(int bound, RootOrder order = RootOrder(),
                               const CompletionOptions& opts = {});

} // namespace qgkit

#endif

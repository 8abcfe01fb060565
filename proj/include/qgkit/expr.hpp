#ifndef QGKIT_EXPR_HPP
#define QGKIT_EXPR_HPP

#include "qgkit/freealg.hpp"

#include <string>

namespace qgkit {

struct parse_error : std::runtime_error {
    int line, column;
    parse_error(const std::string& what, int l, int c)
        : std::runtime_error(what + " at " + std::to_string(l) + ":" +
                             std::to_string(c)),
          line(l), column(c) {}
};

/// Expression grammar: identifiers, integer literals, rationals via `/`,
/// `q` and `q^(a/b)`, and `+ - * / ( )` with explicit `*` between factors
/// (no juxtaposition).  Division requires a scalar divisor.
NcPoly parse_expression(const std::string& text, const GeneratorTable& table,
                        RootOrder order = RootOrder());

/// Scalar-only expression (no generators allowed).
Scalar parse_scalar(const std::string& text, RootOrder order = RootOrder());

/// Rational like "-1/3" or "2".
Rational parse_rational_literal(const std::string& text);

/// One relation per line, `name : <expr> = <expr>`; '#' starts a comment.
RelationSet parse_relation_file(const std::string& text, const GeneratorTable& table,
                                RootOrder order = RootOrder());

std::string print_ncpoly(const NcPoly& p, const GeneratorTable& table);

} // namespace qgkit

#endif

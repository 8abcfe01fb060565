#ifndef QGKIT_FREEALG_HPP
#define QGKIT_FREEALG_HPP

#include "qgkit/scalar.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace qgkit {

using GenId = char16_t;
/// A word in the free monoid on the generator ids.
using Word = std::basic_string<GenId>;

/// Ordered list of generator names; the listed order is the total order
/// used by the degree-lexicographic word order.
class GeneratorTable {
public:
    GeneratorTable() = default;
    explicit GeneratorTable(const std::vector<std::string>& names);

    GenId add(const std::string& name);
    GenId id(const std::string& name) const;
    std::optional<GenId> find(const std::string& name) const;
    const std::string& name(GenId g) const;
    int size() const { return int(names_.size()); }
    const std::vector<std::string>& names() const { return names_; }

    Word word(const std::vector<std::string>& gens) const;
    std::string word_str(const Word& w) const; // "a*b*c"

    bool operator==(const GeneratorTable& o) const { return names_ == o.names_; }

private:
    std::vector<std::string> names_;
    std::map<std::string, GenId> ids_;
};

/// Degree first, then lexicographic by generator order.
struct DegLex {
    bool operator()(const Word& a, const Word& b) const {
        if (a.size() != b.size())
            return a.size() < b.size();
        return a < b;
    }
};

bool deglex_less(const Word& a, const Word& b);

/// Noncommutative polynomial: finitely many words with nonzero Scalar
/// coefficients.  Canonical by construction.
class NcPoly {
public:
    using Terms = std::map<Word, Scalar, DegLex>;

    NcPoly() = default;
    explicit NcPoly(RootOrder order) : order_(order) {}
    NcPoly(const Word& w, const Scalar& c);
    static NcPoly scalar(const Scalar& c);
    static NcPoly one(RootOrder order);

    bool is_zero() const { return terms_.empty(); }
    const Terms& terms() const { return terms_; }
    int root_order() const { return order_.m; }
    int degree() const; // -1 for zero

    const Word& leading_word() const;
    const Scalar& leading_coeff() const;

    void add_term(const Word& w, const Scalar& c);
    NcPoly operator+(const NcPoly& o) const;
    NcPoly operator-(const NcPoly& o) const;
    NcPoly operator-() const;
    NcPoly operator*(const NcPoly& o) const;
    NcPoly scaled(const Scalar& c) const;
    NcPoly& operator+=(const NcPoly& o);
    NcPoly& operator-=(const NcPoly& o);

    bool operator==(const NcPoly& o) const { return terms_ == o.terms_; }

    /// Scale so the coefficients are denominator-free Laurent polynomials
    /// with content 1, minimal t-exponent 0 and a positive leading rational
    /// coefficient on the deglex-leading word.
    NcPoly canonicalized() const;

    /// True if this equals c * o for some scalar c (returned); both nonzero.
    std::optional<Scalar> proportional_to(const NcPoly& o) const;

private:
    RootOrder order_{6};
    Terms terms_;
};

struct RewriteRule {
    Word lhs;
    NcPoly rhs; // every word deglex-smaller than lhs
};

/// Named relations with provenance labels.
struct Relation {
    std::string name;
    NcPoly poly;
    std::string provenance;
};

class RelationSet {
public:
    void add(std::string name, NcPoly poly, std::string provenance = "");
    const std::vector<Relation>& items() const { return items_; }
    bool empty() const { return items_.empty(); }
    size_t size() const { return items_.size(); }

private:
    std::vector<Relation> items_;
};

struct CompletionOptions {
    int max_rules = 4096;
};

/// Ordered rewrite rules plus degree-bounded completion state.
class RewriteSystem {
public:
    RewriteSystem() = default;
    explicit RewriteSystem(GeneratorTable table) : table_(std::move(table)) {}

    const GeneratorTable& table() const { return table_; }
    GeneratorTable& table() { return table_; }
    const std::vector<RewriteRule>& rules() const { return rules_; }
    int completed_to() const { return completed_to_; }
    int degree_bound() const { return degree_bound_; }
    RootOrder order() const { return order_; }
    /// All overlaps of the final rules fit inside the completed degree, so
    /// normal forms decide membership outright.
    bool globally_confluent() const { return globally_confluent_; }

    /// Orient a relation by its deglex-leading word and insert, keeping the
    /// rule list inter-reduced.  Zero relations are ignored.
    void add_relation(const NcPoly& p);
    void add_relations(const RelationSet& rels);

    friend NcPoly normal_form(const NcPoly& p, const RewriteSystem& sys);
    friend RewriteSystem complete(RewriteSystem sys, int degree_bound,
                                  const CompletionOptions& opts);

private:
    GeneratorTable table_;
    std::vector<RewriteRule> rules_; // sorted by deglex(lhs)
    std::vector<std::vector<int>> byfirst_; // rule indices by first letter
    RootOrder order_{6};
    int degree_bound_ = 0;
    int completed_to_ = 0;
    size_t epoch_ = 0; // bumped when a rule is removed or rewritten
    bool globally_confluent_ = false;

    std::optional<NcPoly> reduce_once(const Word& w) const;
    void insert_rule(RewriteRule r);
    void rebuild_index();
};

NcPoly normal_form(const NcPoly& p, const RewriteSystem& sys);

RewriteSystem complete(RewriteSystem sys, int degree_bound,
                       const CompletionOptions& opts = {});

enum class MemberStatus { member, not_member, undecided };

/// Bounded-degree ideal membership.  `member` is a proof; `not_member` is
/// only issued when the completed system is globally confluent, otherwise
/// the result is `undecided` (not derivable within the bound).
MemberStatus ideal_member_status(const NcPoly& p, const RewriteSystem& completed);
bool ideal_member(const NcPoly& p, RewriteSystem sys, int degree_bound,
                  const CompletionOptions& opts = {});

/// Tensor product of systems: one generator copy per leg (suffix appended
/// to each name, legs listed left to right), each leg's rules lifted, and
/// letters of a later leg moved right past letters of an earlier leg.
RewriteSystem tensor_legs(const std::vector<const RewriteSystem*>& legs,
                          const std::vector<std::string>& suffixes);
RewriteSystem tensor_square(const RewriteSystem& sys);
GeneratorTable tensor_table(const GeneratorTable& base,
                            const std::vector<std::string>& suffixes);

/// Generator-wise algebra map, extended multiplicatively and linearly.
/// Every generator occurring in p must be mapped.
class GenMap {
public:
    GenMap(const GeneratorTable& source, GeneratorTable target)
        : source_(source), target_(std::move(target)) {}

    void set(const std::string& source_gen, NcPoly image);
    const GeneratorTable& target() const { return target_; }
    NcPoly apply(const NcPoly& p) const;

private:
    const GeneratorTable& source_;
    GeneratorTable target_;
    std::map<GenId, NcPoly> images_;
};

NcPoly apply_hom(const GenMap& map, const NcPoly& p);

enum class CheckStatus { pass, fail, undecided };

struct CheckItem {
    std::string name;
    CheckStatus status;
    std::string detail;
};

struct Report {
    std::string title;
    std::vector<CheckItem> items;
    std::map<std::string, std::string> payload;

    bool all_pass() const;
    void add(std::string name, CheckStatus status, std::string detail = "");
};

std::string to_string(CheckStatus s);
CheckStatus status_of(MemberStatus m);

/// Verifies that delta maps every relation into the tensor-square ideal at
/// the given completion bound, and that the counit laws hold exactly on
/// every generator.
Report check_bialgebra(const RelationSet& rels, const GeneratorTable& table,
                       const std::map<std::string, NcPoly>& delta,
                       const std::map<std::string, Scalar>& counit, int bound,
                       const CompletionOptions& opts = {});

} // namespace qgkit

#endif

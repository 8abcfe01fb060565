#include "qgkit/freealg.hpp"

#include <algorithm>
#include <cassert>
#include <sstream>

namespace qgkit {

GeneratorTable::GeneratorTable(const std::vector<std::string>& names) {
    for (const auto& n : names)
        add(n);
}

GenId GeneratorTable::add(const std::string& name) {
    if (name.empty() || name == "q")
        throw input_error("invalid generator name '" + name + "'");
    if (ids_.count(name))
        throw input_error("duplicate generator name '" + name + "'");
    GenId id = GenId(names_.size());
    names_.push_back(name);
    ids_[name] = id;
    return id;
}

GenId GeneratorTable::id(const std::string& name) const {
    auto it = ids_.find(name);
    if (it == ids_.end())
        throw input_error("unknown generator '" + name + "'");
    return it->second;
}

std::optional<GenId> GeneratorTable::find(const std::string& name) const {
    auto it = ids_.find(name);
    if (it == ids_.end())
        return std::nullopt;
    return it->second;
}

const std::string& GeneratorTable::name(GenId g) const {
    return names_.at(size_t(g));
}

Word GeneratorTable::word(const std::vector<std::string>& gens) const {
    Word w;
    w.reserve(gens.size());
    for (const auto& g : gens)
        w.push_back(id(g));
    return w;
}

std::string GeneratorTable::word_str(const Word& w) const {
    if (w.empty())
        return "1";
    std::string out;
    for (size_t i = 0; i < w.size(); ++i) {
        if (i)
            out += "*";
        out += name(w[i]);
    }
    return out;
}

bool deglex_less(const Word& a, const Word& b) {
    return DegLex{}(a, b);
}

NcPoly::NcPoly(const Word& w, const Scalar& c) : order_(c.root_order()) {
    if (!c.is_zero())
        terms_[w] = c;
}

NcPoly NcPoly::scalar(const Scalar& c) {
    return NcPoly(Word{}, c);
}

NcPoly NcPoly::one(RootOrder order) {
    return NcPoly(Word{}, Scalar::from_int(1, order));
}

int NcPoly::degree() const {
    if (terms_.empty())
        return -1;
    return int(terms_.rbegin()->first.size());
}

const Word& NcPoly::leading_word() const {
    if (terms_.empty())
        throw math_error("leading word of zero polynomial");
    return terms_.rbegin()->first;
}

const Scalar& NcPoly::leading_coeff() const {
    if (terms_.empty())
        throw math_error("leading coefficient of zero polynomial");
    return terms_.rbegin()->second;
}

void NcPoly::add_term(const Word& w, const Scalar& c) {
    if (c.is_zero())
        return;
    order_ = RootOrder(c.root_order());
    auto it = terms_.find(w);
    if (it == terms_.end()) {
        terms_[w] = c;
    } else {
        it->second += c;
        if (it->second.is_zero())
            terms_.erase(it);
    }
}

NcPoly NcPoly::operator+(const NcPoly& o) const {
    NcPoly r = *this;
    r += o;
    return r;
}

NcPoly& NcPoly::operator+=(const NcPoly& o) {
    for (const auto& [w, c] : o.terms_)
        add_term(w, c);
    return *this;
}

NcPoly& NcPoly::operator-=(const NcPoly& o) {
    for (const auto& [w, c] : o.terms_)
        add_term(w, -c);
    return *this;
}

NcPoly NcPoly::operator-() const {
    NcPoly r(order_);
    for (const auto& [w, c] : terms_)
        r.terms_[w] = -c;
    return r;
}

NcPoly NcPoly::operator-(const NcPoly& o) const {
    NcPoly r = *this;
    r -= o;
    return r;
}

NcPoly NcPoly::operator*(const NcPoly& o) const {
    NcPoly r(order_);
    for (const auto& [w1, c1] : terms_)
        for (const auto& [w2, c2] : o.terms_)
            r.add_term(w1 + w2, c1 * c2);
    return r;
}

NcPoly NcPoly::scaled(const Scalar& c) const {
    NcPoly r(order_);
    if (c.is_zero())
        return r;
    for (const auto& [w, k] : terms_)
        r.terms_[w] = k * c;
    return r;
}

NcPoly NcPoly::canonicalized() const {
    if (is_zero())
        return *this;
    RootOrder order(order_);
    LaurentPoly den_lcm(Rational(1));
    for (const auto& [w, c] : terms_) {
        LaurentPoly g = laurent_gcd(den_lcm, c.den());
        den_lcm = laurent_div_exact(den_lcm * c.den(), g);
    }
    Scalar mult = Scalar::ratio(den_lcm, LaurentPoly(Rational(1)), order);
    std::vector<LaurentPoly> nums;
    LaurentPoly content;
    for (const auto& [w, c] : terms_) {
        Scalar t = c * mult;
        nums.push_back(t.num());
        content = content.is_zero() ? t.num() : laurent_gcd(content, t.num());
    }
    long min_exp = 0;
    bool have = false;
    Rational num_gcd = 0, den_lcm_q = 1;
    for (auto& p : nums) {
        p = laurent_div_exact(p, content);
        if (!have || p.low_exp() < min_exp) {
            min_exp = p.low_exp();
            have = true;
        }
        for (const auto& [e, c] : p.coeffs()) {
            mpz_class n = abs(c.get_num());
            num_gcd = num_gcd == 0 ? Rational(n) : Rational(gcd(num_gcd.get_num(), n));
            den_lcm_q = Rational(lcm(den_lcm_q.get_num(), c.get_den()));
        }
    }
    Rational sign = nums.back().leading_coeff() < 0 ? -1 : 1; // leading word is last
    Rational scale = sign * den_lcm_q / num_gcd;
    NcPoly r(order);
    size_t idx = 0;
    for (const auto& [w, c] : terms_) {
        LaurentPoly p = nums[idx++].scaled(scale).shifted(-min_exp);
        r.terms_[w] = Scalar::ratio(std::move(p), LaurentPoly(Rational(1)), order);
    }
    return r;
}

std::optional<Scalar> NcPoly::proportional_to(const NcPoly& o) const {
    if (is_zero() || o.is_zero())
        return std::nullopt;
    if (terms_.size() != o.terms_.size())
        return std::nullopt;
    Scalar ratio = leading_coeff() / o.leading_coeff();
    auto it = terms_.begin();
    auto jt = o.terms_.begin();
    for (; it != terms_.end(); ++it, ++jt) {
        if (it->first != jt->first)
            return std::nullopt;
        if (!(it->second == jt->second * ratio))
            return std::nullopt;
    }
    return ratio;
}

void RelationSet::add(std::string name, NcPoly poly, std::string provenance) {
    for (const auto& r : items_)
        if (r.name == name)
            throw input_error("duplicate relation name '" + name + "'");
    items_.push_back({std::move(name), std::move(poly), std::move(provenance)});
}

// ---------------------------------------------------------------------------
// rewriting

std::optional<NcPoly> RewriteSystem::reduce_once(const Word& w) const {
    for (size_t pos = 0; pos < w.size(); ++pos) {
        GenId g = w[pos];
        if (size_t(g) >= byfirst_.size())
            continue;
        for (int idx : byfirst_[size_t(g)]) {
            const RewriteRule& rule = rules_[size_t(idx)];
            size_t len = rule.lhs.size();
            if (len > w.size() - pos)
                continue;
            if (w.compare(pos, len, rule.lhs) != 0)
                continue;
            Scalar one = Scalar::from_int(1, order_);
            NcPoly result = NcPoly(Word(w.substr(0, pos)), one) * rule.rhs;
            if (pos + len < w.size())
                result = result * NcPoly(Word(w.substr(pos + len)), one);
            return result;
        }
    }
    return std::nullopt;
}

void RewriteSystem::rebuild_index() {
    byfirst_.assign(size_t(table_.size()), {});
    for (size_t i = 0; i < rules_.size(); ++i)
        byfirst_[size_t(rules_[i].lhs.front())].push_back(int(i));
}

NcPoly normal_form(const NcPoly& p, const RewriteSystem& sys) {
    RootOrder order(p.root_order());
    NcPoly out(order);
    NcPoly agenda = p;
    while (!agenda.is_zero()) {
        Word w = agenda.leading_word();
        Scalar c = agenda.leading_coeff();
        auto red = sys.reduce_once(w);
        agenda.add_term(w, -c);
        if (!red) {
            out.add_term(w, c);
        } else {
            agenda += red->scaled(c);
        }
    }
    return out;
}

namespace {

RewriteRule orient(const NcPoly& p) {
    const Word& lead = p.leading_word();
    Scalar inv = p.leading_coeff().inv();
    NcPoly rhs = -(p - NcPoly(lead, p.leading_coeff())).scaled(inv);
    return {lead, std::move(rhs)};
}

} // namespace

void RewriteSystem::insert_rule(RewriteRule r) {
    auto at = std::lower_bound(rules_.begin(), rules_.end(), r,
                               [](const RewriteRule& a, const RewriteRule& b) {
                                   return deglex_less(a.lhs, b.lhs);
                               });
    rules_.insert(at, std::move(r));
    rebuild_index();
}

void RewriteSystem::add_relation(const NcPoly& p) {
    if (!p.is_zero())
        order_ = RootOrder(p.root_order());
    NcPoly nf = normal_form(p, *this);
    if (nf.is_zero())
        return;
    RewriteRule r = orient(nf);
    // rules whose lhs contains the new lhs are redundant; re-derive them
    std::vector<NcPoly> requeue;
    for (auto it = rules_.begin(); it != rules_.end();) {
        if (it->lhs.size() > r.lhs.size() && it->lhs.find(r.lhs) != Word::npos) {
            requeue.push_back(NcPoly(it->lhs, Scalar::from_int(1, order_)) - it->rhs);
            it = rules_.erase(it);
            ++epoch_;
        } else {
            ++it;
        }
    }
    rebuild_index();
    insert_rule(std::move(r));
    // keep right-hand sides reduced where the new lhs shows up
    const Word& lead = rules_.empty() ? Word{} : Word{};
    (void)lead;
    for (auto& rule : rules_) {
        bool touched = false;
        for (const auto& [w, c] : rule.rhs.terms())
            if (w.find(nf.leading_word()) != Word::npos) {
                touched = true;
                break;
            }
        if (touched) {
            rule.rhs = normal_form(rule.rhs, *this);
            ++epoch_;
        }
    }
    globally_confluent_ = false;
    for (const auto& rel : requeue)
        add_relation(rel);
}

void RewriteSystem::add_relations(const RelationSet& rels) {
    // smallest leading word first, so the initial system is deterministic
    std::vector<const Relation*> order;
    for (const auto& r : rels.items())
        if (!r.poly.is_zero())
            order.push_back(&r);
    std::stable_sort(order.begin(), order.end(), [](const Relation* a, const Relation* b) {
        return deglex_less(a->poly.leading_word(), b->poly.leading_word());
    });
    for (const auto* r : order)
        add_relation(r->poly);
}

namespace {

// Proper suffix-prefix overlaps: a tail of lhs1 equals a head of lhs2.
// Emits the difference of the two one-step reducts for each overlap word
// within the length bound; notes skipped overlaps beyond the bound.
void collect_overlaps(const RewriteRule& r1, const RewriteRule& r2, int max_len,
                      RootOrder order, std::vector<NcPoly>& out,
                      bool* skipped_any = nullptr) {
    size_t l1 = r1.lhs.size(), l2 = r2.lhs.size();
    for (size_t k = 1; k < l1 && k < l2; ++k) {
        if (r1.lhs.compare(l1 - k, k, r2.lhs, 0, k) != 0)
            continue;
        size_t len = l1 + l2 - k;
        if (int(len) > max_len) {
            if (skipped_any)
                *skipped_any = true;
            continue;
        }
        Scalar one = Scalar::from_int(1, order);
        NcPoly via1 = r1.rhs * NcPoly(Word(r2.lhs.substr(k)), one);
        NcPoly via2 = NcPoly(Word(r1.lhs.substr(0, l1 - k)), one) * r2.rhs;
        out.push_back(via1 - via2);
    }
}

} // namespace

RewriteSystem complete(RewriteSystem sys, int degree_bound,
                       const CompletionOptions& opts) {
    RootOrder order(sys.order_);
    // Pair cache: (lhs1, lhs2) -> epoch at which its overlaps were verified.
    // Entries are valid while the rule set has only grown since then; any
    // removal or right-hand-side rewrite bumps the epoch.
    std::map<std::pair<Word, Word>, size_t> verified;
    bool progress = true;
    while (progress) {
        progress = false;
        for (size_t a = 0; a < sys.rules_.size() && !progress; ++a) {
            for (size_t b = 0; b < sys.rules_.size() && !progress; ++b) {
                auto key = std::make_pair(sys.rules_[a].lhs, sys.rules_[b].lhs);
                auto it = verified.find(key);
                if (it != verified.end() && it->second == sys.epoch_)
                    continue;
                std::vector<NcPoly> sp;
                collect_overlaps(sys.rules_[a], sys.rules_[b], degree_bound, order, sp);
                // process smallest difference first for determinism
                std::sort(sp.begin(), sp.end(), [](const NcPoly& x, const NcPoly& y) {
                    if (x.is_zero() || y.is_zero())
                        return y.is_zero() < x.is_zero();
                    return deglex_less(x.leading_word(), y.leading_word());
                });
                bool clean = true;
                for (const auto& p : sp) {
                    NcPoly nf = normal_form(p, sys);
                    if (nf.is_zero())
                        continue;
                    sys.add_relation(nf);
                    if (int(sys.rules_.size()) > opts.max_rules)
                        throw resource_error("completion exceeded the rule budget (" +
                                             std::to_string(opts.max_rules) + " rules)");
                    clean = false;
                    progress = true;
                    break;
                }
                if (clean)
                    verified[key] = sys.epoch_;
            }
        }
    }
    sys.degree_bound_ = degree_bound;
    sys.completed_to_ = degree_bound;
    // globally confluent iff no overlap word exceeded the bound
    bool any_above = false;
    for (size_t a = 0; a < sys.rules_.size() && !any_above; ++a)
        for (size_t b = 0; b < sys.rules_.size() && !any_above; ++b) {
            const Word& w1 = sys.rules_[a].lhs;
            const Word& w2 = sys.rules_[b].lhs;
            for (size_t k = 1; k < w1.size() && k < w2.size(); ++k)
                if (w1.compare(w1.size() - k, k, w2, 0, k) == 0 &&
                    int(w1.size() + w2.size() - k) > degree_bound) {
                    any_above = true;
                    break;
                }
        }
    sys.globally_confluent_ = !any_above;
    return sys;
}

MemberStatus ideal_member_status(const NcPoly& p, const RewriteSystem& completed) {
    NcPoly nf = normal_form(p, completed);
    if (nf.is_zero())
        return MemberStatus::member;
    return completed.globally_confluent() ? MemberStatus::not_member
                                          : MemberStatus::undecided;
}

bool ideal_member(const NcPoly& p, RewriteSystem sys, int degree_bound,
                  const CompletionOptions& opts) {
    if (p.degree() > degree_bound)
        throw input_error("polynomial degree exceeds the membership bound");
    RewriteSystem done = complete(std::move(sys), degree_bound, opts);
    return ideal_member_status(p, done) == MemberStatus::member;
}

GeneratorTable tensor_table(const GeneratorTable& base,
                            const std::vector<std::string>& suffixes) {
    GeneratorTable t;
    for (const auto& sfx : suffixes)
        for (const auto& n : base.names())
            t.add(n + sfx);
    return t;
}

RewriteSystem tensor_legs(const std::vector<const RewriteSystem*>& legs,
                          const std::vector<std::string>& suffixes) {
    if (legs.size() != suffixes.size() || legs.empty())
        throw input_error("tensor_legs arity mismatch");
    GeneratorTable table;
    std::vector<int> offsets;
    RootOrder order(6);
    for (size_t i = 0; i < legs.size(); ++i) {
        offsets.push_back(table.size());
        for (const auto& n : legs[i]->table().names())
            table.add(n + suffixes[i]);
        order = legs[i]->order();
    }
    RewriteSystem sys(table);
    for (size_t i = 0; i < legs.size(); ++i) {
        for (const auto& rule : legs[i]->rules()) {
            Word lhs;
            for (GenId g : rule.lhs)
                lhs.push_back(GenId(g + offsets[i]));
            NcPoly rhs(order);
            for (const auto& [w, c] : rule.rhs.terms()) {
                Word t;
                for (GenId g : w)
                    t.push_back(GenId(g + offsets[i]));
                rhs.add_term(t, c);
            }
            sys.add_relation(NcPoly(lhs, Scalar::from_int(1, order)) - rhs);
        }
    }
    // letters of later legs move right past letters of earlier legs
    Scalar one = Scalar::from_int(1, order);
    for (size_t i = 0; i < legs.size(); ++i)
        for (size_t j = i + 1; j < legs.size(); ++j)
            for (int g = 0; g < legs[j]->table().size(); ++g)
                for (int h = 0; h < legs[i]->table().size(); ++h) {
                    Word lhs{GenId(g + offsets[j]), GenId(h + offsets[i])};
                    Word rhs{GenId(h + offsets[i]), GenId(g + offsets[j])};
                    sys.add_relation(NcPoly(lhs, one) - NcPoly(rhs, one));
                }
    return sys;
}

RewriteSystem tensor_square(const RewriteSystem& sys) {
    return tensor_legs({&sys, &sys}, {"_l", "_r"});
}

void GenMap::set(const std::string& source_gen, NcPoly image) {
    images_[source_.id(source_gen)] = std::move(image);
}

NcPoly GenMap::apply(const NcPoly& p) const {
    RootOrder order(p.root_order());
    NcPoly out(order);
    for (const auto& [w, c] : p.terms()) {
        NcPoly prod = NcPoly::scalar(c);
        for (GenId g : w) {
            auto it = images_.find(g);
            if (it == images_.end())
                throw input_error("unmapped generator '" + source_.name(g) + "'");
            prod = prod * it->second;
        }
        out += prod;
    }
    return out;
}

NcPoly apply_hom(const GenMap& map, const NcPoly& p) {
    return map.apply(p);
}

bool Report::all_pass() const {
    for (const auto& i : items)
        if (i.status != CheckStatus::pass)
            return false;
    return true;
}

void Report::add(std::string name, CheckStatus status, std::string detail) {
    items.push_back({std::move(name), status, std::move(detail)});
}

std::string to_string(CheckStatus s) {
    switch (s) {
    case CheckStatus::pass:
        return "pass";
    case CheckStatus::fail:
        return "fail";
    default:
        return "undecided-at-bound";
    }
}

CheckStatus status_of(MemberStatus m) {
    switch (m) {
    case MemberStatus::member:
        return CheckStatus::pass;
    case MemberStatus::not_member:
        return CheckStatus::fail;
    default:
        return CheckStatus::undecided;
    }
}

Report check_bialgebra(const RelationSet& rels, const GeneratorTable& table,
                       const std::map<std::string, NcPoly>& delta,
                       const std::map<std::string, Scalar>& counit, int bound,
                       const CompletionOptions& opts) {
    Report rep;
    rep.title = "bialgebra";
    RewriteSystem base(table);
    base.add_relations(rels);
    RewriteSystem completed = complete(tensor_square(base), bound, opts);

    GenMap dmap(table, completed.table());
    for (const auto& n : table.names()) {
        auto it = delta.find(n);
        if (it == delta.end())
            throw input_error("coproduct undefined on generator '" + n + "'");
        dmap.set(n, it->second);
    }

    for (const auto& rel : rels.items()) {
        NcPoly image = dmap.apply(rel.poly);
        MemberStatus st = ideal_member_status(image, completed);
        std::string detail;
        if (st != MemberStatus::member) {
            NcPoly res = normal_form(image, completed);
            detail = "residual with " + std::to_string(res.terms().size()) + " terms";
        }
        rep.add("delta." + rel.name, status_of(st), detail);
    }

    // counit laws, exact on generators
    RootOrder order(6);
    for (const auto& [n, c] : counit)
        order = RootOrder(c.root_order());
    GenMap eps_left(completed.table(), table), eps_right(completed.table(), table);
    Scalar one = Scalar::from_int(1, order);
    for (const auto& n : table.names()) {
        auto it = counit.find(n);
        if (it == counit.end())
            throw input_error("counit undefined on generator '" + n + "'");
        eps_left.set(n + "_l", NcPoly::scalar(it->second));
        eps_left.set(n + "_r", NcPoly(Word{table.id(n)}, one));
        eps_right.set(n + "_l", NcPoly(Word{table.id(n)}, one));
        eps_right.set(n + "_r", NcPoly::scalar(it->second));
    }
    for (const auto& n : table.names()) {
        NcPoly g(Word{table.id(n)}, one);
        NcPoly left = eps_left.apply(delta.at(n));
        NcPoly right = eps_right.apply(delta.at(n));
        rep.add("counit.left." + n,
                left == g ? CheckStatus::pass : CheckStatus::fail);
        rep.add("counit.right." + n,
                right == g ? CheckStatus::pass : CheckStatus::fail);
    }
    return rep;
}

} // namespace qgkit

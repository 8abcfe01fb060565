#include "qgkit/oscillator.hpp"

namespace qgkit {

GeneratorTable oscillator_table() {
    return GeneratorTable({"B", "A"});
}

NcPoly oscillator_relation(RootOrder order) {
    GeneratorTable t = oscillator_table();
    Scalar one = Scalar::from_int(1, order);
    Scalar q2 = Scalar::q_power(2, order);
    return NcPoly(t.word({"A", "B"}), one) - NcPoly(t.word({"B", "A"}), q2) -
           NcPoly::one(order);
}

GeneratorTable combined_table(bool second_grouplike) {
    std::vector<std::string> names{"x", "y", "z"};
    if (second_grouplike)
        names.push_back("zp");
    names.push_back("B");
    names.push_back("A");
    return GeneratorTable(names);
}

RewriteSystem combined_system(RootOrder order, bool second_grouplike) {
    GeneratorTable t = combined_table(second_grouplike);
    RewriteSystem sys(t);
    Scalar one = Scalar::from_int(1, order);
    Scalar q2 = Scalar::q_power(2, order);
    sys.add_relation(NcPoly(t.word({"A", "B"}), one) - NcPoly(t.word({"B", "A"}), q2) -
                     NcPoly::one(order));
    std::vector<std::string> coeffs{"x", "y", "z"};
    if (second_grouplike)
        coeffs.push_back("zp");
    for (const char* osc : {"A", "B"})
        for (const auto& c : coeffs)
            sys.add_relation(NcPoly(t.word({osc, c}), one) -
                             NcPoly(t.word({c, osc}), one));
    return sys;
}

CoactionMap standard_coaction(RootOrder order) {
    GeneratorTable t = combined_table();
    Scalar one = Scalar::from_int(1, order);
    return {NcPoly(t.word({"z", "A"}), one) + NcPoly(t.word({"x"}), one),
            NcPoly(t.word({"z", "B"}), one) + NcPoly(t.word({"y"}), one)};
}

CoactionMap generalized_coaction(RootOrder order) {
    GeneratorTable t = combined_table(true);
    Scalar one = Scalar::from_int(1, order);
    return {NcPoly(t.word({"z", "A"}), one) + NcPoly(t.word({"x"}), one),
            NcPoly(t.word({"zp", "B"}), one) + NcPoly(t.word({"y"}), one)};
}

std::vector<Constraint> covariance_constraints(const NcPoly& rel,
                                               const CoactionMap& coaction,
                                               RootOrder order,
                                               bool second_grouplike) {
    GeneratorTable osc = oscillator_table();
    RewriteSystem sys = combined_system(order, second_grouplike);
    const GeneratorTable& comb = sys.table();
    GenMap subst(osc, comb);
    subst.set("A", coaction.image_a);
    subst.set("B", coaction.image_b);
    NcPoly image = normal_form(subst.apply(rel), sys);

    // coefficient letters: everything before B in the combined order
    GenId b_id = comb.id("B");
    GeneratorTable coeff;
    for (int g = 0; g < int(b_id); ++g)
        coeff.add(comb.name(GenId(g)));

    std::map<Word, NcPoly, DegLex> by_suffix;
    for (const auto& [w, c] : image.terms()) {
        size_t cut = 0;
        while (cut < w.size() && w[cut] < b_id)
            ++cut;
        Word prefix = Word(w.substr(0, cut));
        Word suffix = Word(w.substr(cut));
        for (GenId g : suffix)
            if (g < b_id)
                throw math_error("normal form is not coefficient-ordered");
        auto [it, inserted] = by_suffix.try_emplace(suffix, NcPoly(order));
        it->second.add_term(prefix, c);
    }
    std::vector<Constraint> out;
    for (auto it = by_suffix.rbegin(); it != by_suffix.rend(); ++it) {
        if (it->second.is_zero())
            continue;
        out.push_back({comb.word_str(it->first), it->second.canonicalized()});
    }
    return out;
}

GeneratorTable coefficient_table() {
    return GeneratorTable({"x", "y", "z"});
}

RelationSet coefficient_relations(RootOrder order) {
    auto constraints =
        covariance_constraints(oscillator_relation(order), standard_coaction(order), order);
    RelationSet out;
    for (const auto& c : constraints)
        out.add("coefficient." + c.oscillator_word, c.poly, "covariance");
    return out;
}

std::map<std::string, NcPoly> coefficient_delta(RootOrder order) {
    GeneratorTable doubled = tensor_table(coefficient_table(), {"_l", "_r"});
    Scalar one = Scalar::from_int(1, order);
    auto mono = [&](std::initializer_list<const char*> gens) {
        Word w;
        for (const char* g : gens)
            w.push_back(doubled.id(g));
        return NcPoly(w, one);
    };
    std::map<std::string, NcPoly> delta;
    delta["z"] = mono({"z_l", "z_r"});
    delta["x"] = mono({"x_l"}) + mono({"z_l", "x_r"});
    delta["y"] = mono({"y_l"}) + mono({"z_l", "y_r"});
    return delta;
}

std::map<std::string, Scalar> coefficient_counit(RootOrder order) {
    std::map<std::string, Scalar> eps;
    eps["z"] = Scalar::from_int(1, order);
    eps["x"] = Scalar(order);
    eps["y"] = Scalar(order);
    return eps;
}

namespace {

RewriteSystem coefficient_system(RootOrder order) {
    RewriteSystem sys(coefficient_table());
    sys.add_relations(coefficient_relations(order));
    return sys;
}

RewriteSystem oscillator_system(RootOrder order) {
    RewriteSystem sys(oscillator_table());
    sys.add_relation(oscillator_relation(order));
    return sys;
}

// relabel a polynomial over `from` into `to` by appending a suffix
NcPoly relabel(const NcPoly& p, const GeneratorTable& from, const GeneratorTable& to,
               const std::string& suffix) {
    NcPoly out((RootOrder(p.root_order())));
    for (const auto& [w, c] : p.terms()) {
        Word t;
        for (GenId g : w)
            t.push_back(to.id(from.name(g) + suffix));
        out.add_term(t, c);
    }
    return out;
}

} // namespace

Report check_comodule(const CoactionMap& coaction,
                      const std::map<std::string, NcPoly>& delta,
                      const std::map<std::string, Scalar>& counit,
                      RootOrder order) {
    Report rep;
    rep.title = "comodule";
    RewriteSystem a_sys = coefficient_system(order);
    RewriteSystem m_sys = oscillator_system(order);
    RewriteSystem legs = tensor_legs({&a_sys, &a_sys, &m_sys}, {"_1", "_2", "_3"});
    const GeneratorTable& three = legs.table();
    GeneratorTable comb = combined_table();
    GeneratorTable doubled = tensor_table(coefficient_table(), {"_l", "_r"});

    // (Delta x id) delta: coefficient letters expand through Delta into
    // legs 1 and 2; oscillator letters go to leg 3.
    GenMap left(comb, three);
    for (const char* g : {"x", "y", "z"}) {
        auto it = delta.find(g);
        if (it == delta.end())
            throw input_error(std::string("coproduct undefined on '") + g + "'");
        NcPoly img((RootOrder(order)));
        Scalar one = Scalar::from_int(1, order);
        for (const auto& [w, c] : it->second.terms()) {
            Word t;
            for (GenId d : w) {
                std::string n = doubled.name(d);
                // x_l -> x_1, x_r -> x_2
                std::string base = n.substr(0, n.size() - 2);
                t.push_back(three.id(base + (n.ends_with("_l") ? "_1" : "_2")));
            }
            img.add_term(t, c);
        }
        left.set(g, img);
    }
    left.set("A", NcPoly(Word{three.id("A_3")}, Scalar::from_int(1, order)));
    left.set("B", NcPoly(Word{three.id("B_3")}, Scalar::from_int(1, order)));

    // (id x delta) delta: coefficient letters land on leg 1; the oscillator
    // letters expand through the coaction into legs 2 and 3.
    GenMap right(comb, three);
    for (const char* g : {"x", "y", "z"})
        right.set(g, NcPoly(Word{three.id(std::string(g) + "_1")},
                            Scalar::from_int(1, order)));
    auto shift_coaction = [&](const NcPoly& p) {
        NcPoly out((RootOrder(order)));
        for (const auto& [w, c] : p.terms()) {
            Word t;
            for (GenId g : w) {
                std::string n = comb.name(g);
                t.push_back(three.id(n + (n == "A" || n == "B" ? "_3" : "_2")));
            }
            out.add_term(t, c);
        }
        return out;
    };
    right.set("A", shift_coaction(coaction.image_a));
    right.set("B", shift_coaction(coaction.image_b));

    for (const char* g : {"A", "B"}) {
        const NcPoly& image = g[0] == 'A' ? coaction.image_a : coaction.image_b;
        NcPoly lhs = normal_form(left.apply(image), legs);
        NcPoly rhs = normal_form(right.apply(image), legs);
        rep.add(std::string("coassoc.") + g,
                lhs == rhs ? CheckStatus::pass : CheckStatus::fail);
    }

    // counit law (eps x id) delta = id
    GeneratorTable osc = oscillator_table();
    GenMap eps(comb, osc);
    for (const char* g : {"x", "y", "z"}) {
        auto it = counit.find(g);
        if (it == counit.end())
            throw input_error(std::string("counit undefined on '") + g + "'");
        eps.set(g, NcPoly::scalar(it->second));
    }
    Scalar one = Scalar::from_int(1, order);
    eps.set("A", NcPoly(Word{osc.id("A")}, one));
    eps.set("B", NcPoly(Word{osc.id("B")}, one));
    rep.add("counit.A", eps.apply(coaction.image_a) == NcPoly(Word{osc.id("A")}, one)
                            ? CheckStatus::pass
                            : CheckStatus::fail);
    rep.add("counit.B", eps.apply(coaction.image_b) == NcPoly(Word{osc.id("B")}, one)
                            ? CheckStatus::pass
                            : CheckStatus::fail);
    return rep;
}

Report check_coassociativity(const std::map<std::string, NcPoly>& delta,
                             RootOrder order) {
    Report rep;
    rep.title = "coassociativity";
    RewriteSystem a_sys = coefficient_system(order);
    RewriteSystem legs = tensor_legs({&a_sys, &a_sys, &a_sys}, {"_1", "_2", "_3"});
    const GeneratorTable& three = legs.table();
    GeneratorTable base = coefficient_table();
    GeneratorTable doubled = tensor_table(base, {"_l", "_r"});

    auto build = [&](bool delta_on_left) {
        GenMap m(doubled, three);
        for (const char* g : {"x", "y", "z"}) {
            NcPoly img((RootOrder(order)));
            for (const auto& [w, c] : delta.at(g).terms()) {
                Word t;
                for (GenId d : w) {
                    std::string n = doubled.name(d);
                    std::string stem = n.substr(0, n.size() - 2);
                    bool is_l = n.ends_with("_l");
                    std::string leg = delta_on_left ? (is_l ? "_1" : "_2")
                                                    : (is_l ? "_2" : "_3");
                    t.push_back(three.id(stem + leg));
                }
                img.add_term(t, c);
            }
            if (delta_on_left)
                m.set(std::string(g) + "_l", img);
            else
                m.set(std::string(g) + "_r", img);
        }
        Scalar one = Scalar::from_int(1, order);
        for (const char* g : {"x", "y", "z"}) {
            if (delta_on_left)
                m.set(std::string(g) + "_r",
                      NcPoly(Word{three.id(std::string(g) + "_3")}, one));
            else
                m.set(std::string(g) + "_l",
                      NcPoly(Word{three.id(std::string(g) + "_1")}, one));
        }
        return m;
    };
    GenMap left = build(true);   // (Delta x id) Delta
    GenMap right = build(false); // (id x Delta) Delta

    for (const char* g : {"x", "y", "z"}) {
        NcPoly lhs = normal_form(left.apply(delta.at(g)), legs);
        NcPoly rhs = normal_form(right.apply(delta.at(g)), legs);
        rep.add(std::string("coassoc.") + g,
                lhs == rhs ? CheckStatus::pass : CheckStatus::fail);
    }
    return rep;
}

// ---------------------------------------------------------------------------
// rank-one target

GeneratorTable sl2_table() {
    return GeneratorTable({"s", "Kb", "K", "Xm", "Xp"});
}

RelationSet sl2_relations(RootOrder order, bool with_square) {
    GeneratorTable t = sl2_table();
    Scalar one = Scalar::from_int(1, order);
    Scalar q = Scalar::q(order);
    RelationSet rels;
    auto w = [&](std::initializer_list<const char*> gens) {
        std::vector<std::string> v;
        for (const char* g : gens)
            v.emplace_back(g);
        return NcPoly(t.word(v), one);
    };
    rels.add("unit.K", w({"K", "Kb"}) - NcPoly::one(order), "cartan");
    rels.add("unit.Kb", w({"Kb", "K"}) - NcPoly::one(order), "cartan");
    rels.add("weight.p", w({"K", "Xp"}) - w({"Xp", "K"}).scaled(q), "weights");
    rels.add("weight.m", w({"K", "Xm"}) - w({"Xm", "K"}).scaled(q.inv()), "weights");
    Scalar denom = q - q.inv();
    rels.add("ladder",
             w({"Xp", "Xm"}) - w({"Xm", "Xp"}) -
                 (w({"K", "K"}) - w({"Kb", "Kb"})).scaled(denom.inv()),
             "ladder");
    for (const char* g : {"Kb", "K", "Xm", "Xp"})
        rels.add(std::string("central.") + g, w({g, "s"}) - w({"s", g}), "square-root");
    if (with_square)
        rels.add("square.s", w({"s", "s"}) - NcPoly::scalar(denom), "square-root");
    return rels;
}

namespace {

NcPoly parity_part(const NcPoly& p, GenId s_id, int parity) {
    NcPoly out((RootOrder(p.root_order())));
    for (const auto& [w, c] : p.terms()) {
        int count = 0;
        for (GenId g : w)
            if (g == s_id)
                ++count;
        if (count % 2 == parity)
            out.add_term(w, c);
    }
    return out;
}

} // namespace

Report verify_sl2_substitution(int bound, RootOrder order,
                               const CompletionOptions& opts) {
    Report rep;
    rep.title = "sl2-substitution";
    GeneratorTable target = sl2_table();
    RewriteSystem full(target), no_square(target);
    full.add_relations(sl2_relations(order, true));
    no_square.add_relations(sl2_relations(order, false));
    RewriteSystem completed = complete(std::move(full), bound, opts);
    RewriteSystem completed_ns = complete(std::move(no_square), bound, opts);

    GeneratorTable coeff = coefficient_table();
    Scalar one = Scalar::from_int(1, order);
    GenMap subst(coeff, target);
    subst.set("z", NcPoly(target.word({"Kb", "Kb"}), one));
    subst.set("x", NcPoly(target.word({"s", "Kb", "Xp"}), one));
    subst.set("y", NcPoly(target.word({"s", "Xm", "Kb"}), one));

    GenId s_id = target.id("s");
    for (const auto& rel : coefficient_relations(order).items()) {
        NcPoly image = subst.apply(rel.poly);
        NcPoly res = normal_form(image, completed);
        rep.add("relation." + rel.name,
                res.is_zero() ? CheckStatus::pass : CheckStatus::fail,
                res.is_zero() ? "" : "residual " + std::to_string(res.terms().size()) + " terms");
        // the square root enters through its square only: the odd part must
        // cancel without using the square relation at all
        NcPoly odd = parity_part(image, s_id, 1);
        NcPoly odd_res = normal_form(odd, completed_ns);
        rep.add("square-root.odd." + rel.name,
                odd_res.is_zero() ? CheckStatus::pass : CheckStatus::fail);
        NcPoly even_res = normal_form(parity_part(image, s_id, 0), completed);
        rep.add("square-root.even." + rel.name,
                even_res.is_zero() ? CheckStatus::pass : CheckStatus::fail);
    }

    // coproduct compatibility in the doubled target; the square root is a
    // scalar-extension letter shared by the two legs
    GeneratorTable dt;
    dt.add("s");
    for (const char* sfx : {"_l", "_r"})
        for (const char* g : {"Kb", "K", "Xm", "Xp"})
            dt.add(std::string(g) + sfx);
    RewriteSystem dsys(dt);
    Scalar q = Scalar::q(order);
    Scalar denom = q - q.inv();
    auto dw = [&](std::initializer_list<std::string> gens) {
        std::vector<std::string> v(gens);
        return NcPoly(dt.word(v), one);
    };
    for (const char* sfx : {"_l", "_r"}) {
        std::string K = std::string("K") + sfx, Kb = std::string("Kb") + sfx,
                    Xp = std::string("Xp") + sfx, Xm = std::string("Xm") + sfx;
        dsys.add_relation(dw({K, Kb}) - NcPoly::one(order));
        dsys.add_relation(dw({Kb, K}) - NcPoly::one(order));
        dsys.add_relation(dw({K, Xp}) - dw({Xp, K}).scaled(q));
        dsys.add_relation(dw({K, Xm}) - dw({Xm, K}).scaled(q.inv()));
        dsys.add_relation(dw({Xp, Xm}) - dw({Xm, Xp}) -
                          (dw({K, K}) - dw({Kb, Kb})).scaled(denom.inv()));
    }
    for (const char* gl : {"Kb_l", "K_l", "Xm_l", "Xp_l"})
        for (const char* gr : {"Kb_r", "K_r", "Xm_r", "Xp_r"})
            dsys.add_relation(dw({gr, gl}) - dw({gl, gr}));
    for (int g = 1; g < dt.size(); ++g)
        dsys.add_relation(dw({dt.name(GenId(g)), "s"}) - dw({"s", dt.name(GenId(g))}));
    dsys.add_relation(dw({"s", "s"}) - NcPoly::scalar(denom));
    RewriteSystem dcompleted = complete(std::move(dsys), bound, opts);

    GenMap delta_t(target, dt); // target coproduct
    delta_t.set("s", dw({"s"}));
    delta_t.set("K", dw({"K_l", "K_r"}));
    delta_t.set("Kb", dw({"Kb_l", "Kb_r"}));
    delta_t.set("Xp", dw({"Xp_l", "K_r"}) + dw({"Kb_l", "Xp_r"}));
    delta_t.set("Xm", dw({"Xm_l", "K_r"}) + dw({"Kb_l", "Xm_r"}));

    GeneratorTable doubled_coeff = tensor_table(coeff, {"_l", "_r"});
    GenMap subst_both(doubled_coeff, dt);
    for (const char* g : {"x", "y", "z"}) {
        for (const char* sfx : {"_l", "_r"}) {
            NcPoly img((RootOrder(order)));
            for (const auto& [w, c] : subst.apply(NcPoly(Word{coeff.id(g)}, one)).terms()) {
                Word t;
                for (GenId d : w) {
                    std::string n = target.name(d);
                    t.push_back(n == "s" ? dt.id("s") : dt.id(n + sfx));
                }
                img.add_term(t, c);
            }
            subst_both.set(std::string(g) + sfx, img);
        }
    }
    auto delta_a = coefficient_delta(order);
    for (const char* g : {"x", "y", "z"}) {
        NcPoly via_target = normal_form(delta_t.apply(subst.apply(
                                            NcPoly(Word{coeff.id(g)}, one))),
                                        dcompleted);
        NcPoly via_coeff = normal_form(subst_both.apply(delta_a.at(g)), dcompleted);
        rep.add(std::string("delta.") + g,
                via_target == via_coeff ? CheckStatus::pass : CheckStatus::fail);
    }
    return rep;
}

} // namespace qgkit

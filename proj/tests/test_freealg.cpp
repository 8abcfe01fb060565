#include <doctest.h>

#include "qgkit/expr.hpp"
#include "qgkit/freealg.hpp"

#include <random>

using namespace qgkit;

namespace {

const RootOrder m6(6);

Scalar one() { return Scalar::from_int(1, m6); }
Scalar q() { return Scalar::q(m6); }

RewriteSystem oscillator_demo() {
    GeneratorTable t({"B", "A"});
    RewriteSystem sys(t);
    sys.add_relation(parse_expression("A*B - q^(2)*B*A - 1", t, m6));
    return sys;
}

NcPoly random_poly(std::mt19937& rng, const GeneratorTable& table, int max_len = 4) {
    std::uniform_int_distribution<int> nterms(1, 4), len(0, max_len), coeff(-3, 3),
        gen(0, table.size() - 1);
    NcPoly p(m6);
    for (int i = 0; i < nterms(rng); ++i) {
        Word w;
        int l = len(rng);
        for (int k = 0; k < l; ++k)
            w.push_back(GenId(gen(rng)));
        int c = coeff(rng);
        if (c)
            p.add_term(w, Scalar::from_int(c, m6));
    }
    return p;
}

} // namespace

TEST_CASE("deglex order") {
    GeneratorTable t({"a", "b"});
    CHECK(deglex_less(t.word({"b"}), t.word({"a", "a"})));
    CHECK(deglex_less(t.word({"a", "b"}), t.word({"b", "a"})));
    CHECK(!deglex_less(t.word({"b", "a"}), t.word({"a", "b"})));
}

TEST_CASE("normal form rewrites a rule's left side to its right side") {
    RewriteSystem sys = oscillator_demo();
    REQUIRE(sys.rules().size() == 1);
    const auto& rule = sys.rules().front();
    NcPoly lhs(rule.lhs, one());
    CHECK(normal_form(lhs, sys) == rule.rhs);
    CHECK(normal_form(NcPoly(m6), sys).is_zero());
}

TEST_CASE("two-step oscillator reduction") {
    RewriteSystem sys = oscillator_demo();
    const GeneratorTable& t = sys.table();
    NcPoly aab = parse_expression("A*A*B", t, m6);
    NcPoly expect = parse_expression("q^(4)*B*A*A + (1 + q^(2))*A", t, m6);
    CHECK(normal_form(aab, sys) == expect);
}

TEST_CASE("idempotence and congruence of normal forms") {
    RewriteSystem sys = complete(oscillator_demo(), 6);
    std::mt19937 rng(42);
    for (int iter = 0; iter < 200; ++iter) {
        NcPoly p = random_poly(rng, sys.table());
        NcPoly q1 = random_poly(rng, sys.table(), 3);
        NcPoly np = normal_form(p, sys);
        CHECK(normal_form(np, sys) == np);
        CHECK(normal_form(p * q1, sys) ==
              normal_form(normal_form(p, sys) * normal_form(q1, sys), sys));
    }
}

TEST_CASE("already-commutative pair completes to itself") {
    GeneratorTable t({"x", "y"});
    RewriteSystem sys(t);
    sys.add_relation(parse_expression("y*x - x*y", t, m6));
    RewriteSystem done = complete(sys, 6);
    CHECK(done.rules().size() == 1);
    CHECK(done.globally_confluent());
}

TEST_CASE("single oscillator rule has no overlaps") {
    RewriteSystem done = complete(oscillator_demo(), 8);
    CHECK(done.rules().size() == 1);
    CHECK(done.globally_confluent());
}

TEST_CASE("completion budget error") {
    GeneratorTable t({"u", "v"});
    RewriteSystem sys(t);
    sys.add_relation(parse_expression("v*u - q*u*v", t, m6));
    sys.add_relation(parse_expression("v*v*u - u*v", t, m6));
    CompletionOptions opts;
    opts.max_rules = 1;
    CHECK_THROWS_AS(complete(sys, 8, opts), resource_error);
}

TEST_CASE("completion is monotone in the bound") {
    GeneratorTable t({"d", "e"});
    RewriteSystem sys(t);
    sys.add_relation(parse_expression("e*d - q*d*e", t, m6));
    sys.add_relation(parse_expression("e*e*d - (1+q)*e*d*e + q*d*e*e", t, m6));
    RewriteSystem lo = complete(sys, 4);
    RewriteSystem hi = complete(sys, 7);
    for (const auto& r : lo.rules()) {
        bool found = false;
        for (const auto& s : hi.rules())
            if (s.lhs == r.lhs && s.rhs == r.rhs)
                found = true;
        CHECK(found);
    }
}

TEST_CASE("ideal membership") {
    GeneratorTable t({"B", "A"});
    RewriteSystem sys(t);
    NcPoly rel = parse_expression("A*B - q^(2)*B*A - 1", t, m6);
    sys.add_relation(rel);
    CHECK(ideal_member(rel, sys, 6));
    CHECK(ideal_member(parse_expression("A*A*B - q^(2)*A*B*A - A", t, m6), sys, 6));
    CHECK(!ideal_member(parse_expression("A*B - B*A", t, m6), sys, 6));
}

TEST_CASE("tensor square doubles generators and commutes the legs") {
    GeneratorTable t({"g"});
    RewriteSystem sys(t);
    RewriteSystem sq = tensor_square(sys);
    CHECK(sq.table().names() == std::vector<std::string>{"g_l", "g_r"});
    REQUIRE(sq.rules().size() == 1);
    CHECK(sq.rules()[0].lhs == sq.table().word({"g_r", "g_l"}));

    GeneratorTable t2({"g", "h"});
    RewriteSystem sys2(t2);
    RewriteSystem sq2 = tensor_square(sys2);
    NcPoly w = parse_expression("g_r*h_l*g_l", sq2.table(), m6);
    NcPoly nf = normal_form(w, sq2);
    CHECK(nf == parse_expression("h_l*g_l*g_r", sq2.table(), m6));
}

TEST_CASE("lifted rules act independently on each leg") {
    RewriteSystem sq = tensor_square(oscillator_demo());
    const GeneratorTable& t = sq.table();
    CHECK(normal_form(parse_expression("A_l*B_l", t, m6), sq) ==
          parse_expression("q^(2)*B_l*A_l + 1", t, m6));
    CHECK(normal_form(parse_expression("A_r*B_r", t, m6), sq) ==
          parse_expression("q^(2)*B_r*A_r + 1", t, m6));
}

TEST_CASE("tensor square of a complete system stays complete") {
    RewriteSystem base = complete(oscillator_demo(), 6);
    RewriteSystem sq = tensor_square(base);
    size_t before = sq.rules().size();
    RewriteSystem done = complete(sq, 6);
    CHECK(done.rules().size() == before);
}

TEST_CASE("generator-wise maps extend multiplicatively") {
    GeneratorTable t({"u", "v"});
    GeneratorTable target({"u", "v"});
    GenMap identity(t, target);
    Scalar c = one();
    identity.set("u", NcPoly(target.word({"u"}), c));
    identity.set("v", NcPoly(target.word({"v"}), c));
    std::mt19937 rng(5);
    for (int iter = 0; iter < 50; ++iter) {
        NcPoly p = random_poly(rng, t);
        CHECK(identity.apply(p) == p);
    }
    GenMap zero_map(t, target);
    zero_map.set("u", NcPoly(m6));
    zero_map.set("v", NcPoly(target.word({"v"}), c));
    NcPoly p = parse_expression("u*v + v*u + v", t, m6);
    CHECK(zero_map.apply(p) == parse_expression("v", target, m6));
    GenMap partial(t, target);
    partial.set("u", NcPoly(target.word({"u"}), c));
    CHECK_THROWS_AS(partial.apply(p), input_error);
}

TEST_CASE("relation sets reject duplicate names") {
    RelationSet rels;
    rels.add("r", NcPoly(m6));
    CHECK_THROWS_AS(rels.add("r", NcPoly(m6)), input_error);
}

TEST_CASE("canonicalization clears denominators and fixes sign") {
    GeneratorTable t({"u", "v"});
    NcPoly p = parse_expression("v*u/(q - q^(-1)) - q*u*v/(q - q^(-1))", t, m6);
    NcPoly c = p.canonicalized();
    CHECK(c == parse_expression("v*u - q*u*v", t, m6));
    NcPoly flipped = parse_expression("q*u*v - v*u", t, m6);
    CHECK(flipped.canonicalized() == c);
}

TEST_CASE("proportionality detection") {
    GeneratorTable t({"u", "v"});
    NcPoly a = parse_expression("u*v - q*v*u", t, m6);
    NcPoly b = parse_expression("q*u*v - q^(2)*v*u", t, m6);
    auto r = b.proportional_to(a);
    REQUIRE(r.has_value());
    CHECK(*r == q());
    CHECK(!a.proportional_to(parse_expression("u*v + v", t, m6)).has_value());
}

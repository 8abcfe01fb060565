#include "qgkit/envelope.hpp"

#include <array>
#include <numeric>
#include <sstream>

namespace qgkit {

CartanMatrix::CartanMatrix(int a11, int a12, int a21, int a22) {
    a[0][0] = a11;
    a[0][1] = a12;
    a[1][0] = a21;
    a[1][1] = a22;
    if (a11 != 2 || a22 != 2)
        throw input_error("Cartan diagonal entries must be 2");
    if (a12 > 0 || a21 > 0)
        throw input_error("Cartan off-diagonal entries must be <= 0");
    if ((a12 == 0) != (a21 == 0))
        throw input_error("Cartan matrix is not symmetrizable");
    if (a12 == 0) {
        d[0] = d[1] = 1;
    } else {
        int g = std::gcd(-a12, -a21);
        d[0] = -a21 / g;
        d[1] = -a12 / g;
    }
    if (long(d[0]) * a[0][1] != long(d[1]) * a[1][0])
        throw input_error("symmetrizer failure");
}

CartanMatrix CartanMatrix::for_order(int n) {
    if (n < 2)
        throw input_error("order must be at least 2");
    return CartanMatrix(2, -1, -(n - 1), 2);
}

namespace {

Scalar q_number(int m, RootOrder order, const Rational& base) {
    // [m] = (q^(bm) - q^(-bm)) / (q^b - q^(-b))
    Scalar num = Scalar::q_power(base * m, order) - Scalar::q_power(-base * m, order);
    Scalar den = Scalar::q_power(base, order) - Scalar::q_power(-base, order);
    return num / den;
}

} // namespace

Scalar qbinom(int n, int k, RootOrder order, const Rational& base) {
    if (k < 0 || k > n)
        throw input_error("binomial index out of range");
    Scalar acc = Scalar::from_int(1, order);
    for (int i = 1; i <= k; ++i)
        acc = acc * q_number(n - k + i, order, base) / q_number(i, order, base);
    if (!acc.is_polynomial())
        throw math_error("q-binomial failed to clear denominators");
    return acc;
}

std::vector<NcPoly> serre_relations(const CartanMatrix& cartan,
                                    const GeneratorTable& table,
                                    const std::string& x1, const std::string& x2,
                                    RootOrder order, const Rational& base) {
    std::array<GenId, 2> x{table.id(x1), table.id(x2)};
    std::vector<NcPoly> out;
    for (int i = 0; i < 2; ++i) {
        int j = 1 - i;
        int m = 1 - cartan.a[i][j];
        Rational qi = base * cartan.d[i];
        NcPoly rel(order);
        for (int r = 0; r <= m; ++r) {
            Scalar coeff = qbinom(m, r, order, qi);
            if (r % 2)
                coeff = -coeff;
            Word w;
            for (int t = 0; t < m - r; ++t)
                w.push_back(x[size_t(i)]);
            w.push_back(x[size_t(j)]);
            for (int t = 0; t < r; ++t)
                w.push_back(x[size_t(i)]);
            rel.add_term(w, coeff);
        }
        out.push_back(std::move(rel));
    }
    return out;
}

namespace {

DJPresentation dj_build(const CartanMatrix& cartan, RootOrder order,
                        const Rational& base, bool squared) {
    // Cartan generators first (pairwise commuting), then the raising and
    // lowering generators.
    std::vector<std::string> cart =
        squared ? std::vector<std::string>{"K1", "Kb1", "K2", "Kb2"}
                : std::vector<std::string>{"k1", "kb1", "k2", "kb2"};
    GeneratorTable table(cart);
    table.add("X1p");
    table.add("X1m");
    table.add("X2p");
    table.add("X2m");
    Scalar one = Scalar::from_int(1, order);
    auto gen = [&](const std::string& n) { return NcPoly(Word{table.id(n)}, one); };
    auto kpow = [&](int i) { // K_i as a word: k_i^2 or the single K_i
        Word w;
        GenId g = table.id(cart[size_t(2 * i)]);
        w.push_back(g);
        if (!squared)
            w.push_back(g);
        return NcPoly(w, one);
    };
    auto kbar_pow = [&](int i) {
        Word w;
        GenId g = table.id(cart[size_t(2 * i + 1)]);
        w.push_back(g);
        if (!squared)
            w.push_back(g);
        return NcPoly(w, one);
    };
    RelationSet rels;
    NcPoly unit = NcPoly::one(order);
    for (int i = 0; i < 2; ++i) {
        rels.add("inverse." + cart[size_t(2 * i)],
                 gen(cart[size_t(2 * i)]) * gen(cart[size_t(2 * i + 1)]) - unit, "cartan");
        rels.add("inverse." + cart[size_t(2 * i + 1)],
                 gen(cart[size_t(2 * i + 1)]) * gen(cart[size_t(2 * i)]) - unit, "cartan");
    }
    for (size_t p = 0; p < cart.size(); ++p)
        for (size_t r = p + 1; r < cart.size(); ++r) {
            if (r == p + 1 && p % 2 == 0)
                continue; // inverse pair already commutes via the unit relations
            rels.add("commute." + cart[p] + "." + cart[r],
                     gen(cart[p]) * gen(cart[r]) - gen(cart[r]) * gen(cart[p]), "cartan");
        }
    const char* xs[2][2] = {{"X1p", "X1m"}, {"X2p", "X2m"}};
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            for (int s = 0; s < 2; ++s) {
                Rational e = base * cartan.d[i] * cartan.a[i][j];
                if (s == 1)
                    e = -e;
                Scalar w = Scalar::q_power(e, order);
                rels.add(std::string("weight.") + cart[size_t(2 * i)] + "." + xs[j][s],
                         kpow(i) * gen(xs[j][s]) - (gen(xs[j][s]) * kpow(i)).scaled(w),
                         "weights");
            }
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) {
            NcPoly comm = gen(xs[i][0]) * gen(xs[j][1]) - gen(xs[j][1]) * gen(xs[i][0]);
            if (i == j) {
                Scalar qi = Scalar::q_power(base * cartan.d[i], order);
                Scalar denom = qi - qi.inv();
                comm -= (kpow(i) - kbar_pow(i)).scaled(denom.inv());
            }
            rels.add("ladder." + std::to_string(i + 1) + std::to_string(j + 1),
                     std::move(comm), "ladder");
        }
    auto serre = serre_relations(cartan, table, "X1p", "X2p", order, base);
    rels.add("serre.12", serre[0], "serre");
    rels.add("serre.21", serre[1], "serre");
    auto serre_m = serre_relations(cartan, table, "X1m", "X2m", order, base);
    rels.add("serre.12m", serre_m[0], "serre");
    rels.add("serre.21m", serre_m[1], "serre");
    return {std::move(table), std::move(rels)};
}

} // namespace

DJPresentation dj_relations(const CartanMatrix& cartan, RootOrder order,
                            const Rational& base) {
    return dj_build(cartan, order, base, false);
}

DJPresentation dj_relations_squared(const CartanMatrix& cartan, RootOrder order,
                                    const Rational& base) {
    return dj_build(cartan, order, base, true);
}

// ---------------------------------------------------------------------------
// the triangular preset

namespace {

struct PresetSymbols {
    GeneratorTable table;
    // matrix entries as polynomials (zero where the arrangement is zero)
    NcPoly t[2][2], u[2][2], e[2], f[2];
    Scalar one;

    explicit PresetSymbols(RootOrder order)
        : table({"a", "b", "c", "x", "y", "z", "d", "e", "f", "g"}),
          one(Scalar::from_int(1, order)) {
        auto gen = [&](const char* n) { return NcPoly(Word{table.id(n)}, one); };
        NcPoly zero((RootOrder(order)));
        t[0][0] = gen("a");
        t[0][1] = zero;
        t[1][0] = gen("b");
        t[1][1] = gen("c");
        u[0][0] = gen("x");
        u[0][1] = gen("y");
        u[1][0] = zero;
        u[1][1] = gen("z");
        e[0] = gen("d");
        e[1] = gen("e");
        f[0] = gen("f");
        f[1] = gen("g");
    }
};

int flat2(int i1, int i2) { return 2 * i1 + i2; } // indices 0-based

} // namespace

RelationSet build_inhomogeneous_relations(const NormalizedR& r, EfConvention ef) {
    RootOrder order(r.op.mat.root_order());
    PresetSymbols sym(order);
    const Matrix& R = r.op.mat;
    RelationSet rels;
    std::map<std::string, std::string> seen; // canonical form -> first name
    auto poly_key = [](const NcPoly& p) {
        std::ostringstream key;
        for (const auto& [w, c] : p.terms()) {
            for (GenId g : w)
                key << int(g) << '.';
            key << '=' << c.str() << ';';
        }
        return key.str();
    };

    auto emit = [&](const std::string& family, const std::string& idx, NcPoly rel) {
        if (rel.is_zero())
            return;
        std::string canon = poly_key(rel.canonicalized());
        auto it = seen.find(canon);
        if (it != seen.end())
            return;
        std::string name = family + "." + idx;
        seen.emplace(std::move(canon), name);
        rels.add(name, std::move(rel), family);
    };

    auto rmat_pair = [&](const NcPoly m1[2][2], const NcPoly m2[2][2],
                         const std::string& family) {
        // R M1_1 M2_2 = M2_2 M1_1 R, componentwise
        for (int i1 = 0; i1 < 2; ++i1)
            for (int i2 = 0; i2 < 2; ++i2)
                for (int j1 = 0; j1 < 2; ++j1)
                    for (int j2 = 0; j2 < 2; ++j2) {
                        NcPoly lhs(order), rhs(order);
                        for (int k1 = 0; k1 < 2; ++k1)
                            for (int k2 = 0; k2 < 2; ++k2) {
                                const Scalar& cr = R.at(flat2(i1, i2), flat2(k1, k2));
                                if (!cr.is_zero())
                                    lhs += (m1[k1][j1] * m2[k2][j2]).scaled(cr);
                                const Scalar& cl = R.at(flat2(k1, k2), flat2(j1, j2));
                                if (!cl.is_zero())
                                    rhs += (m2[i2][k2] * m1[i1][k1]).scaled(cl);
                            }
                        emit(family,
                             std::to_string(i1 + 1) + std::to_string(i2 + 1) +
                                 std::to_string(j1 + 1) + std::to_string(j2 + 1),
                             lhs - rhs);
                    }
    };

    rmat_pair(sym.t, sym.t, "rtt");
    rmat_pair(sym.u, sym.u, "ruu");
    rmat_pair(sym.u, sym.t, "rut");

    // E_1 T_2 = T_2 E_1 R_12
    for (int j1 = 0; j1 < 2; ++j1)
        for (int i2 = 0; i2 < 2; ++i2)
            for (int j2 = 0; j2 < 2; ++j2) {
                NcPoly lhs = sym.e[j1] * sym.t[i2][j2];
                NcPoly rhs(order);
                for (int k1 = 0; k1 < 2; ++k1)
                    for (int k2 = 0; k2 < 2; ++k2) {
                        const Scalar& c = R.at(flat2(k1, k2), flat2(j1, j2));
                        if (!c.is_zero())
                            rhs += (sym.t[i2][k2] * sym.e[k1]).scaled(c);
                    }
                emit("et",
                     std::to_string(j1 + 1) + std::to_string(i2 + 1) +
                         std::to_string(j2 + 1),
                     lhs - rhs);
            }

    // F_2 U_1 = R_12 U_1 F_2
    for (int i1 = 0; i1 < 2; ++i1)
        for (int i2 = 0; i2 < 2; ++i2)
            for (int j1 = 0; j1 < 2; ++j1) {
                NcPoly lhs = sym.f[i2] * sym.u[i1][j1];
                NcPoly rhs(order);
                for (int k1 = 0; k1 < 2; ++k1)
                    for (int k2 = 0; k2 < 2; ++k2) {
                        const Scalar& c = R.at(flat2(i1, i2), flat2(k1, k2));
                        if (!c.is_zero())
                            rhs += (sym.u[k1][j1] * sym.f[k2]).scaled(c);
                    }
                emit("fu",
                     std::to_string(i1 + 1) + std::to_string(i2 + 1) +
                         std::to_string(j1 + 1),
                     lhs - rhs);
            }

    // T_2 F_1 = R_12 F_1 T_2
    for (int i1 = 0; i1 < 2; ++i1)
        for (int i2 = 0; i2 < 2; ++i2)
            for (int j2 = 0; j2 < 2; ++j2) {
                NcPoly lhs = sym.t[i2][j2] * sym.f[i1];
                NcPoly rhs(order);
                for (int k1 = 0; k1 < 2; ++k1)
                    for (int k2 = 0; k2 < 2; ++k2) {
                        const Scalar& c = R.at(flat2(i1, i2), flat2(k1, k2));
                        if (!c.is_zero())
                            rhs += (sym.f[k1] * sym.t[k2][j2]).scaled(c);
                    }
                emit("tf",
                     std::to_string(i1 + 1) + std::to_string(i2 + 1) +
                         std::to_string(j2 + 1),
                     lhs - rhs);
            }

    // U_1 E_2 = E_2 U_1 R_12
    for (int i1 = 0; i1 < 2; ++i1)
        for (int j1 = 0; j1 < 2; ++j1)
            for (int j2 = 0; j2 < 2; ++j2) {
                NcPoly lhs = sym.u[i1][j1] * sym.e[j2];
                NcPoly rhs(order);
                for (int k1 = 0; k1 < 2; ++k1)
                    for (int k2 = 0; k2 < 2; ++k2) {
                        const Scalar& c = R.at(flat2(k1, k2), flat2(j1, j2));
                        if (!c.is_zero())
                            rhs += (sym.e[k2] * sym.u[i1][k1]).scaled(c);
                    }
                emit("ue",
                     std::to_string(i1 + 1) + std::to_string(j1 + 1) +
                         std::to_string(j2 + 1),
                     lhs - rhs);
            }

    // E_j F^i - F^i E_j = +/- (T - U) with straight or transposed indexing
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) {
            NcPoly comm = sym.e[j] * sym.f[i] - sym.f[i] * sym.e[j];
            NcPoly tu(order);
            switch (ef) {
            case EfConvention::plus_ij:
                tu = sym.t[i][j] - sym.u[i][j];
                break;
            case EfConvention::minus_ij:
                tu = sym.u[i][j] - sym.t[i][j];
                break;
            case EfConvention::plus_ji:
                tu = sym.t[j][i] - sym.u[j][i];
                break;
            case EfConvention::minus_ji:
                tu = sym.u[j][i] - sym.t[j][i];
                break;
            }
            emit("ef", std::to_string(i + 1) + std::to_string(j + 1), comm - tu);
        }

    return rels;
}

InhomogeneousPreset inhomogeneous_preset(const Rational& nu, RootOrder order,
                                         EfConvention ef) {
    NormalizedR r = r_matrix(nu, order);
    InhomogeneousPreset preset;
    preset.order = order;
    preset.nu = nu;
    preset.table = PresetSymbols(order).table;
    preset.relations = build_inhomogeneous_relations(r, ef);

    GeneratorTable doubled = tensor_table(preset.table, {"_l", "_r"});
    Scalar one = Scalar::from_int(1, order);
    auto mono = [&](std::initializer_list<const char*> gens) {
        Word w;
        for (const char* g : gens)
            w.push_back(doubled.id(g));
        return NcPoly(w, one);
    };
    preset.delta["a"] = mono({"a_l", "a_r"});
    preset.delta["b"] = mono({"b_l", "a_r"}) + mono({"c_l", "b_r"});
    preset.delta["c"] = mono({"c_l", "c_r"});
    preset.delta["x"] = mono({"x_l", "x_r"});
    preset.delta["y"] = mono({"x_l", "y_r"}) + mono({"y_l", "z_r"});
    preset.delta["z"] = mono({"z_l", "z_r"});
    preset.delta["d"] = mono({"d_l", "a_r"}) + mono({"e_l", "b_r"}) + mono({"d_r"});
    preset.delta["e"] = mono({"e_l", "c_r"}) + mono({"e_r"});
    preset.delta["f"] = mono({"f_l"}) + mono({"x_l", "f_r"}) + mono({"y_l", "g_r"});
    preset.delta["g"] = mono({"g_l"}) + mono({"z_l", "g_r"});

    Scalar zero(order);
    for (const char* n : {"a", "c", "x", "z"})
        preset.counit[n] = one;
    for (const char* n : {"b", "y", "d", "e", "f", "g"})
        preset.counit[n] = zero;
    return preset;
}

Report check_preset_bialgebra(const Rational& nu, int bound, RootOrder order,
                              EfConvention ef, const CompletionOptions& opts) {
    InhomogeneousPreset p = inhomogeneous_preset(nu, order, ef);
    return check_bialgebra(p.relations, p.table, p.delta, p.counit, bound, opts);
}

// ---------------------------------------------------------------------------
// order-N relations on the row and column families

RelationSet omega_relation_set(int n, const GeneratorTable& table, RootOrder order) {
    RelationSet out;
    auto refs = reference_omegas(n, order);
    for (size_t k = 0; k < refs.size(); ++k) {
        out.add("row." + std::to_string(n) + "." + std::to_string(k),
                relations_from_omega(refs[k], GeneratorFamily::E, table, "d", "e"),
                "order-" + std::to_string(n));
        out.add("col." + std::to_string(n) + "." + std::to_string(k),
                relations_from_omega(refs[k], GeneratorFamily::F, table, "f", "g"),
                "order-" + std::to_string(n));
    }
    return out;
}

namespace {

bool has_single_low_letter(const OmegaTensor& t) {
    for (int flat = 0; flat < (1 << t.slots); ++flat) {
        if (t.comps[size_t(flat)].is_zero())
            continue;
        int ones = 0;
        for (int k = 0; k < t.slots; ++k)
            if (!((flat >> k) & 1))
                ++ones;
        if (ones != 1)
            return false;
    }
    return true;
}

} // namespace

NcPoly distinguished_e_relation(int n, const GeneratorTable& table, RootOrder order) {
    for (const auto& t : reference_omegas(n, order))
        if (has_single_low_letter(t))
            return relations_from_omega(t, GeneratorFamily::E, table, "d", "e");
    throw math_error("no distinguished relation at this order");
}

std::vector<NcPoly> nondistinguished_e_relations(int n, const GeneratorTable& table,
                                                 RootOrder order) {
    std::vector<NcPoly> out;
    for (const auto& t : reference_omegas(n, order))
        if (!has_single_low_letter(t))
            out.push_back(relations_from_omega(t, GeneratorFamily::E, table, "d", "e"));
    return out;
}

RelationSet dependency_system(int n, DependencySubset subset,
                              bool include_distinguished, RootOrder order) {
    Rational nu = default_nu(n);
    InhomogeneousPreset preset = inhomogeneous_preset(nu, order);
    RelationSet out;
    std::vector<GenId> allowed;
    for (const char* g : {"b", "c", "d", "e"})
        allowed.push_back(preset.table.id(g));
    for (const auto& rel : preset.relations.items()) {
        if (subset == DependencySubset::bcde) {
            bool ok = true;
            for (const auto& [w, coeff] : rel.poly.terms())
                for (GenId g : w)
                    if (std::find(allowed.begin(), allowed.end(), g) == allowed.end())
                        ok = false;
            if (!ok)
                continue;
        }
        out.add(rel.name, rel.poly, rel.provenance);
    }
    if (include_distinguished)
        out.add("row." + std::to_string(n) + ".distinguished",
                distinguished_e_relation(n, preset.table, order),
                "order-" + std::to_string(n));
    return out;
}

Report check_dependency(int n, int bound, RootOrder order,
                        const CompletionOptions& opts) {
    Report rep;
    rep.title = "dependency order-" + std::to_string(n);
    InhomogeneousPreset preset = inhomogeneous_preset(default_nu(n), order);
    auto targets = nondistinguished_e_relations(n, preset.table, order);

    std::vector<std::pair<DependencySubset, std::string>> ladders = {
        {DependencySubset::bcde, "components on {b,c,d,e}"},
        {DependencySubset::full, "full component set"},
    };
    std::vector<RewriteSystem> completed;
    std::vector<std::string> sys_names;
    for (auto& [subset, label] : ladders) {
        RelationSet rels = dependency_system(n, subset, true, order);
        RewriteSystem sys(preset.table);
        sys.add_relations(rels);
        completed.push_back(complete(std::move(sys), bound, opts));
        sys_names.push_back(label);
        std::string names;
        for (const auto& r : rels.items())
            names += (names.empty() ? "" : ",") + r.name;
        rep.payload["system." + label] = names;
    }
    int idx = 0;
    for (const auto& t : targets) {
        std::string name = "dependent." + std::to_string(n) + "." + std::to_string(idx++);
        MemberStatus best = MemberStatus::undecided;
        std::string used;
        for (size_t k = 0; k < completed.size(); ++k) {
            MemberStatus st = ideal_member_status(t, completed[k]);
            if (st == MemberStatus::member) {
                best = st;
                used = sys_names[k];
                break;
            }
            if (st == MemberStatus::not_member && best == MemberStatus::undecided)
                best = st;
        }
        rep.add(name, status_of(best),
                best == MemberStatus::member ? "via " + used : "");
    }
    return rep;
}

// ---------------------------------------------------------------------------
// the Drinfeld-Jimbo image

Report verify_dj_image(int n, int bound, RootOrder order,
                       const CompletionOptions& opts) {
    if (n < 2 || n > 4)
        throw input_error("image verification covers orders 2, 3 and 4");
    Report rep;
    rep.title = "dj-image order-" + std::to_string(n);
    Rational nu = default_nu(n);
    InhomogeneousPreset preset = inhomogeneous_preset(nu, order);

    GeneratorTable table = preset.table; // inverses appended after the base letters
    for (const char* g : {"ainv", "cinv", "xinv", "zinv"})
        table.add(g);
    Scalar one = Scalar::from_int(1, order);
    auto mono = [&](std::initializer_list<const char*> gens) {
        Word w;
        for (const char* g : gens)
            w.push_back(table.id(g));
        return NcPoly(w, one);
    };
    RelationSet rels;
    for (const auto& r : preset.relations.items())
        rels.add(r.name, r.poly, r.provenance);
    for (const auto& r : omega_relation_set(n, preset.table, order).items())
        rels.add(r.name, r.poly, r.provenance);
    NcPoly unit = NcPoly::one(order);
    const char* inv_pairs[4][2] = {
        {"a", "ainv"}, {"c", "cinv"}, {"x", "xinv"}, {"z", "zinv"}};
    for (auto& [g, gi] : inv_pairs) {
        rels.add(std::string("inverse.") + g, mono({g, gi}) - unit, "inverse");
        rels.add(std::string("inverse.") + gi, mono({gi, g}) - unit, "inverse");
    }
    // identification of the two Cartan copies
    rels.add("identify.ax", mono({"a", "x"}) - unit, "identify");
    rels.add("identify.xa", mono({"x", "a"}) - unit, "identify");
    rels.add("identify.cz", mono({"c", "z"}) - unit, "identify");
    rels.add("identify.zc", mono({"z", "c"}) - unit, "identify");

    RewriteSystem source(table);
    source.add_relations(rels);
    RewriteSystem completed = complete(std::move(source), bound, opts);

    // target: deformation base q^(1/(N-1))
    Rational base(1, n - 1);
    base.canonicalize();
    DJPresentation dj = dj_relations_squared(CartanMatrix::for_order(n), order, base);
    rep.payload["target_base_exponent"] = base.get_str();

    // Cartan images: the inverse orientation is the one under which the
    // weight relations close (the two Cartan families trade roles under
    // the bar involution).
    GenMap map(dj.table, table);
    map.set("K1", mono({"ainv", "c"}));
    map.set("Kb1", mono({"a", "cinv"}));
    map.set("K2", mono({"cinv"}));
    map.set("Kb2", mono({"c"}));

    // Normalization scalars from the two rank-one ladder relations:
    // lambda (X+X- - X-X+) image must match (K - Kb)/(q_i - q_i^-1).
    NcPoly img_x1p = mono({"cinv", "b"});
    NcPoly img_x1m = mono({"y", "zinv"});
    NcPoly img_x2p = mono({"e"});
    NcPoly img_x2m = mono({"g"});
    auto solve_lambda = [&](const NcPoly& xp, const NcPoly& xm, int i,
                            const char* label) -> std::optional<Scalar> {
        Scalar qi = Scalar::q_power(base * CartanMatrix::for_order(n).d[i], order);
        NcPoly comm = normal_form(xp * xm - xm * xp, completed);
        NcPoly cart = normal_form(
            map.apply(NcPoly(Word{dj.table.id(i == 0 ? "K1" : "K2")}, one) -
                      NcPoly(Word{dj.table.id(i == 0 ? "Kb1" : "Kb2")}, one))
                .scaled((qi - qi.inv()).inv()),
            completed);
        if (comm.is_zero() || cart.is_zero()) {
            rep.add(std::string("normalization.") + label,
                    comm.is_zero() && cart.is_zero() ? CheckStatus::pass
                                                     : CheckStatus::fail,
                    "degenerate commutator");
            return comm.is_zero() && cart.is_zero() ? std::optional<Scalar>(one)
                                                    : std::nullopt;
        }
        auto ratio = cart.proportional_to(comm);
        if (!ratio) {
            rep.add(std::string("normalization.") + label, CheckStatus::fail,
                    "commutator image is not proportional to the Cartan difference");
            return std::nullopt;
        }
        rep.add(std::string("normalization.") + label, CheckStatus::pass);
        rep.payload[std::string("lambda.") + label] = ratio->str();
        return *ratio;
    };
    auto l13 = solve_lambda(img_x1p, img_x1m, 0, "x1");
    auto l24 = solve_lambda(img_x2p, img_x2m, 1, "x2");
    if (!l13 || !l24)
        return rep;

    map.set("X1p", img_x1p.scaled(*l13));
    map.set("X1m", img_x1m);
    map.set("X2p", img_x2p.scaled(*l24));
    map.set("X2m", img_x2m);

    for (const auto& rel : dj.relations.items()) {
        NcPoly image = map.apply(rel.poly);
        MemberStatus st = ideal_member_status(image, completed);
        std::string detail;
        if (st != MemberStatus::member) {
            NcPoly res = normal_form(image, completed);
            detail = "residual with " + std::to_string(res.terms().size()) + " terms";
        }
        rep.add("image." + rel.name, status_of(st), detail);
    }
    return rep;
}

} // namespace qgkit

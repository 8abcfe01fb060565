#include "qgkit/braided.hpp"

#include <map>

namespace qgkit {

NormalizedR r_matrix(const Rational& nu, RootOrder order) {
    Scalar qn = Scalar::q_power(nu, order);
    Scalar q = Scalar::q(order);
    Scalar lambda = q - q.inv();
    Matrix m(4, 4, order);
    m.at(0, 0) = qn * q;
    m.at(1, 1) = qn;
    m.at(1, 2) = qn * lambda;
    m.at(2, 2) = qn;
    m.at(3, 3) = qn * q;
    return {nu, TensorOperator{2, std::move(m)}};
}

TensorOperator braid(const NormalizedR& r) {
    RootOrder order(r.op.mat.root_order());
    return flip_operator(order) * r.op;
}

namespace {

TensorOperator embed_pair_13(const TensorOperator& op2, RootOrder order) {
    // conjugate the (1,2)-embedding by the flip of slots 2,3
    TensorOperator s23 = embed_adjacent(flip_operator(order), 2, 3);
    TensorOperator r12 = embed_adjacent(op2, 1, 3);
    return s23 * r12 * s23;
}

} // namespace

Matrix ybe_residual(const NormalizedR& r) {
    RootOrder order(r.op.mat.root_order());
    TensorOperator r12 = embed_adjacent(r.op, 1, 3);
    TensorOperator r23 = embed_adjacent(r.op, 2, 3);
    TensorOperator r13 = embed_pair_13(r.op, order);
    return (r12 * r13 * r23).mat - (r23 * r13 * r12).mat;
}

Matrix hecke_residual(const NormalizedR& r) {
    RootOrder order(r.op.mat.root_order());
    TensorOperator b = braid(r);
    Scalar plus = Scalar::q_power(r.nu + 1, order);
    Scalar minus = Scalar::q_power(r.nu - 1, order);
    Matrix id = Matrix::identity(4, order);
    return (b.mat - id.scaled(plus)) * (b.mat + id.scaled(minus));
}

namespace {

// Letter words over {x = 0, y = 1}, slot 1 first.
using LetterWord = std::vector<char>;

std::vector<TensorOperator> binomials_impl(const TensorOperator& braid_op,
                                           int n_slots, bool compose_left) {
    if (braid_op.slots != 2)
        throw input_error("braid operator must act on two slots");
    if (n_slots < 1)
        throw input_error("binomial operator needs at least one slot");
    RootOrder order(braid_op.mat.root_order());
    // embedded braids B_i
    std::vector<TensorOperator> embedded;
    for (int i = 1; i < n_slots; ++i)
        embedded.push_back(embed_adjacent(braid_op, i, n_slots));

    std::map<LetterWord, TensorOperator> agenda;
    for (int mask = 0; mask < (1 << n_slots); ++mask) {
        LetterWord w(n_slots);
        for (int k = 0; k < n_slots; ++k)
            w[k] = char((mask >> k) & 1);
        agenda.emplace(std::move(w), TensorOperator::identity(n_slots, order));
    }
    std::vector<TensorOperator> result(size_t(n_slots) + 1,
                                       TensorOperator{n_slots, Matrix::zero(1 << n_slots, 1 << n_slots, order)});
    while (!agenda.empty()) {
        auto node = agenda.begin();
        LetterWord w = node->first;
        TensorOperator op = node->second;
        agenda.erase(node);
        int pos = -1;
        for (int k = 0; k + 1 < n_slots; ++k)
            if (w[k] == 0 && w[k + 1] == 1) {
                pos = k;
                break;
            }
        if (pos < 0) {
            int n = 0;
            while (n < n_slots && w[n] == 1)
                ++n;
            result[size_t(n)] = result[size_t(n)] + op;
            continue;
        }
        std::swap(w[pos], w[pos + 1]);
        TensorOperator next = compose_left ? embedded[size_t(pos)] * op
                                           : op * embedded[size_t(pos)];
        auto it = agenda.find(w);
        if (it == agenda.end())
            agenda.emplace(std::move(w), std::move(next));
        else
            it->second = it->second + next;
    }
    return result;
}

} // namespace

std::vector<TensorOperator> binomial_operators(const TensorOperator& braid_op,
                                               int n_slots) {
    return binomials_impl(braid_op, n_slots, true);
}

std::vector<TensorOperator> binomial_operators_right(const TensorOperator& braid_op,
                                                     int n_slots) {
    return binomials_impl(braid_op, n_slots, false);
}

BinomialOperator binomial_operator(const TensorOperator& braid_op, int n_slots, int n) {
    if (n < 0 || n > n_slots)
        throw input_error("binomial index out of range");
    auto all = binomial_operators(braid_op, n_slots);
    return {n_slots, n, all[size_t(n)]};
}

Matrix binomial_stack(const TensorOperator& braid_op, int n_slots) {
    if (n_slots < 2)
        throw input_error("binomial stack needs at least two slots");
    auto all = binomial_operators(braid_op, n_slots);
    std::vector<Matrix> blocks;
    for (int n = 1; n < n_slots; ++n)
        blocks.push_back(all[size_t(n)].mat);
    return Matrix::vstack(blocks);
}

std::vector<OmegaTensor> solve_omega(int n_slots, const Rational& nu, RootOrder order) {
    TensorOperator b = braid(r_matrix(nu, order));
    Matrix stack = binomial_stack(b, n_slots);
    std::vector<OmegaTensor> out;
    for (auto& v : kernel(stack))
        out.push_back(OmegaTensor{n_slots, std::move(v)});
    return out;
}

std::vector<std::pair<Rational, int>>
scan_normalizations(int n_slots, const std::vector<Rational>& grid, RootOrder order) {
    std::vector<std::pair<Rational, int>> out;
    for (const auto& nu : grid)
        out.emplace_back(nu, int(solve_omega(n_slots, nu, order).size()));
    return out;
}

NcPoly relations_from_omega(const OmegaTensor& omega, GeneratorFamily family,
                            const GeneratorTable& table,
                            const std::string& letter1, const std::string& letter2) {
    (void)family; // the transposed tensor has the same component array
    GenId g1 = table.id(letter1);
    GenId g2 = table.id(letter2);
    RootOrder order(6);
    for (const auto& c : omega.comps)
        order = RootOrder(c.root_order());
    NcPoly p(order);
    int dim = 1 << omega.slots;
    for (int flat = 0; flat < dim; ++flat) {
        if (omega.comps[size_t(flat)].is_zero())
            continue;
        Word w;
        for (int k = omega.slots - 1; k >= 0; --k)
            w.push_back((flat >> k) & 1 ? g2 : g1);
        p.add_term(w, omega.comps[size_t(flat)]);
    }
    if (p.is_zero())
        return p;
    return p.canonicalized();
}

Rational default_nu(int n_slots) {
    if (n_slots < 2)
        throw input_error("no default normalization below two slots");
    Rational nu(3 - n_slots, n_slots - 1);
    nu.canonicalize();
    return nu;
}

namespace {

Scalar qp(const Rational& e, RootOrder order) {
    return Scalar::q_power(e, order);
}

} // namespace

std::vector<OmegaTensor> reference_omegas(int n_slots, RootOrder order) {
    Scalar one = Scalar::from_int(1, order);
    Scalar q = Scalar::q(order);
    auto make = [&](const std::vector<std::pair<std::string, Scalar>>& entries) {
        OmegaTensor t{n_slots, Vector(size_t(1) << n_slots, Scalar(order))};
        for (const auto& [word, value] : entries)
            t.comps[size_t(OmegaTensor::flat_index(word))] = value;
        return t;
    };
    if (n_slots == 2) {
        return {make({{"21", one}, {"12", -q}})};
    }
    if (n_slots == 3) {
        return {
            make({{"211", one}, {"112", q}, {"121", -(one + q)}}),
            make({{"221", one}, {"122", q}, {"212", -(one + q)}}),
        };
    }
    if (n_slots == 4) {
        Scalar c = one + qp({2, 3}, order) + qp({4, 3}, order); // 1 + q^(2/3) + q^(4/3)
        std::vector<OmegaTensor> out;
        out.push_back(make({{"2221", one},
                            {"1222", -q},
                            {"2212", -qp({-1, 3}, order) * c},
                            {"2122", c}}));
        out.push_back(make({{"2111", one},
                            {"1112", -q},
                            {"1211", -qp({-1, 3}, order) * c},
                            {"1121", c}}));
        Scalar phi_a = one + qp({2, 3}, order);                      // 1 + q^(2/3)
        Scalar phi_b = qp({4, 3}, order) - qp({-2, 3}, order);       // -q^(-2/3) + q^(4/3)
        Scalar phi_c = q + Scalar::from_int(2, order) * qp({1, 3}, order) + qp({5, 3}, order);
        Scalar phi_d = q.inv() + qp({-1, 3}, order) +
                       Scalar::from_int(2, order) * qp({1, 3}, order);
        out.push_back(make({{"2211", phi_a},
                            {"1122", -phi_a},
                            {"1221", phi_b},
                            {"2112", phi_b},
                            {"2121", -phi_c},
                            {"1212", phi_d}}));
        return out;
    }
    throw input_error("reference solutions exist for 2, 3 or 4 slots only");
}

} // namespace qgkit

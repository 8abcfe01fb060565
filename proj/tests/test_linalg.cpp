#include <doctest.h>

#include "qgkit/braided.hpp"
#include "qgkit/linalg.hpp"

#include <random>

using namespace qgkit;

namespace {

const RootOrder m6(6);

Matrix random_matrix(std::mt19937& rng, int rows, int cols) {
    std::uniform_int_distribution<int> coeff(-2, 2), expo(-2, 2), pick(0, 3);
    Matrix m(rows, cols, m6);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) {
            if (pick(rng) == 0)
                continue; // keep some sparsity
            int c = coeff(rng);
            if (c)
                m.at(i, j) = Scalar::ratio(LaurentPoly::monomial(c, expo(rng)),
                                           LaurentPoly(Rational(1)), m6);
        }
    return m;
}

} // namespace

TEST_CASE("kernel of identity and zero") {
    CHECK(kernel(Matrix::identity(4, m6)).empty());
    auto basis = kernel(Matrix::zero(2, 2, m6));
    REQUIRE(basis.size() == 2);
    CHECK(basis[0][0].is_one());
    CHECK(basis[0][1].is_zero());
    CHECK(basis[1][1].is_one());
}

TEST_CASE("kernel vectors are exact solutions and rank is consistent") {
    std::mt19937 rng(7);
    for (int iter = 0; iter < 200; ++iter) {
        int rows = 1 + int(rng() % 5), cols = 1 + int(rng() % 5);
        Matrix m = random_matrix(rng, rows, cols);
        auto basis = kernel(m);
        for (const auto& v : basis) {
            Vector image = apply(m, v);
            for (const auto& s : image)
                CHECK(s.is_zero());
        }
        // independent rank via echelon on the transpose
        CHECK(rank(m) == rank(m.transposed()));
        CHECK(rank(m) + int(basis.size()) == cols);
    }
}

TEST_CASE("in_span") {
    Vector zero(3, Scalar(m6));
    Vector e1 = zero, e2 = zero;
    e1[0] = Scalar::from_int(1, m6);
    e2[1] = Scalar::from_int(1, m6);
    auto c = in_span(zero, {e1, e2});
    REQUIRE(c.has_value());
    CHECK((*c)[0].is_zero());
    CHECK((*c)[1].is_zero());
    CHECK(!in_span(e1, {e2}).has_value());
}

TEST_CASE("embed_adjacent basics") {
    NormalizedR r = r_matrix(0, m6);
    TensorOperator b = braid(r);
    CHECK(embed_adjacent(b, 1, 2).mat == b.mat);
    TensorOperator id2 = TensorOperator::identity(2, m6);
    CHECK(embed_adjacent(id2, 2, 4).mat == Matrix::identity(16, m6));
}

TEST_CASE("embed_adjacent agrees with a Kronecker oracle") {
    NormalizedR r = r_matrix(make_rational(1), m6);
    TensorOperator b = braid(r);
    Matrix expect12 = kron(b.mat, Matrix::identity(2, m6));
    CHECK(embed_adjacent(b, 1, 3).mat == expect12);
    Matrix expect23 = kron(Matrix::identity(2, m6), b.mat);
    CHECK(embed_adjacent(b, 2, 3).mat == expect23);
    // basis vector e_121 pushed through 1 (x) B
    Vector e121(8, Scalar(m6));
    e121[size_t(OmegaTensor::flat_index("121"))] = Scalar::from_int(1, m6);
    CHECK(apply(embed_adjacent(b, 2, 3).mat, e121) == apply(expect23, e121));
}

TEST_CASE("distant embeddings commute") {
    std::mt19937 rng(99);
    for (int iter = 0; iter < 20; ++iter) {
        TensorOperator u{2, random_matrix(rng, 4, 4)};
        TensorOperator v{2, random_matrix(rng, 4, 4)};
        TensorOperator a = embed_adjacent(u, 1, 4), b = embed_adjacent(v, 3, 4);
        CHECK((a * b).mat == (b * a).mat);
    }
}

TEST_CASE("index words") {
    CHECK(OmegaTensor::index_word(0, 2) == "11");
    CHECK(OmegaTensor::index_word(2, 2) == "21");
    CHECK(OmegaTensor::flat_index("112") == 1);
    CHECK(OmegaTensor::flat_index("21") == 2);
}

TEST_CASE("kernel normalization is denominator-free with positive free entry") {
    Matrix m(1, 2, m6);
    m.at(0, 0) = Scalar::q(m6);
    m.at(0, 1) = Scalar::from_int(1, m6);
    auto basis = kernel(m);
    REQUIRE(basis.size() == 1);
    // kernel of (q, 1): the raw solution (-1/q, 1) clears to (-1, q),
    // keeping the free entry positive
    CHECK(basis[0][0] == -Scalar::from_int(1, m6));
    CHECK(basis[0][1] == Scalar::q(m6));
}

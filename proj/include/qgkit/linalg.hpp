#ifndef QGKIT_LINALG_HPP
#define QGKIT_LINALG_HPP

#include "qgkit/scalar.hpp"

#include <optional>
#include <vector>

namespace qgkit {

/// Dense matrix over Scalar, row-major.
class Matrix {
public:
    Matrix() : rows_(0), cols_(0) {}
    Matrix(int rows, int cols, RootOrder order);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    int root_order() const { return order_.m; }

    Scalar& at(int r, int c) { return entries_[size_t(r) * cols_ + c]; }
    const Scalar& at(int r, int c) const { return entries_[size_t(r) * cols_ + c]; }

    static Matrix identity(int n, RootOrder order);
    static Matrix zero(int rows, int cols, RootOrder order);

    Matrix operator*(const Matrix& o) const;
    Matrix operator+(const Matrix& o) const;
    Matrix operator-(const Matrix& o) const;
    Matrix scaled(const Scalar& c) const;
    Matrix transposed() const;
    bool is_zero() const;
    bool operator==(const Matrix& o) const;

    /// Stack rows of several matrices with equal column counts.
    static Matrix vstack(const std::vector<Matrix>& blocks);

private:
    int rows_, cols_;
    RootOrder order_{6};
    std::vector<Scalar> entries_;
};

using Vector = std::vector<Scalar>;

/// Kronecker product (slot 1 most significant).
Matrix kron(const Matrix& a, const Matrix& b);

/// Basis of the right null space { v : M v = 0 }.
///
/// Deterministic: Gaussian elimination with first-nonzero pivoting in
/// column order; one basis vector per free column in ascending order with
/// that free variable set to 1; each vector is cleared of denominators,
/// divided by the content, and sign-fixed so its first nonzero entry has
/// positive leading coefficient.
std::vector<Vector> kernel(const Matrix& m);

int rank(const Matrix& m);

/// Coefficients c with sum_i c_i basis_i = v, if v lies in the span.
/// Free coefficients (if the basis is dependent) are set to zero.
std::optional<Vector> in_span(const Vector& v, const std::vector<Vector>& basis);

Vector apply(const Matrix& m, const Vector& v);

/// Endomorphism of (C^2)^(tensor N).  Flat index of a multi-index
/// (i_1,...,i_N), i_k in {1,2}, is sum (i_k - 1) 2^(N-k): slot 1 is the
/// most significant bit.
struct TensorOperator {
    int slots = 1;
    Matrix mat;

    static TensorOperator identity(int slots, RootOrder order);
    TensorOperator operator*(const TensorOperator& o) const;
    TensorOperator operator+(const TensorOperator& o) const;
    bool operator==(const TensorOperator& o) const = default;
};

/// Identity on all slots except i, i+1 (1-based) where op2 acts.
TensorOperator embed_adjacent(const TensorOperator& op2, int i, int n);

/// Flip of two adjacent tensor factors embedded at slots i, i+1.
TensorOperator flip_operator(RootOrder order);

/// Element of (C^2)^(tensor N) indexed by words over {1,2}; same flat
/// index convention as TensorOperator.
struct OmegaTensor {
    int slots = 1;
    Vector comps;

    static std::string index_word(int flat, int slots);
    static int flat_index(const std::string& word);
    const Scalar& at(const std::string& word) const;
};

std::string normalize_vector_str(const Vector& v); // debug aid

/// Clear denominators, divide by content, fix the sign so the anchored
/// entry (the free variable for kernel vectors; the first nonzero entry
/// when no anchor is given) has a positive leading coefficient, and shift
/// so the minimal t-exponent over all entries is zero.
Vector normalize_kernel_vector(const Vector& v, int anchor = -1);

} // namespace qgkit

#endif

#include "qgkit/linalg.hpp"

#include <sstream>

namespace qgkit {

Matrix::Matrix(int rows, int cols, RootOrder order)
    : rows_(rows), cols_(cols), order_(order),
      entries_(size_t(rows) * cols, Scalar(order)) {
    if (rows < 0 || cols < 0)
        throw input_error("negative matrix dimension");
}

Matrix Matrix::identity(int n, RootOrder order) {
    Matrix m(n, n, order);
    for (int i = 0; i < n; ++i)
        m.at(i, i) = Scalar::from_int(1, order);
    return m;
}

Matrix Matrix::zero(int rows, int cols, RootOrder order) {
    return Matrix(rows, cols, order);
}

Matrix Matrix::operator*(const Matrix& o) const {
    if (cols_ != o.rows_)
        throw input_error("matrix product dimension mismatch");
    Matrix r(rows_, o.cols_, order_);
    for (int i = 0; i < rows_; ++i)
        for (int k = 0; k < cols_; ++k) {
            const Scalar& a = at(i, k);
            if (a.is_zero())
                continue;
            for (int j = 0; j < o.cols_; ++j) {
                const Scalar& b = o.at(k, j);
                if (!b.is_zero())
                    r.at(i, j) += a * b;
            }
        }
    return r;
}

Matrix Matrix::operator+(const Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_)
        throw input_error("matrix sum dimension mismatch");
    Matrix r = *this;
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j)
            r.at(i, j) += o.at(i, j);
    return r;
}

Matrix Matrix::operator-(const Matrix& o) const {
    return *this + o.scaled(Scalar::from_int(-1, RootOrder(order_)));
}

Matrix Matrix::scaled(const Scalar& c) const {
    Matrix r = *this;
    for (auto& e : r.entries_)
        e *= c;
    return r;
}

Matrix Matrix::transposed() const {
    Matrix r(cols_, rows_, order_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j)
            r.at(j, i) = at(i, j);
    return r;
}

bool Matrix::is_zero() const {
    for (const auto& e : entries_)
        if (!e.is_zero())
            return false;
    return true;
}

bool Matrix::operator==(const Matrix& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && entries_ == o.entries_;
}

Matrix Matrix::vstack(const std::vector<Matrix>& blocks) {
    if (blocks.empty())
        throw input_error("vstack of nothing");
    int cols = blocks.front().cols();
    int rows = 0;
    for (const auto& b : blocks) {
        if (b.cols() != cols)
            throw input_error("vstack column mismatch");
        rows += b.rows();
    }
    Matrix r(rows, cols, RootOrder(blocks.front().root_order()));
    int off = 0;
    for (const auto& b : blocks) {
        for (int i = 0; i < b.rows(); ++i)
            for (int j = 0; j < cols; ++j)
                r.at(off + i, j) = b.at(i, j);
        off += b.rows();
    }
    return r;
}

Matrix kron(const Matrix& a, const Matrix& b) {
    Matrix r(a.rows() * b.rows(), a.cols() * b.cols(), RootOrder(a.root_order()));
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j) {
            if (a.at(i, j).is_zero())
                continue;
            for (int k = 0; k < b.rows(); ++k)
                for (int l = 0; l < b.cols(); ++l)
                    r.at(i * b.rows() + k, j * b.cols() + l) = a.at(i, j) * b.at(k, l);
        }
    return r;
}

namespace {

struct Echelon {
    Matrix rref;
    std::vector<int> pivot_cols;
};

Echelon reduce(const Matrix& m) {
    Matrix a = m;
    std::vector<int> pivots;
    int row = 0;
    for (int col = 0; col < a.cols() && row < a.rows(); ++col) {
        int pr = -1;
        for (int r = row; r < a.rows(); ++r)
            if (!a.at(r, col).is_zero()) {
                pr = r;
                break;
            }
        if (pr < 0)
            continue;
        if (pr != row)
            for (int j = 0; j < a.cols(); ++j)
                std::swap(a.at(pr, j), a.at(row, j));
        Scalar inv = a.at(row, col).inv();
        for (int j = col; j < a.cols(); ++j)
            a.at(row, j) *= inv;
        for (int r = 0; r < a.rows(); ++r) {
            if (r == row || a.at(r, col).is_zero())
                continue;
            Scalar f = a.at(r, col);
            for (int j = col; j < a.cols(); ++j)
                a.at(r, j) -= f * a.at(row, j);
        }
        pivots.push_back(col);
        ++row;
    }
    return {std::move(a), std::move(pivots)};
}

} // namespace

Vector normalize_kernel_vector(const Vector& v, int anchor) {
    RootOrder order(v.empty() ? 6 : v.front().root_order());
    // common denominator
    LaurentPoly den_poly(Rational(1));
    for (const auto& s : v) {
        if (s.is_zero())
            continue;
        LaurentPoly g = laurent_gcd(den_poly, s.den());
        den_poly = laurent_div_exact(den_poly * s.den(), g);
    }
    Scalar mult = Scalar::ratio(den_poly, LaurentPoly(Rational(1)), order);
    std::vector<LaurentPoly> nums;
    nums.reserve(v.size());
    for (const auto& s : v) {
        Scalar t = s * mult;
        if (!t.is_polynomial())
            throw math_error("denominator clearing failed");
        nums.push_back(t.num());
    }
    // content: polynomial gcd of all entries
    LaurentPoly content;
    for (const auto& p : nums) {
        if (p.is_zero())
            continue;
        content = content.is_zero() ? p : laurent_gcd(content, p);
    }
    if (content.is_zero())
        return v; // zero vector
    Vector out;
    out.reserve(v.size());
    long min_exp = 0;
    bool have_exp = false;
    std::vector<LaurentPoly> reduced;
    for (const auto& p : nums) {
        LaurentPoly r = p.is_zero() ? p : laurent_div_exact(p, content);
        if (!r.is_zero() && (!have_exp || r.low_exp() < min_exp)) {
            min_exp = r.low_exp();
            have_exp = true;
        }
        reduced.push_back(std::move(r));
    }
    // sign anchored at the designated entry (the free variable for kernel
    // vectors), falling back to the first nonzero entry
    Rational sign = 1;
    if (anchor < 0 || anchor >= int(reduced.size()) ||
        reduced[size_t(anchor)].is_zero()) {
        anchor = -1;
        for (size_t i = 0; i < reduced.size(); ++i)
            if (!reduced[i].is_zero()) {
                anchor = int(i);
                break;
            }
    }
    if (anchor >= 0 && reduced[size_t(anchor)].leading_coeff() < 0)
        sign = -1;
    // rational content of all coefficients
    Rational num_gcd = 0, den_lcm = 1;
    for (const auto& r : reduced)
        for (const auto& [e, c] : r.coeffs()) {
            mpz_class n = abs(c.get_num());
            num_gcd = num_gcd == 0 ? Rational(n) : Rational(gcd(num_gcd.get_num(), n));
            den_lcm = Rational(lcm(den_lcm.get_num(), c.get_den()));
        }
    Rational scale = sign * den_lcm / num_gcd;
    for (auto& r : reduced) {
        LaurentPoly p = r.scaled(scale).shifted(-min_exp);
        out.push_back(Scalar::ratio(std::move(p), LaurentPoly(Rational(1)), order));
    }
    return out;
}

std::vector<Vector> kernel(const Matrix& m) {
    RootOrder order(m.root_order());
    Echelon e = reduce(m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (int c : e.pivot_cols)
        is_pivot[c] = true;
    std::vector<Vector> basis;
    for (int f = 0; f < m.cols(); ++f) {
        if (is_pivot[f])
            continue;
        Vector v(m.cols(), Scalar(order));
        v[f] = Scalar::from_int(1, order);
        for (size_t r = 0; r < e.pivot_cols.size(); ++r)
            v[e.pivot_cols[r]] = -e.rref.at(int(r), f);
        basis.push_back(normalize_kernel_vector(v, f));
    }
    return basis;
}

int rank(const Matrix& m) {
    return int(reduce(m).pivot_cols.size());
}

Vector apply(const Matrix& m, const Vector& v) {
    if (int(v.size()) != m.cols())
        throw input_error("matrix-vector dimension mismatch");
    Vector r(m.rows(), Scalar(RootOrder(m.root_order())));
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j)
            if (!m.at(i, j).is_zero() && !v[j].is_zero())
                r[i] += m.at(i, j) * v[j];
    return r;
}

std::optional<Vector> in_span(const Vector& v, const std::vector<Vector>& basis) {
    RootOrder order(v.empty() ? 6 : v.front().root_order());
    int rows = int(v.size());
    int cols = int(basis.size());
    for (const auto& b : basis)
        if (int(b.size()) != rows)
            throw input_error("in_span dimension mismatch");
    // augmented [basis | v], columns are basis vectors
    Matrix a(rows, cols + 1, order);
    for (int j = 0; j < cols; ++j)
        for (int i = 0; i < rows; ++i)
            a.at(i, j) = basis[j][i];
    for (int i = 0; i < rows; ++i)
        a.at(i, cols) = v[i];
    Echelon e = reduce(a);
    for (int c : e.pivot_cols)
        if (c == cols)
            return std::nullopt; // inconsistent
    Vector coeffs(cols, Scalar(order));
    for (size_t r = 0; r < e.pivot_cols.size(); ++r)
        coeffs[e.pivot_cols[r]] = e.rref.at(int(r), cols);
    return coeffs;
}

TensorOperator TensorOperator::identity(int slots, RootOrder order) {
    return {slots, Matrix::identity(1 << slots, order)};
}

TensorOperator TensorOperator::operator*(const TensorOperator& o) const {
    if (slots != o.slots)
        throw input_error("tensor operator slot mismatch");
    return {slots, mat * o.mat};
}

TensorOperator TensorOperator::operator+(const TensorOperator& o) const {
    if (slots != o.slots)
        throw input_error("tensor operator slot mismatch");
    return {slots, mat + o.mat};
}

TensorOperator embed_adjacent(const TensorOperator& op2, int i, int n) {
    if (op2.slots != 2)
        throw input_error("embed_adjacent expects a two-slot operator");
    if (i < 1 || i > n - 1)
        throw input_error("slot index out of range");
    RootOrder order(op2.mat.root_order());
    int dim = 1 << n;
    Matrix r(dim, dim, order);
    int hi = n - i - 1; // bits below the acting pair
    for (int row = 0; row < dim; ++row) {
        int rpair = (row >> hi) & 3;
        int rest = row & ~(3 << hi);
        for (int cpair = 0; cpair < 4; ++cpair) {
            const Scalar& v = op2.mat.at(rpair, cpair);
            if (v.is_zero())
                continue;
            int col = rest | (cpair << hi);
            r.at(row, col) = v;
        }
    }
    return {n, std::move(r)};
}

TensorOperator flip_operator(RootOrder order) {
    Matrix s(4, 4, order);
    Scalar one = Scalar::from_int(1, order);
    s.at(0, 0) = one;
    s.at(1, 2) = one;
    s.at(2, 1) = one;
    s.at(3, 3) = one;
    return {2, std::move(s)};
}

std::string OmegaTensor::index_word(int flat, int slots) {
    std::string w(slots, '1');
    for (int k = 0; k < slots; ++k)
        if (flat & (1 << (slots - 1 - k)))
            w[k] = '2';
    return w;
}

int OmegaTensor::flat_index(const std::string& word) {
    int flat = 0;
    for (char c : word) {
        if (c != '1' && c != '2')
            throw input_error("index word must be over {1,2}");
        flat = (flat << 1) | (c == '2' ? 1 : 0);
    }
    return flat;
}

const Scalar& OmegaTensor::at(const std::string& word) const {
    if (int(word.size()) != slots)
        throw input_error("index word length mismatch");
    return comps[flat_index(word)];
}

std::string normalize_vector_str(const Vector& v) {
    std::ostringstream out;
    out << "[";
    for (size_t i = 0; i < v.size(); ++i) {
        if (i)
            out << ", ";
        out << v[i].str();
    }
    out << "]";
    return out.str();
}

} // namespace qgkit

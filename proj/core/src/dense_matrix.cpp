#include <painleve/dense_matrix.hpp>

#include <algorithm>
#include <utility>

#include <painleve/errors.hpp>

namespace painleve
{

DenseMatrix::DenseMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), entries_(rows * cols) {}

DenseMatrix::DenseMatrix(std::initializer_list<std::initializer_list<Scalar>> rows)
{
    rows_ = rows.size();
    cols_ = rows_ == 0 ? 0 : rows.begin()->size();
    entries_.reserve(rows_ * cols_);
    for (const auto &row : rows) {
        if (row.size() != cols_) {
            throw ContractViolation("DenseMatrix: ragged initializer");
        }
        entries_.insert(entries_.end(), row.begin(), row.end());
    }
}

DenseMatrix DenseMatrix::identity(std::size_t n)
{
    DenseMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        m(i, i) = Scalar(1);
    }
    return m;
}

bool DenseMatrix::all_exact() const
{
    return std::all_of(entries_.begin(), entries_.end(), [](const Scalar &s) { return s.is_exact(); });
}

unsigned DenseMatrix::bits() const
{
    unsigned bits = Scalar::default_bits;
    bool first = true;
    for (const auto &s : entries_) {
        bits = first ? s.bits() : std::max(bits, s.bits());
        first = false;
    }
    return bits;
}

BigFloat DenseMatrix::max_abs() const
{
    BigFloat m(bits());
    for (const auto &s : entries_) {
        m = max(m, s.magnitude());
    }
    return m;
}

std::vector<Scalar> DenseMatrix::apply(std::span<const Scalar> x) const
{
    if (x.size() != cols_) {
        throw ContractViolation("DenseMatrix::apply: dimension mismatch");
    }
    std::vector<Scalar> y(rows_);
    for (std::size_t r = 0; r < rows_; ++r) {
        Scalar acc;
        for (std::size_t c = 0; c < cols_; ++c) {
            const Scalar &e = (*this)(r, c);
            if (!(e.is_exact() && e.is_zero())) {
                acc += e * x[c];
            }
        }
        y[r] = std::move(acc);
    }
    return y;
}

DenseMatrix operator*(const DenseMatrix &a, const DenseMatrix &b)
{
    if (a.cols_ != b.rows_) {
        throw ContractViolation("DenseMatrix product: dimension mismatch");
    }
    DenseMatrix c(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i) {
        for (std::size_t j = 0; j < b.cols_; ++j) {
            Scalar acc;
            for (std::size_t k = 0; k < a.cols_; ++k) {
                acc += a(i, k) * b(k, j);
            }
            c(i, j) = std::move(acc);
        }
    }
    return c;
}

namespace
{

bool exact_zero(const Scalar &s)
{
    return s.is_exact() && s.is_zero();
}

struct Echelon {
    DenseMatrix m;                  // reduced row echelon form of [A | b]
    std::vector<std::size_t> pivots; // pivot column of each leading row
};

// Gauss-Jordan on the augmented matrix, pivoting on the largest magnitude in
// each column. Columns whose best candidate falls below the threshold are free.
Echelon reduce(DenseMatrix m, std::size_t ncols_a, bool exact, const BigFloat &pivot_floor)
{
    Echelon e{std::move(m), {}};
    auto &a = e.m;
    std::size_t row = 0;
    for (std::size_t col = 0; col < ncols_a && row < a.rows(); ++col) {
        std::size_t best = a.rows();
        BigFloat best_mag(a.bits());
        for (std::size_t r = row; r < a.rows(); ++r) {
            if (exact_zero(a(r, col))) {
                continue;
            }
            BigFloat mag = a(r, col).magnitude();
            if (best == a.rows() || mag > best_mag) {
                best = r;
                best_mag = std::move(mag);
            }
        }
        if (best == a.rows()) {
            continue;
        }
        if (!exact && !(best_mag > pivot_floor)) {
            continue;
        }
        if (best != row) {
            for (std::size_t c = 0; c < a.cols(); ++c) {
                std::swap(a(row, c), a(best, c));
            }
        }
        const Scalar pivot = a(row, col);
        for (std::size_t c = col; c < a.cols(); ++c) {
            if (!exact_zero(a(row, c))) {
                a(row, c) = a(row, c) / pivot;
            }
        }
        a(row, col) = Scalar(1);
        for (std::size_t r = 0; r < a.rows(); ++r) {
            if (r == row || exact_zero(a(r, col))) {
                continue;
            }
            const Scalar factor = a(r, col);
            for (std::size_t c = col; c < a.cols(); ++c) {
                if (!exact_zero(a(row, c))) {
                    a(r, c) = a(r, c) - factor * a(row, c);
                }
            }
            a(r, col) = Scalar(0);
        }
        e.pivots.push_back(col);
        ++row;
    }
    return e;
}

void check_input(const DenseMatrix &a)
{
    if (a.empty()) {
        throw ContractViolation("linear algebra on an empty matrix");
    }
    for (std::size_t r = 0; r < a.rows(); ++r) {
        for (std::size_t c = 0; c < a.cols(); ++c) {
            if (!a(r, c).is_finite()) {
                throw ContractViolation("linear algebra on a non-finite entry");
            }
        }
    }
}

} // namespace

LinearSolution solve_linear(const DenseMatrix &a, std::span<const Scalar> b)
{
    check_input(a);
    if (b.size() != a.rows()) {
        throw ContractViolation("solve_linear: right-hand side length does not match rows");
    }
    const std::size_t n = a.cols();
    DenseMatrix aug(a.rows(), n + 1);
    bool exact = a.all_exact();
    unsigned bits = a.bits();
    BigFloat b_norm(bits);
    for (std::size_t r = 0; r < a.rows(); ++r) {
        for (std::size_t c = 0; c < n; ++c) {
            aug(r, c) = a(r, c);
        }
        aug(r, n) = b[r];
        exact = exact && b[r].is_exact();
        bits = std::max(bits, b[r].bits());
        b_norm = max(b_norm, b[r].magnitude());
    }
    const BigFloat thr = threshold_for(bits);
    const BigFloat scale = max(a.max_abs(), BigFloat(1, bits));
    Echelon e = reduce(std::move(aug), n, exact, thr * a.max_abs());

    LinearSolution out;
    out.rank = e.pivots.size();
    const BigFloat tol = thr * scale * (BigFloat(1, bits) + b_norm);
    for (std::size_t r = out.rank; r < e.m.rows(); ++r) {
        const Scalar &rhs = e.m(r, n);
        const bool violated = exact ? !rhs.is_zero() : rhs.magnitude() > tol;
        if (violated) {
            out.kind = SolutionKind::inconsistent;
            return out;
        }
    }

    out.particular.assign(n, Scalar(mpq_class(0), bits));
    for (std::size_t i = 0; i < out.rank; ++i) {
        out.particular[e.pivots[i]] = e.m(i, n);
    }
    std::vector<bool> is_pivot(n, false);
    for (auto p : e.pivots) {
        is_pivot[p] = true;
    }
    for (std::size_t f = 0; f < n; ++f) {
        if (is_pivot[f]) {
            continue;
        }
        std::vector<Scalar> v(n, Scalar(mpq_class(0), bits));
        v[f] = Scalar(mpq_class(1), bits);
        for (std::size_t i = 0; i < out.rank; ++i) {
            v[e.pivots[i]] = -e.m(i, f);
        }
        out.nullspace.push_back(std::move(v));
    }
    out.kind = out.nullspace.empty() ? SolutionKind::unique : SolutionKind::parametrized;
    return out;
}

std::vector<std::vector<Scalar>> nullspace(const DenseMatrix &a)
{
    std::vector<Scalar> zero(a.rows());
    return solve_linear(a, zero).nullspace;
}

Scalar determinant(const DenseMatrix &a)
{
    check_input(a);
    if (a.rows() != a.cols()) {
        throw ContractViolation("determinant of a non-square matrix");
    }
    const std::size_t n = a.rows();
    DenseMatrix m = a;
    Scalar det(mpq_class(1), a.bits());
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t best = n;
        BigFloat best_mag(a.bits());
        for (std::size_t r = col; r < n; ++r) {
            if (exact_zero(m(r, col))) {
                continue;
            }
            BigFloat mag = m(r, col).magnitude();
            if (best == n || mag > best_mag) {
                best = r;
                best_mag = std::move(mag);
            }
        }
        if (best == n) {
            return Scalar(mpq_class(0), a.bits());
        }
        if (best != col) {
            for (std::size_t c = 0; c < n; ++c) {
                std::swap(m(col, c), m(best, c));
            }
            det = -det;
        }
        const Scalar pivot = m(col, col);
        det *= pivot;
        for (std::size_t r = col + 1; r < n; ++r) {
            if (exact_zero(m(r, col))) {
                continue;
            }
            const Scalar factor = m(r, col) / pivot;
            for (std::size_t c = col + 1; c < n; ++c) {
                if (!exact_zero(m(col, c))) {
                    m(r, c) = m(r, c) - factor * m(col, c);
                }
            }
        }
    }
    return det;
}

BigFloat residual_inf(const DenseMatrix &a, std::span<const Scalar> x, std::span<const Scalar> b)
{
    const auto ax = a.apply(x);
    BigFloat worst(a.bits());
    for (std::size_t i = 0; i < ax.size(); ++i) {
        worst = max(worst, (ax[i] - b[i]).magnitude());
    }
    return worst;
}

} // namespace painleve

#ifndef PAINLEVE_DENSE_MATRIX_HPP
#define PAINLEVE_DENSE_MATRIX_HPP

#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

#include <painleve/scalar.hpp>

namespace painleve
{

class DenseMatrix
{
public:
    DenseMatrix() = default;
    DenseMatrix(std::size_t rows, std::size_t cols);
    DenseMatrix(std::initializer_list<std::initializer_list<Scalar>> rows);

    static DenseMatrix identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool empty() const { return rows_ == 0 || cols_ == 0; }

    Scalar &operator()(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
    const Scalar &operator()(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }

    bool all_exact() const;
    unsigned bits() const; // max entry precision
    BigFloat max_abs() const;

    std::vector<Scalar> apply(std::span<const Scalar> x) const;
    friend DenseMatrix operator*(const DenseMatrix &a, const DenseMatrix &b);

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Scalar> entries_;
};

enum class SolutionKind { unique, parametrized, inconsistent };

struct LinearSolution {
    SolutionKind kind = SolutionKind::inconsistent;
    std::size_t rank = 0;
    std::vector<Scalar> particular;            // empty when inconsistent
    std::vector<std::vector<Scalar>> nullspace; // basis, one vector per free column
};

// Rank decisions are exact on exact-rational input; otherwise a pivot is
// accepted when it exceeds 2^-(bits/2) times the largest entry of A.
LinearSolution solve_linear(const DenseMatrix &a, std::span<const Scalar> b);

// Nullspace basis of A (the homogeneous case of solve_linear).
std::vector<std::vector<Scalar>> nullspace(const DenseMatrix &a);

Scalar determinant(const DenseMatrix &a);

// max_i |(A x - b)_i|
BigFloat residual_inf(const DenseMatrix &a, std::span<const Scalar> x, std::span<const Scalar> b);

} // namespace painleve

#endif

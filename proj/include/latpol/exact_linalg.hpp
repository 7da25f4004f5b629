#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include <boost/multiprecision/gmp.hpp>

#include "latpol/error.hpp"

namespace latpol {

using BigInt = boost::multiprecision::number<boost::multiprecision::gmp_int, boost::multiprecision::et_off>;
using Rational = boost::multiprecision::number<boost::multiprecision::gmp_rational, boost::multiprecision::et_off>;

using IntVec = std::vector<BigInt>;
using RatVec = std::vector<Rational>;

// Dense row-major matrix.
template <class T>
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols) {}
    Matrix(std::initializer_list<std::initializer_list<T>> init);

    static Matrix identity(std::size_t n);
    static Matrix from_columns(const std::vector<std::vector<T>>& cols);
    static Matrix from_rows(const std::vector<std::vector<T>>& rows);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    T& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
    const T& operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

    std::vector<T> row(std::size_t i) const;
    std::vector<T> column(std::size_t j) const;
    Matrix transpose() const;

    bool operator==(const Matrix& o) const = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<T> a_;
};

using IntMatrix = Matrix<BigInt>;
using RatMatrix = Matrix<Rational>;

template <class T>
Matrix<T>::Matrix(std::initializer_list<std::initializer_list<T>> init) {
    rows_ = init.size();
    cols_ = rows_ ? init.begin()->size() : 0;
    for (const auto& r : init) {
        if (r.size() != cols_) throw Error(ErrorKind::DimensionMismatch, "ragged matrix literal");
        for (const auto& v : r) a_.push_back(v);
    }
}

template <class T>
Matrix<T> Matrix<T>::identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

template <class T>
Matrix<T> Matrix<T>::from_columns(const std::vector<std::vector<T>>& cols) {
    if (cols.empty()) return Matrix();
    Matrix m(cols[0].size(), cols.size());
    for (std::size_t j = 0; j < cols.size(); ++j) {
        if (cols[j].size() != m.rows_) throw Error(ErrorKind::DimensionMismatch, "ragged columns");
        for (std::size_t i = 0; i < m.rows_; ++i) m(i, j) = cols[j][i];
    }
    return m;
}

template <class T>
Matrix<T> Matrix<T>::from_rows(const std::vector<std::vector<T>>& rows) {
    if (rows.empty()) return Matrix();
    Matrix m(rows.size(), rows[0].size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != m.cols_) throw Error(ErrorKind::DimensionMismatch, "ragged rows");
        for (std::size_t j = 0; j < m.cols_; ++j) m(i, j) = rows[i][j];
    }
    return m;
}

template <class T>
std::vector<T> Matrix<T>::row(std::size_t i) const {
    return std::vector<T>(a_.begin() + i * cols_, a_.begin() + (i + 1) * cols_);
}

template <class T>
std::vector<T> Matrix<T>::column(std::size_t j) const {
    std::vector<T> c(rows_);
    for (std::size_t i = 0; i < rows_; ++i) c[i] = (*this)(i, j);
    return c;
}

template <class T>
Matrix<T> Matrix<T>::transpose() const {
    Matrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
}

RatMatrix to_rational(const IntMatrix& m);
RatVec to_rational(const IntVec& v);

// Exact Gaussian elimination. Throws SingularMatrix.
RatVec solve_linear(const RatMatrix& A, const RatVec& b);
RatMatrix inverse(const RatMatrix& A);

// Fraction-free (Bareiss) determinant.
BigInt determinant(const IntMatrix& A);
Rational determinant(const RatMatrix& A);

std::size_t rank(const RatMatrix& A);
std::size_t rank(const IntMatrix& A);

// gcd of the l x l minors of a d x l matrix; 0 when rank-deficient.
BigInt gcd_of_maximal_minors(const IntMatrix& E);

// gcd of all k x k minors (any row and column subsets).
BigInt gcd_of_minors(const IntMatrix& M, std::size_t k);

// Nonzero diagonal entries of the Smith normal form, d_1 | d_2 | ...
std::vector<BigInt> smith_invariant_factors(const IntMatrix& M);

// v / gcd(v), first nonzero entry positive. Throws ZeroVector.
IntVec primitive_vector(const IntVec& v);

BigInt gcd_of(const IntVec& v);
BigInt lcm_of_denominators(const RatVec& v);
bool is_integral(const Rational& q);
bool is_integral(const RatVec& v);
IntVec to_integer(const RatVec& v);  // throws InvalidArgument if not integral

BigInt factorial(unsigned n);
BigInt binomial(unsigned n, unsigned k);

BigInt floor_div(const Rational& q);
BigInt ceil_div(const Rational& q);

// "p" or "p/q".
std::string to_string(const Rational& q);
std::string to_string(const BigInt& z);
Rational parse_rational(const std::string& s);  // throws Parse

Rational dot(const RatVec& a, const RatVec& b);
BigInt dot(const IntVec& a, const IntVec& b);

}  // namespace latpol

#pragma once

#include "rwa/rational.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace rwa {

// Dense exact vectors and matrices over Rational. Both are immutable values:
// every operation returns a fresh value, so instances can be shared freely.

class Vector {
public:
    explicit Vector(std::vector<Rational> entries);
    static Vector zeros(std::size_t n);

    std::size_t size() const { return entries_.size(); }
    const Rational& operator[](std::size_t i) const { return entries_[i]; }
    const std::vector<Rational>& entries() const { return entries_; }

    bool operator==(const Vector& other) const = default;

private:
    std::vector<Rational> entries_;
};

class Matrix {
public:
    Matrix(std::size_t rows, std::size_t cols, std::vector<Rational> row_major);
    explicit Matrix(const std::vector<std::vector<Rational>>& rows);
    static Matrix identity(std::size_t n);
    static Matrix zeros(std::size_t rows, std::size_t cols);
    static Matrix from_row(const Vector& v);    // 1 x n
    static Matrix from_column(const Vector& v); // n x 1

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    const Rational& at(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    Vector row(std::size_t i) const;
    Vector column(std::size_t j) const; // 0-based; throws ShapeError out of range

    std::string shape_string() const;

    bool operator==(const Matrix& other) const = default;

private:
    std::size_t rows_;
    std::size_t cols_;
    std::vector<Rational> data_; // row-major

    friend Matrix rref(const Matrix&);
};

Matrix operator+(const Matrix& a, const Matrix& b);
Matrix operator*(const Matrix& a, const Matrix& b);
Vector operator*(const Vector& v, const Matrix& a); // row vector times matrix
Vector operator*(const Matrix& a, const Vector& v); // matrix times column vector

Rational dot(const Vector& u, const Vector& v);
Rational max_norm(const Vector& v);

// Gauss-Jordan reduction to the unique reduced row echelon form.
Matrix rref(const Matrix& a);

// Number of nonzero rows of rref(a).
std::size_t rank(const Matrix& a);

// Left-to-right concatenation of blocks with equal row counts.
Matrix augment(const std::vector<Matrix>& blocks);

// Some X with n_mat * X = b, free variables set to 0, or nullopt when
// rank(n_mat) != rank([n_mat | b]).
std::optional<Matrix> solve_right(const Matrix& n_mat, const Matrix& b);

// Lexicographic order on entries; for use as a std::map comparator when
// deduplicating vector states. Equality remains entrywise exact equality.
struct VectorLess {
    bool operator()(const Vector& a, const Vector& b) const;
};

// Multi-line rendering with right-aligned columns. block_cols splits the
// column range into vertical-bar separated blocks (used by the linearity
// report); empty means a single block.
std::string format_matrix(const Matrix& a, const std::vector<std::size_t>& block_cols = {},
                          const std::string& indent = "");

} // namespace rwa

#include "rwa/linalg.hpp"

#include "rwa/errors.hpp"

#include <algorithm>
#include <sstream>

namespace rwa {

Vector::Vector(std::vector<Rational> entries) : entries_(std::move(entries)) {
    if (entries_.empty()) throw ShapeError("vector must have length >= 1");
}

Vector Vector::zeros(std::size_t n) {
    return Vector(std::vector<Rational>(n));
}

Matrix::Matrix(std::size_t rows, std::size_t cols, std::vector<Rational> row_major)
    : rows_(rows), cols_(cols), data_(std::move(row_major)) {
    if (rows_ == 0 || cols_ == 0) throw ShapeError("matrix dimensions must be >= 1");
    if (data_.size() != rows_ * cols_)
        throw ShapeError("matrix data size " + std::to_string(data_.size()) +
                         " does not match shape " + shape_string());
}

Matrix::Matrix(const std::vector<std::vector<Rational>>& rows) : rows_(rows.size()), cols_(0) {
    if (rows.empty() || rows.front().empty())
        throw ShapeError("matrix dimensions must be >= 1");
    cols_ = rows.front().size();
    data_.reserve(rows_ * cols_);
    for (const auto& r : rows) {
        if (r.size() != cols_)
            throw ShapeError("ragged matrix rows: " + std::to_string(cols_) + " vs " +
                             std::to_string(r.size()));
        data_.insert(data_.end(), r.begin(), r.end());
    }
}

Matrix Matrix::identity(std::size_t n) {
    Matrix m = zeros(n, n);
    for (std::size_t i = 0; i < n; ++i) m.data_[i * n + i] = 1;
    return m;
}

Matrix Matrix::zeros(std::size_t rows, std::size_t cols) {
    return Matrix(rows, cols, std::vector<Rational>(rows * cols));
}

Matrix Matrix::from_row(const Vector& v) {
    return Matrix(1, v.size(), v.entries());
}

Matrix Matrix::from_column(const Vector& v) {
    return Matrix(v.size(), 1, v.entries());
}

Vector Matrix::row(std::size_t i) const {
    if (i >= rows_) throw ShapeError("row index " + std::to_string(i) + " out of range for " + shape_string());
    return Vector(std::vector<Rational>(data_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
                                        data_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_)));
}

Vector Matrix::column(std::size_t j) const {
    if (j >= cols_) throw ShapeError("column index " + std::to_string(j) + " out of range for " + shape_string());
    std::vector<Rational> out(rows_);
    for (std::size_t i = 0; i < rows_; ++i) out[i] = at(i, j);
    return Vector(std::move(out));
}

std::string Matrix::shape_string() const {
    return std::to_string(rows_) + "x" + std::to_string(cols_);
}

Matrix operator+(const Matrix& a, const Matrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols())
        throw ShapeError("matrix addition shape mismatch: " + a.shape_string() + " vs " + b.shape_string());
    std::vector<Rational> out;
    out.reserve(a.rows() * a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) out.push_back(a.at(i, j) + b.at(i, j));
    return Matrix(a.rows(), a.cols(), std::move(out));
}

Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols() != b.rows())
        throw ShapeError("matrix product shape mismatch: " + a.shape_string() + " vs " + b.shape_string());
    std::vector<Rational> out(a.rows() * b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) {
            const Rational& aij = a.at(i, j);
            if (aij == 0) continue;
            for (std::size_t k = 0; k < b.cols(); ++k) out[i * b.cols() + k] += aij * b.at(j, k);
        }
    return Matrix(a.rows(), b.cols(), std::move(out));
}

Vector operator*(const Vector& v, const Matrix& a) {
    if (v.size() != a.rows())
        throw ShapeError("vector-matrix product shape mismatch: 1x" + std::to_string(v.size()) +
                         " vs " + a.shape_string());
    std::vector<Rational> out(a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        if (v[i] == 0) continue;
        for (std::size_t j = 0; j < a.cols(); ++j) out[j] += v[i] * a.at(i, j);
    }
    return Vector(std::move(out));
}

Vector operator*(const Matrix& a, const Vector& v) {
    if (a.cols() != v.size())
        throw ShapeError("matrix-vector product shape mismatch: " + a.shape_string() + " vs " +
                         std::to_string(v.size()) + "x1");
    std::vector<Rational> out(a.rows());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        Rational acc = 0;
        for (std::size_t j = 0; j < a.cols(); ++j) acc += a.at(i, j) * v[j];
        out[i] = acc;
    }
    return Vector(std::move(out));
}

Rational dot(const Vector& u, const Vector& v) {
    if (u.size() != v.size())
        throw ShapeError("dot product length mismatch: " + std::to_string(u.size()) + " vs " +
                         std::to_string(v.size()));
    Rational acc = 0;
    for (std::size_t i = 0; i < u.size(); ++i) acc += u[i] * v[i];
    return acc;
}

Rational max_norm(const Vector& v) {
    Rational best = 0;
    for (std::size_t i = 0; i < v.size(); ++i) {
        Rational a = rat_abs(v[i]);
        if (a > best) best = a;
    }
    return best;
}

Matrix rref(const Matrix& a) {
    Matrix r = a;
    auto& d = r.data_;
    const std::size_t m = r.rows(), n = r.cols();
    std::size_t pivot_row = 0;
    for (std::size_t col = 0; col < n && pivot_row < m; ++col) {
        // pivot by first nonzero entry; exact arithmetic needs no magnitude pivoting
        std::size_t p = pivot_row;
        while (p < m && d[p * n + col] == 0) ++p;
        if (p == m) continue;
        if (p != pivot_row)
            for (std::size_t j = 0; j < n; ++j) std::swap(d[p * n + j], d[pivot_row * n + j]);
        Rational inv = Rational(1) / d[pivot_row * n + col];
        if (inv != 1)
            for (std::size_t j = col; j < n; ++j) d[pivot_row * n + j] *= inv;
        for (std::size_t i = 0; i < m; ++i) {
            if (i == pivot_row) continue;
            Rational factor = d[i * n + col];
            if (factor == 0) continue;
            for (std::size_t j = col; j < n; ++j) d[i * n + j] -= factor * d[pivot_row * n + j];
        }
        ++pivot_row;
    }
    return r;
}

std::size_t rank(const Matrix& a) {
    Matrix r = rref(a);
    std::size_t nonzero = 0;
    for (std::size_t i = 0; i < r.rows(); ++i) {
        bool zero = true;
        for (std::size_t j = 0; j < r.cols(); ++j)
            if (r.at(i, j) != 0) { zero = false; break; }
        if (!zero) ++nonzero;
    }
    return nonzero;
}

Matrix augment(const std::vector<Matrix>& blocks) {
    if (blocks.empty()) throw ShapeError("augment needs at least one block");
    const std::size_t m = blocks.front().rows();
    std::size_t total_cols = 0;
    for (const auto& b : blocks) {
        if (b.rows() != m)
            throw ShapeError("augment row-count mismatch: " + blocks.front().shape_string() +
                             " vs " + b.shape_string());
        total_cols += b.cols();
    }
    std::vector<Rational> out;
    out.reserve(m * total_cols);
    for (std::size_t i = 0; i < m; ++i)
        for (const auto& b : blocks)
            for (std::size_t j = 0; j < b.cols(); ++j) out.push_back(b.at(i, j));
    return Matrix(m, total_cols, std::move(out));
}

std::optional<Matrix> solve_right(const Matrix& n_mat, const Matrix& b) {
    if (n_mat.rows() != b.rows())
        throw ShapeError("solve_right row-count mismatch: " + n_mat.shape_string() + " vs " +
                         b.shape_string());
    const std::size_t n = n_mat.cols(), p = b.cols();
    Matrix r = rref(augment({n_mat, b}));

    // pivot columns of the left block, by pivot row
    std::vector<std::pair<std::size_t, std::size_t>> pivots; // (row, col)
    std::size_t row = 0;
    for (std::size_t col = 0; col < n && row < r.rows(); ++col) {
        if (r.at(row, col) == 1) {
            bool is_pivot = true;
            for (std::size_t i = 0; i < r.rows(); ++i)
                if (i != row && r.at(i, col) != 0) { is_pivot = false; break; }
            if (is_pivot) {
                pivots.emplace_back(row, col);
                ++row;
            }
        }
    }
    // consistent iff no row is zero on the left block but nonzero on the right
    for (std::size_t i = row; i < r.rows(); ++i)
        for (std::size_t j = n; j < r.cols(); ++j)
            if (r.at(i, j) != 0) return std::nullopt;

    std::vector<Rational> x(n * p); // free variables stay 0
    for (const auto& [pr, pc] : pivots)
        for (std::size_t k = 0; k < p; ++k) x[pc * p + k] = r.at(pr, n + k);
    return Matrix(n, p, std::move(x));
}

bool VectorLess::operator()(const Vector& a, const Vector& b) const {
    if (a.size() != b.size()) return a.size() < b.size();
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] < b[i]) return true;
        if (b[i] < a[i]) return false;
    }
    return false;
}

std::string format_matrix(const Matrix& a, const std::vector<std::size_t>& block_cols,
                          const std::string& indent) {
    std::vector<std::vector<std::string>> cells(a.rows(), std::vector<std::string>(a.cols()));
    std::vector<std::size_t> widths(a.cols(), 0);
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) {
            cells[i][j] = rational_to_string(a.at(i, j));
            widths[j] = std::max(widths[j], cells[i][j].size());
        }
    std::vector<bool> bar_after(a.cols(), false);
    std::size_t consumed = 0;
    for (std::size_t w : block_cols) {
        consumed += w;
        if (consumed < a.cols()) bar_after[consumed - 1] = true;
    }
    std::ostringstream os;
    for (std::size_t i = 0; i < a.rows(); ++i) {
        os << indent;
        for (std::size_t j = 0; j < a.cols(); ++j) {
            os << std::string(widths[j] - cells[i][j].size(), ' ') << cells[i][j];
            if (j + 1 < a.cols()) os << (bar_after[j] ? " | " : " ");
        }
        os << '\n';
    }
    return os.str();
}

} // namespace rwa

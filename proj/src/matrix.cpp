#include "fmk/matrix.hpp"

#include "fmk/errors.hpp"

#include <algorithm>
#include <cstddef>

namespace fmk {

bool vec_is_integral(const RatVec& v) {
    return std::all_of(v.begin(), v.end(), [](const Rational& r) { return is_integer(r); });
}

bool vec_is_zero(const RatVec& v) {
    return std::all_of(v.begin(), v.end(), [](const Rational& r) { return r == 0; });
}

RatVec vec_add(const RatVec& a, const RatVec& b) {
    if (a.size() != b.size()) throw PreconditionError("vector size mismatch in vec_add");
    RatVec out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
    return out;
}

RatVec vec_sub(const RatVec& a, const RatVec& b) {
    if (a.size() != b.size()) throw PreconditionError("vector size mismatch in vec_sub");
    RatVec out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] - b[i];
    return out;
}

RatVec vec_scale(const Rational& c, const RatVec& v) {
    RatVec out(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) out[i] = c * v[i];
    return out;
}

RatMat::RatMat(int rows, int cols) : rows_(rows), cols_(cols) {
    if (rows < 0 || cols < 0) throw PreconditionError("negative matrix dimension");
    data_.assign(static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols), Rational(0));
}

RatMat RatMat::identity(int n) {
    RatMat m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

RatMat RatMat::transpose() const {
    RatMat t(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
    return t;
}

RatMat RatMat::operator*(const RatMat& rhs) const {
    if (cols_ != rhs.rows_) throw PreconditionError("matrix shape mismatch in product");
    RatMat out(rows_, rhs.cols_);
    for (int i = 0; i < rows_; ++i) {
        for (int k = 0; k < cols_; ++k) {
            const Rational& a = at(i, k);
            if (a == 0) continue;
            for (int j = 0; j < rhs.cols_; ++j) {
                const Rational& b = rhs.at(k, j);
                if (b != 0) out.at(i, j) += a * b;
            }
        }
    }
    return out;
}

RatMat RatMat::operator+(const RatMat& rhs) const {
    if (rows_ != rhs.rows_ || cols_ != rhs.cols_)
        throw PreconditionError("matrix shape mismatch in sum");
    RatMat out(rows_, cols_);
    for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] = data_[i] + rhs.data_[i];
    return out;
}

RatMat RatMat::operator-(const RatMat& rhs) const {
    if (rows_ != rhs.rows_ || cols_ != rhs.cols_)
        throw PreconditionError("matrix shape mismatch in difference");
    RatMat out(rows_, cols_);
    for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] = data_[i] - rhs.data_[i];
    return out;
}

RatMat RatMat::operator-() const {
    RatMat out(rows_, cols_);
    for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] = -data_[i];
    return out;
}

RatMat RatMat::scaled(const Rational& c) const {
    RatMat out(rows_, cols_);
    for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] = c * data_[i];
    return out;
}

RatVec RatMat::apply(const RatVec& v) const {
    if (static_cast<int>(v.size()) != cols_)
        throw PreconditionError("vector length mismatch in matrix apply");
    RatVec out(static_cast<std::size_t>(rows_), Rational(0));
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j)
            if (at(i, j) != 0) out[i] += at(i, j) * v[j];
    return out;
}

Rational RatMat::det() const {
    if (!is_square()) throw PreconditionError("determinant of a non-square matrix");
    RatMat m = *this; // fraction-friendly Gaussian elimination
    Rational result(1);
    for (int col = 0; col < cols_; ++col) {
        int pivot = -1;
        for (int row = col; row < rows_; ++row) {
            if (m.at(row, col) != 0) {
                pivot = row;
                break;
            }
        }
        if (pivot < 0) return Rational(0);
        if (pivot != col) {
            for (int j = 0; j < cols_; ++j) std::swap(m.at(pivot, j), m.at(col, j));
            result = -result;
        }
        const Rational p = m.at(col, col);
        result *= p;
        for (int row = col + 1; row < rows_; ++row) {
            if (m.at(row, col) == 0) continue;
            const Rational factor = m.at(row, col) / p;
            for (int j = col; j < cols_; ++j) m.at(row, j) -= factor * m.at(col, j);
        }
    }
    return result;
}

RatMat RatMat::inverse() const {
    if (!is_square()) throw PreconditionError("inverse of a non-square matrix");
    RatMat m = *this;
    RatMat inv = identity(rows_);
    for (int col = 0; col < cols_; ++col) {
        int pivot = -1;
        for (int row = col; row < rows_; ++row) {
            if (m.at(row, col) != 0) {
                pivot = row;
                break;
            }
        }
        if (pivot < 0) throw MathError("matrix is singular");
        if (pivot != col) {
            for (int j = 0; j < cols_; ++j) {
                std::swap(m.at(pivot, j), m.at(col, j));
                std::swap(inv.at(pivot, j), inv.at(col, j));
            }
        }
        const Rational p = m.at(col, col);
        for (int j = 0; j < cols_; ++j) {
            m.at(col, j) /= p;
            inv.at(col, j) /= p;
        }
        for (int row = 0; row < rows_; ++row) {
            if (row == col || m.at(row, col) == 0) continue;
            const Rational factor = m.at(row, col);
            for (int j = 0; j < cols_; ++j) {
                m.at(row, j) -= factor * m.at(col, j);
                inv.at(row, j) -= factor * inv.at(col, j);
            }
        }
    }
    return inv;
}

bool RatMat::is_integral() const { return vec_is_integral(data_); }

bool RatMat::is_zero() const { return vec_is_zero(data_); }

std::string to_string(const RatMat& m) {
    std::string s = "[";
    for (int i = 0; i < m.rows(); ++i) {
        if (i) s += ", ";
        s += "[";
        for (int j = 0; j < m.cols(); ++j) {
            if (j) s += ", ";
            s += to_string(m.at(i, j));
        }
        s += "]";
    }
    s += "]";
    return s;
}

} // namespace fmk

#pragma once

#include "fmk/rational.hpp"

#include <vector>

namespace fmk {

using RatVec = std::vector<Rational>;

bool vec_is_integral(const RatVec& v);
bool vec_is_zero(const RatVec& v);
RatVec vec_add(const RatVec& a, const RatVec& b);
RatVec vec_sub(const RatVec& a, const RatVec& b);
RatVec vec_scale(const Rational& c, const RatVec& v);

// Dense matrix of exact rationals. Dimensions may be zero (genus-0 Jacobians
// have 0x0 matrices); the empty determinant is 1.
class RatMat {
  public:
    RatMat() : rows_(0), cols_(0) {}
    RatMat(int rows, int cols);
    static RatMat identity(int n);

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    Rational& at(int i, int j) { return data_[static_cast<std::size_t>(i) * cols_ + j]; }
    const Rational& at(int i, int j) const {
        return data_[static_cast<std::size_t>(i) * cols_ + j];
    }

    RatMat transpose() const;
    RatMat operator*(const RatMat& rhs) const;
    RatMat operator+(const RatMat& rhs) const;
    RatMat operator-(const RatMat& rhs) const;
    RatMat operator-() const;
    RatMat scaled(const Rational& c) const;
    RatVec apply(const RatVec& v) const;

    Rational det() const;
    RatMat inverse() const; // throws MathError when singular

    bool is_integral() const;
    bool is_zero() const;
    bool is_square() const { return rows_ == cols_; }

    bool operator==(const RatMat& rhs) const = default;

  private:
    int rows_;
    int cols_;
    std::vector<Rational> data_;
};

// Human-oriented rendering, e.g. "[[1, 0], [0, 1]]".
std::string to_string(const RatMat& m);

} // namespace fmk

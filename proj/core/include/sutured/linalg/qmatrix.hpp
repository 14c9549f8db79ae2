#pragma once

#include "sutured/linalg/rational.hpp"

#include <cstddef>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <vector>

namespace sutured::linalg {

// Dense row-major matrix over the rationals. Zero rows or zero columns are allowed.
class QMatrix {
public:
    QMatrix() = default;
    QMatrix(std::size_t rows, std::size_t cols);
    QMatrix(std::initializer_list<std::initializer_list<Rational>> rows);

    static QMatrix identity(std::size_t size);
    static QMatrix column(const std::vector<Rational>& entries);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool empty() const { return rows_ == 0 || cols_ == 0; }

    Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    QMatrix transpose() const;
    bool is_zero() const;
    std::string to_string() const;

    friend QMatrix operator*(const QMatrix& a, const QMatrix& b);
    friend bool operator==(const QMatrix& a, const QMatrix& b) = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Rational> data_;
};

// Signals d_out * d_in != 0 when computing homology.
class InconsistentComplex : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

std::size_t rank(const QMatrix& m);

// dim ker(d_out) - rank(d_in) at the grading sitting between the two maps.
// d_out : C_m -> C_{m-1}, d_in : C_{m+1} -> C_m.
std::size_t homology_rank(const QMatrix& d_out, const QMatrix& d_in);

}  // namespace sutured::linalg

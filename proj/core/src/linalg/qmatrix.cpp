#include "sutured/linalg/qmatrix.hpp"

#include <sstream>
#include <utility>

namespace sutured::linalg {

QMatrix::QMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols) {}

QMatrix::QMatrix(std::initializer_list<std::initializer_list<Rational>> rows) {
    rows_ = rows.size();
    cols_ = rows_ == 0 ? 0 : rows.begin()->size();
    data_.reserve(rows_ * cols_);
    for (const auto& row : rows) {
        if (row.size() != cols_) {
            throw std::invalid_argument("ragged matrix literal");
        }
        data_.insert(data_.end(), row.begin(), row.end());
    }
}

QMatrix QMatrix::identity(std::size_t size) {
    QMatrix m(size, size);
    for (std::size_t i = 0; i < size; ++i) {
        m(i, i) = 1;
    }
    return m;
}

QMatrix QMatrix::column(const std::vector<Rational>& entries) {
    QMatrix m(entries.size(), 1);
    for (std::size_t i = 0; i < entries.size(); ++i) {
        m(i, 0) = entries[i];
    }
    return m;
}

QMatrix QMatrix::transpose() const {
    QMatrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r) {
        for (std::size_t c = 0; c < cols_; ++c) {
            t(c, r) = (*this)(r, c);
        }
    }
    return t;
}

bool QMatrix::is_zero() const {
    for (const auto& x : data_) {
        if (!x.is_zero()) return false;
    }
    return true;
}

std::string QMatrix::to_string() const {
    std::ostringstream os;
    os << '[';
    for (std::size_t r = 0; r < rows_; ++r) {
        if (r) os << ", ";
        os << '[';
        for (std::size_t c = 0; c < cols_; ++c) {
            if (c) os << ", ";
            os << (*this)(r, c).to_string();
        }
        os << ']';
    }
    os << ']';
    return os.str();
}

QMatrix operator*(const QMatrix& a, const QMatrix& b) {
    if (a.cols_ != b.rows_) {
        throw std::invalid_argument("matrix product shape mismatch");
    }
    QMatrix out(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i) {
        for (std::size_t k = 0; k < a.cols_; ++k) {
            const Rational& aik = a(i, k);
            if (aik.is_zero()) continue;
            for (std::size_t j = 0; j < b.cols_; ++j) {
                out(i, j) += aik * b(k, j);
            }
        }
    }
    return out;
}

std::size_t rank(const QMatrix& m) {
    const std::size_t rows = m.rows();
    const std::size_t cols = m.cols();
    if (rows == 0 || cols == 0) return 0;

    // Scale each row by the lcm of its denominators; rank is unchanged.
    std::vector<std::vector<Integer>> a(rows, std::vector<Integer>(cols));
    for (std::size_t r = 0; r < rows; ++r) {
        Integer l = 1;
        for (std::size_t c = 0; c < cols; ++c) {
            l = boost::multiprecision::lcm(l, m(r, c).denominator());
        }
        for (std::size_t c = 0; c < cols; ++c) {
            a[r][c] = m(r, c).numerator() * (l / m(r, c).denominator());
        }
    }

    // Bareiss fraction-free elimination with column skipping.
    Integer prev = 1;
    std::size_t pivot_row = 0;
    for (std::size_t col = 0; col < cols && pivot_row < rows; ++col) {
        std::size_t p = pivot_row;
        while (p < rows && a[p][col] == 0) ++p;
        if (p == rows) continue;
        std::swap(a[p], a[pivot_row]);
        const Integer& piv = a[pivot_row][col];
        for (std::size_t r = pivot_row + 1; r < rows; ++r) {
            for (std::size_t c = col + 1; c < cols; ++c) {
                Integer v = piv * a[r][c] - a[r][col] * a[pivot_row][c];
                a[r][c] = v / prev;
            }
            a[r][col] = 0;
        }
        prev = piv;
        ++pivot_row;
    }
    return pivot_row;
}

std::size_t homology_rank(const QMatrix& d_out, const QMatrix& d_in) {
    if (d_out.cols() != d_in.rows()) {
        throw std::invalid_argument("homology_rank: cols(d_out) must equal rows(d_in)");
    }
    if (!(d_out * d_in).is_zero()) {
        throw InconsistentComplex("homology_rank: d_out * d_in is nonzero");
    }
    std::size_t r_out = rank(d_out);
    std::size_t r_in = rank(d_in);
    return d_out.cols() - r_out - r_in;
}

}  // namespace sutured::linalg

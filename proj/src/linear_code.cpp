#include "agcodes/linear_code.hpp"

#include <algorithm>
#include <stdexcept>

namespace agcodes {

Matrix::Matrix(std::shared_ptr<const Field> field, std::size_t rows, std::size_t cols)
    : field_(std::move(field)), rows_(rows), cols_(cols), a_(rows * cols, 0) {
    if (!field_) throw std::invalid_argument("matrix needs a field");
}

Matrix Matrix::identity(std::shared_ptr<const Field> field, std::size_t n) {
    Matrix m(std::move(field), n, n);
    for (std::size_t i = 0; i < n; ++i) m.set(i, i, 1);
    return m;
}

void Matrix::append_row(std::span<const Field::Enc> values) {
    if (values.size() != cols_) throw std::invalid_argument("row length mismatch");
    a_.insert(a_.end(), values.begin(), values.end());
    ++rows_;
}

void Matrix::scale_column(std::size_t c, Field::Enc v) {
    for (std::size_t r = 0; r < rows_; ++r) set(r, c, field_->mul((*this)(r, c), v));
}

Matrix Matrix::transposed() const {
    Matrix t(field_, cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c) t.set(c, r, (*this)(r, c));
    return t;
}

Matrix Matrix::operator*(const Matrix& rhs) const {
    if (field_.get() != rhs.field_.get()) throw std::invalid_argument("SpecMismatch: matrices over different fields");
    if (cols_ != rhs.rows_) throw std::invalid_argument("matrix dimension mismatch");
    Matrix out(field_, rows_, rhs.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < rhs.cols_; ++j) {
            Field::Enc acc = 0;
            for (std::size_t t = 0; t < cols_; ++t)
                acc = field_->add(acc, field_->mul((*this)(i, t), rhs(t, j)));
            out.set(i, j, acc);
        }
    return out;
}

bool Matrix::operator==(const Matrix& rhs) const {
    return field_.get() == rhs.field_.get() && rows_ == rhs.rows_ && cols_ == rhs.cols_ && a_ == rhs.a_;
}

bool Matrix::is_zero() const {
    return std::all_of(a_.begin(), a_.end(), [](Field::Enc v) { return v == 0; });
}

std::size_t Matrix::reduce() {
    const Field& f = *field_;
    std::size_t pivot_row = 0;
    for (std::size_t col = 0; col < cols_ && pivot_row < rows_; ++col) {
        std::size_t sel = pivot_row;
        while (sel < rows_ && (*this)(sel, col) == 0) ++sel;
        if (sel == rows_) continue;
        if (sel != pivot_row)
            for (std::size_t c = 0; c < cols_; ++c) std::swap(a_[sel * cols_ + c], a_[pivot_row * cols_ + c]);
        const Field::Enc scale = f.inv((*this)(pivot_row, col));
        for (std::size_t c = col; c < cols_; ++c) set(pivot_row, c, f.mul((*this)(pivot_row, c), scale));
        for (std::size_t r = 0; r < rows_; ++r) {
            if (r == pivot_row) continue;
            const Field::Enc factor = (*this)(r, col);
            if (factor == 0) continue;
            for (std::size_t c = col; c < cols_; ++c)
                set(r, c, f.sub((*this)(r, c), f.mul(factor, (*this)(pivot_row, c))));
        }
        ++pivot_row;
    }
    return pivot_row;
}

std::size_t Matrix::rank() const {
    Matrix copy = *this;
    return copy.reduce();
}

Matrix Matrix::rref() const {
    Matrix copy = *this;
    const std::size_t r = copy.reduce();
    Matrix out(field_, 0, cols_);
    for (std::size_t i = 0; i < r; ++i) out.append_row(copy.row(i));
    return out;
}

Matrix Matrix::nullspace() const {
    const Field& f = *field_;
    Matrix r = rref();
    const std::size_t rank = r.rows();

    std::vector<std::size_t> pivot_of_row(rank);
    std::vector<char> is_pivot(cols_, 0);
    for (std::size_t i = 0; i < rank; ++i) {
        std::size_t c = 0;
        while (c < cols_ && r(i, c) == 0) ++c;
        pivot_of_row[i] = c;
        is_pivot[c] = 1;
    }

    Matrix out(field_, 0, cols_);
    std::vector<Field::Enc> x(cols_);
    for (std::size_t free_col = 0; free_col < cols_; ++free_col) {
        if (is_pivot[free_col]) continue;
        std::fill(x.begin(), x.end(), 0);
        x[free_col] = 1;
        for (std::size_t i = 0; i < rank; ++i) x[pivot_of_row[i]] = f.neg(r(i, free_col));
        out.append_row(x);
    }
    return out;
}

LinearCode LinearCode::from_rows(const Matrix& rows) { return LinearCode(rows.rref()); }

bool LinearCode::contains(std::span<const Field::Enc> word) const {
    if (word.size() != n()) throw std::invalid_argument("word length mismatch");
    const Field& f = *field();
    std::vector<Field::Enc> w(word.begin(), word.end());
    for (std::size_t i = 0; i < k(); ++i) {
        std::size_t piv = 0;
        while (piv < n() && gen_(i, piv) == 0) ++piv;
        const Field::Enc factor = w[piv];
        if (factor == 0) continue;
        for (std::size_t c = piv; c < n(); ++c) w[c] = f.sub(w[c], f.mul(factor, gen_(i, c)));
    }
    return std::all_of(w.begin(), w.end(), [](Field::Enc v) { return v == 0; });
}

bool LinearCode::contains(const LinearCode& sub) const {
    if (field().get() != sub.field().get() || n() != sub.n()) return false;
    for (std::size_t i = 0; i < sub.k(); ++i)
        if (!contains(sub.gen_.row(i))) return false;
    return true;
}

} // namespace agcodes

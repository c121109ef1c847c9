#ifndef AGCODES_LINEAR_CODE_HPP
#define AGCODES_LINEAR_CODE_HPP

#include <cstddef>
#include <memory>
#include <span>
#include <vector>

#include "agcodes/field.hpp"

namespace agcodes {

/// Dense matrix over a finite field, entries stored as encodings.
class Matrix {
public:
    Matrix(std::shared_ptr<const Field> field, std::size_t rows, std::size_t cols);
    static Matrix identity(std::shared_ptr<const Field> field, std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    const std::shared_ptr<const Field>& field() const { return field_; }

    Field::Enc operator()(std::size_t r, std::size_t c) const { return a_[r * cols_ + c]; }
    void set(std::size_t r, std::size_t c, Field::Enc v) { a_[r * cols_ + c] = v; }

    std::span<const Field::Enc> row(std::size_t r) const { return {a_.data() + r * cols_, cols_}; }
    std::span<Field::Enc> row(std::size_t r) { return {a_.data() + r * cols_, cols_}; }

    void append_row(std::span<const Field::Enc> values);
    void scale_column(std::size_t c, Field::Enc v);

    Matrix transposed() const;
    Matrix operator*(const Matrix& rhs) const;
    bool operator==(const Matrix& rhs) const;

    bool is_zero() const;

    /// In-place reduction to reduced row echelon form (pivots 1, pivot
    /// columns cleared, pivots leftmost).  Returns the rank; zero rows
    /// end up at the bottom and are kept.
    std::size_t reduce();

    std::size_t rank() const;

    /// Reduced row echelon form with zero rows dropped.
    Matrix rref() const;

    /// Rows form a basis of { x : M x^T = 0 }; (cols - rank) rows.
    Matrix nullspace() const;

private:
    std::shared_ptr<const Field> field_;
    std::size_t rows_, cols_;
    std::vector<Field::Enc> a_;
};

/// A linear [n, k] code held as its reduced-row-echelon generator
/// matrix, so equal codes compare equal as matrices.
class LinearCode {
public:
    /// Canonicalizes the spanning rows: RREF, zero rows dropped.
    static LinearCode from_rows(const Matrix& rows);

    const Matrix& generator() const { return gen_; }
    std::size_t n() const { return gen_.cols(); }
    std::size_t k() const { return gen_.rows(); }
    const std::shared_ptr<const Field>& field() const { return gen_.field(); }

    bool contains(std::span<const Field::Enc> word) const;
    bool contains(const LinearCode& sub) const;
    bool operator==(const LinearCode& rhs) const { return gen_ == rhs.gen_; }

private:
    explicit LinearCode(Matrix gen) : gen_(std::move(gen)) {}
    Matrix gen_;
};

} // namespace agcodes

#endif

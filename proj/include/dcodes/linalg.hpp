#pragma once

// Dense matrices over a prime field: reduced row echelon form, rank and
// linear solves. Everything is exact.

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "dcodes/ff.hpp"

namespace dcodes {

class Matrix {
public:
    Matrix(PrimeField field, std::size_t rows, std::size_t cols)
        : field_(field), rows_(rows), cols_(cols), data_(rows * cols, 0) {}

    /// Rows must all have the same length; an empty list gives a 0 x cols matrix.
    static Matrix from_rows(PrimeField field, std::size_t cols,
                            const std::vector<std::vector<Residue>>& rows);

    const PrimeField& field() const { return field_; }
    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Residue& at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    Residue at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    std::span<Residue> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }
    std::span<const Residue> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }

    std::vector<std::vector<Residue>> to_rows() const;

    bool operator==(const Matrix& o) const = default;

private:
    PrimeField field_;
    std::size_t rows_;
    std::size_t cols_;
    std::vector<Residue> data_;
};

/// In-place reduction to reduced row echelon form with leftmost pivots equal
/// to 1. Returns the pivot columns; their count is the rank. Zero rows end up
/// at the bottom.
std::vector<std::size_t> rref_in_place(Matrix& m);

/// The nonzero rows of the RREF of m, as a rank x cols matrix.
Matrix row_reduced_basis(Matrix m);

std::size_t rank(Matrix m);

/// Some x with a x = b, or nullopt when the system is inconsistent.
std::optional<std::vector<Residue>> solve(const Matrix& a, std::span<const Residue> b);

/// Whether v lies in the row space of a matrix already in RREF.
bool in_row_space(const Matrix& rref_basis, std::span<const Residue> v);

}  // namespace dcodes

#pragma once

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <span>
#include <vector>

#include "blomkit/field.hpp"

namespace blomkit {

/// Dense row-major matrix of GF(q) residues. Indices are 0-based here;
/// 1-based node ids live one layer up, in the schemes.
class FieldMatrix {
public:
    FieldMatrix() = default;

    /// Zero-filled rows x cols matrix.
    FieldMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), entries_(rows * cols, 0) {}

    FieldMatrix(std::size_t rows, std::size_t cols, std::vector<Residue> entries);

    static FieldMatrix identity(std::size_t n);
    static FieldMatrix from_rows(std::initializer_list<std::initializer_list<Residue>> rows);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Residue at(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }
    Residue& at(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }

    std::span<const Residue> row(std::size_t r) const {
        return {entries_.data() + r * cols_, cols_};
    }
    std::vector<Residue> column(std::size_t c) const;

    const std::vector<Residue>& entries() const { return entries_; }

    friend bool operator==(const FieldMatrix&, const FieldMatrix&) = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Residue> entries_;
};

/// Standard matrix product over GF(q). Throws std::invalid_argument on a
/// dimension mismatch.
FieldMatrix mat_mul(const FieldMatrix& a, const FieldMatrix& b, const PrimeField& f);

FieldMatrix transpose(const FieldMatrix& a);

/// True iff a is square and equal to its transpose.
bool is_symmetric(const FieldMatrix& a);

/// Rank over GF(q) via Gaussian elimination with exact modular inverses.
std::size_t rank_mod(const FieldMatrix& a, const PrimeField& f);

/// True iff the selected columns (0-based, distinct) are linearly
/// independent over GF(q). Implemented by incremental basis insertion, a
/// separate code path from rank_mod.
bool columns_linearly_independent(const FieldMatrix& a,
                                  std::span<const std::size_t> col_indices,
                                  const PrimeField& f);

struct LinearSystemSolution {
    enum class Kind { unique, underdetermined, inconsistent };
    Kind kind = Kind::inconsistent;
    std::vector<Residue> solution;  // populated when kind == unique
    std::size_t rank = 0;
};

/// Solves coeffs * x = rhs over GF(q) by Gauss-Jordan elimination.
LinearSystemSolution solve_linear_system(const FieldMatrix& coeffs,
                                         std::span<const Residue> rhs,
                                         const PrimeField& f);

/// A nonzero vector v with a * v = 0, or nullopt when the columns of a are
/// linearly independent.
std::optional<std::vector<Residue>> nullspace_vector(const FieldMatrix& a, const PrimeField& f);

} // namespace blomkit

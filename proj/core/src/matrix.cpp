#include "blomkit/matrix.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_set>

namespace blomkit {

FieldMatrix::FieldMatrix(std::size_t rows, std::size_t cols, std::vector<Residue> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
    if (entries_.size() != rows_ * cols_) {
        throw std::invalid_argument("FieldMatrix: entry count does not match shape");
    }
}

FieldMatrix FieldMatrix::identity(std::size_t n) {
    FieldMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

FieldMatrix FieldMatrix::from_rows(std::initializer_list<std::initializer_list<Residue>> rows) {
    const std::size_t r = rows.size();
    const std::size_t c = r == 0 ? 0 : rows.begin()->size();
    std::vector<Residue> entries;
    entries.reserve(r * c);
    for (const auto& row : rows) {
        if (row.size() != c) {
            throw std::invalid_argument("FieldMatrix: ragged row list");
        }
        entries.insert(entries.end(), row.begin(), row.end());
    }
    return FieldMatrix(r, c, std::move(entries));
}

std::vector<Residue> FieldMatrix::column(std::size_t c) const {
    std::vector<Residue> out(rows_);
    for (std::size_t r = 0; r < rows_; ++r) out[r] = at(r, c);
    return out;
}

FieldMatrix mat_mul(const FieldMatrix& a, const FieldMatrix& b, const PrimeField& f) {
    if (a.cols() != b.rows()) {
        throw std::invalid_argument("mat_mul: inner dimensions disagree");
    }
    FieldMatrix out(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t k = 0; k < a.cols(); ++k) {
            const Residue aik = a.at(i, k);
            if (aik == 0) continue;
            for (std::size_t j = 0; j < b.cols(); ++j) {
                out.at(i, j) = f.add(out.at(i, j), f.mul(aik, b.at(k, j)));
            }
        }
    }
    return out;
}

FieldMatrix transpose(const FieldMatrix& a) {
    FieldMatrix out(a.cols(), a.rows());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) {
            out.at(j, i) = a.at(i, j);
        }
    }
    return out;
}

bool is_symmetric(const FieldMatrix& a) {
    if (a.rows() != a.cols()) return false;
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = i + 1; j < a.cols(); ++j) {
            if (a.at(i, j) != a.at(j, i)) return false;
        }
    }
    return true;
}

namespace {

// Forward elimination with first-nonzero pivoting; returns the rank and
// leaves work in row echelon form.
std::size_t eliminate(FieldMatrix& work, const PrimeField& f) {
    std::size_t rank = 0;
    for (std::size_t col = 0; col < work.cols() && rank < work.rows(); ++col) {
        std::size_t pivot = rank;
        while (pivot < work.rows() && work.at(pivot, col) == 0) ++pivot;
        if (pivot == work.rows()) continue;
        if (pivot != rank) {
            for (std::size_t j = 0; j < work.cols(); ++j) {
                std::swap(work.at(pivot, j), work.at(rank, j));
            }
        }
        const Residue inv = f.inv(work.at(rank, col));
        for (std::size_t j = col; j < work.cols(); ++j) {
            work.at(rank, j) = f.mul(work.at(rank, j), inv);
        }
        for (std::size_t r = rank + 1; r < work.rows(); ++r) {
            const Residue factor = work.at(r, col);
            if (factor == 0) continue;
            for (std::size_t j = col; j < work.cols(); ++j) {
                work.at(r, j) = f.sub(work.at(r, j), f.mul(factor, work.at(rank, j)));
            }
        }
        ++rank;
    }
    return rank;
}

// Reduced row echelon form; returns the pivot column of each pivot row.
std::vector<std::size_t> reduced_echelon(FieldMatrix& work, const PrimeField& f) {
    const std::size_t rank = eliminate(work, f);
    std::vector<std::size_t> pivot_cols;
    pivot_cols.reserve(rank);
    for (std::size_t r = 0; r < rank; ++r) {
        std::size_t col = 0;
        while (col < work.cols() && work.at(r, col) == 0) ++col;
        pivot_cols.push_back(col);
    }
    for (std::size_t r = rank; r-- > 0;) {
        const std::size_t col = pivot_cols[r];
        for (std::size_t above = 0; above < r; ++above) {
            const Residue factor = work.at(above, col);
            if (factor == 0) continue;
            for (std::size_t j = col; j < work.cols(); ++j) {
                work.at(above, j) = f.sub(work.at(above, j), f.mul(factor, work.at(r, j)));
            }
        }
    }
    return pivot_cols;
}

} // namespace

std::size_t rank_mod(const FieldMatrix& a, const PrimeField& f) {
    FieldMatrix work = a;
    return eliminate(work, f);
}

bool columns_linearly_independent(const FieldMatrix& a,
                                  std::span<const std::size_t> col_indices,
                                  const PrimeField& f) {
    std::unordered_set<std::size_t> seen;
    for (std::size_t c : col_indices) {
        if (c >= a.cols()) {
            throw std::out_of_range("columns_linearly_independent: column index out of range");
        }
        if (!seen.insert(c).second) {
            throw std::invalid_argument("columns_linearly_independent: duplicate column index");
        }
    }
    // Insert each selected column into a growing basis kept in echelon form:
    // basis vectors are normalized to a leading 1 at their pivot position.
    std::vector<std::vector<Residue>> basis;
    std::vector<std::size_t> pivots;
    for (std::size_t c : col_indices) {
        std::vector<Residue> v = a.column(c);
        for (std::size_t b = 0; b < basis.size(); ++b) {
            const Residue factor = v[pivots[b]];
            if (factor == 0) continue;
            for (std::size_t r = 0; r < v.size(); ++r) {
                v[r] = f.sub(v[r], f.mul(factor, basis[b][r]));
            }
        }
        std::size_t pivot = 0;
        while (pivot < v.size() && v[pivot] == 0) ++pivot;
        if (pivot == v.size()) return false;  // v reduced to zero: dependent
        const Residue inv = f.inv(v[pivot]);
        for (auto& x : v) x = f.mul(x, inv);
        basis.push_back(std::move(v));
        pivots.push_back(pivot);
    }
    return true;
}

LinearSystemSolution solve_linear_system(const FieldMatrix& coeffs,
                                         std::span<const Residue> rhs,
                                         const PrimeField& f) {
    if (rhs.size() != coeffs.rows()) {
        throw std::invalid_argument("solve_linear_system: rhs length does not match rows");
    }
    FieldMatrix aug(coeffs.rows(), coeffs.cols() + 1);
    for (std::size_t r = 0; r < coeffs.rows(); ++r) {
        for (std::size_t c = 0; c < coeffs.cols(); ++c) aug.at(r, c) = coeffs.at(r, c);
        aug.at(r, coeffs.cols()) = rhs[r];
    }
    const auto pivot_cols = reduced_echelon(aug, f);

    LinearSystemSolution result;
    result.rank = pivot_cols.size();
    if (!pivot_cols.empty() && pivot_cols.back() == coeffs.cols()) {
        // A pivot in the augmented column means some row reads 0 = 1.
        result.kind = LinearSystemSolution::Kind::inconsistent;
        result.rank -= 1;  // rank of the coefficient matrix alone
        return result;
    }
    if (result.rank < coeffs.cols()) {
        result.kind = LinearSystemSolution::Kind::underdetermined;
        return result;
    }
    result.kind = LinearSystemSolution::Kind::unique;
    result.solution.assign(coeffs.cols(), 0);
    for (std::size_t r = 0; r < pivot_cols.size(); ++r) {
        result.solution[pivot_cols[r]] = aug.at(r, coeffs.cols());
    }
    return result;
}

std::optional<std::vector<Residue>> nullspace_vector(const FieldMatrix& a, const PrimeField& f) {
    FieldMatrix work = a;
    const auto pivot_cols = reduced_echelon(work, f);
    if (pivot_cols.size() == a.cols()) return std::nullopt;

    // First free column; set its coordinate to 1 and read the pivot
    // coordinates off the reduced form.
    std::size_t free_col = 0;
    {
        std::size_t p = 0;
        while (free_col < a.cols() && p < pivot_cols.size() && pivot_cols[p] == free_col) {
            ++p;
            ++free_col;
        }
    }
    std::vector<Residue> v(a.cols(), 0);
    v[free_col] = 1;
    for (std::size_t r = 0; r < pivot_cols.size(); ++r) {
        if (pivot_cols[r] < free_col) {
            v[pivot_cols[r]] = f.neg(work.at(r, free_col));
        }
    }
    return v;
}

} // namespace blomkit

#pragma once

/**
 * @file smith.hpp
 * @brief Integer matrices, Smith normal form and abelianization.
 *
 * Entries are GMP integers throughout; presentations here are small, but
 * intermediate entries of unimodular transforms grow quickly.
 */

#include "orbiforge/presentation.hpp"

#include <gmpxx.h>
#include <string>
#include <vector>

namespace orbiforge {

class IntMatrix {
public:
    IntMatrix() = default;
    IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
    IntMatrix(std::size_t rows, std::size_t cols, std::vector<mpz_class> entries);

    static IntMatrix identity(std::size_t n);

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }

    mpz_class& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const mpz_class& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    bool is_diagonal() const;
    /// Bareiss fraction-free determinant; square matrices only.
    mpz_class determinant() const;

    friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
    friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

    std::string str() const;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<mpz_class> data_;
};

struct SmithForm {
    IntMatrix u;  // rows x rows, unimodular
    IntMatrix d;  // diagonal, d_i | d_{i+1}, d_i >= 0
    IntMatrix v;  // cols x cols, unimodular
};

/// D = U·A·V. Pivot: smallest nonzero absolute value, ties by row-major order.
SmithForm smith_normal_form(const IntMatrix& a);

/// Z^free_rank ⊕ Z/d_1 ⊕ ... with d_1 | d_2 | ..., every d_i >= 2.
struct AbelianGroup {
    std::size_t free_rank = 0;
    std::vector<mpz_class> torsion;

    bool is_trivial() const { return free_rank == 0 && torsion.empty(); }
    /// Order when finite; 0 for infinite groups.
    mpz_class order() const;
    /// Number of homomorphisms to Z/2.
    mpz_class hom_to_z2_count() const;

    friend bool operator==(const AbelianGroup&, const AbelianGroup&) = default;

    /// e.g. "Z^1", "Z/2 x Z/2", "1".
    std::string str() const;
};

/// Exponent-sum matrix: one row per relator, one column per generator.
IntMatrix relator_matrix(const Presentation& p);

AbelianGroup abelian_group_from_smith(const IntMatrix& d, std::size_t generator_count);

AbelianGroup abelianization(const Presentation& p);

}  // namespace orbiforge

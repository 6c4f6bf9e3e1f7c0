#pragma once

/**
 * @file lattice.hpp
 * @brief Exact rank-2 lattices in the plane, Lagrange reduction, rotational
 * symmetry, and norm-form indices of the rings Z[i] and Z[sqrt -3].
 */

#include "orbiforge/isometry.hpp"

#include <gmpxx.h>

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace orbiforge {

class Lattice2 {
public:
    /// Throws InvalidArgument when the basis is degenerate.
    Lattice2(Vec2 v1, Vec2 v2);

    const Vec2& v1() const noexcept { return v1_; }
    const Vec2& v2() const noexcept { return v2_; }

    /// Signed area of the fundamental parallelogram, cross(v1, v2).
    QuadNum det() const { return cross(v1_, v2_); }

    /// Integer coordinates of `v` in this basis, if `v` is a lattice vector.
    std::optional<std::pair<mpz_class, mpz_class>> coordinates(const Vec2& v) const;
    bool contains(const Vec2& v) const { return coordinates(v).has_value(); }

    /// True iff the two bases generate the same lattice.
    bool same_lattice(const Lattice2& other) const;

    /// True iff m maps the lattice onto itself.
    bool invariant_under(const Mat2& m) const;

    std::string str() const { return "[" + v1_.str() + ", " + v2_.str() + "]"; }

    friend bool operator==(const Lattice2&, const Lattice2&) = default;

private:
    Vec2 v1_, v2_;
};

QuadNum norm2(const Vec2& v);

/// Lagrange–Gauss reduction: |v1|² <= |v2|² and 2|v1·v2| <= |v1|².
Lattice2 gauss_reduce(const Lattice2& l);

/// Order of the largest rotation group preserving the lattice: 2, 4 or 6.
int symmetry_order(const Lattice2& l);

/// Generated by two vectors of equal length at angle pi/2, pi/3 or 2pi/3.
/// Decided by a search over short bases, independently of symmetry_order.
bool is_rotationally_rhombic(const Lattice2& l);

/// Counterclockwise rotation by 2pi/n for n in {1, 2, 3, 4, 6}.
Mat2 rotation_of_order(int n);

enum class QuadRing { gaussian, root_minus3 };

/// n1 + n2·tau with tau² = -1 (gaussian) or tau² = -3 (root_minus3).
struct QuadInt {
    mpz_class n1;
    mpz_class n2;
    QuadRing ring = QuadRing::gaussian;

    bool is_zero() const { return n1 == 0 && n2 == 0; }
    std::string str() const;
};

/// The ring itself as a plane lattice: basis 1 = (1,0) and tau = (0,1) or (0, sqrt3).
Lattice2 ring_lattice(QuadRing ring);

/// z times the ring lattice.
Lattice2 multiply(const QuadInt& z);

/// Index of z·R in R: n1² + n2² or n1² + 3n2². Cross-checked against the
/// determinant ratio; throws InvalidArgument for z = 0.
mpz_class sublattice_index(const QuadInt& z);

enum class RigidCusp { s236, s244, s333 };

/// Index of the translation subgroup z·Λ in the rigid cusp group:
/// 6·, 4· or 3·sublattice_index(z). Throws InvalidArgument on a ring mismatch.
mpz_class rigid_abelian_index(RigidCusp cusp, const QuadInt& z);

}  // namespace orbiforge

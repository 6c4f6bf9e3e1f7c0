#pragma once

/**
 * @file wallpaper.hpp
 * @brief The 17 wallpaper groups as finitely presented groups with faithful
 * isometry models, and classification of their finite-index subgroups.
 *
 * Subgroup analysis works in lattice coordinates: every element of a model
 * is written as ξ -> Aξ + x with A an integer matrix and x rational, relative
 * to the basis of translation vectors of the model. A subgroup H is then
 * described by its translation sublattice Λ_H and the finite set of classes
 * H/Λ_H, from which mirrors, glides and rotation centers are read off exactly.
 */

#include "orbiforge/coset_table.hpp"
#include "orbiforge/isometry.hpp"
#include "orbiforge/lattice.hpp"
#include "orbiforge/presentation.hpp"

#include <gmpxx.h>

#include <array>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace orbiforge {

enum class Underlying { sphere, disk, torus, klein_bottle, projective_plane, annulus, moebius };

std::string to_string(Underlying u);

struct OrbifoldSignature {
    bool orientable = true;
    bool has_boundary_reflector = false;
    Underlying underlying = Underlying::sphere;
    std::vector<int> cone_orders;
    std::vector<int> corner_orders;
    std::string thurston;         // ASCII, e.g. "S2(2,3,6)", "D2(3;3)", "T_R"
    std::string conway;           // e.g. "632", "3*3", "*x"
    std::string crystallographic; // e.g. "p6"

    /// Thurston name with superscripts, e.g. "S²(2,3,6)".
    std::string pretty() const;

    friend bool operator==(const OrbifoldSignature&, const OrbifoldSignature&) = default;
};

/// The 17 Euclidean types in the order p1 p2 pm pg cm pmm pmg pgg cmm p4 p4m
/// p4g p3 p3m1 p31m p6 p6m.
const std::vector<OrbifoldSignature>& euclidean_signatures();

/// Looks up a type by crystallographic, Thurston or Conway name, or a
/// recorded alias; case-insensitive, and "²"/"×" match "2"/"x". Throws LookupError.
const OrbifoldSignature& signature_by_name(std::string_view name);

/// χ(|F|) - Σ(1 - 1/a) - ½Σ(1 - 1/b).
mpq_class euler_characteristic(const OrbifoldSignature& s);

struct ModelGroup {
    Presentation presentation;
    std::vector<Isometry> rep;  // one image per generator
    std::array<Word, 2> translation_words;
    OrbifoldSignature signature;

    /// Image of a word; letters are composed left to right as f∘g.
    Isometry evaluate(const Word& w) const;
    /// Basis of translation vectors of the two translation words.
    Lattice2 lattice() const;
};

/// Crystallographic names in canonical order.
const std::vector<std::string>& model_names();

/// Model by crystallographic name or any signature alias. Throws LookupError.
const ModelGroup& model(std::string_view name);

/// g -> det of the linear part of rep(g).
SignHom det_sign_hom(const ModelGroup& g);

/// An affine map ξ -> Aξ + x in lattice coordinates.
struct CoordAffine {
    std::array<mpz_class, 4> a;  // row-major
    std::array<mpq_class, 2> x;

    int det() const;
    bool linear_is_identity() const;
    /// Order of A.
    int linear_order() const;
    friend bool operator==(const CoordAffine&, const CoordAffine&) = default;
};

class SubgroupHandle {
public:
    /// Enumerates the cosets of ⟨sub⟩ and analyses the subgroup. Throws
    /// InvariantViolation if the geometric data is inconsistent.
    SubgroupHandle(const ModelGroup& g, std::vector<Word> sub, std::size_t max_cosets = default_max_cosets());

    static SubgroupHandle whole(const ModelGroup& g);
    static SubgroupHandle kernel(const ModelGroup& g, const SignHom& h);

    const ModelGroup& model() const noexcept { return model_; }
    const CosetTable& table() const noexcept { return table_; }
    std::size_t index() const noexcept { return table_.index(); }

    /// Λ_H in the plane.
    const Lattice2& lattice() const noexcept { return lattice_; }
    /// [Λ_G : Λ_H].
    const mpz_class& lattice_index() const noexcept { return lattice_index_; }
    /// Λ_H in lattice coordinates: (p, q) and (0, r) with 0 <= q < r.
    const std::array<mpz_class, 3>& lattice_hnf() const noexcept { return hnf_; }

    const std::vector<Mat2>& point_group() const noexcept { return point_group_; }
    /// Representatives of H/Λ_H, translation parts reduced modulo Λ_H.
    const std::vector<CoordAffine>& classes() const noexcept { return classes_; }

    /// Whether some element of the class is a reflection.
    bool class_has_reflection(const CoordAffine& c) const;
    /// Rotation centers of the class modulo Λ_H, in lattice coordinates.
    std::vector<std::array<mpq_class, 2>> rotation_centers(const CoordAffine& c) const;
    /// Whether the point (lattice coordinates) lies on a mirror of H.
    bool on_mirror(const std::array<mpq_class, 2>& p) const;

    /// Whether a vector in lattice coordinates lies in Λ_H.
    bool lattice_contains(const std::array<mpq_class, 2>& v) const;

private:
    std::array<mpq_class, 2> reduce(std::array<mpq_class, 2> v) const;

    ModelGroup model_;
    CosetTable table_;
    std::array<mpz_class, 3> hnf_;
    Lattice2 lattice_;
    mpz_class lattice_index_;
    std::vector<Mat2> point_group_;
    std::vector<CoordAffine> classes_;
};

Lattice2 translation_lattice(const SubgroupHandle& h);
std::vector<Mat2> point_group(const SubgroupHandle& h);
OrbifoldSignature classify(const SubgroupHandle& h);

/// The orientation-preserving subgroup (G itself when orientable) and its type.
std::pair<SubgroupHandle, OrbifoldSignature> orientation_double_cover(const ModelGroup& g);

/// [G:H]·|P(H)| and [Λ_G:Λ_H]·|P(G)|, which must agree.
std::pair<mpz_class, mpz_class> index_identity(const SubgroupHandle& h);

}  // namespace orbiforge

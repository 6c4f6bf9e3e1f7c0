#pragma once

/**
 * @file knotcusp.hpp
 * @brief Cusp-level obstructions for knot complements covering orbifolds.
 *
 * An amalgam glues a knot group ⟨μ₁…μₙ | r₁…r_m⟩ to a rigid cusp group
 * (p6 or p4): each cusp generator g conjugates each meridian μⱼ to a
 * parabolic word w t₁ʳ t₂ˢ w⁻¹. The resulting presentations are checked for
 * the order-2 collapses and double-cover cusps behind the verdict table.
 */

#include "orbiforge/presentation.hpp"
#include "orbiforge/smith.hpp"
#include "orbiforge/wallpaper.hpp"

#include <array>
#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace orbiforge {

enum class CuspModel { p6, p4 };

std::string to_string(CuspModel m);
const ModelGroup& cusp_group(CuspModel m);

struct GluingDatum {
    std::size_t peripheral_generator = 0;  // generator of the cusp model
    std::size_t knot_generator = 0;        // j
    Word conjugator;                       // w, over the knot generators
    long r = 0;
    long s = 0;
};

struct AmalgamSpec {
    CuspModel cusp = CuspModel::p6;
    Presentation knot;
    std::vector<GluingDatum> gluings;
};

struct Amalgam {
    CuspModel cusp;
    Presentation presentation;  // cusp generators first, then knot generators
    std::size_t knot_generator_count;

    /// Word of the amalgam for a cusp-model word.
    Word cusp_word(const Word& w) const { return w; }
    /// Word of the amalgam for a knot word.
    Word knot_word(const Word& w) const;
    /// t₁ and t₂ in the amalgam.
    std::array<Word, 2> translations() const;
    /// The meridians μ₁…μₙ.
    std::vector<Word> meridians() const;
};

/// Cusp relators, then knot relators, then g μⱼ g⁻¹ (w t₁ʳ t₂ˢ w⁻¹)⁻¹ per
/// gluing. Throws InvalidArgument on incomplete or repeated gluings, a
/// generator name clash, or a knot group whose abelianization is not Z.
Amalgam build_amalgam(const AmalgamSpec& spec);

struct CertifiedQuotient {
    AbelianGroup abelian;
    std::size_t order;  // by coset enumeration over the trivial subgroup
};

/// Kills b, t₁, t₂ and every meridian. Requires a p6 amalgam.
CertifiedQuotient collapse_236(const Amalgam& a, std::size_t max_cosets = default_max_cosets());

struct HMap {
    SignHom sign;  // c -> -1, d -> +1, μⱼ -> +1
    CertifiedQuotient quotient;
};

/// Checks that c -> -1, d -> +1, μⱼ -> +1 respects every relator (else
/// InvariantViolation) and certifies the quotient by d, c², t₁, t₂ and the
/// meridians. Requires a p4 amalgam.
HMap h_map_244(const Amalgam& a, std::size_t max_cosets = default_max_cosets());

/// Type of ker(c -> -1, d -> +1) in p4.
OrbifoldSignature double_cover_cusp_244();

/// Finite orders of elements of G, read from the classes of G over its lattice.
std::set<int> peripheral_order_profile(const ModelGroup& g);

/// The figure-8 knot group ⟨x, y | w x w⁻¹ y⁻¹⟩ with w = x⁻¹ y x y⁻¹.
Presentation figure_eight_group();

/// Γ = ⟨a, b, c, d | a², b², c², d², (ab)⁶, (bc)³, (ca)², (ad)², (bd)², (cd)³⟩.
Presentation tetrahedral_group();

/// Knot group ⟨μ | ⟩ with every gluing trivial and (r, s) = (1, 0).
AmalgamSpec minimal_spec(CuspModel m);

/// Seeded random spec: meridians chained by conjugation, an optional
/// commutator relator, conjugators of length <= 6 and |r|, |s| <= 3.
AmalgamSpec random_spec(CuspModel m, std::uint64_t seed);

enum class Exclusion { four_torsion, reflection_symmetry };

std::string to_string(Exclusion e);

struct VerdictCheck {
    std::string name;
    bool pass;
    std::string detail;
};

/// Divisibility constraint on a covering degree.
struct DegreeNote {
    long modulus;
    std::string text;

    bool admits(long degree) const { return degree > 0 && degree % modulus == 0; }
};

struct CuspVerdict {
    OrbifoldSignature signature;
    bool realizable;
    std::optional<std::string> witness;
    std::optional<Exclusion> reason;
    std::vector<std::string> notes;
    std::optional<DegreeNote> degree;
    std::vector<VerdictCheck> checks;

    bool checks_pass() const;
};

/// Verdict for one of the 17 types, with its supporting machine checks.
CuspVerdict verdict(const OrbifoldSignature& s);
/// Verdict by any signature name. Throws LookupError.
CuspVerdict verdict(std::string_view name);

/// Verdicts for all 17 types in canonical order.
std::vector<CuspVerdict> verdict_table();

}  // namespace orbiforge

#include "orbiforge/lattice.hpp"

#include "orbiforge/errors.hpp"

#include <cstdlib>

namespace orbiforge {

namespace {

std::optional<mpz_class> as_integer(const QuadNum& q) {
    if (!q.is_integer()) return std::nullopt;
    return q.rational_part().get_num();
}

Vec2 combo(const mpz_class& a, const Vec2& u, const mpz_class& b, const Vec2& v) {
    return QuadNum(mpq_class(a)) * u + QuadNum(mpq_class(b)) * v;
}

}  // namespace

Lattice2::Lattice2(Vec2 v1, Vec2 v2) : v1_(std::move(v1)), v2_(std::move(v2)) {
    if (cross(v1_, v2_).is_zero()) throw InvalidArgument("degenerate lattice basis");
}

std::optional<std::pair<mpz_class, mpz_class>> Lattice2::coordinates(const Vec2& v) const {
    // Cramer's rule on [v1 v2] (a, b)ᵀ = v.
    const QuadNum d = det();
    const auto a = as_integer(cross(v, v2_) / d);
    const auto b = as_integer(cross(v1_, v) / d);
    if (!a || !b) return std::nullopt;
    return std::make_pair(*a, *b);
}

bool Lattice2::same_lattice(const Lattice2& other) const {
    return contains(other.v1_) && contains(other.v2_) && other.contains(v1_) && other.contains(v2_);
}

bool Lattice2::invariant_under(const Mat2& m) const {
    const Lattice2 image(m * v1_, m * v2_);
    return same_lattice(image);
}

QuadNum norm2(const Vec2& v) { return dot(v, v); }

Lattice2 gauss_reduce(const Lattice2& l) {
    Vec2 u = l.v1();
    Vec2 v = l.v2();
    if (norm2(v) < norm2(u)) std::swap(u, v);
    while (true) {
        const QuadNum d = dot(u, v);
        if (QuadNum(2) * (d.sign() < 0 ? -d : d) > norm2(u)) {
            const mpz_class mu = (d / norm2(u)).round();
            v = v - QuadNum(mpq_class(mu)) * u;
        }
        if (norm2(v) < norm2(u)) {
            std::swap(u, v);
            continue;
        }
        break;
    }
    return {u, v};
}

int symmetry_order(const Lattice2& l) {
    const Lattice2 r = gauss_reduce(l);
    const QuadNum g11 = norm2(r.v1());
    const QuadNum g22 = norm2(r.v2());
    const QuadNum g12 = dot(r.v1(), r.v2());
    if (g11 != g22) return 2;
    if (g12.is_zero()) return 4;
    if (QuadNum(2) * g12 == g11 || QuadNum(2) * g12 == -g11) return 6;
    return 2;
}

bool is_rotationally_rhombic(const Lattice2& l) {
    // Every rhombic basis consists of minimal vectors, which all lie in the
    // box |a|, |b| <= 1 around a reduced basis.
    const Lattice2 r = gauss_reduce(l);
    std::vector<Vec2> cand;
    for (long a = -1; a <= 1; ++a)
        for (long b = -1; b <= 1; ++b)
            if (a != 0 || b != 0) cand.push_back(combo(a, r.v1(), b, r.v2()));
    const QuadNum area = l.det();
    for (const Vec2& u : cand)
        for (const Vec2& w : cand) {
            const QuadNum c = cross(u, w);
            if (c != area && c != -area) continue;
            const QuadNum n = norm2(u);
            if (norm2(w) != n) continue;
            const QuadNum d = dot(u, w);
            if (d.is_zero() || QuadNum(2) * d == n || QuadNum(2) * d == -n) return true;
        }
    return false;
}

Mat2 rotation_of_order(int n) {
    const QuadNum half = QuadNum::rational(1, 2);
    const QuadNum rt3_2(0, mpq_class(1, 2));
    switch (n) {
        case 1: return Mat2::identity();
        case 2: return Mat2::rotation(-1, 0);
        case 3: return Mat2::rotation(-half, rt3_2);
        case 4: return Mat2::rotation(0, 1);
        case 6: return Mat2::rotation(half, rt3_2);
        default: throw NonCrystallographic("no lattice rotation of order " + std::to_string(n));
    }
}

std::string QuadInt::str() const {
    const char* tau = ring == QuadRing::gaussian ? "i" : "sqrt(-3)";
    return n1.get_str() + (n2 < 0 ? "-" : "+") + mpz_class(abs(n2)).get_str() + "*" + tau;
}

Lattice2 ring_lattice(QuadRing ring) {
    if (ring == QuadRing::gaussian) return {Vec2{1, 0}, Vec2{0, 1}};
    return {Vec2{1, 0}, Vec2{0, QuadNum::sqrt3()}};
}

Lattice2 multiply(const QuadInt& z) {
    if (z.is_zero()) throw InvalidArgument("zero multiplier");
    // z·1 = n1 + n2·tau, z·tau = n1·tau + n2·tau².
    const Lattice2 base = ring_lattice(z.ring);
    const mpz_class tau2 = z.ring == QuadRing::gaussian ? -1 : -3;
    const Vec2 one = base.v1(), tau = base.v2();
    return {combo(z.n1, one, z.n2, tau), combo(z.n2 * tau2, one, z.n1, tau)};
}

mpz_class sublattice_index(const QuadInt& z) {
    if (z.is_zero()) throw InvalidArgument("sublattice_index of zero");
    const mpz_class k = z.ring == QuadRing::gaussian ? 1 : 3;
    const mpz_class formula = z.n1 * z.n1 + k * z.n2 * z.n2;
    const QuadNum ratio = multiply(z).det() / ring_lattice(z.ring).det();
    if (!(ratio == QuadNum(mpq_class(formula))))
        throw InvariantViolation("norm form " + formula.get_str() + " disagrees with determinant ratio " +
                                 ratio.str() + " for " + z.str());
    return formula;
}

mpz_class rigid_abelian_index(RigidCusp cusp, const QuadInt& z) {
    const QuadRing want = cusp == RigidCusp::s244 ? QuadRing::gaussian : QuadRing::root_minus3;
    if (z.ring != want) throw InvalidArgument("ring does not match the cusp type");
    const int factor = cusp == RigidCusp::s236 ? 6 : cusp == RigidCusp::s244 ? 4 : 3;
    return factor * sublattice_index(z);
}

}  // namespace orbiforge

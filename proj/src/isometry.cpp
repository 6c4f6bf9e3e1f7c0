#include "orbiforge/isometry.hpp"

#include "orbiforge/errors.hpp"

#include <sstream>

namespace orbiforge {

Vec2 Vec2::parse(std::string_view text) {
    const auto comma = text.find(',');
    if (comma == std::string_view::npos)
        throw ParseError("expected 'x,y' but found '" + std::string(text) + "'", 1, 1);
    return {QuadNum::parse(text.substr(0, comma)), QuadNum::parse(text.substr(comma + 1))};
}

QuadNum dot(const Vec2& u, const Vec2& v) { return u.x * v.x + u.y * v.y; }

QuadNum cross(const Vec2& u, const Vec2& v) { return u.x * v.y - u.y * v.x; }

Vec2 canonical_direction(const Vec2& d) {
    if (d.is_zero()) throw InvalidArgument("canonical_direction: zero vector");
    const QuadNum lead = d.x.is_zero() ? d.y : d.x;
    return {d.x / lead, d.y / lead};
}

Mat2 Mat2::reflection(const Vec2& dir) {
    const QuadNum n = dot(dir, dir);
    if (n.is_zero()) throw InvalidArgument("Mat2::reflection: zero direction");
    const QuadNum c = (dir.x * dir.x - dir.y * dir.y) / n;
    const QuadNum s = QuadNum(2) * dir.x * dir.y / n;
    return {c, s, s, -c};
}

bool Mat2::is_orthogonal() const { return (transpose() * *this).is_identity(); }

Mat2 Mat2::inverse() const {
    const QuadNum d = det();
    if (d.is_zero()) throw InvalidArgument("Mat2::inverse: singular matrix");
    return {m22 / d, -m12 / d, -m21 / d, m11 / d};
}

Mat2 operator*(const Mat2& a, const Mat2& b) {
    return {a.m11 * b.m11 + a.m12 * b.m21, a.m11 * b.m12 + a.m12 * b.m22,
            a.m21 * b.m11 + a.m22 * b.m21, a.m21 * b.m12 + a.m22 * b.m22};
}

Vec2 operator*(const Mat2& a, const Vec2& v) {
    return {a.m11 * v.x + a.m12 * v.y, a.m21 * v.x + a.m22 * v.y};
}

Mat2 operator+(const Mat2& a, const Mat2& b) {
    return {a.m11 + b.m11, a.m12 + b.m12, a.m21 + b.m21, a.m22 + b.m22};
}

Mat2 operator-(const Mat2& a, const Mat2& b) {
    return {a.m11 - b.m11, a.m12 - b.m12, a.m21 - b.m21, a.m22 - b.m22};
}

std::string Mat2::str() const {
    return "[[" + m11.str() + ", " + m12.str() + "], [" + m21.str() + ", " + m22.str() + "]]";
}

int matrix_order(const Mat2& m) {
    Mat2 p = m;
    for (int k = 1; k <= 6; ++k) {
        if (p.is_identity()) return k;
        p = p * m;
    }
    return 0;
}

Isometry::Isometry(Mat2 linear, Vec2 trans) : linear_(std::move(linear)), trans_(std::move(trans)) {
    if (!linear_.is_orthogonal())
        throw InvalidArgument("Isometry: linear part " + linear_.str() + " is not orthogonal");
}

Isometry Isometry::rotation_about(const Vec2& center, const QuadNum& c, const QuadNum& s) {
    const Mat2 m = Mat2::rotation(c, s);
    return {m, (Mat2::identity() - m) * center};
}

Isometry Isometry::reflection_in(const Vec2& point, const Vec2& dir) {
    const Mat2 m = Mat2::reflection(dir);
    return {m, (Mat2::identity() - m) * point};
}

Isometry Isometry::inverse() const {
    const Mat2 inv = linear_.transpose();
    return {inv, -(inv * trans_)};
}

Isometry Isometry::pow(long k) const {
    Isometry base = k < 0 ? inverse() : *this;
    unsigned long e = k < 0 ? -static_cast<unsigned long>(k) : static_cast<unsigned long>(k);
    Isometry acc;
    while (e != 0) {
        if (e & 1U) acc = compose(acc, base);
        base = compose(base, base);
        e >>= 1U;
    }
    return acc;
}

std::string Isometry::str() const { return "x -> " + linear_.str() + " x + " + trans_.str(); }

Isometry compose(const Isometry& f, const Isometry& g) {
    return {f.linear() * g.linear(), f.linear() * g.trans() + f.trans()};
}

namespace {

// Foot of the perpendicular from the origin to the line p + R*dir.
Vec2 foot_from_origin(const Vec2& p, const Vec2& dir) {
    return p - (dot(p, dir) / dot(dir, dir)) * dir;
}

}  // namespace

IsoClass classify_isometry(const Isometry& f) {
    const Mat2& m = f.linear();
    const Vec2& t = f.trans();
    const Mat2 id = Mat2::identity();

    if (m.is_identity()) {
        if (t.is_zero()) return iso_class::Identity{};
        return iso_class::Translation{t};
    }
    if (f.det_sign() > 0) {
        const int order = matrix_order(m);
        if (order == 0)
            throw NonCrystallographic("rotation of order > 6: " + m.str());
        return iso_class::Rotation{(id - m).inverse() * t, order, m};
    }

    // det = -1: m is a linear reflection, f∘f is translation by (m+I)t.
    const Mat2 sym = m + id;
    const Vec2 axis_dir = canonical_direction(
        !(sym.m11.is_zero() && sym.m21.is_zero()) ? Vec2{sym.m11, sym.m21} : Vec2{sym.m12, sym.m22});
    const Vec2 glide = QuadNum::rational(1, 2) * (sym * t);
    // t/2 lies on the axis: (I - m)(t/2) = t - glide.
    const Vec2 point = foot_from_origin(QuadNum::rational(1, 2) * t, axis_dir);
    if (glide.is_zero()) return iso_class::Reflection{point, axis_dir};
    return iso_class::Glide{point, axis_dir, glide};
}

Isometry reconstruct(const IsoClass& c) {
    struct Visitor {
        Isometry operator()(const iso_class::Identity&) const { return {}; }
        Isometry operator()(const iso_class::Translation& t) const { return Isometry::translation(t.v); }
        Isometry operator()(const iso_class::Rotation& r) const {
            return {r.linear, (Mat2::identity() - r.linear) * r.center};
        }
        Isometry operator()(const iso_class::Reflection& r) const {
            return Isometry::reflection_in(r.point, r.direction);
        }
        Isometry operator()(const iso_class::Glide& g) const {
            const Isometry refl = Isometry::reflection_in(g.point, g.direction);
            return {refl.linear(), refl.trans() + g.glide};
        }
    };
    return std::visit(Visitor{}, c);
}

std::string describe(const IsoClass& c) {
    struct Visitor {
        std::string operator()(const iso_class::Identity&) const { return "identity"; }
        std::string operator()(const iso_class::Translation& t) const {
            return "translation by " + t.v.str();
        }
        std::string operator()(const iso_class::Rotation& r) const {
            return "rotation of order " + std::to_string(r.order) + " about " + r.center.str();
        }
        std::string operator()(const iso_class::Reflection& r) const {
            return "reflection in the line through " + r.point.str() + " along " + r.direction.str();
        }
        std::string operator()(const iso_class::Glide& g) const {
            return "glide reflection along the line through " + g.point.str() + " direction " +
                   g.direction.str() + " by " + g.glide.str();
        }
    };
    return std::visit(Visitor{}, c);
}

Vec2 fixed_point(const Isometry& f) {
    const IsoClass c = classify_isometry(f);
    if (const auto* r = std::get_if<iso_class::Rotation>(&c)) return r->center;
    throw NoFixedPoint("fixed_point: not a rotation (" + describe(c) + ")");
}

}  // namespace orbiforge

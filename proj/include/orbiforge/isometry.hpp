#pragma once

/**
 * @file isometry.hpp
 * @brief Exact affine isometries of the Euclidean plane over Q(sqrt 3).
 *
 * An Isometry is x -> linear * x + trans with an orthogonal linear part.
 * Every wallpaper group used here has a faithful model whose entries lie in
 * Q(sqrt 3), so equality of isometries is exact structural equality.
 */

#include "orbiforge/quadnum.hpp"

#include <string>
#include <variant>

namespace orbiforge {

struct Vec2 {
    QuadNum x;
    QuadNum y;

    bool is_zero() const { return x.is_zero() && y.is_zero(); }

    Vec2 operator-() const { return {-x, -y}; }
    friend Vec2 operator+(const Vec2& u, const Vec2& v) { return {u.x + v.x, u.y + v.y}; }
    friend Vec2 operator-(const Vec2& u, const Vec2& v) { return {u.x - v.x, u.y - v.y}; }
    friend Vec2 operator*(const QuadNum& s, const Vec2& v) { return {s * v.x, s * v.y}; }
    friend bool operator==(const Vec2&, const Vec2&) = default;

    std::string str() const { return "(" + x.str() + ", " + y.str() + ")"; }
    /// Parses `x,y` with QuadNum components.
    static Vec2 parse(std::string_view text);
};

QuadNum dot(const Vec2& u, const Vec2& v);
/// u.x * v.y - u.y * v.x
QuadNum cross(const Vec2& u, const Vec2& v);

/// Rescales a nonzero direction so its first nonzero coordinate is 1.
Vec2 canonical_direction(const Vec2& d);

struct Mat2 {
    QuadNum m11, m12, m21, m22;

    static Mat2 identity() { return {1, 0, 0, 1}; }
    /// Counterclockwise rotation with the given cosine and sine.
    static Mat2 rotation(const QuadNum& c, const QuadNum& s) { return {c, -s, s, c}; }
    /// Reflection across the line through the origin along `dir`.
    static Mat2 reflection(const Vec2& dir);

    QuadNum det() const { return m11 * m22 - m12 * m21; }
    Mat2 transpose() const { return {m11, m21, m12, m22}; }
    bool is_identity() const { return *this == identity(); }
    /// MᵀM = I exactly.
    bool is_orthogonal() const;

    /// Throws InvalidArgument when singular.
    Mat2 inverse() const;

    friend Mat2 operator*(const Mat2& a, const Mat2& b);
    friend Vec2 operator*(const Mat2& a, const Vec2& v);
    friend Mat2 operator+(const Mat2& a, const Mat2& b);
    friend Mat2 operator-(const Mat2& a, const Mat2& b);
    friend bool operator==(const Mat2&, const Mat2&) = default;

    std::string str() const;
};

/// Least k in 1..6 with M^k = I, or 0 when there is none.
int matrix_order(const Mat2& m);

class Isometry {
public:
    /// Identity map.
    Isometry() : linear_(Mat2::identity()) {}
    /// Throws InvalidArgument unless `linear` is orthogonal.
    Isometry(Mat2 linear, Vec2 trans);

    static Isometry translation(const Vec2& v) { return {Mat2::identity(), v}; }
    /// Rotation with the given cosine/sine about `center`.
    static Isometry rotation_about(const Vec2& center, const QuadNum& c, const QuadNum& s);
    /// Reflection in the line through `point` along `dir`.
    static Isometry reflection_in(const Vec2& point, const Vec2& dir);

    const Mat2& linear() const noexcept { return linear_; }
    const Vec2& trans() const noexcept { return trans_; }

    int det_sign() const { return linear_.det().sign(); }
    bool is_identity() const { return linear_.is_identity() && trans_.is_zero(); }
    bool is_translation() const { return linear_.is_identity(); }

    Vec2 operator()(const Vec2& p) const { return linear_ * p + trans_; }
    Isometry inverse() const;
    Isometry pow(long k) const;

    friend bool operator==(const Isometry&, const Isometry&) = default;

    std::string str() const;

private:
    Mat2 linear_;
    Vec2 trans_;
};

/// f∘g, i.e. x -> f(g(x)).
Isometry compose(const Isometry& f, const Isometry& g);

namespace iso_class {

struct Identity {
    friend bool operator==(const Identity&, const Identity&) = default;
};
struct Translation {
    Vec2 v;
    friend bool operator==(const Translation&, const Translation&) = default;
};
struct Rotation {
    Vec2 center;
    int order;
    /// The linear part; order alone does not fix the rotation sense.
    Mat2 linear;
    friend bool operator==(const Rotation&, const Rotation&) = default;
};
struct Reflection {
    Vec2 point;      // foot of the perpendicular from the origin
    Vec2 direction;  // canonical
    friend bool operator==(const Reflection&, const Reflection&) = default;
};
struct Glide {
    Vec2 point;
    Vec2 direction;
    Vec2 glide;  // nonzero, parallel to direction
    friend bool operator==(const Glide&, const Glide&) = default;
};

}  // namespace iso_class

using IsoClass = std::variant<iso_class::Identity, iso_class::Translation, iso_class::Rotation,
                              iso_class::Reflection, iso_class::Glide>;

/// Throws NonCrystallographic for rotations of order > 6.
IsoClass classify_isometry(const Isometry& f);

/// Rebuilds the isometry described by a classification.
Isometry reconstruct(const IsoClass& c);

std::string describe(const IsoClass& c);

/// The unique fixed point of a rotation; throws NoFixedPoint otherwise.
Vec2 fixed_point(const Isometry& f);

}  // namespace orbiforge

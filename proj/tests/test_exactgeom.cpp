#include "orbiforge/errors.hpp"
#include "orbiforge/isometry.hpp"

#include <doctest.h>

#include <random>
#include <vector>

using namespace orbiforge;

namespace {

const QuadNum half = QuadNum::rational(1, 2);
const QuadNum rt3_2 = QuadNum(0, mpq_class(1, 2));  // sqrt(3)/2

// Standard (2,3,6) and (2,4,4) model generators. Linear parts are the
// hexagonal/square rotations; translation parts are chosen so that
// b∘a⁻² = (1/2, sqrt3/2), b⁻¹∘a² = (1, 0), c²∘d⁻¹ = (1, 0), c∘d⁻¹∘c = (0, 1).
Isometry rho_a() { return {Mat2{half, rt3_2, -rt3_2, half}, Vec2{0, 0}}; }
Isometry rho_b() { return {Mat2{-half, rt3_2, -rt3_2, -half}, Vec2{half, rt3_2}}; }
Isometry rho_c() { return {Mat2{0, 1, -1, 0}, Vec2{0, 0}}; }
Isometry rho_d() { return {Mat2{-1, 0, 0, -1}, Vec2{-1, 0}}; }

// Variants with the translation parts (1/2, sqrt3/6) and (1, 0).
Isometry b_small() { return {Mat2{-half, rt3_2, -rt3_2, -half}, Vec2{half, QuadNum(0, mpq_class(1, 6))}}; }
Isometry d_shifted() { return {Mat2{-1, 0, 0, -1}, Vec2{1, 0}}; }

Isometry random_element(std::mt19937_64& rng, int length) {
    const std::vector<Isometry> gens{rho_a(), rho_a().inverse(), rho_b(), rho_b().inverse()};
    Isometry f;
    for (int i = 0; i < length; ++i) f = compose(f, gens[rng() % gens.size()]);
    return f;
}

}  // namespace

TEST_CASE("qn_arith examples") {
    const QuadNum one(1);
    const QuadNum r3 = QuadNum::sqrt3();
    CHECK(qn_arith(ArithOp::mul, one, r3) == r3);
    CHECK(qn_arith(ArithOp::mul, r3, r3) == QuadNum(3));

    // 1/sqrt3: multiply back to check.
    const QuadNum q = qn_arith(ArithOp::div, one, r3);
    CHECK(q == QuadNum(0, mpq_class(1, 3)));
    CHECK(q * r3 == one);

    CHECK(qn_arith(ArithOp::neg, r3, {}) == QuadNum(0, -1));
    CHECK(qn_arith(ArithOp::sub, r3, r3).is_zero());
    CHECK_THROWS_AS(qn_arith(ArithOp::div, one, QuadNum()), InvalidArgument);
}

TEST_CASE("QuadNum canonical form and ordering") {
    const QuadNum x(mpq_class(2, 4), mpq_class(-3, -6));
    CHECK(x.rational_part().get_den() == 2);
    CHECK(x.sqrt3_part() == mpq_class(1, 2));
    CHECK(x == QuadNum(mpq_class(1, 2), mpq_class(1, 2)));

    CHECK(QuadNum(2, -1).sign() == 1);   // 2 - 1.732
    CHECK(QuadNum(1, -1).sign() == -1);  // 1 - 1.732
    CHECK(QuadNum(-2, 1).sign() == -1);
    CHECK(QuadNum::sqrt3() > QuadNum(mpq_class(17, 10)));
    CHECK(QuadNum::sqrt3() < QuadNum(mpq_class(7, 4)));
    CHECK(QuadNum::sqrt3().floor() == 1);
    CHECK((-QuadNum::sqrt3()).floor() == -2);
    CHECK(QuadNum(mpq_class(5, 2)).round() == 3);
    CHECK(QuadNum(mpq_class(-5, 2)).round() == -2);
}

TEST_CASE("QuadNum text round trip") {
    for (const char* s : {"0", "1/2", "-7", "rt3", "-rt3", "1/2-1/6*rt3", "3/4*rt3", "-2+5*rt3"}) {
        const QuadNum x = QuadNum::parse(s);
        CHECK(x.str() == s);
        CHECK(QuadNum::parse(x.str()) == x);
    }
    CHECK(QuadNum::parse(" 1/2 + 1/2*rt3 ") == QuadNum(mpq_class(1, 2), mpq_class(1, 2)));
    CHECK_THROWS_AS(QuadNum::parse("1/0"), ParseError);
    CHECK_THROWS_AS(QuadNum::parse("abc"), ParseError);
    CHECK_THROWS_AS(QuadNum::parse(""), ParseError);
}

TEST_CASE("model generator matrices are orthogonal") {
    for (const Isometry& f : {rho_a(), rho_b(), rho_c(), rho_d(), b_small(), d_shifted()}) {
        CHECK(f.linear().is_orthogonal());
        const QuadNum d = f.linear().det();
        CHECK((d == QuadNum(1) || d == QuadNum(-1)));
    }
    CHECK_THROWS_AS(Isometry(Mat2{2, 0, 0, 1}, Vec2{0, 0}), InvalidArgument);
}

TEST_CASE("compose examples") {
    CHECK(compose(rho_a(), rho_a().inverse()).is_identity());

    const Isometry t1 = compose(rho_b(), rho_a().pow(-2));
    CHECK(classify_isometry(t1) == IsoClass{iso_class::Translation{Vec2{half, rt3_2}}});

    const Isometry t2 = compose(rho_b().inverse(), rho_a().pow(2));
    CHECK(classify_isometry(t2) == IsoClass{iso_class::Translation{Vec2{1, 0}}});

    const Isometry t1_p4 = compose(rho_c().pow(2), rho_d().inverse());
    CHECK(classify_isometry(t1_p4) == IsoClass{iso_class::Translation{Vec2{1, 0}}});
    const Isometry t2_p4 = compose(compose(rho_c(), rho_d().inverse()), rho_c());
    CHECK(classify_isometry(t2_p4) == IsoClass{iso_class::Translation{Vec2{0, 1}}});

    CHECK(rho_b().pow(3).is_identity());
    // With translation part sqrt3/6 the element still has order 3, but the
    // lattice shrinks by 1/sqrt3.
    CHECK(b_small().pow(3).is_identity());
    CHECK(classify_isometry(compose(b_small(), rho_a().pow(-2))) ==
          IsoClass{iso_class::Translation{Vec2{half, QuadNum(0, mpq_class(1, 6))}}});
    CHECK(rho_a().pow(6).is_identity());
    CHECK(compose(rho_a(), rho_b()).pow(2).is_identity());
}

TEST_CASE("classify_isometry examples") {
    const IsoClass a = classify_isometry(rho_a());
    REQUIRE(std::holds_alternative<iso_class::Rotation>(a));
    CHECK(std::get<iso_class::Rotation>(a).order == 6);
    CHECK(std::get<iso_class::Rotation>(a).center == Vec2{0, 0});

    CHECK(classify_isometry(Isometry::translation({1, 0})) ==
          IsoClass{iso_class::Translation{Vec2{1, 0}}});
    CHECK(classify_isometry(Isometry()) == IsoClass{iso_class::Identity{}});

    const Isometry g{Mat2{1, 0, 0, -1}, Vec2{1, 0}};
    CHECK(classify_isometry(compose(g, g)) == IsoClass{iso_class::Translation{Vec2{2, 0}}});
    CHECK(classify_isometry(g) == IsoClass{iso_class::Glide{Vec2{0, 0}, Vec2{1, 0}, Vec2{1, 0}}});

    const Isometry r{Mat2{-1, 0, 0, 1}, Vec2{1, 0}};  // mirror x = 1/2
    CHECK(classify_isometry(r) == IsoClass{iso_class::Reflection{Vec2{half, 0}, Vec2{0, 1}}});
}

TEST_CASE("non-crystallographic rotation is rejected") {
    // Rotation by pi/6: order 12, entries still in Q(sqrt3).
    const QuadNum c = rt3_2;
    const QuadNum s = half;
    const Isometry f = Isometry::rotation_about({0, 0}, c, s);
    CHECK_THROWS_AS(classify_isometry(f), NonCrystallographic);
}

TEST_CASE("fixed_point examples") {
    CHECK(fixed_point(rho_a()) == Vec2{0, 0});

    const Vec2 p = fixed_point(rho_b());
    CHECK(rho_b()(p) == p);

    // Solve (I - M)x = t and substitute back.
    CHECK(fixed_point(d_shifted()) == Vec2{half, 0});
    CHECK(d_shifted()(Vec2{half, 0}) == Vec2{half, 0});
    CHECK(fixed_point(rho_d()) == Vec2{-half, 0});

    CHECK_THROWS_AS(fixed_point(Isometry::translation({1, 0})), NoFixedPoint);
    CHECK_THROWS_AS(fixed_point(Isometry{Mat2{1, 0, 0, -1}, Vec2{0, 0}}), NoFixedPoint);
}

TEST_CASE("compose is associative on random model elements") {
    std::mt19937_64 rng(7);
    for (int i = 0; i < 50; ++i) {
        const Isometry f = random_element(rng, 5);
        const Isometry g = random_element(rng, 5);
        const Isometry h = random_element(rng, 5);
        CHECK(compose(compose(f, g), h) == compose(f, compose(g, h)));
    }
}

TEST_CASE("classification invariants on random elements") {
    std::mt19937_64 rng(11);
    const Isometry mirror = Isometry::reflection_in({half, 0}, {1, QuadNum::sqrt3()});
    for (int i = 0; i < 200; ++i) {
        Isometry f = random_element(rng, 1 + static_cast<int>(rng() % 8));
        if (i % 2 == 1) f = compose(f, mirror);
        const IsoClass c = classify_isometry(f);
        CHECK(reconstruct(c) == f);
        if (const auto* r = std::get_if<iso_class::Rotation>(&c)) {
            CHECK(f.pow(r->order).is_identity());
            CHECK(f(r->center) == r->center);
        }
        if (std::holds_alternative<iso_class::Reflection>(c)) CHECK(compose(f, f).is_identity());
        if (const auto* g = std::get_if<iso_class::Glide>(&c)) {
            CHECK(!g->glide.is_zero());
            CHECK(cross(g->glide, g->direction).is_zero());
        }
    }
}

#include "orbiforge/errors.hpp"
#include "orbiforge/knotcusp.hpp"
#include "orbiforge/presentation_io.hpp"

#include <doctest.h>

#include <algorithm>
#include <set>

using namespace orbiforge;

TEST_CASE("build_amalgam on the minimal knot") {
    for (CuspModel m : {CuspModel::p6, CuspModel::p4}) {
        const Amalgam a = build_amalgam(minimal_spec(m));
        CHECK(a.presentation.generator_count() == 3);
        CHECK(a.presentation.relators().size() == 5);
        CHECK(a.knot_generator_count == 1);
    }
    const Amalgam a = build_amalgam(minimal_spec(CuspModel::p6));
    CHECK(a.presentation.render(a.presentation.relators()[3]) == "a mu a b^-1");
}

TEST_CASE("build_amalgam validation") {
    AmalgamSpec spec = minimal_spec(CuspModel::p6);
    spec.gluings.pop_back();
    CHECK_THROWS_AS(build_amalgam(spec), InvalidArgument);

    spec = minimal_spec(CuspModel::p6);
    spec.gluings[1].peripheral_generator = 0;
    CHECK_THROWS_AS(build_amalgam(spec), InvalidArgument);

    spec = minimal_spec(CuspModel::p4);
    spec.knot = Presentation("clash", {"c"}, {});
    CHECK_THROWS_AS(build_amalgam(spec), InvalidArgument);

    spec = minimal_spec(CuspModel::p6);
    spec.knot = Presentation("torsion", {"mu"}, {Word{gen(0)}.pow(3)});
    CHECK_THROWS_AS(build_amalgam(spec), InvalidArgument);
}

TEST_CASE("figure-8 knot input with random gluings") {
    for (CuspModel m : {CuspModel::p6, CuspModel::p4}) {
        AmalgamSpec spec = random_spec(m, 7);
        spec.knot = figure_eight_group();
        spec.gluings.clear();
        for (std::size_t g = 0; g < 2; ++g)
            for (std::size_t j = 0; j < 2; ++j) spec.gluings.push_back({g, j, Word{gen(1 - j), inv(j)}, 1, -2});
        const Amalgam a = build_amalgam(spec);
        CHECK(a.presentation.generator_count() == 4);
        CHECK(a.presentation.relators().size() == 3 + 1 + 4);
        if (m == CuspModel::p6) CHECK(collapse_236(a).order == 2);
        else CHECK(h_map_244(a).quotient.order == 2);
    }
}

TEST_CASE("collapse_236 examples") {
    const CertifiedQuotient q = collapse_236(build_amalgam(minimal_spec(CuspModel::p6)));
    CHECK(q.order == 2);
    CHECK(q.abelian.str() == "Z/2");

    const ModelGroup& p6 = model("p6");
    const Presentation bare = quotient(p6.presentation, {p6.translation_words[0], p6.translation_words[1], Word{gen(1)}});
    CHECK(group_order(bare) == 2);
    CHECK(abelianization(bare).str() == "Z/2");

    CHECK_THROWS_AS(collapse_236(build_amalgam(minimal_spec(CuspModel::p4))), InvalidArgument);
}

TEST_CASE("h_map_244 examples") {
    const ModelGroup& p4 = model("p4");
    const Presentation bare = quotient(p4.presentation, {Word{gen(1)}, Word{gen(0)}.pow(2)});
    CHECK(group_order(bare) == 2);

    const Amalgam a = build_amalgam(minimal_spec(CuspModel::p4));
    const HMap h = h_map_244(a);
    CHECK(h.sign.signs == std::vector<int>{-1, 1, 1});
    for (const Word& r : a.presentation.relators()) CHECK(h.sign(r) == 1);
    CHECK(h.quotient.order == 2);
}

TEST_CASE("randomized amalgams collapse to order 2") {
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
        CAPTURE(seed);
        const Amalgam a6 = build_amalgam(random_spec(CuspModel::p6, seed));
        const CertifiedQuotient q = collapse_236(a6);
        CHECK(q.order == 2);
        CHECK(q.abelian.str() == "Z/2");

        const Amalgam a4 = build_amalgam(random_spec(CuspModel::p4, seed));
        const HMap h = h_map_244(a4);
        CHECK(h.sign.respects(a4.presentation));
        CHECK(h.quotient.order == 2);
    }
}

TEST_CASE("random specs are deterministic and within bounds") {
    const AmalgamSpec s1 = random_spec(CuspModel::p6, 42);
    const AmalgamSpec s2 = random_spec(CuspModel::p6, 42);
    CHECK(s1.knot == s2.knot);
    REQUIRE(s1.gluings.size() == s2.gluings.size());
    for (std::size_t i = 0; i < s1.gluings.size(); ++i) {
        CHECK(s1.gluings[i].conjugator == s2.gluings[i].conjugator);
        CHECK(s1.gluings[i].conjugator.size() <= 6);
        CHECK(std::abs(s1.gluings[i].r) <= 3);
        CHECK(std::abs(s1.gluings[i].s) <= 3);
    }
}

TEST_CASE("double_cover_cusp_244") {
    CHECK(double_cover_cusp_244().thurston == "S2(2,2,2,2)");
    const ModelGroup& p4 = model("p4");
    const SubgroupHandle h = SubgroupHandle::kernel(p4, SignHom{{-1, 1}});
    CHECK(h.table().contains(p4.translation_words[0]));
    CHECK(h.table().contains(p4.translation_words[1]));
    CHECK(h.point_group().size() == 2);
    for (const Mat2& m : h.point_group()) CHECK(m.det() == QuadNum(1));
}

TEST_CASE("peripheral_order_profile examples") {
    CHECK(peripheral_order_profile(model("pmm")) == std::set<int>{2});
    CHECK(peripheral_order_profile(model("p6")) == std::set<int>{2, 3, 6});
    CHECK(peripheral_order_profile(model("pm")) == std::set<int>{2});
    CHECK(peripheral_order_profile(model("pg")).empty());
    CHECK(peripheral_order_profile(model("p4g")) == std::set<int>{2, 4});
}

TEST_CASE("tetrahedral census") {
    const Presentation g = tetrahedral_group();
    CHECK(abelianization(g).str() == "Z/2 x Z/2");
    const auto homs = sign_homs(g);
    REQUIRE(homs.size() == 3);
    std::multiset<std::string> got;
    for (const SignHom& h : homs) {
        const SignHom r{{h.signs[0], h.signs[1], h.signs[2]}};
        got.insert(classify(SubgroupHandle::kernel(model("p6m"), r)).thurston);
    }
    CHECK(got == std::multiset<std::string>{"S2(2,3,6)", "D2(;3,3,3)", "D2(3;3)"});
}

TEST_CASE("verdict examples") {
    const CuspVerdict v244 = verdict("S2(2,4,4)");
    CHECK_FALSE(v244.realizable);
    CHECK(v244.reason == Exclusion::four_torsion);
    CHECK(v244.checks_pass());

    CHECK(verdict("D2(4;2)").reason == Exclusion::four_torsion);
    const CuspVerdict v33 = verdict("D2(3;3)");
    CHECK(v33.realizable);
    CHECK(v33.witness.has_value());
    CHECK(v33.checks_pass());
    CHECK(verdict("T_R").reason == Exclusion::reflection_symmetry);
    CHECK_THROWS_AS(verdict("S2(2,2,3)"), LookupError);

    const CuspVerdict v236 = verdict("S2(2,3,6)");
    REQUIRE(v236.degree.has_value());
    CHECK(v236.degree->modulus == 24);
    CHECK(v236.degree->admits(24));
    CHECK(v236.degree->admits(120));
    CHECK_FALSE(v236.degree->admits(12));
    CHECK(v236.checks_pass());
}

TEST_CASE("verdict table partition") {
    const auto table = verdict_table();
    REQUIRE(table.size() == 17);
    std::set<std::string> realizable, four, refl;
    for (const CuspVerdict& v : table) {
        CAPTURE(v.signature.thurston);
        CHECK(v.checks_pass());
        CHECK(v.realizable != v.reason.has_value());
        if (v.realizable) realizable.insert(v.signature.thurston);
        else if (*v.reason == Exclusion::four_torsion) four.insert(v.signature.thurston);
        else refl.insert(v.signature.thurston);
    }
    CHECK(realizable == std::set<std::string>{"T2", "S2(2,2,2,2)", "S2(2,3,6)", "S2(3,3,3)", "K2", "RP2(2,2)",
                                              "D2(;2,3,6)", "D2(;3,3,3)", "D2(3;3)"});
    CHECK(four == std::set<std::string>{"S2(2,4,4)", "D2(;2,4,4)", "D2(4;2)"});
    CHECK(refl == std::set<std::string>{"D2(;2,2,2,2)", "D2(2;2,2)", "D2(2,2;R)", "T_R", "K_R"});
    for (const std::string& name : refl) CHECK(peripheral_order_profile(model(name)) == std::set<int>{2});
}

TEST_CASE("bundled fixtures") {
    const std::string dir = std::string(ORBIFORGE_DATA_DIR) + "/presentations/";
    CHECK(load_presentation(dir + "fig8.pres") == figure_eight_group());
    CHECK(load_presentation(dir + "gamma.pres") == tetrahedral_group());
    CHECK(load_presentation(dir + "P6.pres").relators() == model("p6").presentation.relators());
    CHECK(load_presentation(dir + "P4.pres").relators() == model("p4").presentation.relators());
}

#include "orbiforge/errors.hpp"
#include "orbiforge/presentation_io.hpp"
#include "orbiforge/wallpaper.hpp"

#include <doctest.h>

#include <algorithm>
#include <map>
#include <set>

using namespace orbiforge;

namespace {

const QuadNum half = QuadNum::rational(1, 2);
const QuadNum rt3_2 = QuadNum(0, mpq_class(1, 2));

std::string thurston(const SubgroupHandle& h) { return classify(h).thurston; }

std::size_t det_minus(const std::vector<Mat2>& pg) {
    return static_cast<std::size_t>(
        std::count_if(pg.begin(), pg.end(), [](const Mat2& m) { return m.det() == QuadNum(-1); }));
}

}  // namespace

TEST_CASE("signature table") {
    const auto& sigs = euclidean_signatures();
    REQUIRE(sigs.size() == 17);
    for (const auto& s : sigs) CHECK(euler_characteristic(s) == 0);
    CHECK(std::count_if(sigs.begin(), sigs.end(), [](const auto& s) { return s.orientable; }) == 5);
    CHECK(signature_by_name("S2(2,3,6)").crystallographic == "p6");
    CHECK(signature_by_name("s²(2,3,6)").crystallographic == "p6");
    CHECK(signature_by_name("D2(3;3)").crystallographic == "p31m");
    CHECK(signature_by_name("t_r").crystallographic == "pm");
    CHECK(signature_by_name("K_R").crystallographic == "cm");
    CHECK(signature_by_name("*×").crystallographic == "cm");
    CHECK(signature_by_name("D2(2,2;R)").crystallographic == "pmg");
    CHECK(signature_by_name("D2(2;2;)").crystallographic == "pmg");
    CHECK(signature_by_name("RP2(2,2)").pretty() == "RP²(2,2)");
    CHECK(signature_by_name("p6m").pretty() == "D²(;2,3,6)");
    CHECK_THROWS_AS(signature_by_name("S2(2,3,7)"), LookupError);
    CHECK_THROWS_AS(model("p7"), LookupError);
}

TEST_CASE("euler_characteristic examples") {
    CHECK(euler_characteristic(signature_by_name("T2")) == 0);
    CHECK(euler_characteristic(signature_by_name("S2(2,3,6)")) == 0);
    OrbifoldSignature s334 = signature_by_name("S2(2,3,6)");
    s334.cone_orders = {3, 3, 4};
    CHECK(euler_characteristic(s334) == mpq_class(-1, 12));
}

TEST_CASE("model invariants") {
    for (const std::string& name : model_names()) {
        CAPTURE(name);
        const ModelGroup& g = model(name);
        CHECK(g.signature.crystallographic == name);
        for (const Word& r : g.presentation.relators()) CHECK(g.evaluate(r).is_identity());
        for (const Isometry& f : g.rep) CHECK(f.linear().is_orthogonal());
        const Isometry t1 = g.evaluate(g.translation_words[0]);
        const Isometry t2 = g.evaluate(g.translation_words[1]);
        CHECK(t1.is_translation());
        CHECK(t2.is_translation());
        CHECK_FALSE(cross(t1.trans(), t2.trans()).is_zero());

        // ⟨t1, t2⟩ is the whole translation subgroup: its index is |P(G)|.
        const SubgroupHandle whole = SubgroupHandle::whole(g);
        const std::vector<Word> ts{g.translation_words[0], g.translation_words[1]};
        const std::size_t order = whole.point_group().size();
        CHECK(todd_coxeter(g.presentation, ts).index() == order);
        // Faithfulness spot check: the abstract subgroup ⟨t1², t2²⟩ has index 4|P(G)|.
        CHECK(todd_coxeter(g.presentation, {ts[0].pow(2), ts[1].pow(2)}).index() == 4 * order);
        CHECK(whole.lattice().same_lattice(g.lattice()));
        CHECK(whole.lattice_index() == 1);
    }
}

TEST_CASE("model examples") {
    const ModelGroup& p6 = model("p6");
    const IsoClass a = classify_isometry(p6.rep[0]);
    REQUIRE(std::holds_alternative<iso_class::Rotation>(a));
    CHECK(std::get<iso_class::Rotation>(a).order == 6);
    CHECK(std::get<iso_class::Rotation>(a).center == Vec2{0, 0});
    CHECK(p6.rep[0].linear() == Mat2::rotation(half, -rt3_2));
    CHECK(p6.rep[1].linear() == (Mat2{-half, rt3_2, -rt3_2, -half}));

    const ModelGroup& p4 = model("p4");
    CHECK(p4.rep[0].linear() == (Mat2{0, 1, -1, 0}));
    CHECK(p4.evaluate(p4.translation_words[0]) == Isometry::translation({1, 0}));
    CHECK(p4.evaluate(p4.translation_words[1]) == Isometry::translation({0, 1}));

    const ModelGroup& p1 = model("p1");
    CHECK(p1.presentation.generator_count() == 2);
    for (const Isometry& f : p1.rep) CHECK(f.is_translation());
    for (const Word& r : p1.presentation.relators())
        for (int i = 0; i < 2; ++i) CHECK(exponent_sum(r, i) == 0);
    CHECK(p1.signature.thurston == "T2");
}

TEST_CASE("bundled model fixtures match the built-in models") {
    for (const std::string& name : model_names()) {
        CAPTURE(name);
        const Presentation p = load_presentation(std::string(ORBIFORGE_DATA_DIR) + "/presentations/" + name + ".pres");
        CHECK(p == model(name).presentation);
    }
}

TEST_CASE("translation_lattice examples") {
    const ModelGroup& p6 = model("p6");
    CHECK(translation_lattice(SubgroupHandle::whole(p6)) == p6.lattice());
    const SubgroupHandle k6 = SubgroupHandle::kernel(p6, SignHom{{-1, 1}});
    CHECK(translation_lattice(k6).same_lattice(p6.lattice()));

    const ModelGroup& p4 = model("p4");
    const SubgroupHandle k4 = SubgroupHandle::kernel(p4, SignHom{{-1, 1}});
    CHECK(translation_lattice(k4).same_lattice(p4.lattice()));

    const SubgroupHandle t2 = SubgroupHandle(p4, {p4.translation_words[0].pow(2), p4.translation_words[1]});
    CHECK(t2.lattice_index() == 2);
    CHECK(thurston(t2) == "T2");
}

TEST_CASE("point_group examples") {
    const auto pg6 = point_group(SubgroupHandle::whole(model("p6")));
    CHECK(pg6.size() == 6);
    CHECK(det_minus(pg6) == 0);

    const auto pg6m = point_group(SubgroupHandle::whole(model("p6m")));
    CHECK(pg6m.size() == 12);
    CHECK(det_minus(pg6m) == 6);

    const auto k = point_group(SubgroupHandle::kernel(model("p6"), SignHom{{-1, 1}}));
    CHECK(k.size() == 3);
    CHECK(det_minus(k) == 0);
    CHECK(std::find(k.begin(), k.end(), Mat2::identity()) != k.end());
}

TEST_CASE("classify round trip on all models") {
    for (const std::string& name : model_names()) {
        CAPTURE(name);
        CHECK(classify(SubgroupHandle::whole(model(name))).crystallographic == name);
    }
}

TEST_CASE("classify index-2 examples") {
    CHECK(thurston(SubgroupHandle::kernel(model("p6"), SignHom{{-1, 1}})) == "S2(3,3,3)");
    CHECK(thurston(SubgroupHandle::kernel(model("p4"), SignHom{{-1, 1}})) == "S2(2,2,2,2)");

    const ModelGroup& p6m = model("p6m");
    std::multiset<std::string> got;
    for (const SignHom& h : {SignHom{{-1, 1, 1}}, SignHom{{1, -1, -1}}, SignHom{{-1, -1, -1}}})
        got.insert(thurston(SubgroupHandle::kernel(p6m, h)));
    CHECK(got == std::multiset<std::string>{"S2(2,3,6)", "D2(;3,3,3)", "D2(3;3)"});
}

TEST_CASE("translation subgroups classify as tori") {
    for (const std::string& name : model_names()) {
        CAPTURE(name);
        const ModelGroup& g = model(name);
        const SubgroupHandle h(g, {g.translation_words[0], g.translation_words[1]});
        CHECK(thurston(h) == "T2");
        CHECK(h.point_group().size() == 1);
    }
}

TEST_CASE("orientation double covers") {
    const std::map<std::string, std::string> expected{
        {"p4m", "S2(2,4,4)"}, {"p4g", "S2(2,4,4)"}, {"pg", "T2"},         {"pgg", "S2(2,2,2,2)"},
        {"p6m", "S2(2,3,6)"}, {"p3m1", "S2(3,3,3)"}, {"p31m", "S2(3,3,3)"}, {"pm", "T2"},
        {"cm", "T2"},         {"pmm", "S2(2,2,2,2)"}, {"pmg", "S2(2,2,2,2)"}, {"cmm", "S2(2,2,2,2)"},
        {"p6", "S2(2,3,6)"},  {"p1", "T2"}};
    for (const auto& [name, want] : expected) {
        CAPTURE(name);
        const ModelGroup& g = model(name);
        const auto [h, s] = orientation_double_cover(g);
        CHECK(s.thurston == want);
        CHECK(s.orientable);
        for (const Word& t : g.translation_words) CHECK(h.table().contains(t));
        CHECK(h.index() == (g.signature.orientable ? 1u : 2u));
    }
}

TEST_CASE("index identity and class count on many subgroups") {
    for (const std::string& name : model_names()) {
        CAPTURE(name);
        const ModelGroup& g = model(name);
        std::vector<SubgroupHandle> hs{SubgroupHandle::whole(g)};
        for (const SignHom& h : sign_homs(g.presentation)) hs.push_back(SubgroupHandle::kernel(g, h));
        const Word& t1 = g.translation_words[0];
        const Word& t2 = g.translation_words[1];
        hs.emplace_back(g, std::vector<Word>{t1.pow(2), t2});
        hs.emplace_back(g, std::vector<Word>{t1.pow(3), t1 * t2.pow(2)});
        for (const SubgroupHandle& h : hs) {
            const auto [lhs, rhs] = index_identity(h);
            CHECK(lhs == rhs);
            CHECK(h.classes().size() == h.point_group().size());
            CHECK(euler_characteristic(classify(h)) == 0);
        }
    }
}

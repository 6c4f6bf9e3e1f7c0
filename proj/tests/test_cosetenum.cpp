#include "orbiforge/coset_table.hpp"
#include "orbiforge/errors.hpp"
#include "orbiforge/presentation_io.hpp"
#include "orbiforge/smith.hpp"

#include <doctest.h>

#include <set>

using namespace orbiforge;

namespace {

Presentation p6() {
    return parse_presentation("group P6\ngens a b\nrel a^6\nrel b^3\nrel (a b)^2\n");
}
Presentation p4() {
    return parse_presentation("group P4\ngens c d\nrel c^4\nrel d^2\nrel (c d)^4\n");
}
Presentation cyclic6() { return parse_presentation("gens a\nrel a^6\n"); }

std::vector<Word> p6_translations(const Presentation& p) { return {p.word("b a^-2"), p.word("b^-1 a^2")}; }
std::vector<Word> p4_translations(const Presentation& p) { return {p.word("c^2 d^-1"), p.word("c d^-1 c")}; }

}  // namespace

TEST_CASE("todd_coxeter examples") {
    const Presentation g6 = p6();
    const CosetTable t6 = todd_coxeter(g6, p6_translations(g6));
    CHECK(t6.index() == 6);
    CHECK(t6.check_invariants().empty());

    const Presentation g4 = p4();
    CHECK(todd_coxeter(g4, p4_translations(g4)).index() == 4);

    const Presentation q = quotient(g6, {g6.word("b a^-2"), g6.word("b^-1 a^2"), g6.word("b")});
    CHECK(group_order(q) == 2);
}

TEST_CASE("finite group orders") {
    // Oracle: known orders of small groups.
    CHECK(group_order(cyclic6()) == 6);
    CHECK(group_order(parse_presentation("gens a b\nrel a^2\nrel b^2\nrel (a b)^3\n")) == 6);
    CHECK(group_order(parse_presentation("gens a b\nrel a^2\nrel b^3\nrel (a b)^5\n")) == 60);
    CHECK(group_order(parse_presentation("gens a b\nrel a^2\nrel b^3\nrel (a b)^4\n")) == 24);
    CHECK(group_order(parse_presentation("gens x y\nrel x^4\nrel x^2 y^-2\nrel y^-1 x y x\n")) == 8);
}

TEST_CASE("resource limit") {
    const Presentation z2 = parse_presentation("gens a b\nrel a b a^-1 b^-1\n");
    CHECK_THROWS_AS(todd_coxeter(z2, {}, 1000), ResourceLimit);
    CHECK_THROWS_AS(todd_coxeter(parse_presentation("gens a\n"), {}, 50), ResourceLimit);
}

TEST_CASE("trace and contains") {
    const Presentation g = p6();
    const auto sub = p6_translations(g);
    const CosetTable t = todd_coxeter(g, sub);
    for (Coset k = 0; k < t.index(); ++k) {
        CHECK(t.trace(Word{}, k) == k);
        for (const Word& r : g.relators()) CHECK(t.trace(r, k) == k);
    }
    CHECK(t.trace(sub[0], 0) == 0);
    CHECK(t.contains(sub[0] * sub[1]));
    CHECK_FALSE(t.contains(g.word("a")));
    CHECK(t.contains(g.word("b^3")));
    CHECK_THROWS_AS(t.trace(Word{}, 99), InvalidArgument);
    CHECK_THROWS_AS(CosetTable{}.trace(Word{}, 0), IncompleteTable);
}

TEST_CASE("standardization is deterministic") {
    const Presentation g = p4();
    const auto sub = p4_translations(g);
    CHECK(todd_coxeter(g, sub) == todd_coxeter(g, sub));
    // Coset numbers appear in BFS order along columns.
    const CosetTable t = todd_coxeter(g, sub);
    Coset next = 1;
    std::set<Coset> seen{0};
    for (Coset c = 0; c < t.index(); ++c)
        for (Letter l : {gen(0), inv(0), gen(1), inv(1)}) {
            const Coset d = t.act(c, l);
            if (seen.insert(d).second) CHECK(d == next++);
        }
}

TEST_CASE("index multiplicativity") {
    // K = <t1^2, t2> < H = <t1, t2> < P6, with [H:K] = 2 from H = Z^2.
    const Presentation g = p6();
    const auto h = p6_translations(g);
    const CosetTable gh = todd_coxeter(g, h);
    const CosetTable gk = todd_coxeter(g, {h[0].pow(2), h[1]});
    CHECK(abelianization(reidemeister_schreier(gh).presentation).str() == "Z^2");
    CHECK(gk.index() == gh.index() * 2);

    // Same chain with K = <t1^2, t1 t2^3>: [H:K] = |det [[2,0],[1,3]]| = 6.
    const CosetTable gk2 = todd_coxeter(g, {h[0].pow(2), h[0] * h[1].pow(3)});
    CHECK(gk2.index() == gh.index() * 6);
}

TEST_CASE("schreier_generators examples") {
    const CosetTable t1 = todd_coxeter(cyclic6(), {});
    CHECK(t1.index() == 6);
    for (const Word& w : schreier_generators(t1)) CHECK(t1.contains(w));

    const Presentation g = p6();
    const CosetTable t2 = todd_coxeter(g, p6_translations(g));
    for (const Word& w : schreier_generators(t2)) CHECK(t2.contains(w));

    // ker(a -> -1): transversal {1, a}.
    const CosetTable t3 = todd_coxeter(g, kernel_generators(g, SignHom{{-1, 1}}));
    REQUIRE(t3.index() == 2);
    const auto s3 = schreier_generators(t3);
    CHECK(std::find(s3.begin(), s3.end(), g.word("b")) != s3.end());
    CHECK(std::find(s3.begin(), s3.end(), g.word("a^2")) != s3.end());
}

TEST_CASE("reidemeister_schreier examples") {
    const Presentation g = p6();
    const SubgroupPresentation whole = reidemeister_schreier(todd_coxeter(g, {g.word("a"), g.word("b")}));
    CHECK(whole.presentation.generator_count() == g.generator_count());
    CHECK(whole.presentation.relators().size() == g.relators().size());
    CHECK(abelianization(whole.presentation) == abelianization(g));

    // Oracle: <x, y | x^3, y^3, (x y)^3> has abelianization Z/3 x Z/3.
    const AbelianGroup oracle = abelianization(parse_presentation("gens x y\nrel x^3\nrel y^3\nrel (x y)^3\n"));
    CHECK(oracle.str() == "Z/3 x Z/3");
    const CosetTable k = todd_coxeter(g, kernel_generators(g, SignHom{{-1, 1}}));
    const SubgroupPresentation sp = reidemeister_schreier(k);
    CHECK(abelianization(sp.presentation) == oracle);
    for (const Word& w : sp.inclusion) CHECK(k.contains(w));

    const SubgroupPresentation triv = reidemeister_schreier(todd_coxeter(cyclic6(), {}));
    CHECK(triv.presentation.generator_count() == 0);
    CHECK(triv.presentation.relators().empty());
}

TEST_CASE("reidemeister_schreier agrees with known subgroup abelianizations") {
    // Index-2 subgroups of the (2,3,6) and (2,4,4) rotation groups.
    const Presentation g4 = p4();
    const CosetTable k4 = todd_coxeter(g4, kernel_generators(g4, SignHom{{-1, 1}}));
    REQUIRE(k4.index() == 2);
    // The kernel is the (2,2,2,2) rotation group.
    const AbelianGroup oracle =
        abelianization(parse_presentation("gens p q r\nrel p^2\nrel q^2\nrel r^2\nrel (p q r)^2\n"));
    CHECK(abelianization(reidemeister_schreier(k4).presentation) == oracle);

    // Commutator subgroup of the free abelian group of rank 2 is trivial;
    // the subgroup <a^2, b> of Z^2 has index 2 and presents Z^2.
    const Presentation z2 = parse_presentation("gens a b\nrel a b a^-1 b^-1\n");
    const CosetTable t = todd_coxeter(z2, {z2.word("a^2"), z2.word("b")});
    CHECK(t.index() == 2);
    CHECK(abelianization(reidemeister_schreier(t).presentation).str() == "Z^2");
}

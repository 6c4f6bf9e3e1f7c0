#include "orbiforge/verify.hpp"

#include "orbiforge/coset_table.hpp"
#include "orbiforge/errors.hpp"
#include "orbiforge/knotcusp.hpp"
#include "orbiforge/lattice.hpp"
#include "orbiforge/wallpaper.hpp"

#include <json.hpp>

#include <algorithm>
#include <chrono>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <sstream>

namespace orbiforge {

namespace {

struct Outcome {
    bool pass;
    std::string detail;
};

struct CheckDef {
    const char* id;
    const char* claim;
    bool cited;
    std::function<Outcome(std::uint64_t)> run;
};

// Collects failures; detail is the first failure or the summary on success.
class Tally {
public:
    void expect(bool ok, const std::string& what) {
        if (!ok && first_.empty()) first_ = what;
    }
    Outcome done(std::string summary) const {
        return first_.empty() ? Outcome{true, std::move(summary)} : Outcome{false, first_};
    }

private:
    std::string first_;
};

const QuadNum kHalf = QuadNum::rational(1, 2);
const QuadNum kRt3Half(0, mpq_class(1, 2));

bool is_translation_by(const Isometry& f, const Vec2& v) { return f == Isometry::translation(v); }

Outcome rep_check(const char* name, std::vector<const char*> rels, const char* w1, const Vec2& v1, const char* w2,
                  const Vec2& v2) {
    const ModelGroup& g = model(name);
    Tally t;
    for (const char* r : rels) t.expect(g.evaluate(g.presentation.word(r)).is_identity(), std::string(r) + " is not 1");
    const Isometry f1 = g.evaluate(g.presentation.word(w1));
    const Isometry f2 = g.evaluate(g.presentation.word(w2));
    t.expect(is_translation_by(f1, v1), std::string(w1) + " maps to " + f1.str());
    t.expect(is_translation_by(f2, v2), std::string(w2) + " maps to " + f2.str());
    return t.done(std::string(w1) + " -> " + f1.str() + "; " + w2 + " -> " + f2.str());
}

Outcome rep_p6(std::uint64_t) {
    return rep_check("p6", {"a^6", "b^3", "(a b)^2"}, "b a^-2", Vec2{kHalf, kRt3Half}, "b^-1 a^2", Vec2{1, 0});
}

Outcome rep_p4(std::uint64_t) {
    return rep_check("p4", {"c^4", "d^2", "(c d)^4"}, "c^2 d^-1", Vec2{1, 0}, "c d^-1 c", Vec2{0, 1});
}

Outcome translation_index(std::uint64_t) {
    Tally t;
    std::ostringstream out;
    for (const auto& [name, cusp, want] : {std::tuple{"p6", RigidCusp::s236, 6}, std::tuple{"p4", RigidCusp::s244, 4}}) {
        const ModelGroup& g = model(name);
        const std::size_t idx = todd_coxeter(g.presentation, {g.translation_words[0], g.translation_words[1]}).index();
        const QuadRing ring = cusp == RigidCusp::s244 ? QuadRing::gaussian : QuadRing::root_minus3;
        const mpz_class formula = rigid_abelian_index(cusp, QuadInt{1, 0, ring});
        t.expect(idx == static_cast<std::size_t>(want), std::string(name) + " index " + std::to_string(idx));
        t.expect(formula == want, std::string(name) + " formula " + formula.get_str());
        out << name << ": index " << idx << ", formula " << formula << "; ";
    }
    out << "hexagonal norm form taken as n1^2+3n2^2 on Z[sqrt(-3)]; Z[(1+sqrt(-3))/2] would give n1^2+n1n2+n2^2";
    return t.done(out.str());
}

Outcome collapse(std::uint64_t seed) {
    Tally t;
    const ModelGroup& p6 = model("p6");
    const std::size_t bare =
        group_order(quotient(p6.presentation, {p6.translation_words[0], p6.translation_words[1], Word{gen(1)}}));
    t.expect(bare == 2, "bare quotient order " + std::to_string(bare));
    const CertifiedQuotient m = collapse_236(build_amalgam(minimal_spec(CuspModel::p6)));
    t.expect(m.order == 2, "minimal amalgam order " + std::to_string(m.order));
    for (std::uint64_t i = 0; i < 100; ++i) {
        const CertifiedQuotient q = collapse_236(build_amalgam(random_spec(CuspModel::p6, seed + i)));
        t.expect(q.order == 2 && q.abelian.str() == "Z/2", "random seed " + std::to_string(seed + i) + " order " +
                                                              std::to_string(q.order));
    }
    return t.done("order 2 for the bare group, the minimal amalgam and 100 random amalgams");
}

Outcome double_cover_333(std::uint64_t) {
    const ModelGroup& p6 = model("p6");
    const SubgroupHandle h = SubgroupHandle::kernel(p6, SignHom{{-1, 1}});
    const std::string got = classify(h).thurston;
    Tally t;
    t.expect(got == "S2(3,3,3)", "kernel classifies to " + got);
    t.expect(h.table().contains(p6.translation_words[0]) && h.table().contains(p6.translation_words[1]),
             "translations not in the kernel");
    return t.done("ker(a->-1) is " + got + " and contains t1, t2");
}

Outcome h_map(std::uint64_t seed) {
    Tally t;
    const ModelGroup& p4 = model("p4");
    const std::size_t bare = group_order(quotient(p4.presentation, {Word{gen(1)}, Word{gen(0)}.pow(2)}));
    t.expect(bare == 2, "bare quotient order " + std::to_string(bare));
    const std::string cover = double_cover_cusp_244().thurston;
    t.expect(cover == "S2(2,2,2,2)", "ker(c->-1, d->+1) is " + cover);
    for (std::uint64_t i = 0; i < 100; ++i) {
        const HMap h = h_map_244(build_amalgam(random_spec(CuspModel::p4, seed + i)));
        t.expect(h.quotient.order == 2, "random seed " + std::to_string(seed + i) + " order " +
                                            std::to_string(h.quotient.order));
    }
    return t.done("bare order 2; kernel " + cover + "; sign map valid on 100 random amalgams");
}

Outcome gamma_census(std::uint64_t) {
    Tally t;
    const Presentation g = tetrahedral_group();
    const std::string ab = abelianization(g).str();
    t.expect(ab == "Z/2 x Z/2", "abelianization " + ab);
    const auto homs = sign_homs(g);
    t.expect(homs.size() == 3, std::to_string(homs.size()) + " sign maps");
    std::multiset<std::string> got;
    for (const SignHom& h : homs)
        got.insert(classify(SubgroupHandle::kernel(model("p6m"), SignHom{{h.signs[0], h.signs[1], h.signs[2]}})).thurston);
    std::string list;
    for (const auto& s : got) list += (list.empty() ? "" : ", ") + s;
    t.expect(got == std::multiset<std::string>{"S2(2,3,6)", "D2(;3,3,3)", "D2(3;3)"}, "kernels " + list);
    return t.done(ab + "; kernels " + list);
}

Outcome orientation_covers(std::uint64_t) {
    const std::vector<std::pair<const char*, const char*>> want{
        {"p4m", "S2(2,4,4)"}, {"p4g", "S2(2,4,4)"}, {"pg", "T2"},         {"pgg", "S2(2,2,2,2)"},
        {"p6m", "S2(2,3,6)"}, {"p3m1", "S2(3,3,3)"}, {"p31m", "S2(3,3,3)"}};
    Tally t;
    std::string summary;
    for (const auto& [name, sig] : want) {
        const std::string got = orientation_double_cover(model(name)).second.thurston;
        t.expect(got == sig, std::string(name) + " -> " + got);
        summary += std::string(summary.empty() ? "" : ", ") + name + " -> " + got;
    }
    return t.done(summary);
}

Outcome verdict_partition(std::uint64_t) {
    Tally t;
    std::set<std::string> realizable, four, refl;
    for (const CuspVerdict& v : verdict_table()) {
        t.expect(v.checks_pass(), v.signature.thurston + " has a failing supporting check");
        if (v.realizable) realizable.insert(v.signature.thurston);
        else if (*v.reason == Exclusion::four_torsion) four.insert(v.signature.thurston);
        else {
            refl.insert(v.signature.thurston);
            t.expect(peripheral_order_profile(model(v.signature.crystallographic)) == std::set<int>{2},
                     v.signature.thurston + " has orders beyond 2");
        }
    }
    t.expect(realizable == std::set<std::string>{"T2", "S2(2,2,2,2)", "S2(2,3,6)", "S2(3,3,3)", "K2", "RP2(2,2)",
                                                 "D2(;2,3,6)", "D2(;3,3,3)", "D2(3;3)"},
             "realizable list differs");
    t.expect(four == std::set<std::string>{"S2(2,4,4)", "D2(;2,4,4)", "D2(4;2)"}, "4-torsion list differs");
    t.expect(refl == std::set<std::string>{"D2(;2,2,2,2)", "D2(2;2,2)", "D2(2,2;R)", "T_R", "K_R"},
             "reflection list differs");
    return t.done(std::to_string(realizable.size()) + " realizable, " + std::to_string(four.size() + refl.size()) +
                  " excluded (" + std::to_string(four.size()) + " 4-torsion, " + std::to_string(refl.size()) +
                  " reflection)");
}

Outcome roundtrip(std::uint64_t) {
    Tally t;
    std::size_t handles = 0;
    for (const std::string& name : model_names()) {
        const ModelGroup& g = model(name);
        t.expect(classify(SubgroupHandle::whole(g)).crystallographic == name, name + " misclassified");
        t.expect(euler_characteristic(g.signature) == 0, name + " has nonzero Euler characteristic");
        std::vector<SubgroupHandle> hs{SubgroupHandle::whole(g)};
        for (const SignHom& h : sign_homs(g.presentation)) hs.push_back(SubgroupHandle::kernel(g, h));
        const Word& t1 = g.translation_words[0];
        const Word& t2 = g.translation_words[1];
        hs.emplace_back(g, std::vector<Word>{t1, t2});
        hs.emplace_back(g, std::vector<Word>{t1.pow(2), t2});
        for (const SubgroupHandle& h : hs) {
            const auto [lhs, rhs] = index_identity(h);
            t.expect(lhs == rhs, name + ": index identity " + lhs.get_str() + " != " + rhs.get_str());
            ++handles;
        }
    }
    return t.done("17 models round-trip; index identity on " + std::to_string(handles) + " subgroups; chi = 0");
}

Outcome lattice_identities(std::uint64_t seed) {
    Tally t;
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<long> coef(-20, 20);
    const Mat2 r4 = rotation_of_order(4);
    const Mat2 r3 = rotation_of_order(3);
    const Vec2 hex{kHalf, kRt3Half};
    for (int i = 0; i < 100; ++i) {
        const Vec2 v{QuadNum(coef(rng)), QuadNum(coef(rng))};
        t.expect(r4 * (r4 * v) == -v, "order 4 identity fails at " + v.str());
        const Vec2 w = QuadNum(coef(rng)) * Vec2{1, 0} + QuadNum(coef(rng)) * hex;
        t.expect((w + r3 * w + r3 * (r3 * w)).is_zero(), "order 3 identity fails at " + w.str());
    }
    std::uniform_int_distribution<long> small(-9, 9);
    for (int i = 0; i < 100; ++i) {
        QuadInt z{small(rng), small(rng), i % 2 ? QuadRing::gaussian : QuadRing::root_minus3};
        if (z.is_zero()) z.n1 = 1;
        QuadNum ratio = multiply(z).det() / ring_lattice(z.ring).det();
        if (ratio.sign() < 0) ratio = -ratio;
        t.expect(ratio == QuadNum(mpq_class(sublattice_index(z))), "index mismatch at " + z.str());
    }
    t.expect(is_rotationally_rhombic(Lattice2(Vec2{1, 0}, Vec2{0, 1})), "square lattice not rhombic");
    t.expect(is_rotationally_rhombic(Lattice2(Vec2{1, 0}, hex)), "hexagonal lattice not rhombic");
    t.expect(!is_rotationally_rhombic(Lattice2(Vec2{2, 0}, Vec2{0, 1})), "rectangular lattice rhombic");
    return t.done("rotation identities on 200 vectors; norm form on 100 multipliers; rhombic verdicts");
}

Outcome degree_metadata(std::uint64_t) {
    const CuspVerdict v = verdict("S2(2,3,6)");
    Tally t;
    t.expect(v.degree.has_value(), "no degree note");
    if (v.degree) {
        t.expect(v.degree->modulus == 24, "modulus " + std::to_string(v.degree->modulus));
        t.expect(v.degree->admits(24) && v.degree->admits(120), "rejects a witness degree");
        t.expect(!v.degree->admits(12), "admits degree 12");
    }
    auto has_note = [&](const std::string& s) {
        return std::any_of(v.notes.begin(), v.notes.end(), [&](const std::string& n) { return n.find(s) != n.npos; });
    };
    t.expect(has_note("figure-8") && has_note("degree 24"), "figure-8 degree note missing");
    t.expect(has_note("dodecahedral") && has_note("degree 120"), "dodecahedral degree note missing");
    return t.done("24 | deg; 12 rejected; figure-8 degree 24, dodecahedral degree 120");
}

Outcome cited(std::uint64_t) { return {true, "external argument, not machine-checked"}; }

const std::vector<CheckDef>& registry() {
    static const std::vector<CheckDef> defs{
        {"rep-p6", "the p6 model satisfies its relators; t1, t2 are the hexagonal translations", false, rep_p6},
        {"rep-p4", "the p4 model satisfies its relators; t1, t2 are the unit translations", false, rep_p4},
        {"translation-index", "[P6:<t1,t2>] = 6 and [P4:<t1,t2>] = 4, matching the norm-form index", false,
         translation_index},
        {"collapse-236", "killing b, t1, t2 and meridians leaves Z/2, independent of the knot", false, collapse},
        {"double-cover-333", "ker(a->-1) in p6 is S2(3,3,3) and contains t1, t2", false, double_cover_333},
        {"h-map-244", "c->-1, d->+1 kills d, c^2 and parabolics with order-2 quotient; kernel is S2(2,2,2,2)", false,
         h_map},
        {"gamma-census", "the tetrahedral group has abelianization Z/2 x Z/2 and three index 2 cusp types", false,
         gamma_census},
        {"orientation-covers", "orientation double covers of the non-orientable types", false, orientation_covers},
        {"verdict-table", "9 realizable and 8 excluded cusp types", false, verdict_partition},
        {"classifier-roundtrip", "all 17 models classify to themselves; index identity; chi = 0", false, roundtrip},
        {"lattice-identities", "rotation identities, norm-form indices and rhombic verdicts", false,
         lattice_identities},
        {"degree-metadata", "S2(2,3,6) covering degrees are multiples of 24", false, degree_metadata},
        {"abelianization-isomorphism", "the Z/2 surjection for an S2(2,3,6) cusp is an isomorphism", true, cited},
        {"reflection-extension", "a cusp reflection extends to a symmetry of the knot complement", true, cited},
        {"figure8-realizations", "the figure-8 knot complement covers orbifolds with the nine realizable cusps", true,
         cited},
    };
    return defs;
}

}  // namespace

std::string to_string(CheckStatus s) {
    switch (s) {
        case CheckStatus::pass: return "pass";
        case CheckStatus::fail: return "fail";
        default: return "cited";
    }
}

bool Report::ok() const {
    return std::none_of(records.begin(), records.end(), [](const CheckRecord& r) { return r.status == CheckStatus::fail; });
}

std::string Report::json(bool timings) const {
    nlohmann::ordered_json j;
    j["ok"] = ok();
    j["checks"] = nlohmann::ordered_json::array();
    for (const CheckRecord& r : records) {
        nlohmann::ordered_json c{{"id", r.id}, {"claim", r.claim}, {"status", to_string(r.status)}, {"detail", r.detail}};
        if (timings) c["wall_time"] = r.wall_time;
        j["checks"].push_back(std::move(c));
    }
    return j.dump(2) + "\n";
}

std::string Report::text(bool timings) const {
    std::ostringstream out;
    for (const CheckRecord& r : records) {
        out << to_string(r.status) << "  " << r.id << "  " << r.detail;
        if (timings) out << "  (" << r.wall_time << " s)";
        out << "\n";
    }
    out << (ok() ? "all checks pass" : "some checks FAIL") << "\n";
    return out.str();
}

const std::vector<std::string>& check_ids() {
    static const std::vector<std::string> ids = [] {
        std::vector<std::string> out;
        for (const CheckDef& d : registry()) out.emplace_back(d.id);
        return out;
    }();
    return ids;
}

Report run_verification(const VerifyOptions& opts) {
    for (const std::string& id : opts.only)
        if (std::find(check_ids().begin(), check_ids().end(), id) == check_ids().end())
            throw LookupError("unknown check id: " + id);
    Report report;
    for (const CheckDef& d : registry()) {
        if (!opts.only.empty() && std::find(opts.only.begin(), opts.only.end(), d.id) == opts.only.end()) continue;
        const auto start = std::chrono::steady_clock::now();
        Outcome o{false, ""};
        try {
            o = d.run(opts.seed);
        } catch (const ResourceLimit&) {
            throw;
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        const std::chrono::duration<double> dt = std::chrono::steady_clock::now() - start;
        const CheckStatus st = d.cited ? CheckStatus::cited : o.pass ? CheckStatus::pass : CheckStatus::fail;
        report.records.push_back({d.id, d.claim, st, o.detail, dt.count()});
    }
    return report;
}

}  // namespace orbiforge

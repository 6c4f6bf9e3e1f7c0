#include "orbiforge/knotcusp.hpp"

#include "orbiforge/coset_table.hpp"
#include "orbiforge/errors.hpp"

#include <algorithm>
#include <map>
#include <random>

namespace orbiforge {

namespace {

constexpr std::size_t kCuspGens = 2;

Letter shift(Letter l, std::size_t by) {
    const auto k = static_cast<Letter>(by);
    return l > 0 ? l + k : l - k;
}

Word shifted(const Word& w, std::size_t by) {
    Word out;
    for (Letter l : w) out.push(shift(l, by));
    return out;
}

std::string join(const std::set<int>& s) {
    std::string out = "{";
    for (int v : s) out += (out.size() > 1 ? "," : "") + std::to_string(v);
    return out + "}";
}

CertifiedQuotient certify(const Presentation& p, const std::vector<Word>& kill, std::size_t max_cosets) {
    const Presentation q = quotient(p, kill);
    return {abelianization(q), todd_coxeter(q, {}, max_cosets).index()};
}

Word random_word(std::mt19937_64& rng, std::size_t gens, std::size_t max_len) {
    std::uniform_int_distribution<std::size_t> len(0, max_len);
    std::uniform_int_distribution<std::size_t> pick(0, gens - 1);
    std::bernoulli_distribution sign(0.5);
    Word w;
    for (std::size_t n = len(rng), i = 0; i < n; ++i) w.push(sign(rng) ? gen(pick(rng)) : inv(pick(rng)));
    return w;
}

bool contains_four(const OrbifoldSignature& s) {
    auto has = [](const std::vector<int>& v) { return std::find(v.begin(), v.end(), 4) != v.end(); };
    return has(s.cone_orders) || has(s.corner_orders);
}

VerdictCheck check(std::string name, bool pass, std::string detail) {
    return {std::move(name), pass, std::move(detail)};
}

template <class F>
VerdictCheck guarded(std::string name, F&& f) {
    try {
        return f();
    } catch (const std::exception& e) {
        return check(std::move(name), false, e.what());
    }
}

// The three sign maps of Γ restricted to ⟨a, b, c⟩, i.e. to p6m.
std::vector<SignHom> census_homs() {
    std::vector<SignHom> out;
    for (const SignHom& h : sign_homs(tetrahedral_group()))
        out.push_back(SignHom{{h.signs[0], h.signs[1], h.signs[2]}});
    return out;
}

struct Witness {
    const char* crystallographic;
    const char* text;
};

constexpr Witness kWitnesses[] = {
    {"p1", "figure-8 knot complement (its own torus cusp)"},
    {"p2", "quotient of the figure-8 knot complement by an orientation-preserving involution"},
    {"p6", "orientable tetrahedral orbifold, covered 24-fold by the figure-8 knot complement"},
    {"p3", "quotient of the figure-8 knot complement with a rigid 3-fold cusp"},
    {"pg", "Gieseking manifold, double covered by the figure-8 knot complement"},
    {"pgg", "quotient of the figure-8 knot complement by its whole symmetry group"},
    {"p6m", "non-orientable tetrahedral orbifold with a figure-8 cover"},
    {"p3m1", "non-orientable tetrahedral orbifold with a figure-8 cover"},
    {"p31m", "orbifold of an index 2 subgroup of the tetrahedral reflection group Γ, which contains PSL(2,O3)"},
};

}  // namespace

std::string to_string(CuspModel m) { return m == CuspModel::p6 ? "p6" : "p4"; }

const ModelGroup& cusp_group(CuspModel m) { return model(to_string(m)); }

Word Amalgam::knot_word(const Word& w) const { return shifted(w, kCuspGens); }

std::array<Word, 2> Amalgam::translations() const {
    const auto& t = cusp_group(cusp).translation_words;
    return {t[0], t[1]};
}

std::vector<Word> Amalgam::meridians() const {
    std::vector<Word> out;
    for (std::size_t j = 0; j < knot_generator_count; ++j) out.push_back(Word{gen(kCuspGens + j)});
    return out;
}

Amalgam build_amalgam(const AmalgamSpec& spec) {
    const ModelGroup& g = cusp_group(spec.cusp);
    const Presentation& k = spec.knot;
    const std::size_t n = k.generator_count();
    if (n == 0) throw InvalidArgument("knot presentation has no generators");
    const AbelianGroup ab = abelianization(k);
    if (!(ab.free_rank == 1 && ab.torsion.empty()))
        throw InvalidArgument("knot group abelianization is " + ab.str() + ", expected Z");

    std::vector<std::string> names = g.presentation.generators();
    for (const std::string& s : k.generators()) {
        if (std::find(names.begin(), names.end(), s) != names.end())
            throw InvalidArgument("generator name clash: " + s);
        names.push_back(s);
    }

    std::map<std::pair<std::size_t, std::size_t>, const GluingDatum*> seen;
    for (const GluingDatum& d : spec.gluings) {
        if (d.peripheral_generator >= kCuspGens || d.knot_generator >= n)
            throw InvalidArgument("gluing references a missing generator");
        if (d.conjugator.generator_bound() > n) throw InvalidArgument("conjugator is not a knot word");
        if (!seen.emplace(std::pair{d.peripheral_generator, d.knot_generator}, &d).second)
            throw InvalidArgument("repeated gluing for (" + g.presentation.generators()[d.peripheral_generator] +
                                  ", " + k.generators()[d.knot_generator] + ")");
    }
    if (seen.size() != kCuspGens * n) throw InvalidArgument("incomplete gluings");

    std::vector<Word> rels = g.presentation.relators();
    for (const Word& r : k.relators()) rels.push_back(shifted(r, kCuspGens));
    const auto& t = g.translation_words;
    for (const auto& [key, d] : seen) {
        const Word mu{gen(kCuspGens + d->knot_generator)};
        const Word cg{gen(d->peripheral_generator)};
        const Word parabolic = (t[0].pow(d->r) * t[1].pow(d->s)).conjugated_by(shifted(d->conjugator, kCuspGens));
        rels.push_back(mu.conjugated_by(cg) * parabolic.inverse());
    }
    Presentation p(g.presentation.name() + "*" + (k.name().empty() ? "K" : k.name()), names, rels);
    return {spec.cusp, std::move(p), n};
}

CertifiedQuotient collapse_236(const Amalgam& a, std::size_t max_cosets) {
    if (a.cusp != CuspModel::p6) throw InvalidArgument("collapse_236 needs a p6 amalgam");
    std::vector<Word> kill{Word{gen(1)}};
    for (const Word& t : a.translations()) kill.push_back(t);
    for (const Word& m : a.meridians()) kill.push_back(m);
    return certify(a.presentation, kill, max_cosets);
}

HMap h_map_244(const Amalgam& a, std::size_t max_cosets) {
    if (a.cusp != CuspModel::p4) throw InvalidArgument("h_map_244 needs a p4 amalgam");
    SignHom h{std::vector<int>(a.presentation.generator_count(), 1)};
    h.signs[0] = -1;
    for (std::size_t i = 0; i < a.presentation.relators().size(); ++i)
        if (h(a.presentation.relators()[i]) != 1)
            throw InvariantViolation("h does not respect relator " + std::to_string(i + 1) + ": " +
                                     a.presentation.render(a.presentation.relators()[i]));
    std::vector<Word> kill{Word{gen(1)}, Word{gen(0)}.pow(2)};
    for (const Word& t : a.translations()) kill.push_back(t);
    for (const Word& m : a.meridians()) kill.push_back(m);
    return {h, certify(a.presentation, kill, max_cosets)};
}

OrbifoldSignature double_cover_cusp_244() {
    return classify(SubgroupHandle::kernel(model("p4"), SignHom{{-1, 1}}));
}

std::set<int> peripheral_order_profile(const ModelGroup& g) {
    const SubgroupHandle h = SubgroupHandle::whole(g);
    std::set<int> out;
    for (const CoordAffine& c : h.classes()) {
        if (c.linear_is_identity()) continue;
        if (c.det() == 1) {
            const int n = c.linear_order();
            for (int d = 2; d <= n; ++d)
                if (n % d == 0) out.insert(d);
        } else if (h.class_has_reflection(c)) {
            out.insert(2);
        }
    }
    return out;
}

Presentation figure_eight_group() {
    Presentation base("fig8", {"x", "y"}, {});
    const Word w = base.word("x^-1 y x y^-1");
    return {"fig8", {"x", "y"}, {w * base.word("x") * w.inverse() * base.word("y^-1")}};
}

Presentation tetrahedral_group() {
    Presentation base("gamma", {"a", "b", "c", "d"}, {});
    std::vector<Word> rels;
    for (const char* r : {"a^2", "b^2", "c^2", "d^2", "(a b)^6", "(b c)^3", "(c a)^2", "(a d)^2", "(b d)^2", "(c d)^3"})
        rels.push_back(base.word(r));
    return {"gamma", {"a", "b", "c", "d"}, rels};
}

AmalgamSpec minimal_spec(CuspModel m) {
    AmalgamSpec spec{m, Presentation("free1", {"mu"}, {}), {}};
    for (std::size_t g = 0; g < kCuspGens; ++g) spec.gluings.push_back({g, 0, Word{}, 1, 0});
    return spec;
}

AmalgamSpec random_spec(CuspModel m, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    const std::size_t n = std::uniform_int_distribution<std::size_t>(1, 3)(rng);
    std::vector<std::string> names;
    for (std::size_t i = 0; i < n; ++i) names.push_back("m" + std::to_string(i + 1));
    std::vector<Word> rels;
    for (std::size_t i = 0; i + 1 < n; ++i) {
        const Word u = random_word(rng, n, 3);
        rels.push_back(Word{gen(i)}.conjugated_by(u) * Word{inv(i + 1)});
    }
    if (std::bernoulli_distribution(0.5)(rng)) {
        const Word v = random_word(rng, n, 3);
        const Word m1{gen(0)};
        const Word comm = m1 * v * m1.inverse() * v.inverse();
        if (!comm.empty()) rels.push_back(comm);
    }
    AmalgamSpec spec{m, Presentation("knot" + std::to_string(seed), names, rels), {}};
    std::uniform_int_distribution<long> exp(-3, 3);
    for (std::size_t g = 0; g < kCuspGens; ++g)
        for (std::size_t j = 0; j < n; ++j) {
            const Word w = random_word(rng, n, 6);
            const long r = exp(rng);
            const long s = exp(rng);
            spec.gluings.push_back({g, j, w, r, s});
        }
    return spec;
}

std::string to_string(Exclusion e) {
    return e == Exclusion::four_torsion ? "FourTorsion" : "ReflectionSymmetry";
}

bool CuspVerdict::checks_pass() const {
    return std::all_of(checks.begin(), checks.end(), [](const VerdictCheck& c) { return c.pass; });
}

CuspVerdict verdict(std::string_view name) { return verdict(signature_by_name(name)); }

CuspVerdict verdict(const OrbifoldSignature& s) {
    const ModelGroup& g = model(s.crystallographic);
    CuspVerdict v{s, false, std::nullopt, std::nullopt, {}, std::nullopt, {}};
    const std::set<int> profile = peripheral_order_profile(g);

    v.checks.push_back(guarded("model-classifies", [&] {
        const OrbifoldSignature got = classify(SubgroupHandle::whole(g));
        return check("model-classifies", got == s, s.crystallographic + " model classifies to " + got.thurston);
    }));

    if (contains_four(s)) {
        v.reason = Exclusion::four_torsion;
        v.checks.push_back(check("four-torsion", profile.count(4) == 1, "element orders " + join(profile)));
        v.checks.push_back(guarded("orientation-cover", [&] {
            const OrbifoldSignature c = orientation_double_cover(g).second;
            return check("orientation-cover", c.thurston == "S2(2,4,4)", "orientation cover " + c.thurston);
        }));
        v.checks.push_back(guarded("double-cover-2222", [&] {
            const OrbifoldSignature c = double_cover_cusp_244();
            return check("double-cover-2222", c.thurston == "S2(2,2,2,2)", "ker(c->-1, d->+1) in p4 is " + c.thurston);
        }));
        v.checks.push_back(guarded("h-map", [&] {
            const HMap h = h_map_244(build_amalgam(minimal_spec(CuspModel::p4)));
            return check("h-map", h.quotient.order == 2,
                         "h respects all relators; quotient order " + std::to_string(h.quotient.order));
        }));
        return v;
    }

    const SubgroupHandle whole = SubgroupHandle::whole(g);
    const bool reflective = std::any_of(whole.classes().begin(), whole.classes().end(),
                                        [&](const CoordAffine& c) { return whole.class_has_reflection(c); });
    const bool only_two = std::all_of(profile.begin(), profile.end(), [](int k) { return k == 2; });
    if (reflective && only_two) {
        v.reason = Exclusion::reflection_symmetry;
        v.checks.push_back(check("order-profile", true, "element orders " + join(profile) + " within {2}"));
        v.checks.push_back(guarded("orientation-cover", [&] {
            const OrbifoldSignature c = orientation_double_cover(g).second;
            const bool ok = c.thurston == "S2(2,2,2,2)" || c.thurston == "T2";
            return check("orientation-cover", ok, "orientation cover " + c.thurston);
        }));
        v.notes.push_back("a reflection of the cusp extends to the knot complement; cited, not machine-checked");
        return v;
    }

    v.realizable = true;
    for (const Witness& w : kWitnesses)
        if (s.crystallographic == w.crystallographic) v.witness = w.text;
    v.checks.push_back(check("no-four-torsion", profile.count(4) == 0, "element orders " + join(profile)));

    if (s.crystallographic == "p6") {
        v.degree = DegreeNote{24, "covering degree from a knot-covered manifold is 24n"};
        v.notes.push_back("figure-8 knot complement: degree 24");
        v.notes.push_back("dodecahedral knot complements: degree 120");
        v.notes.push_back("torus-cusped intermediate cover has degree 6n2 over the S2(3,3,3) quotient");
        v.notes.push_back("S2(3,3,3) quotient covers the S2(2,3,6) orbifold with degree 1 or 2");
        v.notes.push_back("abelianization is Z/2: surjection certified, isomorphism cited");
        v.checks.push_back(guarded("collapse", [&] {
            const CertifiedQuotient q = collapse_236(build_amalgam(minimal_spec(CuspModel::p6)));
            return check("collapse", q.order == 2 && q.abelian.str() == "Z/2",
                         "quotient order " + std::to_string(q.order) + ", abelianization " + q.abelian.str());
        }));
        v.checks.push_back(guarded("double-cover-333", [&] {
            const SubgroupHandle h = SubgroupHandle::kernel(g, SignHom{{-1, 1}});
            const OrbifoldSignature c = classify(h);
            const bool ok = c.thurston == "S2(3,3,3)" && h.table().contains(g.translation_words[0]) &&
                            h.table().contains(g.translation_words[1]);
            return check("double-cover-333", ok, "ker(a->-1) in p6 is " + c.thurston + ", contains t1 and t2");
        }));
    }
    if (s.crystallographic == "p6" || s.crystallographic == "p3m1" || s.crystallographic == "p31m") {
        v.checks.push_back(guarded("census", [&] {
            for (const SignHom& h : census_homs())
                if (classify(SubgroupHandle::kernel(model("p6m"), h)) == s)
                    return check("census", true, "index 2 subgroup of the tetrahedral group with this cusp");
            return check("census", false, "no index 2 subgroup of the tetrahedral group has this cusp");
        }));
    }
    return v;
}

std::vector<CuspVerdict> verdict_table() {
    std::vector<CuspVerdict> out;
    for (const OrbifoldSignature& s : euclidean_signatures()) out.push_back(verdict(s));
    return out;
}

}  // namespace orbiforge

#include "orbiforge/wallpaper.hpp"

#include "orbiforge/errors.hpp"
#include "orbiforge/presentation_io.hpp"

#include <algorithm>
#include <cctype>
#include <map>

namespace orbiforge {

namespace {

using QVec = std::array<mpq_class, 2>;
using IMat = std::array<mpz_class, 4>;

// ---------------------------------------------------------------- signatures

OrbifoldSignature sig(bool orientable, bool boundary, Underlying u, std::vector<int> cones,
                      std::vector<int> corners, std::string thurston, std::string conway, std::string cryst) {
    return {orientable, boundary, u, std::move(cones), std::move(corners),
            std::move(thurston), std::move(conway), std::move(cryst)};
}

std::vector<OrbifoldSignature> make_signatures() {
    using U = Underlying;
    return {
        sig(true, false, U::torus, {}, {}, "T2", "o", "p1"),
        sig(true, false, U::sphere, {2, 2, 2, 2}, {}, "S2(2,2,2,2)", "2222", "p2"),
        sig(false, true, U::annulus, {}, {}, "T_R", "**", "pm"),
        sig(false, false, U::klein_bottle, {}, {}, "K2", "xx", "pg"),
        sig(false, true, U::moebius, {}, {}, "K_R", "*x", "cm"),
        sig(false, true, U::disk, {}, {2, 2, 2, 2}, "D2(;2,2,2,2)", "*2222", "pmm"),
        sig(false, true, U::disk, {2, 2}, {}, "D2(2,2;R)", "22*", "pmg"),
        sig(false, false, U::projective_plane, {2, 2}, {}, "RP2(2,2)", "22x", "pgg"),
        sig(false, true, U::disk, {2}, {2, 2}, "D2(2;2,2)", "2*22", "cmm"),
        sig(true, false, U::sphere, {2, 4, 4}, {}, "S2(2,4,4)", "442", "p4"),
        sig(false, true, U::disk, {}, {2, 4, 4}, "D2(;2,4,4)", "*442", "p4m"),
        sig(false, true, U::disk, {4}, {2}, "D2(4;2)", "4*2", "p4g"),
        sig(true, false, U::sphere, {3, 3, 3}, {}, "S2(3,3,3)", "333", "p3"),
        sig(false, true, U::disk, {}, {3, 3, 3}, "D2(;3,3,3)", "*333", "p3m1"),
        sig(false, true, U::disk, {3}, {3}, "D2(3;3)", "3*3", "p31m"),
        sig(true, false, U::sphere, {2, 3, 6}, {}, "S2(2,3,6)", "632", "p6"),
        sig(false, true, U::disk, {}, {2, 3, 6}, "D2(;2,3,6)", "*632", "p6m"),
    };
}

const std::multimap<std::string, std::string>& aliases() {
    static const std::multimap<std::string, std::string> a{
        {"p1", "torus"},    {"pm", "annulus"},   {"cm", "moebius"},  {"cm", "mobius"},
        {"pg", "klein"},    {"pgg", "P2(2,2)"},  {"pmg", "D2(2,2;)"}, {"pmg", "D2(2;2;)"},
    };
    return a;
}

std::string normalize_name(std::string_view s) {
    std::string in(s), out;
    auto replace_all = [&in](const std::string& from, const std::string& to) {
        for (std::size_t pos = 0; (pos = in.find(from, pos)) != std::string::npos; pos += to.size())
            in.replace(pos, from.size(), to);
    };
    replace_all("²", "2");
    replace_all("×", "x");
    for (char ch : in) {
        if (std::isspace(static_cast<unsigned char>(ch)) || ch == '^') continue;
        out.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(ch))));
    }
    return out;
}

const std::map<std::string, std::size_t>& name_index() {
    static const std::map<std::string, std::size_t> idx = [] {
        std::map<std::string, std::size_t> m;
        const auto& sigs = euclidean_signatures();
        for (std::size_t i = 0; i < sigs.size(); ++i) {
            for (const std::string& n : {sigs[i].crystallographic, sigs[i].thurston, sigs[i].conway})
                m.emplace(normalize_name(n), i);
            auto [lo, hi] = aliases().equal_range(sigs[i].crystallographic);
            for (auto it = lo; it != hi; ++it) m.emplace(normalize_name(it->second), i);
        }
        return m;
    }();
    return idx;
}

// ------------------------------------------------------------------- models

QuadNum q(long n, long d = 1) { return QuadNum::rational(n, d); }
QuadNum r3(long n, long d = 1) { return QuadNum(0, mpq_class(n, d)); }

Isometry iso(QuadNum m11, QuadNum m12, QuadNum m21, QuadNum m22, QuadNum tx = 0, QuadNum ty = 0) {
    return {Mat2{std::move(m11), std::move(m12), std::move(m21), std::move(m22)}, Vec2{std::move(tx), std::move(ty)}};
}

struct ModelSource {
    const char* name;
    const char* text;
    std::vector<Isometry> rep;
    const char* t1;
    const char* t2;
};

std::vector<ModelSource> model_sources() {
    const QuadNum h = q(1, 2);
    // Rotation by 2pi/3.
    const Mat2 r120{-h, r3(-1, 2), r3(1, 2), -h};
    return {
        {"p1", "gens x y\nrel x y x^-1 y^-1\n", {iso(1, 0, 0, 1, 1, 0), iso(1, 0, 0, 1, 0, 1)}, "x", "y"},
        {"p2", "gens a b c\nrel a^2\nrel b^2\nrel c^2\nrel (a b c)^2\n",
         {iso(-1, 0, 0, -1), iso(-1, 0, 0, -1, 1, 0), iso(-1, 0, 0, -1, 0, 1)}, "b a", "c a"},
        {"pm", "gens r1 r2 t\nrel r1^2\nrel r2^2\nrel r1 t r1^-1 t^-1\nrel r2 t r2^-1 t^-1\n",
         {iso(-1, 0, 0, 1), iso(-1, 0, 0, 1, 1, 0), iso(1, 0, 0, 1, 0, 1)}, "r2 r1", "t"},
        {"pg", "gens g1 g2\nrel g1^2 g2^-2\n", {iso(1, 0, 0, -1, h, 0), iso(1, 0, 0, -1, h, 1)}, "g1^2", "g2 g1^-1"},
        {"cm", "gens r g\nrel r^2\nrel r g^2 r^-1 g^-2\n", {iso(-1, 0, 0, 1), iso(-1, 0, 0, 1, 1, h)}, "g^2", "r g"},
        {"pmm",
         "gens r1 r2 r3 r4\nrel r1^2\nrel r2^2\nrel r3^2\nrel r4^2\n"
         "rel (r1 r2)^2\nrel (r2 r3)^2\nrel (r3 r4)^2\nrel (r4 r1)^2\n",
         {iso(-1, 0, 0, 1), iso(1, 0, 0, -1), iso(-1, 0, 0, 1, 1, 0), iso(1, 0, 0, -1, 0, 1)}, "r3 r1", "r4 r2"},
        {"pmg", "gens p q r\nrel p^2\nrel q^2\nrel r^2\nrel r p q r^-1 (p q)^-1\n",
         {iso(-1, 0, 0, -1), iso(-1, 0, 0, -1, 0, 1), iso(-1, 0, 0, 1, h, 0)}, "r p r p", "q p"},
        {"pgg", "gens p q z\nrel p^2\nrel q^2\nrel z^2 p q\n",
         {iso(-1, 0, 0, -1), iso(-1, 0, 0, -1, 0, 1), iso(-1, 0, 0, 1, h, h)}, "z^2", "p z p z"},
        {"cmm", "gens p r0 r1\nrel p^2\nrel r0^2\nrel r1^2\nrel (r0 r1)^2\nrel (r1 p r0 p^-1)^2\n",
         {iso(-1, 0, 0, -1, h, h), iso(-1, 0, 0, 1), iso(1, 0, 0, -1)}, "p r0 p^-1 r0", "r0 p r1"},
        {"p4", "gens c d\nrel c^4\nrel d^2\nrel (c d)^4\n", {iso(0, 1, -1, 0), iso(-1, 0, 0, -1, -1, 0)},
         "c^2 d^-1", "c d^-1 c"},
        {"p4m", "gens r1 r2 r3\nrel r1^2\nrel r2^2\nrel r3^2\nrel (r1 r2)^4\nrel (r2 r3)^4\nrel (r3 r1)^2\n",
         {iso(1, 0, 0, -1), iso(0, 1, 1, 0), iso(-1, 0, 0, 1, 1, 0)}, "r3 r2 r1 r2", "r2 r3 r2 r1"},
        {"p4g", "gens p r\nrel p^4\nrel r^2\nrel (r p r p^-1)^2\n", {iso(0, -1, 1, 0), iso(0, -1, -1, 0, h, h)},
         "r p r p", "p r p r"},
        {"p3", "gens a b\nrel a^3\nrel b^3\nrel (a b)^3\n",
         {Isometry(r120, Vec2{0, 0}), Isometry(r120, Vec2{1, 0})}, "b a^-1", "a b a^-2"},
        {"p3m1", "gens r1 r2 r3\nrel r1^2\nrel r2^2\nrel r3^2\nrel (r1 r2)^3\nrel (r2 r3)^3\nrel (r3 r1)^3\n",
         {iso(1, 0, 0, -1), iso(-h, r3(1, 2), r3(1, 2), h),
          iso(-h, r3(-1, 2), r3(-1, 2), h, q(3, 2), r3(1, 2))},
         "r3 r1 r2 r1", "r2 r3 r2 r1"},
        {"p31m", "gens p r\nrel p^3\nrel r^2\nrel (r p r p^-1)^3\n",
         {Isometry(r120, Vec2{0, 0}), iso(-1, 0, 0, 1, 1, 0)}, "r p r p", "p r p^-1 r p"},
        {"p6", "gens a b\nrel a^6\nrel b^3\nrel (a b)^2\n",
         {iso(h, r3(1, 2), r3(-1, 2), h), iso(-h, r3(1, 2), r3(-1, 2), -h, h, r3(1, 2))}, "b a^-2", "b^-1 a^2"},
        {"p6m", "gens a b c\nrel a^2\nrel b^2\nrel c^2\nrel (a b)^6\nrel (b c)^3\nrel (c a)^2\n",
         {iso(1, 0, 0, -1), iso(h, r3(-1, 2), r3(-1, 2), -h, h, r3(1, 2)), iso(-1, 0, 0, 1)},
         "b a b a b c", "b a b c b a"},
    };
}

ModelGroup build_model(const ModelSource& src) {
    const OrbifoldSignature& s = signature_by_name(src.name);
    Presentation p = parse_presentation(std::string("group ") + src.name + "\n" + src.text);
    ModelGroup g{p, src.rep, {p.word(src.t1), p.word(src.t2)}, s};
    for (const Word& r : p.relators())
        if (!g.evaluate(r).is_identity())
            throw InvariantViolation(std::string("model ") + src.name + ": relator " + p.render(r) + " is not trivial");
    for (const Word& t : g.translation_words)
        if (!g.evaluate(t).is_translation())
            throw InvariantViolation(std::string("model ") + src.name + ": " + p.render(t) + " is not a translation");
    g.lattice();  // throws on dependent translations
    return g;
}

const std::vector<ModelGroup>& all_models() {
    static const std::vector<ModelGroup> models = [] {
        std::vector<ModelGroup> out;
        for (const ModelSource& src : model_sources()) out.push_back(build_model(src));
        return out;
    }();
    return models;
}

// ------------------------------------------------------- lattice coordinates

IMat imul(const IMat& a, const IMat& b) {
    return {a[0] * b[0] + a[1] * b[2], a[0] * b[1] + a[1] * b[3], a[2] * b[0] + a[3] * b[2],
            a[2] * b[1] + a[3] * b[3]};
}

QVec apply(const IMat& a, const QVec& v) {
    return {mpq_class(a[0] * v[0] + a[1] * v[1]), mpq_class(a[2] * v[0] + a[3] * v[1])};
}

QVec add(const QVec& u, const QVec& v) { return {mpq_class(u[0] + v[0]), mpq_class(u[1] + v[1])}; }
QVec sub(const QVec& u, const QVec& v) { return {mpq_class(u[0] - v[0]), mpq_class(u[1] - v[1])}; }

const IMat kIdentity{1, 0, 0, 1};

int imat_order(const IMat& a) {
    IMat p = a;
    for (int k = 1; k <= 6; ++k) {
        if (p == kIdentity) return k;
        p = imul(p, a);
    }
    throw InvariantViolation("point group element of order > 6");
}

CoordAffine compose_coord(const CoordAffine& f, const CoordAffine& g) {
    return {imul(f.a, g.a), add(apply(f.a, g.x), f.x)};
}

mpq_class rational_of(const QuadNum& v, const char* what) {
    if (!v.is_rational()) throw InvariantViolation(std::string("irrational lattice coordinate in ") + what);
    return v.rational_part();
}

mpz_class integer_of(const QuadNum& v) {
    if (!v.is_integer()) throw InvariantViolation("linear part is not integral in the lattice basis");
    return v.rational_part().get_num();
}

struct Frame {
    Mat2 basis;  // columns are the model translation vectors
    Mat2 inverse;

    explicit Frame(const ModelGroup& g) {
        const Lattice2 l = g.lattice();
        basis = Mat2{l.v1().x, l.v2().x, l.v1().y, l.v2().y};
        inverse = basis.inverse();
    }

    CoordAffine to_coords(const Isometry& f) const {
        const Mat2 a = inverse * f.linear() * basis;
        const Vec2 x = inverse * f.trans();
        return {{integer_of(a.m11), integer_of(a.m12), integer_of(a.m21), integer_of(a.m22)},
                {rational_of(x.x, "translation"), rational_of(x.y, "translation")}};
    }

    Vec2 to_plane(const mpz_class& a, const mpz_class& b) const {
        return basis * Vec2{QuadNum(mpq_class(a)), QuadNum(mpq_class(b))};
    }
};

// Row-style Hermite basis (p, q), (0, r) of the lattice spanned by `vs`.
std::array<mpz_class, 3> hermite_basis(const std::vector<std::pair<mpz_class, mpz_class>>& vs) {
    mpz_class p = 0, q = 0, r = 0;
    for (const auto& [x, y] : vs) {
        if (p == 0 && x == 0) {
            r = gcd(r, y);
            continue;
        }
        mpz_class g, s, t;
        mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), p.get_mpz_t(), x.get_mpz_t());
        const mpz_class nq = s * q + t * y;
        const mpz_class rem = (x / g) * q - (p / g) * y;
        p = g;
        q = nq;
        r = gcd(r, rem);
    }
    if (p < 0) {
        p = -p;
        q = -q;
    }
    if (p == 0 || r == 0) throw InvariantViolation("translation subgroup does not have rank 2");
    mpz_fdiv_r(q.get_mpz_t(), q.get_mpz_t(), r.get_mpz_t());
    return {p, q, r};
}

mpz_class floor_q(const mpq_class& v) {
    mpz_class f;
    mpz_fdiv_q(f.get_mpz_t(), v.get_num_mpz_t(), v.get_den_mpz_t());
    return f;
}

// Whether v lies in the Z-span of the collinear vectors g1, g2.
bool rank1_contains(const QVec& v, const QVec& g1, const QVec& g2) {
    const QVec* base = nullptr;
    for (const QVec* g : {&g1, &g2})
        if (sgn(g->at(0)) != 0 || sgn(g->at(1)) != 0) {
            base = g;
            break;
        }
    if (!base) return sgn(v[0]) == 0 && sgn(v[1]) == 0;
    const int k = sgn(base->at(0)) != 0 ? 0 : 1;
    auto coeff = [&](const QVec& u, mpq_class& c) {
        c = u[k] / base->at(k);
        return u[0] == c * base->at(0) && u[1] == c * base->at(1);
    };
    mpq_class c1, c2, cv;
    if (!coeff(g1, c1) || !coeff(g2, c2)) throw InvariantViolation("lattice image is not rank 1");
    if (!coeff(v, cv)) return false;
    mpz_class den;
    mpz_lcm(den.get_mpz_t(), c1.get_den_mpz_t(), c2.get_den_mpz_t());
    const mpz_class n1 = c1.get_num() * (den / c1.get_den());
    const mpz_class n2 = c2.get_num() * (den / c2.get_den());
    const mpz_class g = gcd(n1, n2);
    const mpq_class ratio = cv * den / g;
    return ratio.get_den() == 1;
}

std::vector<Mat2> close_linear(const std::vector<Mat2>& gens) {
    std::vector<Mat2> out{Mat2::identity()};
    for (std::size_t i = 0; i < out.size(); ++i)
        for (const Mat2& g : gens) {
            const Mat2 m = out[i] * g;
            if (std::find(out.begin(), out.end(), m) == out.end()) {
                if (out.size() >= 12) throw InvariantViolation("point group larger than 12");
                out.push_back(m);
            }
        }
    return out;
}

std::vector<Mat2> generator_linear_parts(const ModelGroup& g) {
    std::vector<Mat2> out;
    for (const Isometry& f : g.rep) out.push_back(f.linear());
    return out;
}

}  // namespace

// ----------------------------------------------------------- public: names

std::string to_string(Underlying u) {
    switch (u) {
        case Underlying::sphere: return "sphere";
        case Underlying::disk: return "disk";
        case Underlying::torus: return "torus";
        case Underlying::klein_bottle: return "klein_bottle";
        case Underlying::projective_plane: return "projective_plane";
        case Underlying::annulus: return "annulus";
        case Underlying::moebius: return "moebius";
    }
    return "?";
}

std::string OrbifoldSignature::pretty() const {
    std::string s = thurston;
    const std::size_t pos = s.rfind("RP2", 0) == 0 ? 2 : 1;
    if (s.size() > pos && s[pos] == '2') s.replace(pos, 1, "²");
    return s;
}

const std::vector<OrbifoldSignature>& euclidean_signatures() {
    static const std::vector<OrbifoldSignature> sigs = make_signatures();
    return sigs;
}

const OrbifoldSignature& signature_by_name(std::string_view name) {
    const auto& idx = name_index();
    const auto it = idx.find(normalize_name(name));
    if (it == idx.end()) throw LookupError("unknown orbifold or wallpaper group: " + std::string(name));
    return euclidean_signatures()[it->second];
}

mpq_class euler_characteristic(const OrbifoldSignature& s) {
    mpq_class chi;
    switch (s.underlying) {
        case Underlying::sphere: chi = 2; break;
        case Underlying::disk:
        case Underlying::projective_plane: chi = 1; break;
        default: chi = 0;
    }
    for (int a : s.cone_orders) chi -= 1 - mpq_class(1, a);
    for (int b : s.corner_orders) chi -= (1 - mpq_class(1, b)) / 2;
    chi.canonicalize();
    return chi;
}

// ---------------------------------------------------------- public: models

Isometry ModelGroup::evaluate(const Word& w) const {
    Isometry f;
    for (Letter l : w) {
        const Isometry& g = rep.at(gen_index(l));
        f = compose(f, l > 0 ? g : g.inverse());
    }
    return f;
}

Lattice2 ModelGroup::lattice() const {
    return {evaluate(translation_words[0]).trans(), evaluate(translation_words[1]).trans()};
}

const std::vector<std::string>& model_names() {
    static const std::vector<std::string> names = [] {
        std::vector<std::string> out;
        for (const auto& s : euclidean_signatures()) out.push_back(s.crystallographic);
        return out;
    }();
    return names;
}

const ModelGroup& model(std::string_view name) {
    const std::string& cryst = signature_by_name(name).crystallographic;
    for (const ModelGroup& g : all_models())
        if (g.signature.crystallographic == cryst) return g;
    throw LookupError("no model for " + cryst);
}

SignHom det_sign_hom(const ModelGroup& g) {
    SignHom h;
    for (const Isometry& f : g.rep) h.signs.push_back(f.det_sign());
    return h;
}

int CoordAffine::det() const { return sgn(mpz_class(a[0] * a[3] - a[1] * a[2])); }
bool CoordAffine::linear_is_identity() const { return a == kIdentity; }
int CoordAffine::linear_order() const { return imat_order(a); }

// ------------------------------------------------------------ subgroups

namespace {

std::array<mpz_class, 3> lattice_of_subgroup(const ModelGroup& g, const CosetTable& t) {
    const std::size_t k = t.index();
    std::vector<std::pair<mpz_class, mpz_class>> found;
    Word row;  // t1^i
    for (std::size_t i = 0; i <= k; ++i) {
        Word w = row;
        for (std::size_t j = 0; j <= k; ++j) {
            if ((i || j) && t.contains(w)) found.emplace_back(static_cast<unsigned long>(i), static_cast<unsigned long>(j));
            w *= g.translation_words[1];
        }
        row *= g.translation_words[0];
    }
    return hermite_basis(found);
}

Lattice2 plane_lattice(const ModelGroup& g, const std::array<mpz_class, 3>& hnf) {
    const Frame f(g);
    return {f.to_plane(hnf[0], hnf[1]), f.to_plane(0, hnf[2])};
}

}  // namespace

SubgroupHandle::SubgroupHandle(const ModelGroup& g, std::vector<Word> sub, std::size_t max_cosets)
    : model_(g),
      table_(todd_coxeter(g.presentation, sub, max_cosets)),
      hnf_(lattice_of_subgroup(model_, table_)),
      lattice_(plane_lattice(model_, hnf_)),
      lattice_index_(hnf_[0] * hnf_[2]) {
    const Frame frame(model_);
    std::vector<CoordAffine> gens;
    std::vector<Mat2> linear;
    for (const Word& w : schreier_generators(table_)) {
        const Isometry f = model_.evaluate(w);
        gens.push_back(frame.to_coords(f));
        linear.push_back(f.linear());
    }
    point_group_ = close_linear(linear);

    classes_.push_back({kIdentity, {0, 0}});
    for (std::size_t i = 0; i < classes_.size(); ++i)
        for (const CoordAffine& s : gens) {
            CoordAffine c = compose_coord(classes_[i], s);
            c.x = reduce(c.x);
            if (std::find(classes_.begin(), classes_.end(), c) != classes_.end()) continue;
            for (const CoordAffine& d : classes_)
                if (d.a == c.a) throw InvariantViolation("two classes share a linear part: missing translations");
            classes_.push_back(std::move(c));
        }
    if (classes_.size() != point_group_.size())
        throw InvariantViolation("|H/Λ_H| = " + std::to_string(classes_.size()) + " but |P(H)| = " +
                                 std::to_string(point_group_.size()));
}

SubgroupHandle SubgroupHandle::whole(const ModelGroup& g) {
    std::vector<Word> sub;
    for (std::size_t i = 0; i < g.presentation.generator_count(); ++i) sub.push_back(Word{gen(static_cast<int>(i))});
    return {g, sub};
}

SubgroupHandle SubgroupHandle::kernel(const ModelGroup& g, const SignHom& h) {
    return {g, kernel_generators(g.presentation, h)};
}

std::array<mpq_class, 2> SubgroupHandle::reduce(std::array<mpq_class, 2> v) const {
    const mpz_class a = floor_q(v[0] / hnf_[0]);
    v[0] -= a * hnf_[0];
    v[1] -= a * hnf_[1];
    const mpz_class b = floor_q(v[1] / hnf_[2]);
    v[1] -= b * hnf_[2];
    v[0].canonicalize();
    v[1].canonicalize();
    return v;
}

bool SubgroupHandle::lattice_contains(const std::array<mpq_class, 2>& v) const {
    const QVec r = reduce(v);
    return sgn(r[0]) == 0 && sgn(r[1]) == 0;
}

bool SubgroupHandle::class_has_reflection(const CoordAffine& c) const {
    if (c.det() != -1) return false;
    // (A+I)(x + λ) = 0 for some λ in Λ_H.
    const IMat ai{c.a[0] + 1, c.a[1], c.a[2], c.a[3] + 1};
    const QVec u{mpq_class(hnf_[0]), mpq_class(hnf_[1])};
    const QVec w{mpq_class(0), mpq_class(hnf_[2])};
    return rank1_contains(apply(ai, c.x), apply(ai, u), apply(ai, w));
}

std::vector<std::array<mpq_class, 2>> SubgroupHandle::rotation_centers(const CoordAffine& c) const {
    if (c.det() != 1 || c.linear_is_identity()) return {};
    const IMat m{1 - c.a[0], -c.a[1], -c.a[2], 1 - c.a[3]};  // I - A
    const mpz_class d = m[0] * m[3] - m[1] * m[2];
    const long n = mpz_class(abs(d)).get_si();
    std::vector<QVec> out;
    // D·Λ_H ⊆ (I - A)Λ_H, so λ over a box of side D covers Λ_H / (I - A)Λ_H.
    for (long i = 0; i < n; ++i)
        for (long j = 0; j < n; ++j) {
            const QVec lam{mpq_class(i * hnf_[0]), mpq_class(i * hnf_[1] + j * hnf_[2])};
            const QVec v = add(c.x, lam);
            QVec center{mpq_class((m[3] * v[0] - m[1] * v[1]) / d), mpq_class((m[0] * v[1] - m[2] * v[0]) / d)};
            center = reduce(center);
            if (std::find(out.begin(), out.end(), center) == out.end()) out.push_back(center);
        }
    return out;
}

bool SubgroupHandle::on_mirror(const std::array<mpq_class, 2>& p) const {
    for (const CoordAffine& c : classes_) {
        if (c.det() != -1) continue;
        const IMat m{1 - c.a[0], -c.a[1], -c.a[2], 1 - c.a[3]};
        if (lattice_contains(sub(apply(m, p), c.x))) return true;
    }
    return false;
}

Lattice2 translation_lattice(const SubgroupHandle& h) { return h.lattice(); }

std::vector<Mat2> point_group(const SubgroupHandle& h) { return h.point_group(); }

OrbifoldSignature classify(const SubgroupHandle& h) {
    const auto& cls = h.classes();
    int n = 1;
    bool orientable = true;
    std::vector<const CoordAffine*> mirrors;
    for (const CoordAffine& c : cls) {
        if (c.det() == 1 && !c.linear_is_identity()) n = std::max(n, imat_order(c.a));
        if (c.det() == -1) {
            orientable = false;
            if (h.class_has_reflection(c)) mirrors.push_back(&c);
        }
    }
    auto centers_on_mirrors = [&](int order) {
        for (const CoordAffine& c : cls) {
            if (c.det() != 1 || c.linear_is_identity() || imat_order(c.a) != order) continue;
            for (const auto& p : h.rotation_centers(c))
                if (!h.on_mirror(p)) return false;
        }
        return true;
    };
    auto fail = [&](const char* why) -> OrbifoldSignature {
        throw InvariantViolation(std::string("classification: ") + why + " (max rotation order " +
                                 std::to_string(n) + ")");
    };

    const char* name = nullptr;
    if (orientable) {
        switch (n) {
            case 1: name = "p1"; break;
            case 2: name = "p2"; break;
            case 3: name = "p3"; break;
            case 4: name = "p4"; break;
            case 6: name = "p6"; break;
            default: return fail("impossible rotation order");
        }
        return signature_by_name(name);
    }
    const bool refl = !mirrors.empty();
    switch (n) {
        case 1: {
            if (!refl) {
                name = "pg";
                break;
            }
            // pm iff ½(I - A)Λ_H ⊆ Λ_H, i.e. every glide axis is a mirror.
            const CoordAffine& c = *mirrors.front();
            const IMat m{1 - c.a[0], -c.a[1], -c.a[2], 1 - c.a[3]};
            const auto& hnf = h.lattice_hnf();
            bool pm = true;
            for (const QVec& v : {QVec{mpq_class(hnf[0]), mpq_class(hnf[1])}, QVec{mpq_class(0), mpq_class(hnf[2])}}) {
                const QVec image = apply(m, v);
                pm = pm && h.lattice_contains({mpq_class(image[0] / 2), mpq_class(image[1] / 2)});
            }
            name = pm ? "pm" : "cm";
            break;
        }
        case 2:
            if (!refl) name = "pgg";
            else if (mirrors.size() >= 2) name = centers_on_mirrors(2) ? "pmm" : "cmm";
            else name = "pmg";
            break;
        case 3:
            if (!refl) return fail("3-fold rotations with glides but no mirrors");
            name = centers_on_mirrors(3) ? "p3m1" : "p31m";
            break;
        case 4:
            if (!refl) return fail("4-fold rotations with glides but no mirrors");
            name = centers_on_mirrors(4) ? "p4m" : "p4g";
            break;
        case 6:
            if (!refl) return fail("6-fold rotations with glides but no mirrors");
            name = "p6m";
            break;
        default: return fail("impossible rotation order");
    }
    return signature_by_name(name);
}

std::pair<SubgroupHandle, OrbifoldSignature> orientation_double_cover(const ModelGroup& g) {
    const SignHom h = det_sign_hom(g);
    SubgroupHandle sub = h.trivial() ? SubgroupHandle::whole(g) : SubgroupHandle::kernel(g, h);
    OrbifoldSignature s = classify(sub);
    return {std::move(sub), std::move(s)};
}

std::pair<mpz_class, mpz_class> index_identity(const SubgroupHandle& h) {
    const std::size_t pg = close_linear(generator_linear_parts(h.model())).size();
    return {mpz_class(static_cast<unsigned long>(h.index() * h.point_group().size())),
            h.lattice_index() * static_cast<unsigned long>(pg)};
}

}  // namespace orbiforge

#include "orbiforge/coset_table.hpp"
#include "orbiforge/errors.hpp"
#include "orbiforge/knotcusp.hpp"
#include "orbiforge/lattice.hpp"
#include "orbiforge/presentation_io.hpp"
#include "orbiforge/smith.hpp"
#include "orbiforge/verify.hpp"
#include "orbiforge/wallpaper.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <iostream>

using namespace orbiforge;

namespace {

enum Exit { kOk = 0, kCheckFail = 1, kInputError = 2, kResourceLimit = 3 };

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    for (char ch : s) {
        if (ch == sep) {
            out.push_back(cur);
            cur.clear();
        } else {
            cur += ch;
        }
    }
    out.push_back(cur);
    return out;
}

bool blank(const std::string& s) { return s.find_first_not_of(" \t") == std::string::npos; }

void print_signature(const OrbifoldSignature& s) {
    std::cout << s.thurston << "  (" << s.pretty() << ", Conway " << s.conway << ", " << s.crystallographic << ")\n";
}

nlohmann::ordered_json verdict_json(const CuspVerdict& v) {
    nlohmann::ordered_json j;
    j["signature"] = v.signature.thurston;
    j["status"] = v.realizable ? "Realizable" : "Excluded";
    if (v.reason) j["reason"] = to_string(*v.reason);
    if (v.witness) j["witness"] = *v.witness;
    j["checks"] = nlohmann::ordered_json::array();
    for (const VerdictCheck& c : v.checks) j["checks"].push_back({{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
    if (v.degree) j["degree"] = {{"modulus", v.degree->modulus}, {"note", v.degree->text}};
    if (!v.notes.empty()) j["notes"] = v.notes;
    return j;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Finitely presented groups, wallpaper groups and cusp obstructions"};
    app.require_subcommand(1);

    std::string file;
    auto* abel = app.add_subcommand("abelianize", "abelianization of a presentation file");
    abel->add_option("file", file, "presentation file")->required();

    std::string subgroup;
    std::size_t max_cosets = 0;
    auto* cosets = app.add_subcommand("cosets", "index of a subgroup by coset enumeration");
    cosets->add_option("file", file, "presentation file")->required();
    cosets->add_option("--subgroup", subgroup, "generators separated by ';'");
    cosets->add_option("--max-cosets", max_cosets, "coset limit");

    std::string group, sign;
    auto* cls = app.add_subcommand("classify", "type of a model group or of a sign-map kernel");
    cls->add_option("model", group, "model name")->required();
    cls->add_option("--sign", sign, "kernel of a sign map, e.g. c=-1,d=1");

    auto* cover = app.add_subcommand("double-cover", "orientation double cover of a model group");
    cover->add_option("model", group, "model name")->required();

    std::string v1, v2;
    auto* rhomb = app.add_subcommand("rhombic", "whether two vectors span a rotationally rhombic lattice");
    rhomb->add_option("v1", v1, "x,y with components p/q or p/q+r/s*rt3")->required();
    rhomb->add_option("v2", v2, "second vector")->required();

    std::string sig;
    auto* verd = app.add_subcommand("verdict", "cusp verdict for a Euclidean 2-orbifold, as JSON");
    verd->add_option("signature", sig, "signature name")->required();

    std::string only, format = "text";
    std::uint64_t seed = 0;
    bool timings = false;
    auto* verify = app.add_subcommand("verify-paper", "run the verification suite");
    verify->add_option("--only", only, "comma-separated check ids");
    verify->add_option("--seed", seed, "seed for randomized checks");
    verify->add_option("--format", format, "json or text")->check(CLI::IsMember({"json", "text"}));
    verify->add_flag("--timings", timings, "include wall times");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kInputError;
    }

    try {
        if (*abel) {
            std::cout << abelianization(load_presentation(file)).str() << "\n";
        } else if (*cosets) {
            const Presentation p = load_presentation(file);
            std::vector<Word> sub;
            if (!blank(subgroup))
                for (const std::string& w : split(subgroup, ';'))
                    if (!blank(w)) sub.push_back(p.word(w));
            const CosetTable t = todd_coxeter(p, sub, max_cosets ? max_cosets : default_max_cosets());
            std::cout << "index " << t.index() << "\n";
        } else if (*cls) {
            const ModelGroup& g = model(group);
            const SubgroupHandle h =
                sign.empty() ? SubgroupHandle::whole(g) : SubgroupHandle::kernel(g, parse_sign_hom(g.presentation, sign));
            print_signature(classify(h));
            std::cout << "index " << h.index() << ", lattice index " << h.lattice_index() << ", point group order "
                      << h.point_group().size() << "\n";
        } else if (*cover) {
            const auto [h, s] = orientation_double_cover(model(group));
            print_signature(s);
            std::cout << "index " << h.index() << "\n";
        } else if (*rhomb) {
            const Lattice2 l(Vec2::parse(v1), Vec2::parse(v2));
            std::cout << (is_rotationally_rhombic(l) ? "rhombic" : "not rhombic") << " (rotation order "
                      << symmetry_order(l) << ")\n";
        } else if (*verd) {
            const CuspVerdict v = verdict(sig);
            std::cout << verdict_json(v).dump(2) << "\n";
            return v.checks_pass() ? kOk : kCheckFail;
        } else if (*verify) {
            VerifyOptions opts;
            opts.seed = seed;
            if (!blank(only))
                for (const std::string& id : split(only, ','))
                    if (!blank(id)) opts.only.push_back(id);
            const Report r = run_verification(opts);
            std::cout << (format == "json" ? r.json(timings) : r.text(timings));
            return r.ok() ? kOk : kCheckFail;
        }
    } catch (const ResourceLimit& e) {
        std::cerr << "resource limit: " << e.what() << "\n";
        return kResourceLimit;
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kInputError;
    } catch (const LookupError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kInputError;
    } catch (const InvalidArgument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kInputError;
    } catch (const std::ios_base::failure& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kInputError;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kCheckFail;
    }
    return kOk;
}

#include "orbiforge/presentation.hpp"

#include "orbiforge/errors.hpp"
#include "orbiforge/presentation_io.hpp"

#include <algorithm>
#include <set>

namespace orbiforge {

Presentation::Presentation(std::string name, std::vector<std::string> generators,
                           std::vector<Word> relators)
    : name_(std::move(name)), generators_(std::move(generators)), relators_(std::move(relators)) {
    std::set<std::string> seen;
    for (const auto& g : generators_) {
        if (!seen.insert(g).second)
            throw InvalidArgument("presentation '" + name_ + "': duplicate generator '" + g + "'");
    }
    for (const auto& r : relators_) {
        if (r.generator_bound() > generators_.size())
            throw InvalidArgument("presentation '" + name_ +
                                  "': relator references an undeclared generator");
    }
}

std::optional<std::size_t> Presentation::find_generator(std::string_view id) const {
    const auto it = std::find(generators_.begin(), generators_.end(), id);
    if (it == generators_.end()) return std::nullopt;
    return static_cast<std::size_t>(it - generators_.begin());
}

std::size_t Presentation::generator(std::string_view id) const {
    if (auto i = find_generator(id)) return *i;
    throw LookupError("presentation '" + name_ + "' has no generator '" + std::string(id) + "'");
}

Word Presentation::word(std::string_view text) const { return parse_word(text, generators_); }

Presentation quotient(const Presentation& p, const std::vector<Word>& extra) {
    std::vector<Word> rels = p.relators();
    rels.insert(rels.end(), extra.begin(), extra.end());
    return {p.name(), p.generators(), std::move(rels)};
}

int SignHom::operator()(const Word& w) const {
    int s = 1;
    for (Letter l : w) s *= signs.at(gen_index(l));
    return s;
}

bool SignHom::respects(const Presentation& p) const {
    if (signs.size() != p.generator_count()) return false;
    return std::all_of(p.relators().begin(), p.relators().end(),
                       [this](const Word& r) { return (*this)(r) == 1; });
}

bool SignHom::trivial() const {
    return std::all_of(signs.begin(), signs.end(), [](int s) { return s == 1; });
}

std::vector<SignHom> sign_homs(const Presentation& p) {
    const std::size_t g = p.generator_count();
    if (g >= 31) throw InvalidArgument("sign_homs: too many generators to enumerate");
    std::vector<SignHom> out;
    for (unsigned long mask = 1; mask < (1UL << g); ++mask) {
        SignHom h{std::vector<int>(g, 1)};
        for (std::size_t i = 0; i < g; ++i)
            if (mask & (1UL << (g - 1 - i))) h.signs[i] = -1;
        if (h.respects(p)) out.push_back(std::move(h));
    }
    return out;
}

SignHom parse_sign_hom(const Presentation& p, std::string_view text) {
    SignHom h{std::vector<int>(p.generator_count(), 1)};
    std::size_t pos = 0;
    while (pos < text.size()) {
        std::size_t end = text.find(',', pos);
        if (end == std::string_view::npos) end = text.size();
        std::string item;
        for (char c : text.substr(pos, end - pos))
            if (c != ' ') item += c;
        const auto eq = item.find('=');
        if (eq == std::string::npos)
            throw ParseError("expected '<gen>=+1' or '<gen>=-1' in '" + item + "'", 1, pos + 1);
        const std::string id = item.substr(0, eq);
        const std::string val = item.substr(eq + 1);
        const auto gi = p.find_generator(id);
        if (!gi) throw ParseError("unknown generator '" + id + "'", 1, pos + 1);
        if (val == "-1")
            h.signs[*gi] = -1;
        else if (val == "1" || val == "+1")
            h.signs[*gi] = 1;
        else
            throw ParseError("sign must be 1 or -1, got '" + val + "'", 1, pos + eq + 2);
        pos = end + 1;
    }
    return h;
}

std::vector<Word> kernel_generators(const Presentation& p, const SignHom& h) {
    const auto it = std::find(h.signs.begin(), h.signs.end(), -1);
    if (it == h.signs.end()) throw InvalidArgument("kernel_generators: trivial sign map");
    const std::size_t g0 = static_cast<std::size_t>(it - h.signs.begin());
    const Word t{gen(g0)};

    std::vector<Word> out;
    for (std::size_t i = 0; i < p.generator_count(); ++i) {
        const Word x{gen(i)};
        if (h.signs[i] == 1) {
            out.push_back(x);
            out.push_back(t * x * t.inverse());
        } else {
            if (i != g0) out.push_back(x * t.inverse());
            out.push_back(t * x);
        }
    }
    return out;
}

}  // namespace orbiforge

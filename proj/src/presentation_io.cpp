#include "orbiforge/presentation_io.hpp"

#include "orbiforge/errors.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>

namespace orbiforge {

namespace {

bool is_ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool is_ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

class WordParser {
public:
    WordParser(std::string_view text, std::span<const std::string> gens, std::size_t line,
               std::size_t column)
        : text_(text), gens_(gens), line_(line), column_(column) {}

    Word parse() {
        std::vector<Letter> raw = sequence();
        skip_ws();
        if (pos_ < text_.size()) {
            if (text_[pos_] == ')') fail("unmatched ')'");
            fail("unexpected character '" + std::string(1, text_[pos_]) + "'");
        }
        return Word(raw);
    }

private:
    [[noreturn]] void fail(const std::string& msg) const {
        throw ParseError(msg, line_, column_ + pos_);
    }

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    std::vector<Letter> sequence() {
        std::vector<Letter> out;
        for (;;) {
            skip_ws();
            if (pos_ >= text_.size() || text_[pos_] == ')') return out;
            std::vector<Letter> t = term();
            out.insert(out.end(), t.begin(), t.end());
        }
    }

    std::vector<Letter> term() {
        std::vector<Letter> base = atom();
        if (pos_ < text_.size() && text_[pos_] == '^') {
            ++pos_;
            const long e = exponent();
            return power(base, e);
        }
        return base;
    }

    std::vector<Letter> atom() {
        const char c = text_[pos_];
        if (c == '(') {
            const std::size_t open = pos_;
            ++pos_;
            std::vector<Letter> inner = sequence();
            if (pos_ >= text_.size()) {
                pos_ = open;
                fail("unclosed '('");
            }
            ++pos_;  // ')'
            return inner;
        }
        if (!is_ident_start(c)) fail("expected a generator or '(' but found '" + std::string(1, c) + "'");
        const std::size_t start = pos_;
        while (pos_ < text_.size() && is_ident_char(text_[pos_])) ++pos_;
        const std::string id(text_.substr(start, pos_ - start));
        const auto it = std::find(gens_.begin(), gens_.end(), id);
        if (it == gens_.end()) {
            pos_ = start;
            fail("unknown generator '" + id + "'");
        }
        return {gen(static_cast<std::size_t>(it - gens_.begin()))};
    }

    long exponent() {
        const std::size_t start = pos_;
        int sign = 1;
        if (pos_ < text_.size() && (text_[pos_] == '-' || text_[pos_] == '+')) {
            sign = text_[pos_] == '-' ? -1 : 1;
            ++pos_;
        }
        const std::size_t digits = pos_;
        long value = 0;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
            value = value * 10 + (text_[pos_] - '0');
            if (value > 1'000'000) {
                pos_ = start;
                fail("exponent too large");
            }
            ++pos_;
        }
        if (pos_ == digits) {
            pos_ = start;
            fail("expected an integer exponent after '^'");
        }
        return sign * value;
    }

    static std::vector<Letter> power(const std::vector<Letter>& base, long e) {
        std::vector<Letter> unit = base;
        if (e < 0) {
            std::reverse(unit.begin(), unit.end());
            for (Letter& l : unit) l = -l;
            e = -e;
        }
        std::vector<Letter> out;
        out.reserve(unit.size() * static_cast<std::size_t>(e));
        for (long i = 0; i < e; ++i) out.insert(out.end(), unit.begin(), unit.end());
        return out;
    }

    std::string_view text_;
    std::span<const std::string> gens_;
    std::size_t line_;
    std::size_t column_;
    std::size_t pos_ = 0;
};

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

}  // namespace

Word parse_word(std::string_view text, std::span<const std::string> generators, std::size_t line,
                std::size_t column) {
    return WordParser(text, generators, line, column).parse();
}

Presentation parse_presentation(std::string_view text) {
    std::string name;
    std::vector<std::string> gens;
    bool have_gens = false;
    std::vector<Word> rels;

    std::size_t line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t end = text.find('\n', pos);
        if (end == std::string_view::npos) end = text.size();
        std::string_view line = text.substr(pos, end - pos);
        ++line_no;
        pos = end + 1;

        if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
        if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
        const std::string_view body = trim(line);
        if (body.empty()) continue;
        const std::size_t indent = line.find_first_not_of(" \t");

        std::size_t kw_end = 0;
        while (kw_end < body.size() && !std::isspace(static_cast<unsigned char>(body[kw_end]))) ++kw_end;
        const std::string_view keyword = body.substr(0, kw_end);
        const std::size_t arg_col = indent + kw_end + 1;
        const std::string_view arg = body.substr(kw_end);

        if (keyword == "group") {
            const std::string_view n = trim(arg);
            if (n.empty()) throw ParseError("'group' needs a name", line_no, arg_col);
            name = std::string(n);
        } else if (keyword == "gens") {
            if (have_gens) throw ParseError("duplicate 'gens' line", line_no, indent + 1);
            have_gens = true;
            std::size_t i = 0;
            while (i < arg.size()) {
                while (i < arg.size() && std::isspace(static_cast<unsigned char>(arg[i]))) ++i;
                if (i >= arg.size()) break;
                const std::size_t start = i;
                if (!is_ident_start(arg[i]))
                    throw ParseError("bad generator name", line_no, arg_col + i);
                while (i < arg.size() && is_ident_char(arg[i])) ++i;
                if (i < arg.size() && !std::isspace(static_cast<unsigned char>(arg[i])))
                    throw ParseError("bad generator name", line_no, arg_col + i);
                std::string id(arg.substr(start, i - start));
                if (std::find(gens.begin(), gens.end(), id) != gens.end())
                    throw ParseError("duplicate generator '" + id + "'", line_no, arg_col + start);
                gens.push_back(std::move(id));
            }
            if (gens.empty()) throw ParseError("empty generator list", line_no, arg_col);
        } else if (keyword == "rel") {
            if (!have_gens) throw ParseError("'rel' before 'gens'", line_no, indent + 1);
            rels.push_back(parse_word(arg, gens, line_no, arg_col));
        } else {
            throw ParseError("unknown directive '" + std::string(keyword) + "'", line_no, indent + 1);
        }
    }
    if (!have_gens) throw ParseError("empty generator list: no 'gens' line", line_no, 1);
    return {name, gens, rels};
}

Presentation load_presentation(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw InvalidArgument("cannot open '" + path.string() + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_presentation(ss.str());
}

std::string render_presentation(const Presentation& p) {
    std::string out;
    if (!p.name().empty()) out += "group " + p.name() + "\n";
    out += "gens";
    for (const auto& g : p.generators()) out += " " + g;
    out += "\n";
    for (const auto& r : p.relators()) out += r.empty() ? "rel\n" : "rel " + p.render(r) + "\n";
    return out;
}

}  // namespace orbiforge

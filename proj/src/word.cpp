#include "orbiforge/word.hpp"

#include "orbiforge/errors.hpp"

#include <algorithm>

namespace orbiforge {

Word::Word(std::initializer_list<Letter> letters) {
    for (Letter l : letters) push(l);
}

Word::Word(std::span<const Letter> letters) {
    for (Letter l : letters) push(l);
}

Word& Word::push(Letter l) {
    if (l == 0) throw InvalidArgument("Word: letter 0 is not a generator reference");
    if (!letters_.empty() && letters_.back() == -l)
        letters_.pop_back();
    else
        letters_.push_back(l);
    return *this;
}

Word& Word::operator*=(const Word& o) {
    for (Letter l : o.letters_) push(l);
    return *this;
}

Word Word::inverse() const {
    Word out;
    out.letters_.reserve(letters_.size());
    for (auto it = letters_.rbegin(); it != letters_.rend(); ++it) out.letters_.push_back(-*it);
    return out;
}

Word Word::pow(long k) const {
    const Word base = k < 0 ? inverse() : *this;
    Word out;
    for (long i = 0; i < (k < 0 ? -k : k); ++i) out *= base;
    return out;
}

Word Word::conjugated_by(const Word& w) const { return w * *this * w.inverse(); }

std::size_t Word::generator_bound() const {
    std::size_t bound = 0;
    for (Letter l : letters_) bound = std::max(bound, gen_index(l) + 1);
    return bound;
}

Word free_reduce(std::span<const Letter> raw, std::size_t generator_count) {
    for (Letter l : raw) {
        if (l == 0 || gen_index(l) >= generator_count)
            throw InvalidArgument("free_reduce: letter " + std::to_string(l) +
                                  " references an undeclared generator");
    }
    return Word(raw);
}

Word cyclically_reduce(const Word& w) {
    const auto& ls = w.letters();
    std::size_t lo = 0;
    std::size_t hi = ls.size();
    while (hi - lo >= 2 && ls[lo] == -ls[hi - 1]) {
        ++lo;
        --hi;
    }
    return Word(std::span<const Letter>(ls.data() + lo, hi - lo));
}

long exponent_sum(const Word& w, std::size_t g) {
    long total = 0;
    for (Letter l : w)
        if (gen_index(l) == g) total += l > 0 ? 1 : -1;
    return total;
}

std::string render_word(const Word& w, std::span<const std::string> names) {
    if (w.empty()) return "1";
    std::string out;
    const auto& ls = w.letters();
    for (std::size_t i = 0; i < ls.size();) {
        std::size_t j = i;
        while (j < ls.size() && ls[j] == ls[i]) ++j;
        const long run = static_cast<long>(j - i) * (ls[i] > 0 ? 1 : -1);
        if (!out.empty()) out += ' ';
        out += names[gen_index(ls[i])];
        if (run != 1) out += "^" + std::to_string(run);
        i = j;
    }
    return out;
}

}  // namespace orbiforge

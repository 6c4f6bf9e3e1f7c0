#pragma once

#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace orbiforge {

/// Signed generator reference: +(i+1) is generator i, -(i+1) its inverse.
using Letter = int;

constexpr Letter gen(std::size_t i) { return static_cast<Letter>(i) + 1; }
constexpr Letter inv(std::size_t i) { return -(static_cast<Letter>(i) + 1); }
constexpr std::size_t gen_index(Letter l) { return static_cast<std::size_t>(l > 0 ? l : -l) - 1; }

/// A freely reduced word over signed generators.
class Word {
public:
    Word() = default;
    Word(std::initializer_list<Letter> letters);
    /// Freely reduces `letters`.
    explicit Word(std::span<const Letter> letters);

    const std::vector<Letter>& letters() const noexcept { return letters_; }
    std::size_t size() const noexcept { return letters_.size(); }
    bool empty() const noexcept { return letters_.empty(); }
    Letter operator[](std::size_t i) const { return letters_[i]; }
    auto begin() const { return letters_.begin(); }
    auto end() const { return letters_.end(); }

    Word inverse() const;
    Word pow(long k) const;
    /// w g w⁻¹
    Word conjugated_by(const Word& w) const;
    /// Largest generator index used, plus one (0 for the empty word).
    std::size_t generator_bound() const;

    /// Appends a letter with free cancellation.
    Word& push(Letter l);
    Word& operator*=(const Word& o);
    friend Word operator*(Word a, const Word& b) { return a *= b; }

    friend bool operator==(const Word&, const Word&) = default;
    friend auto operator<=>(const Word&, const Word&) = default;

private:
    std::vector<Letter> letters_;
};

/// Free reduction of a raw letter sequence. Letters must reference one of the
/// `generator_count` generators, otherwise InvalidArgument is thrown.
Word free_reduce(std::span<const Letter> raw, std::size_t generator_count);

/// Cyclic reduction: strips matching first/last letters.
Word cyclically_reduce(const Word& w);

/// Total exponent of generator `g` in `w`.
long exponent_sum(const Word& w, std::size_t g);

/// Renders with run-length exponents, e.g. `a^2 b^-1 a`; "1" for the empty word.
std::string render_word(const Word& w, std::span<const std::string> names);

}  // namespace orbiforge

#pragma once

#include "orbiforge/word.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace orbiforge {

/// A finitely presented group ⟨generators | relators⟩.
class Presentation {
public:
    Presentation() = default;
    /// Throws InvalidArgument on duplicate generator names or relators that
    /// reference undeclared generators.
    Presentation(std::string name, std::vector<std::string> generators, std::vector<Word> relators);

    const std::string& name() const noexcept { return name_; }
    const std::vector<std::string>& generators() const noexcept { return generators_; }
    const std::vector<Word>& relators() const noexcept { return relators_; }
    std::size_t generator_count() const noexcept { return generators_.size(); }

    std::optional<std::size_t> find_generator(std::string_view id) const;
    /// Index of a named generator; throws LookupError.
    std::size_t generator(std::string_view id) const;
    /// Word from whitespace-separated terms (same grammar as `rel` lines).
    Word word(std::string_view text) const;

    std::string render(const Word& w) const { return render_word(w, generators_); }

    friend bool operator==(const Presentation&, const Presentation&) = default;

private:
    std::string name_;
    std::vector<std::string> generators_;
    std::vector<Word> relators_;
};

/// Same generators, relators extended by `extra`.
Presentation quotient(const Presentation& p, const std::vector<Word>& extra);

/// Homomorphism to {+1, -1} given by its values on generators.
struct SignHom {
    std::vector<int> signs;

    int operator()(const Word& w) const;
    /// True when every relator of `p` maps to +1.
    bool respects(const Presentation& p) const;
    bool trivial() const;

    friend bool operator==(const SignHom&, const SignHom&) = default;
};

/// Every nontrivial homomorphism onto Z/2, ordered lexicographically on the
/// value vectors with +1 before -1.
std::vector<SignHom> sign_homs(const Presentation& p);

/// Parses a sign assignment such as `c=-1,d=1`; unlisted generators map to +1.
SignHom parse_sign_hom(const Presentation& p, std::string_view text);

/// Schreier generators of ker(h) for the transversal {1, g0}, g0 the first
/// generator sent to -1. Throws InvalidArgument for the trivial map.
std::vector<Word> kernel_generators(const Presentation& p, const SignHom& h);

}  // namespace orbiforge

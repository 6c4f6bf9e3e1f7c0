#pragma once

/**
 * @file presentation_io.hpp
 * @brief Text format for presentations.
 *
 *     # comment
 *     group p6
 *     gens a b
 *     rel a^6
 *     rel b^3
 *     rel (a b)^2
 *
 * A word is a whitespace-separated list of terms; a term is an atom
 * optionally followed by `^<signed int>`, and an atom is a generator id or a
 * parenthesized word. Identifiers match [A-Za-z_][A-Za-z0-9_]*. Parsed words
 * are freely reduced. Errors carry 1-based line and column.
 */

#include "orbiforge/presentation.hpp"

#include <filesystem>
#include <span>
#include <string>
#include <string_view>

namespace orbiforge {

/// Parses one word against `generators`. `line` and `column` locate the first
/// character of `text` for diagnostics.
Word parse_word(std::string_view text, std::span<const std::string> generators,
                std::size_t line = 1, std::size_t column = 1);

Presentation parse_presentation(std::string_view text);

Presentation load_presentation(const std::filesystem::path& path);

/// Canonical text: `group`, `gens`, then one `rel` per relator using
/// run-length exponents. parse_presentation(render_presentation(p)) == p.
std::string render_presentation(const Presentation& p);

}  // namespace orbiforge

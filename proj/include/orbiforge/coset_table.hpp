#pragma once

/**
 * @file coset_table.hpp
 * @brief Todd–Coxeter coset enumeration and coset-table queries.
 *
 * Cosets are numbered from 0; coset 0 is the subgroup itself. A completed
 * table is standardized: cosets are renumbered in breadth-first order from
 * coset 0, scanning columns g0, g0⁻¹, g1, g1⁻¹, ... so two enumerations of
 * the same input produce identical tables.
 */

#include "orbiforge/presentation.hpp"

#include <cstddef>
#include <string>
#include <vector>

namespace orbiforge {

using Coset = std::size_t;

/// Default enumeration budget; ORBIFORGE_MAX_COSETS overrides it.
std::size_t default_max_cosets();

class CosetTable {
public:
    const Presentation& parent() const noexcept { return parent_; }
    const std::vector<Word>& subgroup_words() const noexcept { return subgroup_; }
    bool complete() const noexcept { return complete_; }

    /// Number of cosets, i.e. the subgroup index.
    std::size_t index() const noexcept { return rows_.size(); }

    /// Image of `c` under the right action of one letter.
    Coset act(Coset c, Letter l) const;
    /// Image of `start` under the right action of `w`. Throws IncompleteTable
    /// for an unfinished table and InvalidArgument for a bad coset.
    Coset trace(const Word& w, Coset start) const;
    /// True iff `w` lies in the subgroup.
    bool contains(const Word& w) const { return trace(w, 0) == 0; }

    /// Representative words of each coset along the breadth-first tree.
    std::vector<Word> transversal() const;

    /// Checks the completed-table invariants: entries defined, each column a
    /// permutation, subgroup words fix coset 0, relators fix every coset.
    /// Returns an empty string when all hold, otherwise a description.
    std::string check_invariants() const;

    friend bool operator==(const CosetTable&, const CosetTable&) = default;

private:
    friend CosetTable todd_coxeter(const Presentation&, const std::vector<Word>&, std::size_t);

    Presentation parent_;
    std::vector<Word> subgroup_;
    std::vector<std::vector<Coset>> rows_;  // rows_[c][column]
    bool complete_ = false;
};

/// Column of a letter: 2i for generator i, 2i+1 for its inverse.
constexpr std::size_t column_of(Letter l) { return 2 * gen_index(l) + (l > 0 ? 0 : 1); }

/// Enumerates the cosets of ⟨sub⟩ in the group presented by `p`. Throws
/// ResourceLimit when more than `max_cosets` cosets would be defined.
CosetTable todd_coxeter(const Presentation& p, const std::vector<Word>& sub,
                        std::size_t max_cosets = default_max_cosets());

/// Order of the group presented by `p` (index of the trivial subgroup).
std::size_t group_order(const Presentation& p, std::size_t max_cosets = default_max_cosets());

/// Words r·g·rep(r·g)⁻¹ over the transversal, one per non-tree edge, in
/// (coset, generator) order.
std::vector<Word> schreier_generators(const CosetTable& t);

struct SubgroupPresentation {
    Presentation presentation;
    /// inclusion[i] is generator i written in the parent's generators.
    std::vector<Word> inclusion;
};

/// Reidemeister–Schreier rewriting followed by removal of trivial and
/// duplicate generators (length-1 and length-2 relators) and duplicate
/// relators.
SubgroupPresentation reidemeister_schreier(const CosetTable& t);

}  // namespace orbiforge

#include "orbiforge/coset_table.hpp"

#include "orbiforge/errors.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <deque>
#include <limits>
#include <map>
#include <set>

namespace orbiforge {

namespace {

constexpr Coset kUndefined = std::numeric_limits<Coset>::max();

constexpr std::size_t inverse_column(std::size_t col) { return col ^ 1U; }

// HLT enumeration with coincidence handling after Holt, Eick and O'Brien.
class Enumerator {
public:
    Enumerator(std::size_t columns, std::size_t max_cosets)
        : columns_(columns), max_cosets_(max_cosets) {
        new_coset();
    }

    void run(const std::vector<Word>& relators, const std::vector<Word>& subgroup) {
        for (const Word& w : subgroup) scan_and_fill(0, w);
        bool again = true;
        while (again) {
            for (Coset a = 0; a < table_.size(); ++a) {
                for (const Word& r : relators) {
                    if (!live(a)) break;
                    scan_and_fill(a, r);
                }
                if (!live(a)) continue;
                for (std::size_t x = 0; x < columns_; ++x)
                    if (table_[a][x] == kUndefined) define(a, x);
            }
            again = false;
            for (Coset a = 0; a < table_.size() && !again; ++a)
                if (live(a))
                    again = std::any_of(table_[a].begin(), table_[a].end(),
                                        [](Coset c) { return c == kUndefined; });
        }
    }

    // Live cosets renumbered breadth-first from coset 0.
    std::vector<std::vector<Coset>> standardized() const {
        std::vector<Coset> number(table_.size(), kUndefined);
        std::vector<Coset> order{0};
        number[0] = 0;
        for (std::size_t i = 0; i < order.size(); ++i) {
            for (std::size_t x = 0; x < columns_; ++x) {
                const Coset d = table_[order[i]][x];
                if (number[d] == kUndefined) {
                    number[d] = order.size();
                    order.push_back(d);
                }
            }
        }
        std::vector<std::vector<Coset>> rows(order.size(), std::vector<Coset>(columns_));
        for (std::size_t i = 0; i < order.size(); ++i)
            for (std::size_t x = 0; x < columns_; ++x) rows[i][x] = number[table_[order[i]][x]];
        return rows;
    }

private:
    bool live(Coset c) const { return parent_[c] == c; }

    Coset new_coset() {
        if (table_.size() >= max_cosets_)
            throw ResourceLimit("coset enumeration exceeded " + std::to_string(max_cosets_) +
                                " cosets");
        table_.emplace_back(columns_, kUndefined);
        parent_.push_back(table_.size() - 1);
        return table_.size() - 1;
    }

    void define(Coset c, std::size_t x) {
        const Coset n = new_coset();
        table_[c][x] = n;
        table_[n][inverse_column(x)] = c;
    }

    void scan_and_fill(Coset c, const Word& w) {
        if (w.empty()) return;
        const auto& ls = w.letters();
        Coset f = c;
        Coset b = c;
        std::size_t i = 0;
        std::size_t j = ls.size();  // one past the last unscanned letter
        for (;;) {
            while (i < j && table_[f][column_of(ls[i])] != kUndefined) f = table_[f][column_of(ls[i++])];
            if (i == j) {
                if (f != b) coincidence(f, b);
                return;
            }
            while (j > i && table_[b][column_of(-ls[j - 1])] != kUndefined)
                b = table_[b][column_of(-ls[--j])];
            if (j == i) {
                coincidence(f, b);
                return;
            }
            if (j == i + 1) {
                // Deduction closes the cycle.
                const std::size_t x = column_of(ls[i]);
                table_[f][x] = b;
                table_[b][inverse_column(x)] = f;
                return;
            }
            define(f, column_of(ls[i]));
        }
    }

    Coset rep(Coset c) {
        Coset root = c;
        while (parent_[root] != root) root = parent_[root];
        while (parent_[c] != root) {
            const Coset next = parent_[c];
            parent_[c] = root;
            c = next;
        }
        return root;
    }

    void merge(Coset k, Coset l, std::deque<Coset>& queue) {
        const Coset a = rep(k);
        const Coset b = rep(l);
        if (a == b) return;
        const Coset lo = std::min(a, b);
        const Coset hi = std::max(a, b);
        parent_[hi] = lo;
        queue.push_back(hi);
    }

    void coincidence(Coset a, Coset b) {
        std::deque<Coset> queue;
        merge(a, b, queue);
        while (!queue.empty()) {
            const Coset g = queue.front();
            queue.pop_front();
            for (std::size_t x = 0; x < columns_; ++x) {
                const Coset d = table_[g][x];
                if (d == kUndefined) continue;
                const std::size_t xi = inverse_column(x);
                table_[d][xi] = kUndefined;
                const Coset mu = rep(g);
                const Coset nu = rep(d);
                if (table_[mu][x] != kUndefined) {
                    merge(nu, table_[mu][x], queue);
                } else if (table_[nu][xi] != kUndefined) {
                    merge(mu, table_[nu][xi], queue);
                } else {
                    table_[mu][x] = nu;
                    table_[nu][xi] = mu;
                }
            }
        }
    }

    std::size_t columns_;
    std::size_t max_cosets_;
    std::vector<std::vector<Coset>> table_;
    std::vector<Coset> parent_;
};

}  // namespace

std::size_t default_max_cosets() {
    constexpr std::size_t kDefault = 1'000'000;
    const char* env = std::getenv("ORBIFORGE_MAX_COSETS");
    if (env == nullptr || *env == '\0') return kDefault;
    std::size_t value = 0;
    const char* end = env + std::char_traits<char>::length(env);
    const auto [ptr, ec] = std::from_chars(env, end, value);
    if (ec != std::errc() || ptr != end || value == 0)
        throw InvalidArgument("ORBIFORGE_MAX_COSETS must be a positive integer");
    return value;
}

Coset CosetTable::act(Coset c, Letter l) const {
    if (!complete_) throw IncompleteTable("coset table is not complete");
    if (c >= rows_.size()) throw InvalidArgument("coset " + std::to_string(c) + " out of range");
    return rows_[c][column_of(l)];
}

Coset CosetTable::trace(const Word& w, Coset start) const {
    if (!complete_) throw IncompleteTable("coset table is not complete");
    if (start >= rows_.size()) throw InvalidArgument("coset " + std::to_string(start) + " out of range");
    if (w.generator_bound() > parent_.generator_count())
        throw InvalidArgument("word references an undeclared generator");
    Coset c = start;
    for (Letter l : w) c = rows_[c][column_of(l)];
    return c;
}

std::vector<Word> CosetTable::transversal() const {
    if (!complete_) throw IncompleteTable("coset table is not complete");
    std::vector<Word> reps(rows_.size());
    std::vector<bool> seen(rows_.size(), false);
    std::vector<Coset> order{0};
    seen[0] = true;
    const std::size_t columns = 2 * parent_.generator_count();
    for (std::size_t i = 0; i < order.size(); ++i) {
        const Coset c = order[i];
        for (std::size_t x = 0; x < columns; ++x) {
            const Coset d = rows_[c][x];
            if (seen[d]) continue;
            seen[d] = true;
            const Letter l = (x % 2 == 0) ? gen(x / 2) : inv(x / 2);
            reps[d] = reps[c] * Word{l};
            order.push_back(d);
        }
    }
    return reps;
}

std::string CosetTable::check_invariants() const {
    if (!complete_) return "table not complete";
    const std::size_t n = rows_.size();
    const std::size_t columns = 2 * parent_.generator_count();
    for (std::size_t x = 0; x < columns; ++x) {
        std::vector<bool> hit(n, false);
        for (Coset c = 0; c < n; ++c) {
            if (rows_[c].size() != columns) return "row width mismatch";
            const Coset d = rows_[c][x];
            if (d >= n) return "undefined entry at coset " + std::to_string(c);
            if (hit[d]) return "column " + std::to_string(x) + " is not a permutation";
            hit[d] = true;
            if (rows_[d][x ^ 1U] != c) return "inverse columns disagree at coset " + std::to_string(c);
        }
    }
    for (const Word& w : subgroup_)
        if (trace(w, 0) != 0) return "subgroup word " + parent_.render(w) + " moves coset 0";
    for (const Word& r : parent_.relators())
        for (Coset c = 0; c < n; ++c)
            if (trace(r, c) != c)
                return "relator " + parent_.render(r) + " moves coset " + std::to_string(c);
    return {};
}

CosetTable todd_coxeter(const Presentation& p, const std::vector<Word>& sub, std::size_t max_cosets) {
    for (const Word& w : sub)
        if (w.generator_bound() > p.generator_count())
            throw InvalidArgument("subgroup word references an undeclared generator");
    if (max_cosets == 0) throw InvalidArgument("max_cosets must be positive");

    Enumerator e(2 * p.generator_count(), max_cosets);
    e.run(p.relators(), sub);

    CosetTable t;
    t.parent_ = p;
    t.subgroup_ = sub;
    t.rows_ = e.standardized();
    t.complete_ = true;
    if (const std::string bad = t.check_invariants(); !bad.empty())
        throw InvariantViolation("todd_coxeter produced an invalid table: " + bad);
    return t;
}

std::size_t group_order(const Presentation& p, std::size_t max_cosets) {
    return todd_coxeter(p, {}, max_cosets).index();
}

std::vector<Word> schreier_generators(const CosetTable& t) {
    const std::vector<Word> reps = t.transversal();
    std::vector<Word> out;
    for (Coset c = 0; c < t.index(); ++c) {
        for (std::size_t g = 0; g < t.parent().generator_count(); ++g) {
            const Coset d = t.act(c, gen(g));
            Word s = reps[c] * Word{gen(g)} * reps[d].inverse();
            if (!s.empty()) out.push_back(std::move(s));
        }
    }
    return out;
}

namespace {

// Smallest rotation of w or of w⁻¹; identifies relators up to cyclic
// permutation and inversion.
Word cyclic_canonical(const Word& w) {
    Word best = w;
    for (const Word& base : {w, w.inverse()}) {
        const auto& ls = base.letters();
        for (std::size_t k = 0; k < ls.size(); ++k) {
            std::vector<Letter> rot(ls.begin() + static_cast<std::ptrdiff_t>(k), ls.end());
            rot.insert(rot.end(), ls.begin(), ls.begin() + static_cast<std::ptrdiff_t>(k));
            Word cand(rot);
            if (cand.size() == ls.size() && cand < best) best = std::move(cand);
        }
    }
    return best;
}

// Replaces generator `g` by `image` in every relator.
std::vector<Word> substitute(const std::vector<Word>& rels, std::size_t g, const Word& image) {
    std::vector<Word> out;
    out.reserve(rels.size());
    for (const Word& r : rels) {
        Word w;
        for (Letter l : r) {
            if (gen_index(l) == g)
                w *= l > 0 ? image : image.inverse();
            else
                w.push(l);
        }
        out.push_back(std::move(w));
    }
    return out;
}

}  // namespace

SubgroupPresentation reidemeister_schreier(const CosetTable& t) {
    const Presentation& parent = t.parent();
    const std::size_t ngens = parent.generator_count();
    const std::vector<Word> reps = t.transversal();

    // Schreier generator for each non-tree (coset, generator) edge.
    std::map<std::pair<Coset, std::size_t>, std::size_t> symbol;
    std::vector<std::string> names;
    std::vector<Word> inclusion;
    for (Coset c = 0; c < t.index(); ++c) {
        for (std::size_t g = 0; g < ngens; ++g) {
            const Coset d = t.act(c, gen(g));
            Word s = reps[c] * Word{gen(g)} * reps[d].inverse();
            if (s.empty()) continue;
            symbol[{c, g}] = names.size();
            names.push_back(parent.generators()[g] + "_" + std::to_string(c + 1));
            inclusion.push_back(std::move(s));
        }
    }

    std::vector<Word> rels;
    for (Coset c = 0; c < t.index(); ++c) {
        for (const Word& r : parent.relators()) {
            Word w;
            Coset at = c;
            for (Letter l : r) {
                const std::size_t g = gen_index(l);
                if (l > 0) {
                    if (auto it = symbol.find({at, g}); it != symbol.end()) w.push(gen(it->second));
                    at = t.act(at, l);
                } else {
                    at = t.act(at, l);
                    if (auto it = symbol.find({at, g}); it != symbol.end()) w.push(inv(it->second));
                }
            }
            rels.push_back(std::move(w));
        }
    }

    // Simplify: drop generators killed by length-1 relators, eliminate one
    // side of each length-2 relator between distinct generators.
    std::vector<bool> alive(names.size(), true);
    for (bool changed = true; changed;) {
        changed = false;
        std::set<Word> seen;
        std::vector<Word> next;
        for (const Word& r : rels) {
            Word c = cyclically_reduce(r);
            if (c.empty()) continue;
            if (seen.insert(cyclic_canonical(c)).second) next.push_back(std::move(c));
        }
        rels = std::move(next);

        for (const Word& r : rels) {
            if (r.size() == 1) {
                const std::size_t g = gen_index(r[0]);
                rels = substitute(rels, g, Word{});
                alive[g] = false;
                changed = true;
                break;
            }
            if (r.size() == 2 && gen_index(r[0]) != gen_index(r[1])) {
                // y^e z^f = 1  =>  z = y^(-e f)
                const Letter y = r[0];
                const Letter z = r[1];
                const std::size_t zg = gen_index(z);
                const Word image = (z > 0) ? Word{-y} : Word{y};
                rels = substitute(rels, zg, image);
                alive[zg] = false;
                changed = true;
                break;
            }
        }
    }

    std::vector<std::size_t> renumber(names.size(), 0);
    std::vector<std::string> kept_names;
    std::vector<Word> kept_inclusion;
    for (std::size_t i = 0; i < names.size(); ++i) {
        if (!alive[i]) continue;
        renumber[i] = kept_names.size();
        kept_names.push_back(names[i]);
        kept_inclusion.push_back(inclusion[i]);
    }
    std::vector<Word> final_rels;
    for (const Word& r : rels) {
        std::vector<Letter> ls;
        for (Letter l : r) ls.push_back(l > 0 ? gen(renumber[gen_index(l)]) : inv(renumber[gen_index(l)]));
        final_rels.emplace_back(ls);
    }

    return {Presentation(parent.name() + "_sub", std::move(kept_names), std::move(final_rels)),
            std::move(kept_inclusion)};
}

}  // namespace orbiforge

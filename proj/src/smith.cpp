#include "orbiforge/smith.hpp"

#include "orbiforge/errors.hpp"

#include <utility>

namespace orbiforge {

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols, std::vector<mpz_class> entries)
    : rows_(rows), cols_(cols), data_(std::move(entries)) {
    if (data_.size() != rows_ * cols_)
        throw InvalidArgument("IntMatrix: entry count does not match shape");
}

IntMatrix IntMatrix::identity(std::size_t n) {
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

bool IntMatrix::is_diagonal() const {
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c)
            if (r != c && sgn((*this)(r, c)) != 0) return false;
    return true;
}

mpz_class IntMatrix::determinant() const {
    if (rows_ != cols_) throw InvalidArgument("IntMatrix::determinant: matrix is not square");
    const std::size_t n = rows_;
    if (n == 0) return 1;
    IntMatrix m = *this;
    int sign = 1;
    mpz_class prev = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (sgn(m(k, k)) == 0) {
            std::size_t swap = k + 1;
            while (swap < n && sgn(m(swap, k)) == 0) ++swap;
            if (swap == n) return 0;
            for (std::size_t c = 0; c < n; ++c) std::swap(m(k, c), m(swap, c));
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                m(i, j) = (m(i, j) * m(k, k) - m(i, k) * m(k, j)) / prev;
            }
        }
        prev = m(k, k);
    }
    return sign * m(n - 1, n - 1);
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
    if (a.cols() != b.rows()) throw InvalidArgument("IntMatrix: shape mismatch in product");
    IntMatrix out(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k) {
            if (sgn(a(i, k)) == 0) continue;
            for (std::size_t j = 0; j < b.cols(); ++j) out(i, j) += a(i, k) * b(k, j);
        }
    return out;
}

std::string IntMatrix::str() const {
    std::string out = "[";
    for (std::size_t r = 0; r < rows_; ++r) {
        out += r == 0 ? "[" : ", [";
        for (std::size_t c = 0; c < cols_; ++c) {
            if (c != 0) out += ", ";
            out += (*this)(r, c).get_str();
        }
        out += "]";
    }
    return out + "]";
}

namespace {

struct SmithWork {
    IntMatrix u, d, v;

    void swap_rows(std::size_t a, std::size_t b) {
        if (a == b) return;
        for (std::size_t c = 0; c < d.cols(); ++c) std::swap(d(a, c), d(b, c));
        for (std::size_t c = 0; c < u.cols(); ++c) std::swap(u(a, c), u(b, c));
    }
    void swap_cols(std::size_t a, std::size_t b) {
        if (a == b) return;
        for (std::size_t r = 0; r < d.rows(); ++r) std::swap(d(r, a), d(r, b));
        for (std::size_t r = 0; r < v.rows(); ++r) std::swap(v(r, a), v(r, b));
    }
    // row[dst] += q * row[src]
    void add_row(std::size_t dst, std::size_t src, const mpz_class& q) {
        for (std::size_t c = 0; c < d.cols(); ++c) d(dst, c) += q * d(src, c);
        for (std::size_t c = 0; c < u.cols(); ++c) u(dst, c) += q * u(src, c);
    }
    // col[dst] += q * col[src]
    void add_col(std::size_t dst, std::size_t src, const mpz_class& q) {
        for (std::size_t r = 0; r < d.rows(); ++r) d(r, dst) += q * d(r, src);
        for (std::size_t r = 0; r < v.rows(); ++r) v(r, dst) += q * v(r, src);
    }
    void negate_row(std::size_t r) {
        for (std::size_t c = 0; c < d.cols(); ++c) d(r, c) = -d(r, c);
        for (std::size_t c = 0; c < u.cols(); ++c) u(r, c) = -u(r, c);
    }

    // Smallest nonzero |entry| in the trailing block, ties broken row-major.
    bool find_pivot(std::size_t t, std::size_t& pr, std::size_t& pc) const {
        bool found = false;
        mpz_class best;
        for (std::size_t r = t; r < d.rows(); ++r)
            for (std::size_t c = t; c < d.cols(); ++c) {
                if (sgn(d(r, c)) == 0) continue;
                const mpz_class a = abs(d(r, c));
                if (!found || a < best) {
                    found = true;
                    best = a;
                    pr = r;
                    pc = c;
                }
            }
        return found;
    }
};

}  // namespace

SmithForm smith_normal_form(const IntMatrix& a) {
    SmithWork w{IntMatrix::identity(a.rows()), a, IntMatrix::identity(a.cols())};
    const std::size_t steps = std::min(a.rows(), a.cols());

    for (std::size_t t = 0; t < steps; ++t) {
        for (;;) {
            std::size_t pr = 0;
            std::size_t pc = 0;
            if (!w.find_pivot(t, pr, pc)) return {std::move(w.u), std::move(w.d), std::move(w.v)};
            w.swap_rows(t, pr);
            w.swap_cols(t, pc);

            const mpz_class pivot = w.d(t, t);
            bool dirty = false;
            for (std::size_t r = t + 1; r < w.d.rows(); ++r) {
                if (sgn(w.d(r, t)) == 0) continue;
                mpz_class q;
                mpz_tdiv_q(q.get_mpz_t(), w.d(r, t).get_mpz_t(), pivot.get_mpz_t());
                w.add_row(r, t, -q);
                dirty = dirty || sgn(w.d(r, t)) != 0;
            }
            for (std::size_t c = t + 1; c < w.d.cols(); ++c) {
                if (sgn(w.d(t, c)) == 0) continue;
                mpz_class q;
                mpz_tdiv_q(q.get_mpz_t(), w.d(t, c).get_mpz_t(), pivot.get_mpz_t());
                w.add_col(c, t, -q);
                dirty = dirty || sgn(w.d(t, c)) != 0;
            }
            if (dirty) continue;  // a smaller remainder becomes the next pivot

            // Divisibility: fold an offending row into row t and go again.
            bool divides = true;
            for (std::size_t r = t + 1; r < w.d.rows() && divides; ++r)
                for (std::size_t c = t + 1; c < w.d.cols(); ++c)
                    if (!mpz_divisible_p(w.d(r, c).get_mpz_t(), pivot.get_mpz_t())) {
                        w.add_row(t, r, 1);
                        divides = false;
                        break;
                    }
            if (divides) break;
        }
        if (sgn(w.d(t, t)) < 0) w.negate_row(t);
    }
    return {std::move(w.u), std::move(w.d), std::move(w.v)};
}

mpz_class AbelianGroup::order() const {
    if (free_rank != 0) return 0;
    mpz_class n = 1;
    for (const auto& d : torsion) n *= d;
    return n;
}

mpz_class AbelianGroup::hom_to_z2_count() const {
    std::size_t even = free_rank;
    for (const auto& d : torsion)
        if (mpz_even_p(d.get_mpz_t())) ++even;
    mpz_class n;
    mpz_ui_pow_ui(n.get_mpz_t(), 2, even);
    return n;
}

std::string AbelianGroup::str() const {
    std::string out;
    if (free_rank != 0) out = "Z^" + std::to_string(free_rank);
    for (const auto& d : torsion) {
        if (!out.empty()) out += " x ";
        out += "Z/" + d.get_str();
    }
    return out.empty() ? "1" : out;
}

IntMatrix relator_matrix(const Presentation& p) {
    IntMatrix m(p.relators().size(), p.generator_count());
    for (std::size_t r = 0; r < p.relators().size(); ++r)
        for (Letter l : p.relators()[r]) m(r, gen_index(l)) += l > 0 ? 1 : -1;
    return m;
}

AbelianGroup abelian_group_from_smith(const IntMatrix& d, std::size_t generator_count) {
    AbelianGroup g;
    std::size_t rank = 0;
    for (std::size_t i = 0; i < std::min(d.rows(), d.cols()); ++i) {
        const mpz_class& x = d(i, i);
        if (sgn(x) == 0) continue;
        ++rank;
        if (x != 1) g.torsion.push_back(abs(x));
    }
    g.free_rank = generator_count - rank;
    return g;
}

AbelianGroup abelianization(const Presentation& p) {
    const IntMatrix m = relator_matrix(p);
    return abelian_group_from_smith(smith_normal_form(m).d, p.generator_count());
}

}  // namespace orbiforge

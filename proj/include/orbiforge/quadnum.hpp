#pragma once

/**
 * @file quadnum.hpp
 * @brief Exact arithmetic in the real quadratic field Q(sqrt 3).
 *
 * A QuadNum is a + b*sqrt(3) with a, b arbitrary-precision rationals. GMP
 * keeps both components in lowest terms with a positive denominator, so
 * structural equality of (a, b) is field equality.
 *
 * The field is ordered (it sits inside R), which the lattice code needs for
 * length comparisons and rounding.
 */

#include <compare>
#include <gmpxx.h>
#include <iosfwd>
#include <string>
#include <string_view>

namespace orbiforge {

class QuadNum {
public:
    QuadNum() = default;
    QuadNum(long a) : a_(a) {}  // NOLINT(google-explicit-constructor)
    QuadNum(mpq_class a) : a_(std::move(a)) { a_.canonicalize(); }  // NOLINT
    QuadNum(mpq_class a, mpq_class b) : a_(std::move(a)), b_(std::move(b)) {
        a_.canonicalize();
        b_.canonicalize();
    }

    static QuadNum sqrt3() { return {mpq_class(0), mpq_class(1)}; }
    static QuadNum rational(long num, long den) { return QuadNum(mpq_class(num, den)); }

    const mpq_class& rational_part() const noexcept { return a_; }
    const mpq_class& sqrt3_part() const noexcept { return b_; }

    bool is_zero() const { return sgn(a_) == 0 && sgn(b_) == 0; }
    bool is_rational() const { return sgn(b_) == 0; }
    bool is_integer() const { return is_rational() && a_.get_den() == 1; }

    /// Sign of the real number a + b*sqrt(3).
    int sign() const;

    /// Conjugate a - b*sqrt(3).
    QuadNum conjugate() const { return {a_, -b_}; }
    /// Field norm a^2 - 3 b^2.
    mpq_class norm() const { return a_ * a_ - 3 * b_ * b_; }

    double to_double() const;

    QuadNum operator-() const { return {-a_, -b_}; }
    QuadNum& operator+=(const QuadNum& o);
    QuadNum& operator-=(const QuadNum& o);
    QuadNum& operator*=(const QuadNum& o);
    /// Throws InvalidArgument on division by zero.
    QuadNum& operator/=(const QuadNum& o);

    friend QuadNum operator+(QuadNum x, const QuadNum& y) { return x += y; }
    friend QuadNum operator-(QuadNum x, const QuadNum& y) { return x -= y; }
    friend QuadNum operator*(QuadNum x, const QuadNum& y) { return x *= y; }
    friend QuadNum operator/(QuadNum x, const QuadNum& y) { return x /= y; }

    friend bool operator==(const QuadNum& x, const QuadNum& y) {
        return x.a_ == y.a_ && x.b_ == y.b_;
    }
    /// Real-number ordering.
    friend std::strong_ordering operator<=>(const QuadNum& x, const QuadNum& y) {
        const int s = (x - y).sign();
        return s < 0 ? std::strong_ordering::less
                     : (s > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
    }

    /// Largest integer not exceeding the value.
    mpz_class floor() const;
    /// Nearest integer, halves rounded up.
    mpz_class round() const;

    /// Renders as `p/q+r/s*rt3`, dropping zero parts and unit denominators.
    std::string str() const;
    /// Accepts everything str() produces, e.g. `1/2`, `-rt3`, `1/2-1/6*rt3`.
    static QuadNum parse(std::string_view text);

private:
    mpq_class a_{0};
    mpq_class b_{0};
};

std::ostream& operator<<(std::ostream& os, const QuadNum& x);

enum class ArithOp { add, sub, mul, div, neg };

/// Dispatching form of the field operations; `neg` ignores y.
QuadNum qn_arith(ArithOp op, const QuadNum& x, const QuadNum& y);

}  // namespace orbiforge

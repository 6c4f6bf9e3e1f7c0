#include "orbiforge/quadnum.hpp"

#include "orbiforge/errors.hpp"

#include <cctype>
#include <cmath>
#include <ostream>

namespace orbiforge {

int QuadNum::sign() const {
    const int sa = sgn(a_);
    const int sb = sgn(b_);
    if (sb == 0) return sa;
    if (sa == 0 || sa == sb) return sb;
    // Opposite signs: compare a^2 against 3 b^2.
    const int c = cmp(a_ * a_, 3 * b_ * b_);
    return c > 0 ? sa : (c < 0 ? sb : 0);
}

double QuadNum::to_double() const { return a_.get_d() + b_.get_d() * std::sqrt(3.0); }

QuadNum& QuadNum::operator+=(const QuadNum& o) {
    a_ += o.a_;
    b_ += o.b_;
    return *this;
}

QuadNum& QuadNum::operator-=(const QuadNum& o) {
    a_ -= o.a_;
    b_ -= o.b_;
    return *this;
}

QuadNum& QuadNum::operator*=(const QuadNum& o) {
    mpq_class a = a_ * o.a_ + 3 * b_ * o.b_;
    mpq_class b = a_ * o.b_ + b_ * o.a_;
    a_ = std::move(a);
    b_ = std::move(b);
    return *this;
}

QuadNum& QuadNum::operator/=(const QuadNum& o) {
    if (o.is_zero()) throw InvalidArgument("QuadNum: division by zero");
    // x / y = x * conj(y) / N(y); N(y) != 0 since sqrt 3 is irrational.
    const mpq_class n = o.norm();
    *this *= o.conjugate();
    a_ /= n;
    b_ /= n;
    return *this;
}

mpz_class QuadNum::floor() const {
    // Estimate in floating point, then correct with exact comparisons.
    mpz_class n(std::floor(to_double()));
    while (QuadNum(mpq_class(n)) > *this) --n;
    while (QuadNum(mpq_class(n + 1)) <= *this) ++n;
    return n;
}

mpz_class QuadNum::round() const { return (*this + QuadNum::rational(1, 2)).floor(); }

namespace {

std::string rat_str(const mpq_class& q) {
    return q.get_den() == 1 ? q.get_num().get_str() : q.get_str();
}

}  // namespace

std::string QuadNum::str() const {
    if (sgn(b_) == 0) return rat_str(a_);
    std::string out;
    if (sgn(a_) != 0) out = rat_str(a_);
    mpq_class b = b_;
    if (sgn(b) < 0) {
        out += '-';
        b = -b;
    } else if (!out.empty()) {
        out += '+';
    }
    if (b != 1) out += rat_str(b) + "*";
    out += "rt3";
    return out;
}

namespace {

struct TermCursor {
    std::string_view s;
    std::size_t pos = 0;

    bool done() const { return pos >= s.size(); }
    char peek() const { return done() ? '\0' : s[pos]; }

    [[noreturn]] void fail(const std::string& what) const {
        throw ParseError("bad number '" + std::string(s) + "': " + what, 1, pos + 1);
    }

    mpz_class integer() {
        const std::size_t start = pos;
        while (!done() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos;
        if (pos == start) fail("expected digits");
        return mpz_class(std::string(s.substr(start, pos - start)));
    }

    mpq_class fraction() {
        mpz_class num = integer();
        mpz_class den = 1;
        if (peek() == '/') {
            ++pos;
            den = integer();
            if (den == 0) fail("zero denominator");
        }
        return mpq_class(num, den);
    }

    bool take(std::string_view lit) {
        if (s.substr(pos, lit.size()) == lit) {
            pos += lit.size();
            return true;
        }
        return false;
    }
};

}  // namespace

QuadNum QuadNum::parse(std::string_view text) {
    std::string compact;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) compact += c;
    TermCursor cur{compact};
    if (cur.done()) cur.fail("empty");

    mpq_class a = 0;
    mpq_class b = 0;
    bool first = true;
    while (!cur.done()) {
        int sign = 1;
        if (cur.peek() == '+' || cur.peek() == '-') {
            sign = cur.peek() == '-' ? -1 : 1;
            ++cur.pos;
        } else if (!first) {
            cur.fail("expected '+' or '-'");
        }
        first = false;

        if (cur.take("rt3")) {
            b += sign;
            continue;
        }
        mpq_class coeff = cur.fraction();
        if (cur.peek() == '*') {
            ++cur.pos;
            if (!cur.take("rt3")) cur.fail("expected 'rt3' after '*'");
            b += sign * coeff;
        } else {
            a += sign * coeff;
        }
    }
    return {a, b};
}

std::ostream& operator<<(std::ostream& os, const QuadNum& x) { return os << x.str(); }

QuadNum qn_arith(ArithOp op, const QuadNum& x, const QuadNum& y) {
    switch (op) {
        case ArithOp::add: return x + y;
        case ArithOp::sub: return x - y;
        case ArithOp::mul: return x * y;
        case ArithOp::div: return x / y;
        case ArithOp::neg: return -x;
    }
    throw InvalidArgument("qn_arith: unknown operation");
}

}  // namespace orbiforge

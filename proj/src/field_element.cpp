#include "subfield/field_element.hpp"

#include <ostream>

namespace subfield {

namespace {

bool is_perfect_square(unsigned long d) {
    Integer z(static_cast<signed long>(d));
    return mpz_perfect_square_p(z.get_mpz_t()) != 0;
}

// Radicand both operands live in. Rationals are compatible with everything.
unsigned long merged_radicand(const FieldElement& x, const FieldElement& y) {
    if (x.is_rational()) return y.radicand();
    if (y.is_rational() || x.radicand() == y.radicand()) return x.radicand();
    throw domain_error("mismatched radicands: sqrt(" + std::to_string(x.radicand()) +
                       ") vs sqrt(" + std::to_string(y.radicand()) + ")");
}

}  // namespace

FieldElement::FieldElement(const Rational& a, const Rational& b, unsigned long d)
    : a_(a), b_(b), d_(d) {
    if (b_.sign() == 0) {
        d_ = kRationalRadicand;
        return;
    }
    if (d_ == 0) throw domain_error("radicand must be a positive integer");
    if (is_perfect_square(d_))
        throw domain_error("perfect-square radicand " + std::to_string(d_) +
                           " with nonzero surd coefficient");
}

int FieldElement::sign() const {
    int sa = a_.sign();
    int sb = b_.sign();
    if (sb == 0) return sa;
    if (sa == 0) return sb;
    if (sa == sb) return sa;
    // Opposite signs: |a| vs |b|*sqrt(d) decided by squaring. Equality is
    // impossible since d is not a perfect square.
    Rational lhs = a_ * a_;
    Rational rhs = b_ * b_ * Rational(Integer(static_cast<signed long>(d_)));
    int c = lhs == rhs ? 0 : (lhs < rhs ? -1 : 1);
    if (c == 0) throw domain_error("non-square radicand invariant violated");
    return sa > 0 ? c : -c;
}

FieldElement FieldElement::operator-() const {
    FieldElement r(*this);
    r.a_ = -r.a_;
    r.b_ = -r.b_;
    return r;
}

FieldElement& FieldElement::operator+=(const FieldElement& o) {
    unsigned long d = merged_radicand(*this, o);
    *this = FieldElement(a_ + o.a_, b_ + o.b_, d);
    return *this;
}

FieldElement& FieldElement::operator-=(const FieldElement& o) {
    unsigned long d = merged_radicand(*this, o);
    *this = FieldElement(a_ - o.a_, b_ - o.b_, d);
    return *this;
}

FieldElement& FieldElement::operator*=(const FieldElement& o) {
    unsigned long d = merged_radicand(*this, o);
    Rational rd(Integer(static_cast<signed long>(d)));
    *this = FieldElement(a_ * o.a_ + b_ * o.b_ * rd, a_ * o.b_ + b_ * o.a_, d);
    return *this;
}

FieldElement& FieldElement::operator/=(const FieldElement& o) {
    if (o.sign() == 0) throw domain_error("division by zero");
    unsigned long d = merged_radicand(*this, o);
    // 1/(a+b*sqrt(d)) = (a-b*sqrt(d)) / (a^2 - b^2 d); the norm is nonzero
    // for o != 0 because d is not a perfect square.
    Rational rd(Integer(static_cast<signed long>(d)));
    Rational norm = o.a_ * o.a_ - o.b_ * o.b_ * rd;
    FieldElement inv(o.a_ / norm, -o.b_ / norm, d);
    return *this *= inv;
}

std::string FieldElement::str() const {
    if (is_rational()) return a_.str();
    return a_.str() + "+" + b_.str() + "*sqrt(" + std::to_string(d_) + ")";
}

std::ostream& operator<<(std::ostream& os, const FieldElement& x) { return os << x.str(); }

}  // namespace subfield

#pragma once

#include <compare>
#include <iosfwd>
#include <string>

#include "subfield/rational.hpp"

namespace subfield {

/// Radicand stored for pure rationals. Any non-square would do; pinning one
/// makes equal values have identical representations.
inline constexpr unsigned long kRationalRadicand = 2;

/// Exact element a + b*sqrt(d) of the real quadratic field Q(sqrt(d)).
///
/// Invariants: a and b are canonical rationals; d is a non-square positive
/// integer whenever b != 0, so b != 0 certifies irrationality; when b == 0
/// the radicand is normalized to kRationalRadicand. Arithmetic between
/// elements of distinct radicands is rejected unless one side is rational
/// (no silent lifting into degree-4 towers).
class FieldElement {
public:
    FieldElement() : a_(0), b_(0), d_(kRationalRadicand) {}
    FieldElement(int n) : a_(n), b_(0), d_(kRationalRadicand) {}
    FieldElement(long n) : a_(n), b_(0), d_(kRationalRadicand) {}
    FieldElement(const Rational& a) : a_(a), b_(0), d_(kRationalRadicand) {}
    FieldElement(const Rational& a, const Rational& b, unsigned long d);

    const Rational& rational_part() const { return a_; }
    const Rational& surd_coeff() const { return b_; }
    unsigned long radicand() const { return d_; }

    bool is_rational() const { return b_.sign() == 0; }

    /// Exact sign, decided by rational arithmetic only: case analysis on
    /// the signs of a and b, comparing a^2 against b^2*d when they differ.
    int sign() const;

    FieldElement operator-() const;

    FieldElement& operator+=(const FieldElement& o);
    FieldElement& operator-=(const FieldElement& o);
    FieldElement& operator*=(const FieldElement& o);
    FieldElement& operator/=(const FieldElement& o);

    friend FieldElement operator+(FieldElement x, const FieldElement& y) { return x += y; }
    friend FieldElement operator-(FieldElement x, const FieldElement& y) { return x -= y; }
    friend FieldElement operator*(FieldElement x, const FieldElement& y) { return x *= y; }
    friend FieldElement operator/(FieldElement x, const FieldElement& y) { return x /= y; }

    friend bool operator==(const FieldElement& x, const FieldElement& y) {
        return (x - y).sign() == 0;
    }
    friend std::strong_ordering operator<=>(const FieldElement& x, const FieldElement& y) {
        int s = (x - y).sign();
        if (s < 0) return std::strong_ordering::less;
        if (s > 0) return std::strong_ordering::greater;
        return std::strong_ordering::equal;
    }

    /// c-spec compatible rendering: "a" or "a+b*sqrt(d)".
    std::string str() const;

private:
    Rational a_, b_;
    unsigned long d_;
};

/// Exact three-way comparison: -1, 0, or +1 as x <, ==, > y.
inline int compare(const FieldElement& x, const FieldElement& y) { return (x - y).sign(); }

/// True iff x is rational. When false, irrationality is certified: the surd
/// coefficient is nonzero and the radicand is a non-square integer.
inline bool in_rationals(const FieldElement& x) { return x.is_rational(); }

inline FieldElement abs(const FieldElement& x) { return x.sign() < 0 ? -x : x; }

std::ostream& operator<<(std::ostream& os, const FieldElement& x);

}  // namespace subfield

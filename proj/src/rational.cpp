#include "subfield/rational.hpp"

#include <cctype>
#include <ostream>

namespace subfield {

namespace {

// [start, end) must be nonempty and all decimal digits.
bool all_digits(const std::string& s, std::size_t start, std::size_t end) {
    if (start >= end) return false;
    for (std::size_t i = start; i < end; ++i) {
        if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    }
    return true;
}

}  // namespace

Rational Rational::parse(const std::string& text) {
    std::size_t slash = text.find('/');
    std::string num_part = slash == std::string::npos ? text : text.substr(0, slash);
    std::size_t num_start = 0;
    if (!num_part.empty() && (num_part[0] == '+' || num_part[0] == '-')) num_start = 1;
    if (!all_digits(num_part, num_start, num_part.size()))
        throw parse_error("expected integer", num_start);
    Integer num(num_part);
    if (slash == std::string::npos) return Rational(num);
    if (!all_digits(text, slash + 1, text.size()))
        throw parse_error("expected unsigned denominator", slash + 1);
    Integer den(text.substr(slash + 1));
    if (den == 0) throw parse_error("zero denominator", slash + 1);
    return Rational(num, den);
}

Rational pow2(long e) {
    Integer p;
    mpz_ui_pow_ui(p.get_mpz_t(), 2, static_cast<unsigned long>(e < 0 ? -e : e));
    return e < 0 ? Rational(Integer(1), p) : Rational(p);
}

Integer ipow10(unsigned long k) {
    Integer p;
    mpz_ui_pow_ui(p.get_mpz_t(), 10, k);
    return p;
}

std::ostream& operator<<(std::ostream& os, const Rational& x) { return os << x.str(); }

}  // namespace subfield

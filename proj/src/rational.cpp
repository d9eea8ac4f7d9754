#include "cfcomp/rational.hpp"

#include <boost/multiprecision/cpp_int.hpp>
#include <stdexcept>

namespace cfc {

namespace mp = boost::multiprecision;

std::string rat_to_string(const Rat& q) {
    Int num = mp::numerator(q), den = mp::denominator(q);
    if (den == 1) return num.str();
    return num.str() + "/" + den.str();
}

namespace {

// cpp_int's string constructor treats a leading 0 as an octal prefix; parse
// plain decimal digit runs (optional sign) ourselves.
Int int_from_digits(std::string s) {
    if (s.empty()) throw std::invalid_argument("empty integer literal");
    bool neg = s[0] == '-';
    if (s[0] == '-' || s[0] == '+') s = s.substr(1);
    if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos)
        throw std::invalid_argument("bad integer literal: " + s);
    Int v = 0;
    for (char ch : s) v = v * 10 + (ch - '0');
    return neg ? Int(-v) : v;
}

} // namespace

Rat rat_from_string(const std::string& s) {
    if (s.empty()) throw std::invalid_argument("empty rational literal");
    auto slash = s.find('/');
    if (slash != std::string::npos) {
        Int num = int_from_digits(s.substr(0, slash));
        Int den = int_from_digits(s.substr(slash + 1));
        if (den.is_zero()) throw std::invalid_argument("zero denominator: " + s);
        return Rat(num, den);
    }
    auto dot = s.find('.');
    if (dot != std::string::npos) {
        std::string head = s.substr(0, dot), tail = s.substr(dot + 1);
        if (tail.empty() || tail.find_first_not_of("0123456789") != std::string::npos)
            throw std::invalid_argument("bad decimal literal: " + s);
        bool neg = !head.empty() && head[0] == '-';
        if (!head.empty() && (head[0] == '-' || head[0] == '+')) head = head.substr(1);
        if (!head.empty() && head.find_first_not_of("0123456789") != std::string::npos)
            throw std::invalid_argument("bad decimal literal: " + s);
        Int ipart = head.empty() ? Int(0) : int_from_digits(head);
        Int scale = 1;
        for (size_t i = 0; i < tail.size(); ++i) scale *= 10;
        Int total = ipart * scale + int_from_digits(tail);
        Rat v(total, scale);
        return neg ? Rat(-v) : v;
    }
    return Rat(int_from_digits(s));
}

long ceil_log2(const Rat& q) {
    if (!(q > 0)) throw std::domain_error("ceil_log2 needs a positive argument");
    Int num = mp::numerator(q), den = mp::denominator(q);
    // 2^(ln-ld-1) < q < 2^(ln-ld+1), so the answer is one of two candidates.
    long e = static_cast<long>(mp::msb(num)) - static_cast<long>(mp::msb(den));
    auto pow2 = [](long k) {
        return k >= 0 ? Rat(Int(1) << static_cast<unsigned long>(k))
                      : Rat(Int(1), Int(1) << static_cast<unsigned long>(-k));
    };
    while (q > pow2(e)) ++e;
    while (q <= pow2(e - 1)) --e;
    return e;
}

} // namespace cfc

#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <stdexcept>
#include <string>

namespace homrec {

using Int = boost::multiprecision::cpp_int;

// binomial(n, k) for arbitrary n >= 0; returns 0 when k > n.
inline Int binomial(const Int& n, unsigned k) {
    if (n < 0) throw std::invalid_argument("binomial: negative n");
    if (Int(k) > n) return 0;
    Int r = 1;
    for (unsigned i = 0; i < k; ++i) {
        r *= (n - i);
        r /= (i + 1);  // exact at every step: product of j consecutive ints is divisible by j!
    }
    return r;
}

inline Int parse_int(const std::string& s) {
    if (s.empty()) throw std::invalid_argument("parse_int: empty string");
    try {
        return Int(s);
    } catch (const std::exception&) {
        throw std::invalid_argument("parse_int: not a decimal integer: " + s);
    }
}

inline std::string to_string(const Int& v) { return v.str(); }

// Largest x >= lo with f(x) <= target, where f is nondecreasing. f(lo) <= target required.
template <typename F>
Int search_last_leq(Int lo, const F& f, const Int& target) {
    if (f(lo) > target) throw std::invalid_argument("search_last_leq: f(lo) > target");
    Int hi = lo + 1;
    while (f(hi) <= target) {
        lo = hi;
        hi *= 2;
    }
    while (lo + 1 < hi) {
        Int mid = (lo + hi) / 2;
        if (f(mid) <= target) lo = mid; else hi = mid;
    }
    return lo;
}

}  // namespace homrec

#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <limits>
#include <string>

namespace carrylab {

// Exact arithmetic for every public quantity. Statistics are rationals and
// never touch floating point; decimal renderings are produced only at the
// output boundary and are marked approximate there. Fixed-width integers
// appear solely inside the sweep kernels, whose inputs are range-checked
// against these types first.
using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

using boost::multiprecision::gcd;

inline Int pow_int(const Int& base, unsigned exp) {
    return boost::multiprecision::pow(base, exp);
}

// Floor-convention remainder, always in [0, b) for b > 0.
inline Int mod_floor(const Int& a, const Int& b) {
    Int r = a % b;
    if (r < 0) r += b;
    return r;
}

inline Int rat_num(const Rat& r) { return boost::multiprecision::numerator(r); }
inline Int rat_den(const Rat& r) { return boost::multiprecision::denominator(r); }

inline Int floor_rat(const Rat& r) {
    Int n = rat_num(r), d = rat_den(r);
    Int q = n / d;
    if (n % d != 0 && (n < 0) != (d < 0)) --q;
    return q;
}

inline Int ceil_rat(const Rat& r) {
    Int n = rat_num(r), d = rat_den(r);
    Int q = n / d;
    if (n % d != 0 && (n < 0) == (d < 0)) ++q;
    return q;
}

inline std::int64_t to_i64(const Int& v) {
    if (v < std::numeric_limits<std::int64_t>::min() ||
        v > std::numeric_limits<std::int64_t>::max())
        throw std::overflow_error("value does not fit in 64 bits: " + v.str());
    return static_cast<std::int64_t>(v);
}

inline std::uint64_t to_u64(const Int& v) {
    if (v < 0 || v > std::numeric_limits<std::uint64_t>::max())
        throw std::overflow_error("value does not fit in unsigned 64 bits: " + v.str());
    return static_cast<std::uint64_t>(v);
}

// Decimal approximation of an exact rational, rounded half away from zero.
// Used only for human-facing rendering; callers tag the result approximate.
inline std::string dec_approx(const Rat& r, int digits = 6) {
    Int n = rat_num(r), d = rat_den(r);
    bool neg = (n < 0) != (d < 0);
    n = boost::multiprecision::abs(n);
    d = boost::multiprecision::abs(d);
    Int scale = pow_int(10, static_cast<unsigned>(digits));
    Int scaled = (n * scale * 2 + d) / (d * 2);
    Int whole = scaled / scale, frac = scaled % scale;
    std::string fs = frac.str();
    fs.insert(fs.begin(), static_cast<std::size_t>(digits) - fs.size(), '0');
    while (fs.size() > 1 && fs.back() == '0') fs.pop_back();
    std::string out = whole.str();
    if (frac != 0) out += "." + fs;
    if (neg && (whole != 0 || frac != 0)) out.insert(out.begin(), '-');
    return out;
}

}  // namespace carrylab

#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <sstream>
#include <stdexcept>
#include <string>

namespace howe {

// Exact arithmetic everywhere; no floating point in any computation path.
using Int = mpz_class;
using Rat = mpq_class;

class math_error : public std::runtime_error {
public:
    explicit math_error(const std::string& msg) : std::runtime_error(msg) {}
};

[[noreturn]] inline void fail(const std::string& msg) { throw math_error(msg); }

inline void require(bool ok, const std::string& msg) {
    if (!ok) fail(msg);
}

// mpq_class's two-argument constructor does not canonicalize; route every
// numerator/denominator construction through here.
inline Rat frac(long num, long den) {
    Rat q(num, den);
    q.canonicalize();
    return q;
}

inline std::string rat_str(const Rat& q) {
    Rat r = q;
    r.canonicalize();
    return r.get_str();
}

inline Rat rat_parse(const std::string& s) {
    Rat q;
    if (q.set_str(s, 10) != 0) fail("bad rational literal: " + s);
    q.canonicalize();
    return q;
}

inline bool rat_is_int(const Rat& q) {
    Rat r = q;
    r.canonicalize();
    return r.get_den() == 1;
}

inline long rat_to_long(const Rat& q) {
    Rat r = q;
    r.canonicalize();
    require(r.get_den() == 1, "expected an integer, got " + rat_str(q));
    require(r.get_num().fits_slong_p(), "integer out of range: " + rat_str(q));
    return r.get_num().get_si();
}

}  // namespace howe

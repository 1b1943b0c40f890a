#pragma once
// Exact arithmetic primitives shared by every module: arbitrary-precision
// integers and rationals (GMP-backed), with small helpers for floor/ceil,
// integer square roots and residue normalization.

#include <gmpxx.h>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace k3z3 {

using Int = mpz_class;
using Rat = mpq_class;
using QVec = std::vector<Rat>;
using ZVec = std::vector<Int>;

inline Int floor_div(const Int& a, const Int& b) {
    Int q;
    mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

inline Int rat_floor(const Rat& r) { return floor_div(r.get_num(), r.get_den()); }

inline Int rat_ceil(const Rat& r) { return -rat_floor(-r); }

inline bool is_integer(const Rat& r) { return r.get_den() == 1; }

// floor(sqrt(n)) for n >= 0.
inline Int isqrt(const Int& n) {
    if (n < 0) throw std::domain_error("isqrt of negative");
    Int r;
    mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
    return r;
}

// x reduced into [0, m) for a positive rational modulus m.
inline Rat mod_pos(const Rat& x, const Rat& m) {
    Rat q = x / m;
    Rat r = x - Rat(rat_floor(q)) * m;
    r.canonicalize();
    return r;
}

// "a/b" (or plain "a") serialization used by the JSON interface.
inline std::string rat_to_string(const Rat& r) {
    if (r.get_den() == 1) return r.get_num().get_str();
    return r.get_num().get_str() + "/" + r.get_den().get_str();
}

inline Rat rat_from_string(const std::string& s) {
    Rat r;
    if (r.set_str(s, 10) != 0) throw std::invalid_argument("bad rational: " + s);
    r.canonicalize();
    return r;
}

}  // namespace k3z3

#pragma once
// Exact formal q,y-series over the 24th cyclotomic field: Jacobi theta
// functions with characteristics and argument shifts, the K3 elliptic
// genus, the Z3-orbifold sector sum, and the standard specializations.

#include "k3z3/exact.hpp"

#include <array>
#include <map>
#include <string>

namespace k3z3::genus {

// ---- cyclotomic numbers -------------------------------------------------

// Element of Q(zeta_24), coefficients over 1, z, ..., z^7 with z^8 = z^4 - 1.
struct CycloNumber {
    std::array<Rat, 8> c{};

    static CycloNumber zero();
    static CycloNumber one();
    static CycloNumber from_rat(const Rat& r);
    static CycloNumber zeta_pow(long k);  // zeta^k, any integer k

    bool is_zero() const;
    bool is_rational() const;             // c[1..7] all zero
    Rat rational_value() const;           // requires is_rational
    CycloNumber conj() const;             // zeta -> zeta^23

    CycloNumber operator+(const CycloNumber&) const;
    CycloNumber operator-(const CycloNumber&) const;
    CycloNumber operator*(const CycloNumber&) const;
    CycloNumber operator*(const Rat&) const;
    CycloNumber inverse() const;          // field inverse; throws on zero
    bool operator==(const CycloNumber&) const = default;
};

// ---- truncated Jacobi series -------------------------------------------

// Exponent key: q-exponent in 24ths, y-exponent in halves.
struct JacobiSeries {
    // (q24, y2) -> coefficient; zero coefficients are not stored.
    std::map<std::pair<long, long>, CycloNumber> terms;
    // coefficients with q24 < valid are exact; everything else is dropped
    long valid = 0;

    void add_term(long q24, long y2, const CycloNumber& c);
    CycloNumber coeff(long q24, long y2) const;
    long min_q24() const;   // of the stored terms; valid when empty
    bool is_zero_to_validity() const;
};

JacobiSeries js_add(const JacobiSeries& a, const JacobiSeries& b);
JacobiSeries js_sub(const JacobiSeries& a, const JacobiSeries& b);
JacobiSeries js_mul(const JacobiSeries& a, const JacobiSeries& b);
JacobiSeries js_scale(const JacobiSeries& a, const CycloNumber& s);
// Long division; the divisor's lowest q-level must be a single monomial.
JacobiSeries series_divide(const JacobiSeries& a, const JacobiSeries& b);
// z = 0: collapse the y-exponents.
JacobiSeries specialize_z0(const JacobiSeries& a);

// ---- theta functions ----------------------------------------------------

// theta_{(alpha,beta)}(tau, z + a tau + b) with alpha = alpha2/2,
// beta = beta2/2 in {0, 1/2} and a = a6/6, b = b6/6 in (1/6)Z.
struct ThetaSpec {
    int alpha2 = 0, beta2 = 0;
    int a6 = 0, b6 = 0;
};

// All terms with q-exponent <= N are included (q24-validity 24N + 1).
JacobiSeries theta_series(const ThetaSpec& spec, int N);
JacobiSeries theta1(int a6, int b6, int N);  // includes the global minus sign
JacobiSeries theta2(int N);                  // z-dependent, no shift
JacobiSeries theta3(int N);
JacobiSeries theta4(int N);

// ---- the genera ---------------------------------------------------------

// 8 [ (th2(z)/th2(0))^2 + (th3(z)/th3(0))^2 + (th4(z)/th4(0))^2 ]
JacobiSeries ellk3(int N);
// Sector quotient th1(z+l tau/3+m/3) th1(z-l tau/3-m/3) /
//                 (th1(l tau/3+m/3) th1(-l tau/3-m/3)); the sector genus is
// 9 times this, and the orbifold genus is (1/3) of the sum over the eight
// sectors (l,m) != (0,0).
JacobiSeries sector_quotient(int l, int m, int N);
JacobiSeries orbifold_genus(int N);

struct SpecializationReport {
    Rat euler;            // E(tau, 0) constant term, expected 24
    bool euler_constant = false;   // all positive q-coefficients vanish at y = 1
    Rat at_minus_one;     // q^0 value at y = -1, expected 16
    Rat holomorphic;      // constant term of q^(1/2) E at y = -q^(1/2), expected -2
    bool pass = false;
    std::string failure;
};
SpecializationReport specializations(int N);

struct GenusReport {
    bool q0_matches = false;       // 2y^-1 + 20 + 2y
    bool q1_matches = false;       // 20y^-2 - 128y^-1 + 216 - 128y + 20y^2
    bool orbifold_equals_k3 = false;
    bool even_in_y = false;
    bool integral = false;
    bool elliptic_transform = false;
    bool theta1_vanishes_at_z0 = false;
    bool sector_value_9 = false;   // 9 * sector_quotient at z=0 equals 9 per sector
    bool pass = false;
    std::string failure;
};
GenusReport verify_genus(int N);

// ---- formatting ---------------------------------------------------------

// y-Laurent polynomial, ascending exponents, e.g. "20y^-2 -128y^-1 +216 -128y +20y^2".
std::string format_y_poly(const std::map<long, Rat>& poly);
// Integer-exponent series, e.g. "20 + 2y^-1 + 2y + q(...)".
std::string format_series(const JacobiSeries& s, int max_order);
// The y-polynomial at an integer q-order (requires rational coefficients).
std::map<long, Rat> y_poly_at(const JacobiSeries& s, long q_order);

}  // namespace k3z3::genus

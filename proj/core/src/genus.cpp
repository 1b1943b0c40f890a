#include "k3z3/genus.hpp"

#include <climits>
#include <sstream>
#include <stdexcept>

namespace k3z3::genus {

// ---- CycloNumber --------------------------------------------------------

CycloNumber CycloNumber::zero() { return CycloNumber{}; }

CycloNumber CycloNumber::one() {
    CycloNumber r;
    r.c[0] = 1;
    return r;
}

CycloNumber CycloNumber::from_rat(const Rat& x) {
    CycloNumber r;
    r.c[0] = x;
    return r;
}

namespace {

// reduce a degree-<15 coefficient vector modulo x^8 = x^4 - 1
CycloNumber reduce15(std::array<Rat, 15> v) {
    for (int d = 14; d >= 8; --d) {
        if (v[d] == 0) continue;
        v[d - 4] += v[d];
        v[d - 8] -= v[d];
        v[d] = 0;
    }
    CycloNumber r;
    for (int i = 0; i < 8; ++i) r.c[i] = v[i];
    return r;
}

}  // namespace

CycloNumber CycloNumber::zeta_pow(long k) {
    k %= 24;
    if (k < 0) k += 24;
    CycloNumber r = one();
    while (k > 0) {
        long step = k >= 7 ? 7 : k;  // multiply by x^step, degree stays < 15
        std::array<Rat, 15> v{};
        for (int i = 0; i < 8; ++i) v[i + step] = r.c[i];
        r = reduce15(v);
        k -= step;
    }
    return r;
}

bool CycloNumber::is_zero() const {
    for (const Rat& x : c)
        if (x != 0) return false;
    return true;
}

bool CycloNumber::is_rational() const {
    for (int i = 1; i < 8; ++i)
        if (c[i] != 0) return false;
    return true;
}

Rat CycloNumber::rational_value() const {
    if (!is_rational()) throw std::logic_error("not a rational cyclotomic number");
    return c[0];
}

CycloNumber CycloNumber::conj() const {
    CycloNumber r;
    for (int i = 0; i < 8; ++i) {
        if (c[i] == 0) continue;
        CycloNumber p = zeta_pow((24 - i) % 24);
        for (int j = 0; j < 8; ++j) r.c[j] += c[i] * p.c[j];
    }
    return r;
}

CycloNumber CycloNumber::operator+(const CycloNumber& o) const {
    CycloNumber r;
    for (int i = 0; i < 8; ++i) r.c[i] = c[i] + o.c[i];
    return r;
}

CycloNumber CycloNumber::operator-(const CycloNumber& o) const {
    CycloNumber r;
    for (int i = 0; i < 8; ++i) r.c[i] = c[i] - o.c[i];
    return r;
}

CycloNumber CycloNumber::operator*(const CycloNumber& o) const {
    std::array<Rat, 15> v{};
    for (int i = 0; i < 8; ++i) {
        if (c[i] == 0) continue;
        for (int j = 0; j < 8; ++j) v[i + j] += c[i] * o.c[j];
    }
    return reduce15(v);
}

CycloNumber CycloNumber::operator*(const Rat& s) const {
    CycloNumber r;
    for (int i = 0; i < 8; ++i) r.c[i] = c[i] * s;
    return r;
}

namespace {

using Poly = std::vector<Rat>;  // coefficient list, may carry trailing zeros

int pdeg(const Poly& p) {
    for (int i = int(p.size()) - 1; i >= 0; --i)
        if (p[i] != 0) return i;
    return -1;
}

// a = q*b + r
void pdivmod(const Poly& a, const Poly& b, Poly& q, Poly& r) {
    int db = pdeg(b);
    if (db < 0) throw std::logic_error("division by zero polynomial");
    r = a;
    q.assign(a.size(), Rat(0));
    for (int d = pdeg(r); d >= db; d = pdeg(r)) {
        Rat f = r[d] / b[db];
        q[d - db] += f;
        for (int i = 0; i <= db; ++i) r[d - db + i] -= f * b[i];
    }
}

}  // namespace

CycloNumber CycloNumber::inverse() const {
    if (is_zero()) throw std::invalid_argument("inverse of zero");
    // extended Euclid for gcd(a, phi24) = 1: u*a + v*phi = 1
    Poly a(c.begin(), c.end());
    Poly phi(9, Rat(0));
    phi[8] = 1;
    phi[4] = -1;
    phi[0] = 1;
    Poly r0 = phi, r1 = a;
    Poly u0(9, Rat(0)), u1(9, Rat(0));
    u1[0] = 1;  // coefficients of a in the combination
    while (pdeg(r1) > 0) {
        Poly q, rem;
        pdivmod(r0, r1, q, rem);
        // u2 = u0 - q*u1
        Poly u2(16, Rat(0));
        for (size_t i = 0; i < u0.size(); ++i) u2[i] += u0[i];
        for (int i = 0; i <= pdeg(q); ++i)
            for (int j = 0; j <= pdeg(u1); ++j) u2[i + j] -= q[i] * u1[j];
        r0 = r1;
        r1 = rem;
        u0 = u1;
        u1 = u2;
    }
    if (pdeg(r1) != 0) throw std::logic_error("cyclotomic element not invertible");
    Rat lead = r1[0];
    std::array<Rat, 15> v{};
    for (int i = 0; i < 15 && i < int(u1.size()); ++i) v[i] = u1[i] / lead;
    for (size_t i = 15; i < u1.size(); ++i)
        if (u1[i] != 0) throw std::logic_error("inverse degree overflow");
    return reduce15(v);
}

// ---- JacobiSeries -------------------------------------------------------

void JacobiSeries::add_term(long q24, long y2, const CycloNumber& c) {
    if (q24 >= valid) return;
    auto key = std::make_pair(q24, y2);
    auto it = terms.find(key);
    if (it == terms.end()) {
        if (!c.is_zero()) terms.emplace(key, c);
    } else {
        it->second = it->second + c;
        if (it->second.is_zero()) terms.erase(it);
    }
}

CycloNumber JacobiSeries::coeff(long q24, long y2) const {
    auto it = terms.find({q24, y2});
    return it == terms.end() ? CycloNumber::zero() : it->second;
}

long JacobiSeries::min_q24() const { return terms.empty() ? valid : terms.begin()->first.first; }

bool JacobiSeries::is_zero_to_validity() const { return terms.empty(); }

JacobiSeries js_add(const JacobiSeries& a, const JacobiSeries& b) {
    JacobiSeries r;
    r.valid = std::min(a.valid, b.valid);
    for (const auto& [k, c] : a.terms) r.add_term(k.first, k.second, c);
    for (const auto& [k, c] : b.terms) r.add_term(k.first, k.second, c);
    return r;
}

JacobiSeries js_sub(const JacobiSeries& a, const JacobiSeries& b) {
    return js_add(a, js_scale(b, CycloNumber::from_rat(Rat(-1))));
}

JacobiSeries js_mul(const JacobiSeries& a, const JacobiSeries& b) {
    JacobiSeries r;
    if (a.terms.empty() || b.terms.empty()) {
        r.valid = LONG_MAX / 4;
        return r;
    }
    r.valid = std::min(a.valid + b.min_q24(), b.valid + a.min_q24());
    for (const auto& [ka, ca] : a.terms)
        for (const auto& [kb, cb] : b.terms) {
            long q = ka.first + kb.first;
            if (q >= r.valid) continue;
            r.add_term(q, ka.second + kb.second, ca * cb);
        }
    return r;
}

JacobiSeries js_scale(const JacobiSeries& a, const CycloNumber& s) {
    JacobiSeries r;
    r.valid = a.valid;
    for (const auto& [k, c] : a.terms) r.add_term(k.first, k.second, c * s);
    return r;
}

JacobiSeries series_divide(const JacobiSeries& a, const JacobiSeries& b) {
    if (b.terms.empty()) throw std::invalid_argument("division by zero series");
    long m = b.min_q24();
    // the lowest q-level of b must be a single monomial
    auto lead_it = b.terms.begin();
    auto next_it = std::next(lead_it);
    if (next_it != b.terms.end() && next_it->first.first == m)
        throw std::invalid_argument("divisor leading q-level is not a monomial");
    long wy = lead_it->first.second;
    CycloNumber lead_inv = lead_it->second.inverse();

    JacobiSeries r;
    r.valid = std::min(a.valid, b.valid) - m;
    JacobiSeries rem = a;
    while (!rem.terms.empty()) {
        long e = rem.min_q24();
        if (e - m >= r.valid) break;
        // clear the whole lowest q-level
        std::vector<std::pair<long, CycloNumber>> level;
        for (auto it = rem.terms.begin(); it != rem.terms.end() && it->first.first == e; ++it)
            level.emplace_back(it->first.second, it->second);
        for (const auto& [y2, c] : level) {
            CycloNumber t = c * lead_inv;
            r.add_term(e - m, y2 - wy, t);
            for (const auto& [kb, cb] : b.terms) {
                long q = e - m + kb.first;
                if (q >= rem.valid) continue;
                rem.add_term(q, y2 - wy + kb.second, CycloNumber::zero() - t * cb);
            }
        }
        if (!rem.terms.empty() && rem.min_q24() <= e)
            throw std::logic_error("division failed to eliminate the lowest level");
    }
    return r;
}

JacobiSeries specialize_z0(const JacobiSeries& a) {
    JacobiSeries r;
    r.valid = a.valid;
    for (const auto& [k, c] : a.terms) r.add_term(k.first, 0, c);
    return r;
}

// ---- theta functions ----------------------------------------------------

JacobiSeries theta_series(const ThetaSpec& spec, int N) {
    JacobiSeries r;
    r.valid = 24L * N + 1;
    long R = 24L * N + std::abs(spec.a6) + 16;
    for (long n = -R; n <= R; ++n) {
        long m = 2 * n + spec.alpha2;
        long q24 = 3 * m * m + 2 * m * spec.a6;
        if (q24 >= r.valid) continue;
        r.add_term(q24, m, CycloNumber::zeta_pow(2 * m * (spec.b6 + 3L * spec.beta2)));
    }
    return r;
}

JacobiSeries theta1(int a6, int b6, int N) {
    return js_scale(theta_series(ThetaSpec{1, 1, a6, b6}, N),
                    CycloNumber::from_rat(Rat(-1)));
}

JacobiSeries theta2(int N) { return theta_series(ThetaSpec{1, 0, 0, 0}, N); }
JacobiSeries theta3(int N) { return theta_series(ThetaSpec{0, 0, 0, 0}, N); }
JacobiSeries theta4(int N) { return theta_series(ThetaSpec{0, 1, 0, 0}, N); }

// ---- the genera ---------------------------------------------------------

JacobiSeries ellk3(int N) {
    int M = N + 1;  // computation margin
    JacobiSeries sum;
    sum.valid = LONG_MAX / 4;
    for (int i = 2; i <= 4; ++i) {
        JacobiSeries th = i == 2 ? theta2(M) : i == 3 ? theta3(M) : theta4(M);
        JacobiSeries quot = series_divide(th, specialize_z0(th));
        sum = js_add(sum, js_mul(quot, quot));
    }
    return js_scale(sum, CycloNumber::from_rat(Rat(8)));
}

JacobiSeries sector_quotient(int l, int m, int N) {
    int M = N + 2;
    JacobiSeries f1 = theta1(2 * l, 2 * m, M);
    JacobiSeries f2 = theta1(-2 * l, -2 * m, M);
    JacobiSeries num = js_mul(f1, f2);
    JacobiSeries den = js_mul(specialize_z0(f1), specialize_z0(f2));
    return series_divide(num, den);
}

JacobiSeries orbifold_genus(int N) {
    JacobiSeries sum;
    sum.valid = LONG_MAX / 4;
    for (int l = 0; l < 3; ++l)
        for (int m = 0; m < 3; ++m) {
            if (l == 0 && m == 0) continue;
            sum = js_add(sum, sector_quotient(l, m, N));
        }
    return js_scale(sum, CycloNumber::from_rat(Rat(3)));
}

// ---- specializations and verification ----------------------------------

std::map<long, Rat> y_poly_at(const JacobiSeries& s, long q_order) {
    std::map<long, Rat> poly;
    for (const auto& [k, c] : s.terms) {
        if (k.first != 24 * q_order) continue;
        if (k.second % 2 != 0) throw std::logic_error("half-integer y-exponent");
        Rat v = c.rational_value();
        if (v != 0) poly[k.second / 2] = v;
    }
    return poly;
}

SpecializationReport specializations(int N) {
    SpecializationReport r;
    JacobiSeries E = ellk3(N);

    JacobiSeries at1 = specialize_z0(E);
    r.euler = at1.coeff(0, 0).rational_value();
    r.euler_constant = true;
    for (const auto& [k, c] : at1.terms)
        if (k.first != 0 && !c.is_zero()) r.euler_constant = false;

    CycloNumber m1 = CycloNumber::zero();
    for (const auto& [k, c] : E.terms)
        if (k.first == 0) m1 = m1 + c * CycloNumber::zeta_pow(6 * k.second);
    r.at_minus_one = m1.rational_value();

    // y -> -q^(1/2) and an overall factor q^(1/2): constant term
    CycloNumber hol = CycloNumber::zero();
    for (const auto& [k, c] : E.terms)
        if (k.first + 6 * k.second + 12 == 0) hol = hol + c * CycloNumber::zeta_pow(6 * k.second);
    r.holomorphic = hol.rational_value();

    r.pass = r.euler == 24 && r.euler_constant && r.at_minus_one == 16 && r.holomorphic == -2;
    if (!r.pass) r.failure = "specialization check failed";
    return r;
}

GenusReport verify_genus(int N) {
    GenusReport r;
    JacobiSeries E = ellk3(N);
    JacobiSeries O = orbifold_genus(N);

    std::map<long, Rat> q0{{-1, 2}, {0, 20}, {1, 2}};
    std::map<long, Rat> q1{{-2, 20}, {-1, -128}, {0, 216}, {1, -128}, {2, 20}};
    r.q0_matches = y_poly_at(E, 0) == q0;
    r.q1_matches = N >= 1 && y_poly_at(E, 1) == q1;

    JacobiSeries diff = js_sub(O, E);
    r.orbifold_equals_k3 = true;
    for (const auto& [k, c] : diff.terms)
        if (k.first <= 24L * N && !c.is_zero()) r.orbifold_equals_k3 = false;

    r.even_in_y = r.integral = true;
    for (const JacobiSeries* s : {&E, &O})
        for (const auto& [k, c] : s->terms) {
            if (!(s->coeff(k.first, -k.second) == c)) r.even_in_y = false;
            if (!c.is_rational() || !is_integer(c.rational_value())) r.integral = false;
        }

    // index-1 elliptic transformation: q y^2 E(tau, z + tau) = E(tau, z)
    r.elliptic_transform = true;
    for (const auto& [k, c] : E.terms) {
        long q = k.first + 12 * k.second + 24;
        long y = k.second + 4;
        if (q < E.valid && !(E.coeff(q, y) == c)) r.elliptic_transform = false;
    }

    r.theta1_vanishes_at_z0 = specialize_z0(theta1(0, 0, N)).is_zero_to_validity();

    r.sector_value_9 = true;
    for (int l = 0; l < 3; ++l)
        for (int m = 0; m < 3; ++m) {
            if (l == 0 && m == 0) continue;
            JacobiSeries sq = specialize_z0(sector_quotient(l, m, N));
            for (const auto& [k, c] : sq.terms) {
                Rat expect = k.first == 0 ? Rat(1) : Rat(0);
                if (!(c == CycloNumber::from_rat(expect))) r.sector_value_9 = false;
            }
            if (!(sq.coeff(0, 0) == CycloNumber::one())) r.sector_value_9 = false;
        }

    r.pass = r.q0_matches && r.q1_matches && r.orbifold_equals_k3 && r.even_in_y && r.integral &&
             r.elliptic_transform && r.theta1_vanishes_at_z0 && r.sector_value_9;
    if (!r.pass) r.failure = "genus check failed";
    return r;
}

// ---- formatting ---------------------------------------------------------

namespace {

std::string y_term(long exp, const Rat& coef, bool lead, bool spaced_sign = false) {
    std::ostringstream os;
    Rat a = coef;
    if (lead) {
        if (a < 0) {
            os << '-';
            a = -a;
        }
    } else {
        os << (a < 0 ? '-' : '+');
        if (spaced_sign) os << ' ';
        if (a < 0) a = -a;
    }
    if (a != 1 || exp == 0) os << rat_to_string(a);
    if (exp != 0) {
        os << 'y';
        if (exp != 1) os << '^' << exp;
    }
    return os.str();
}

}  // namespace

std::string format_y_poly(const std::map<long, Rat>& poly) {
    if (poly.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [e, c] : poly) {
        if (!first) out += ' ';
        out += y_term(e, c, first);
        first = false;
    }
    return out;
}

std::string format_series(const JacobiSeries& s, int max_order) {
    // constant-first layout per q-order: "20 + 2y^-1 + 2y + q(...) + ..."
    std::string out;
    bool any = false;
    for (long n = 0; n <= max_order; ++n) {
        if (24 * n >= s.valid) break;
        auto poly = y_poly_at(s, n);
        if (poly.empty()) continue;
        std::string grp;
        bool first = true;
        if (auto it = poly.find(0); it != poly.end()) {
            grp += y_term(0, it->second, true, true);
            first = false;
        }
        for (const auto& [e, c] : poly) {
            if (e == 0) continue;
            if (!first) grp += ' ';
            grp += y_term(e, c, first, true);
            first = false;
        }
        if (any) out += " + ";
        if (n == 0)
            out += grp;
        else if (n == 1)
            out += "q(" + grp + ")";
        else
            out += "q^" + std::to_string(n) + "(" + grp + ")";
        any = true;
    }
    return any ? out : "0";
}

}  // namespace k3z3::genus

#include "k3z3/orbifold.hpp"

#include <algorithm>
#include <set>

namespace k3z3::orbifold {

namespace {

int mod3(int x) { return ((x % 3) + 3) % 3; }

QVec zero_vec() { return QVec(kAmbientDim, Rat(0)); }

bool member(const QMat& basis, const QVec& v) {
    return solve_left_integer(basis, v).has_value();
}

}  // namespace

QMat ambient_gram() {
    QMat g(kAmbientDim, kAmbientDim);
    // K block on kappa_1..kappa_4
    const int K[4][4] = {{2, 1, 0, 0}, {1, 2, 0, 0}, {0, 0, 0, 3}, {0, 0, 3, 0}};
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) g(i, j) = K[i][j];
    // nine orthogonal A2(-1) blocks
    for (int t1 = 0; t1 < 3; ++t1)
        for (int t2 = 0; t2 < 3; ++t2) {
            int a = e_index(t1, t2, 1), b = e_index(t1, t2, 2);
            g(a, a) = -2;
            g(b, b) = -2;
            g(a, b) = 1;
            g(b, a) = 1;
        }
    return g;
}

std::vector<std::string> coordinate_labels() {
    std::vector<std::string> out(kAmbientDim);
    for (int j = 1; j <= 4; ++j) out[kappa_index(j)] = "kappa_" + std::to_string(j);
    for (int t1 = 0; t1 < 3; ++t1)
        for (int t2 = 0; t2 < 3; ++t2)
            for (int j = 1; j <= 2; ++j)
                out[e_index(t1, t2, j)] = "E_{" + std::to_string(t1) + std::to_string(t2) +
                                          "}^(" + std::to_string(j) + ")";
    return out;
}

std::vector<std::pair<std::string, std::string>> kappa_provenance() {
    return {
        {"kappa_1", "(1/3) pi_*(mu_14 + mu_23 - 2 mu_13 + mu_24)"},
        {"kappa_2", "(1/3) pi_*(-mu_14 - mu_23 - mu_13 + 2 mu_24)"},
        {"kappa_3", "pi_* mu_12"},
        {"kappa_4", "pi_* mu_34"},
    };
}

bool AffineLine::contains(const FixedPointLabel& t) const {
    return points[0] == t || points[1] == t || points[2] == t;
}

std::vector<FixedPointLabel> all_labels() {
    std::vector<FixedPointLabel> out;
    for (int t1 = 0; t1 < 3; ++t1)
        for (int t2 = 0; t2 < 3; ++t2) out.push_back({t1, t2});
    return out;
}

AffineLine line_through(FixedPointLabel p, int d1, int d2) {
    if (mod3(d1) == 0 && mod3(d2) == 0) throw std::invalid_argument("zero direction");
    std::array<FixedPointLabel, 3> pts;
    for (int k = 0; k < 3; ++k) pts[k] = {mod3(p.t1 + k * d1), mod3(p.t2 + k * d2)};
    std::sort(pts.begin(), pts.end(), [](const FixedPointLabel& a, const FixedPointLabel& b) {
        return a.t1 != b.t1 ? a.t1 < b.t1 : a.t2 < b.t2;
    });
    return AffineLine{pts};
}

AffineLine shifted(const AffineLine& l, int s1, int s2) {
    const FixedPointLabel& p = l.points[0];
    const FixedPointLabel& q = l.points[1];
    return line_through({mod3(p.t1 + s1), mod3(p.t2 + s2)}, mod3(q.t1 - p.t1), mod3(q.t2 - p.t2));
}

std::vector<AffineLine> all_affine_lines() {
    std::vector<AffineLine> out;
    const int dirs[4][2] = {{0, 1}, {1, 0}, {1, 1}, {1, 2}};
    for (auto& d : dirs)
        for (const FixedPointLabel& p : all_labels()) {
            AffineLine l = line_through(p, d[0], d[1]);
            if (std::find(out.begin(), out.end(), l) == out.end()) out.push_back(l);
        }
    return out;
}

AffineLine line_L12() { return line_through({0, 0}, 0, 1); }
AffineLine line_L34() { return line_through({0, 0}, 1, 0); }
AffineLine line_L01() { return line_through({0, 0}, 1, 2); }
AffineLine line_L00() { return line_through({0, 0}, 1, 1); }

std::vector<AffineLine> parallels(const AffineLine& l) {
    std::vector<AffineLine> out;
    for (int s1 = 0; s1 < 3; ++s1)
        for (int s2 = 0; s2 < 3; ++s2) {
            AffineLine p = shifted(l, s1, s2);
            if (std::find(out.begin(), out.end(), p) == out.end()) out.push_back(p);
        }
    return out;
}

QVec kappa(int j) {
    QVec v = zero_vec();
    v[kappa_index(j)] = 1;
    return v;
}

QVec e_vec(int t1, int t2, int j) {
    QVec v = zero_vec();
    v[e_index(t1, t2, j)] = 1;
    return v;
}

QVec e_total(int t1, int t2) {
    QVec v = zero_vec();
    v[e_index(t1, t2, 1)] = 1;
    v[e_index(t1, t2, 2)] = 2;
    return v;
}

QVec line_sum(const AffineLine& l) {
    QVec v = zero_vec();
    for (const FixedPointLabel& t : l.points) v = v + e_total(t.t1, t.t2);
    return v;
}

QVec line_sum_third(const AffineLine& l) { return Rat(1, 3) * line_sum(l); }

QVec v_generator(int i) {
    switch (i) {
        case 1: return line_sum_third(line_L12()) - line_sum_third(shifted(line_L12(), 1, 0));
        case 2: return line_sum_third(line_L34()) - line_sum_third(shifted(line_L34(), 0, 1));
        case 3: {
            QVec v = zero_vec();
            for (const FixedPointLabel& t : all_labels()) v = v + e_total(t.t1, t.t2);
            return Rat(1, 3) * v;
        }
        default: throw std::invalid_argument("v index must be 1..3");
    }
}

QVec p_vector(int j) {
    switch (j) {
        case 1: return line_sum_third(line_L34()) + line_sum_third(line_L00());
        case 2: return line_sum_third(line_L12()) + line_sum_third(line_L34());
        case 3: return line_sum_third(line_L12()) + line_sum_third(line_L00());
        default: throw std::invalid_argument("p index must be 1..3");
    }
}

QVec k_vector(int j) {
    switch (j) {
        case 1: return Rat(1, 3) * (Rat(2) * kappa(1) - kappa(2) + kappa(3) + kappa(4));
        case 2: return Rat(1, 3) * (kappa(3) - kappa(4));
        case 3: return Rat(1, 3) * (Rat(2) * kappa(1) - kappa(2) - kappa(3) - kappa(4));
        default: throw std::invalid_argument("k index must be 1..3");
    }
}

namespace {

bool lines_parallel(const AffineLine& a, const AffineLine& b) {
    auto dir = [](const AffineLine& l) {
        int d1 = mod3(l.points[1].t1 - l.points[0].t1);
        int d2 = mod3(l.points[1].t2 - l.points[0].t2);
        if (d1 == 2 || (d1 == 0 && d2 == 2)) { d1 = mod3(-d1); d2 = mod3(-d2); }
        return std::pair<int, int>{d1, d2};
    };
    return dir(a) == dir(b);
}

}  // namespace

QVec glue_type_vector(int type, const AffineLine& parallel) {
    const AffineLine base = type == 1   ? line_L12()
                            : type == 2 ? line_L34()
                            : type == 3 ? line_L01()
                                        : line_L00();
    if (type < 1 || type > 4) throw std::invalid_argument("glue type must be 1..4");
    if (!lines_parallel(base, parallel))
        throw std::invalid_argument("line is not parallel to the base line of this type");
    switch (type) {
        case 1: return Rat(1, 3) * kappa(3) + line_sum_third(parallel);
        case 2: return Rat(1, 3) * kappa(4) - line_sum_third(parallel);
        case 3:
            return Rat(1, 3) * (kappa(1) - Rat(2) * kappa(2) + kappa(3) - kappa(4)) +
                   line_sum_third(parallel);
        default:
            return Rat(1, 3) * (Rat(2) * kappa(1) - kappa(2) + kappa(3) - kappa(4)) +
                   line_sum_third(parallel);
    }
}

QVec g_vector(int i) {
    switch (i) {
        case 1: return glue_type_vector(1, line_L12());
        case 2: return glue_type_vector(2, shifted(line_L34(), 0, 1));
        case 3: return glue_type_vector(3, shifted(line_L01(), 0, 1));
        case 4: return glue_type_vector(4, line_L00());
        case 5: return glue_type_vector(4, shifted(line_L00(), 0, 2));  // g4'
        default: throw std::invalid_argument("g index must be 1..5");
    }
}

Lattice build_R() {
    std::vector<QVec> rows;
    for (const FixedPointLabel& t : all_labels())
        for (int j = 1; j <= 2; ++j) rows.push_back(e_vec(t.t1, t.t2, j));
    return Lattice::in_ambient(QMat::from_rows(rows), ambient_gram());
}

Lattice build_K() {
    std::vector<QVec> rows;
    for (int j = 1; j <= 4; ++j) rows.push_back(kappa(j));
    return Lattice::in_ambient(QMat::from_rows(rows), ambient_gram());
}

Lattice build_P() {
    std::vector<QVec> rows;
    for (const FixedPointLabel& t : all_labels())
        for (int j = 1; j <= 2; ++j) rows.push_back(e_vec(t.t1, t.t2, j));
    for (int i = 1; i <= 3; ++i) rows.push_back(v_generator(i));
    QMat basis = row_basis(QMat::from_rows(rows));
    return Lattice::in_ambient(basis, ambient_gram());
}

Lattice build_P_dual() {
    std::vector<QVec> rows;
    for (const FixedPointLabel& t : all_labels())
        for (int j = 1; j <= 2; ++j) rows.push_back(e_vec(t.t1, t.t2, j));
    for (const AffineLine& l : all_affine_lines()) rows.push_back(line_sum_third(l));
    QMat basis = row_basis(QMat::from_rows(rows));
    return Lattice::in_ambient(basis, ambient_gram());
}

Lattice torus_invariant_lattice() {
    std::vector<QVec> rows;
    rows.push_back(Rat(-1) * kappa(1) - kappa(2));          // pi_*(mu_13 - mu_24)
    rows.push_back(kappa(1) - Rat(2) * kappa(2));           // pi_*(mu_14 + mu_23 - mu_24)
    rows.push_back(kappa(3));                               // pi_* mu_12
    rows.push_back(kappa(4));                               // pi_* mu_34
    return Lattice::in_ambient(QMat::from_rows(rows), ambient_gram());
}

GluedLattice build_H2X() {
    Lattice K = build_K();
    Lattice P = build_P();
    std::vector<QVec> src, img;
    for (int j = 1; j <= 3; ++j) {
        auto ks = K.from_ambient(k_vector(j));
        auto ps = P.from_ambient(p_vector(j));
        if (!ks || !ps) throw std::logic_error("glue generator outside rational span");
        src.push_back(*ks);
        img.push_back(*ps);
    }
    return glue(K, P, GlueMap{QMat::from_rows(src), QMat::from_rows(img)});
}

Lattice sigma_perp_lattice() {
    Lattice P = build_P();
    std::vector<QVec> rows;
    for (int i = 0; i < P.basis->rows(); ++i) rows.push_back(P.basis->row(i));
    rows.push_back(k_vector(2) + p_vector(2));
    QMat basis = row_basis(QMat::from_rows(rows));
    return Lattice::in_ambient(basis, ambient_gram());
}

std::pair<Lattice, QVec> transcendental_and_kahler() {
    std::vector<QVec> rows{kappa(1), kappa(2)};
    return {Lattice::in_ambient(QMat::from_rows(rows), ambient_gram()), kappa(3) + kappa(4)};
}

namespace {

bool is_a2_root_pair(const Rat& a, const Rat& b) {
    auto eq = [](const Rat& x, int v) { return x == v; };
    return (eq(a, 1) && eq(b, 0)) || (eq(a, -1) && eq(b, 0)) || (eq(a, 0) && eq(b, 1)) ||
           (eq(a, 0) && eq(b, -1)) || (eq(a, 1) && eq(b, 1)) || (eq(a, -1) && eq(b, -1));
}

// three distinct labels form an affine line iff they sum to zero mod 3
bool is_affine_line(const std::vector<FixedPointLabel>& pts) {
    if (pts.size() != 3) return false;
    int s1 = 0, s2 = 0;
    for (const auto& p : pts) { s1 += p.t1; s2 += p.t2; }
    std::set<std::pair<int, int>> distinct;
    for (const auto& p : pts) distinct.insert({p.t1, p.t2});
    return distinct.size() == 3 && s1 % 3 == 0 && s2 % 3 == 0;
}

}  // namespace

bool verify_min_norm_in_P_dual(std::string* detail) {
    auto fail = [&](const std::string& why) {
        if (detail) *detail = why;
        return false;
    };
    Lattice Pd = build_P_dual();
    Lattice P = build_P();
    auto sv = short_vectors(Pd, Rat(2));
    if (sv.empty()) return fail("no short vectors at all");
    int n_root = 0, n_simple = 0, n_line_shape = 0;
    for (const auto& s : sv) {
        if (s.norm != -2) return fail("nonzero vector of norm " + rat_to_string(s.norm));
        QVec coords(s.coords.size());
        for (size_t i = 0; i < s.coords.size(); ++i) coords[i] = Rat(s.coords[i]);
        QVec amb = Pd.to_ambient(coords);
        for (int j = 1; j <= 4; ++j)
            if (amb[kappa_index(j)] != 0) return fail("short vector meets the kappa block");
        bool integral = true;
        for (const Rat& c : amb)
            if (!is_integer(c)) { integral = false; break; }
        if (integral) {
            // must be a root of a single A2 block
            std::vector<FixedPointLabel> support;
            bool ok = true;
            for (const FixedPointLabel& t : all_labels()) {
                Rat a = amb[e_index(t.t1, t.t2, 1)], b = amb[e_index(t.t1, t.t2, 2)];
                if (a == 0 && b == 0) continue;
                support.push_back(t);
                if (!is_a2_root_pair(a, b)) ok = false;
            }
            if (!ok || support.size() != 1) return fail("integral norm-2 vector is not an A2 root");
            ++n_root;
            const FixedPointLabel& t = support[0];
            if ((amb[e_index(t.t1, t.t2, 1)] == 0) != (amb[e_index(t.t1, t.t2, 2)] == 0))
                ++n_simple;
        } else {
            // must be +-((1/3) sum_{L'} E_t - sum_{L'} delta_t (E^(1)+E^(2)))
            std::vector<FixedPointLabel> support;
            for (const FixedPointLabel& t : all_labels()) {
                Rat a = amb[e_index(t.t1, t.t2, 1)], b = amb[e_index(t.t1, t.t2, 2)];
                if (a != 0 || b != 0) support.push_back(t);
            }
            if (!is_affine_line(support))
                return fail("fractional norm-2 vector is not supported on an affine line");
            bool matched = false;
            for (int eps : {1, -1}) {
                bool ok = true;
                for (const FixedPointLabel& t : support) {
                    Rat a = eps * amb[e_index(t.t1, t.t2, 1)];
                    Rat b = eps * amb[e_index(t.t1, t.t2, 2)];
                    // the three minimal representatives of the coset of (1/3)E_t:
                    // (1/3)E_t, (1/3)E_t - E_t^(2), (1/3)E_t - E_t^(1) - E_t^(2)
                    bool m0 = a == Rat(1, 3) && b == Rat(2, 3);
                    bool m1 = a == Rat(1, 3) && b == Rat(-1, 3);
                    bool m2 = a == Rat(-2, 3) && b == Rat(-1, 3);
                    if (!m0 && !m1 && !m2) { ok = false; break; }
                }
                if (ok) { matched = true; break; }
            }
            if (!matched) return fail("fractional norm-2 vector fails the line-shape pattern");
            if (solve_left_integer(*P.basis, amb))
                return fail("line-shape vector unexpectedly lies in P");
            ++n_line_shape;
        }
    }
    if (n_root != 54) return fail("expected 54 A2 roots, found " + std::to_string(n_root));
    if (n_simple != 36) return fail("expected 36 roots of shape +-E_t^(j)");
    if (n_line_shape != 648)  // 12 lines x (+-) x 3 representatives at each of 3 points
        return fail("expected 648 line-shape vectors, found " + std::to_string(n_line_shape));
    return true;
}

bool verify_gluelist(std::string* detail) {
    auto fail = [&](const std::string& why) {
        if (detail) *detail = why;
        return false;
    };
    GluedLattice H = build_H2X();
    const QMat& HB = *H.result.basis;
    Lattice P = build_P();
    for (int type = 1; type <= 4; ++type) {
        const AffineLine base = type == 1   ? line_L12()
                                : type == 2 ? line_L34()
                                : type == 3 ? line_L01()
                                            : line_L00();
        for (const AffineLine& par : parallels(base))
            if (!member(HB, glue_type_vector(type, par)))
                return fail("type " + std::to_string(type) + " vector not in the glued lattice");
    }
    // wrong sign on type 2 must fail
    QVec bad = Rat(1, 3) * kappa(4) + line_sum_third(line_L34());
    if (member(HB, bad)) return fail("wrong-sign type-2 vector is unexpectedly a member");
    // differences of type-1 vectors lie in P
    auto pars = parallels(line_L12());
    for (size_t a = 0; a < pars.size(); ++a)
        for (size_t b = a + 1; b < pars.size(); ++b) {
            QVec d = glue_type_vector(1, pars[a]) - glue_type_vector(1, pars[b]);
            if (!member(*P.basis, d)) return fail("type-1 difference does not lie in P");
        }
    // glue vectors k_j + p_j and the kappa_1 - E_01 combination
    for (int j = 1; j <= 3; ++j)
        if (!member(HB, k_vector(j) + p_vector(j)))
            return fail("k_" + std::to_string(j) + " + p_" + std::to_string(j) + " not a member");
    QVec combo = Rat(-1) * g_vector(1) + g_vector(2) - g_vector(3) + g_vector(4) + g_vector(5);
    QVec expect = kappa(1) - e_total(0, 1);
    if (!(combo == expect)) return fail("g-vector combination does not equal kappa_1 - E_01");
    if (!member(HB, expect)) return fail("kappa_1 - E_01 not a member");
    return true;
}

}  // namespace k3z3::orbifold

#include "k3z3/symmetry.hpp"

namespace k3z3::symmetry {

using namespace orbifold;

namespace {

int mod3(int x) { return ((x % 3) + 3) % 3; }

// btilde^p applied to a label
std::array<int, 2> rot(int p, std::array<int, 2> t) {
    for (int i = 0; i < ((p % 4) + 4) % 4; ++i) t = {mod3(-t[1]), t[0]};
    return t;
}

}  // namespace

AffineSymmetry alpha1() { return {0, {1, 0}}; }
AffineSymmetry alpha2() { return {0, {0, 1}}; }
AffineSymmetry beta() { return {1, {0, 0}}; }

std::array<int, 2> apply_affine(const AffineSymmetry& g, std::array<int, 2> t) {
    t = rot(g.linear_power, t);
    return {mod3(t[0] + g.translation[0]), mod3(t[1] + g.translation[1])};
}

AffineSymmetry compose(const AffineSymmetry& g, const AffineSymmetry& h) {
    std::array<int, 2> ht = rot(g.linear_power, h.translation);
    return {(g.linear_power + h.linear_power) % 4,
            {mod3(g.translation[0] + ht[0]), mod3(g.translation[1] + ht[1])}};
}

AffineSymmetry inverse(const AffineSymmetry& g) {
    int l = (4 - g.linear_power) % 4;
    std::array<int, 2> t = rot(l, g.translation);
    return {l, {mod3(-t[0]), mod3(-t[1])}};
}

int element_order(const AffineSymmetry& g) {
    AffineSymmetry e{};
    AffineSymmetry x = g;
    int n = 1;
    while (!(x == e)) {
        x = compose(x, g);
        ++n;
        if (n > 36) throw std::logic_error("element order exceeds group order");
    }
    return n;
}

std::vector<AffineSymmetry> group_elements() {
    std::vector<AffineSymmetry> out;
    for (int l = 0; l < 4; ++l)
        for (int t1 = 0; t1 < 3; ++t1)
            for (int t2 = 0; t2 < 3; ++t2) out.push_back({l, {t1, t2}});
    return out;
}

QMat lattice_action(const AffineSymmetry& g) {
    QMat m(kAmbientDim, kAmbientDim);
    bool swap34 = g.linear_power % 2 == 1;
    bool swapj = g.linear_power % 2 == 1;
    m(kappa_index(1), kappa_index(1)) = 1;
    m(kappa_index(2), kappa_index(2)) = 1;
    m(kappa_index(3), kappa_index(swap34 ? 4 : 3)) = 1;
    m(kappa_index(4), kappa_index(swap34 ? 3 : 4)) = 1;
    for (int t1 = 0; t1 < 3; ++t1)
        for (int t2 = 0; t2 < 3; ++t2) {
            std::array<int, 2> img = apply_affine(g, {t1, t2});
            for (int j = 1; j <= 2; ++j) {
                int jp = swapj ? 3 - j : j;
                m(e_index(t1, t2, j), e_index(img[0], img[1], jp)) = 1;
            }
        }
    return m;
}

namespace {

bool member(const QMat& basis, const QVec& v) {
    return solve_left_integer(basis, v).has_value();
}

// sign of the image of w modulo K (+) P; 0 when neither +-w matches
int coset_sign(const QMat& kp_basis, const QVec& img, const QVec& w) {
    if (member(kp_basis, img - w)) return 1;
    if (member(kp_basis, img + w)) return -1;
    return 0;
}

}  // namespace

SymmetryReport verify_action_matrix(const QMat& m) {
    SymmetryReport rep;
    QMat G = ambient_gram();
    rep.gram_preserved = m * G * m.transpose() == G;

    Lattice P = build_P();
    Lattice K = build_K();
    rep.p_preserved = true;
    std::vector<QVec> p_img;
    for (int i = 0; i < P.basis->rows(); ++i) {
        QVec img = P.basis->row(i) * m;
        auto c = solve_left_integer(*P.basis, img);
        if (!c) {
            rep.p_preserved = false;
            if (rep.failure.empty()) rep.failure = "P basis row " + std::to_string(i);
            break;
        }
        QVec cq(c->size());
        for (size_t j = 0; j < c->size(); ++j) cq[j] = Rat((*c)[j]);
        p_img.push_back(cq);
    }
    if (rep.p_preserved) {
        Rat d = QMat::from_rows(p_img).det();
        rep.p_preserved = d == 1 || d == -1;
        if (!rep.p_preserved && rep.failure.empty()) rep.failure = "P image has index > 1";
    }
    rep.k_preserved = true;
    for (int i = 0; i < K.basis->rows(); ++i)
        if (!member(*K.basis, K.basis->row(i) * m)) {
            rep.k_preserved = false;
            if (rep.failure.empty()) rep.failure = "K basis row " + std::to_string(i);
            break;
        }

    GluedLattice H = build_H2X();
    std::vector<QVec> kp_rows;
    for (int i = 0; i < K.basis->rows(); ++i) kp_rows.push_back(K.basis->row(i));
    for (int i = 0; i < P.basis->rows(); ++i) kp_rows.push_back(P.basis->row(i));
    QMat kp_basis = row_basis(QMat::from_rows(kp_rows));

    rep.glue_preserved = true;
    for (int j = 1; j <= 3; ++j) {
        QVec w = k_vector(j) + p_vector(j);
        QVec img = w * m;
        if (!member(*H.result.basis, img)) {
            rep.glue_preserved = false;
            if (rep.failure.empty()) rep.failure = "glue vector k_" + std::to_string(j);
        }
        rep.disc_signs.push_back(coset_sign(kp_basis, img, w));
    }
    bool signs_ok = true;
    for (int s : rep.disc_signs)
        if (s == 0) signs_ok = false;
    rep.pass = rep.gram_preserved && rep.p_preserved && rep.k_preserved &&
               rep.glue_preserved && signs_ok;
    if (!rep.pass && rep.failure.empty()) rep.failure = "gram or discriminant action";
    return rep;
}

SymmetryReport verify_symmetry(const AffineSymmetry& g) {
    return verify_action_matrix(lattice_action(g));
}

bool verify_faithfulness() {
    auto elems = group_elements();
    std::vector<QMat> actions;
    for (const auto& g : elems) actions.push_back(lattice_action(g));
    for (size_t i = 0; i < elems.size(); ++i)
        for (size_t j = i + 1; j < elems.size(); ++j) {
            if (actions[i] == actions[j]) return false;
            bool same_affine = true;
            for (const auto& t : all_labels())
                if (apply_affine(elems[i], {t.t1, t.t2}) !=
                    apply_affine(elems[j], {t.t1, t.t2})) {
                    same_affine = false;
                    break;
                }
            if (same_affine) return false;
        }
    return true;
}

bool verify_homomorphism() {
    auto elems = group_elements();
    std::vector<QMat> actions;
    for (const auto& g : elems) actions.push_back(lattice_action(g));
    for (size_t i = 0; i < elems.size(); ++i)
        for (size_t j = 0; j < elems.size(); ++j) {
            AffineSymmetry gh = compose(elems[i], elems[j]);
            // rows act on the right, so composition reverses the product
            if (!(lattice_action(gh) == actions[j] * actions[i])) return false;
        }
    return true;
}

bool verify_sigma_fixed() {
    QVec k34 = kappa(3) + kappa(4);
    for (const auto& g : group_elements()) {
        QMat m = lattice_action(g);
        if (!(kappa(1) * m == kappa(1))) return false;
        if (!(kappa(2) * m == kappa(2))) return false;
        if (!(k34 * m == k34)) return false;
    }
    return true;
}

bool verify_roots_in_sigma_perp(std::string* detail) {
    auto fail = [&](const std::string& why) {
        if (detail) *detail = why;
        return false;
    };
    Lattice S = sigma_perp_lattice();
    if (S.rank != 19) return fail("sigma-perp lattice has rank " + std::to_string(S.rank));
    Classification c = classify(S);
    if (c.pos != 0 || c.neg != 19) return fail("sigma-perp lattice is not negative definite");
    Lattice P = build_P();
    auto sv = short_vectors(S, Rat(2));
    int roots = 0;
    for (const auto& s : sv) {
        if (s.norm != -2) continue;
        QVec coords(s.coords.size());
        for (size_t i = 0; i < s.coords.size(); ++i) coords[i] = Rat(s.coords[i]);
        QVec amb = S.to_ambient(coords);
        if (!member(*P.basis, amb)) return fail("a root of sigma-perp lies outside P");
        ++roots;
    }
    if (roots != 54) return fail("expected 54 roots, found " + std::to_string(roots));
    return true;
}

}  // namespace k3z3::symmetry

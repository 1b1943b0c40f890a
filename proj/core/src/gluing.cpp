#include "k3z3/gluing.hpp"

#include <map>
#include <set>

namespace k3z3 {

namespace {

bool in_dual(const Lattice& L, const QVec& x) {
    QVec y = x * L.gram;
    for (const Rat& c : y)
        if (!is_integer(c)) return false;
    return true;
}

std::vector<Rat> coset_key(const QVec& x) {
    std::vector<Rat> key;
    key.reserve(x.size());
    for (const Rat& c : x) key.push_back(mod_pos(c, Rat(1)));
    return key;
}

// Number of distinct cosets of the subgroup of L*/L generated by the rows.
Int generated_coset_count(const QMat& gens) {
    std::set<std::vector<Rat>> seen;
    std::vector<QVec> frontier{QVec(gens.cols(), Rat(0))};
    seen.insert(coset_key(frontier[0]));
    while (!frontier.empty()) {
        std::vector<QVec> next;
        for (const QVec& x : frontier)
            for (int i = 0; i < gens.rows(); ++i) {
                QVec y = x + gens.row(i);
                auto key = coset_key(y);
                if (seen.insert(key).second) {
                    QVec canon(key.begin(), key.end());
                    next.push_back(canon);
                }
            }
        frontier = std::move(next);
    }
    return Int(seen.size());
}

}  // namespace

bool check_glue_compatible(const Lattice& lambda, const Lattice& v, const GlueMap& gm,
                           std::string* reason) {
    auto fail = [&](const std::string& why) {
        if (reason) *reason = why;
        return false;
    };
    if (gm.src.rows() != gm.img.rows()) return fail("generator count mismatch");
    for (int i = 0; i < gm.src.rows(); ++i) {
        if (!in_dual(lambda, gm.src.row(i))) return fail("source lift not in dual");
        if (!in_dual(v, gm.img.row(i))) return fail("image lift not in dual");
        if (coset_order(gm.src.row(i)) != coset_order(gm.img.row(i)))
            return fail("coset order mismatch at generator " + std::to_string(i));
        Rat qs = disc_q(lambda, gm.src.row(i));
        Rat qt = disc_q(v, gm.img.row(i));
        if (mod_pos(qs + qt, Rat(2)) != 0)
            return fail("q mismatch at generator " + std::to_string(i));
        for (int j = i + 1; j < gm.src.rows(); ++j) {
            Rat bs = disc_b(lambda, gm.src.row(i), gm.src.row(j));
            Rat bt = disc_b(v, gm.img.row(i), gm.img.row(j));
            if (mod_pos(bs + bt, Rat(1)) != 0)
                return fail("b mismatch at pair " + std::to_string(i) + "," + std::to_string(j));
        }
    }
    Int order_l = abs(lambda.gram.det().get_num());
    Int order_v = abs(v.gram.det().get_num());
    if (order_l != order_v) return fail("discriminant group sizes differ");
    if (generated_coset_count(gm.src) != order_l) return fail("source lifts do not generate");
    if (generated_coset_count(gm.img) != order_v) return fail("image lifts do not generate");
    return true;
}

GluedLattice glue(const Lattice& lambda, const Lattice& v, const GlueMap& gm) {
    std::string why;
    if (!check_glue_compatible(lambda, v, gm, &why))
        throw std::invalid_argument("incompatible glue map: " + why);

    bool common = lambda.has_ambient() && v.has_ambient() &&
                  lambda.ambient_gram == v.ambient_gram;
    if (common) {
        // bases must be mutually orthogonal in the shared ambient space
        QMat cross = *lambda.basis * *lambda.ambient_gram * v.basis->transpose();
        for (int i = 0; i < cross.rows() && common; ++i)
            for (int j = 0; j < cross.cols(); ++j)
                if (cross(i, j) != 0) { common = false; break; }
    }

    QMat amb_gram, basis_l, basis_v;
    if (common) {
        amb_gram = *lambda.ambient_gram;
        basis_l = *lambda.basis;
        basis_v = *v.basis;
    } else {
        int n = lambda.rank + v.rank;
        amb_gram = QMat(n, n);
        for (int i = 0; i < lambda.rank; ++i)
            for (int j = 0; j < lambda.rank; ++j) amb_gram(i, j) = lambda.gram(i, j);
        for (int i = 0; i < v.rank; ++i)
            for (int j = 0; j < v.rank; ++j)
                amb_gram(lambda.rank + i, lambda.rank + j) = v.gram(i, j);
        basis_l = QMat(lambda.rank, n);
        for (int i = 0; i < lambda.rank; ++i) basis_l(i, i) = 1;
        basis_v = QMat(v.rank, n);
        for (int i = 0; i < v.rank; ++i) basis_v(i, lambda.rank + i) = 1;
    }

    std::vector<QVec> gens;
    for (int i = 0; i < basis_l.rows(); ++i) gens.push_back(basis_l.row(i));
    for (int i = 0; i < basis_v.rows(); ++i) gens.push_back(basis_v.row(i));
    std::vector<QVec> gvecs;
    for (int i = 0; i < gm.src.rows(); ++i) {
        QVec g = gm.src.row(i) * basis_l + gm.img.row(i) * basis_v;
        gvecs.push_back(g);
        gens.push_back(g);
    }
    QMat genmat = QMat::from_rows(gens);
    QMat basis = row_basis(genmat);

    GluedLattice gl;
    gl.lambda = lambda;
    gl.v = v;
    gl.glue = gm;
    gl.result = Lattice::in_ambient(basis, amb_gram);
    gl.glue_vectors = QMat::from_rows(gvecs);
    gl.generators = genmat;
    return gl;
}

std::optional<QMat> extend_automorphism(const QMat& phi, const GluedLattice& gl) {
    const Lattice& lam = gl.lambda;
    const Lattice& v = gl.v;
    if (!(phi * lam.gram * phi.transpose() == lam.gram))
        throw std::invalid_argument("phi is not an isometry");

    const QMat& src = gl.glue.src;
    const QMat& img = gl.glue.img;
    int k = src.rows();

    // coset of phi(src_i) expressed over the src generators
    QMat stack = src.vstack(QMat::identity(lam.rank));
    std::vector<QVec> targets;
    for (int i = 0; i < k; ++i) {
        QVec xi = src.row(i) * phi;
        auto c = solve_left_integer(stack, xi);
        if (!c) throw std::logic_error("phi does not preserve the dual lattice");
        QVec t(v.rank, Rat(0));
        for (int j = 0; j < k; ++j) t = t + Rat((*c)[j]) * img.row(j);
        targets.push_back(t);
    }

    auto matches = [&](const QMat& psi) {
        for (int i = 0; i < k; ++i) {
            QVec d = img.row(i) * psi - targets[i];
            for (const Rat& c : d)
                if (!is_integer(c)) return false;
        }
        return true;
    };

    QMat id = QMat::identity(v.rank);
    if (matches(id)) return id;
    QMat neg = id * Rat(-1);
    if (matches(neg)) return neg;
    for (const QMat& psi : lattice_automorphisms(v))
        if (matches(psi)) return psi;
    return std::nullopt;
}

}  // namespace k3z3

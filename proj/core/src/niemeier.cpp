#include "k3z3/niemeier.hpp"

#include <map>
#include <stdexcept>

namespace k3z3::niemeier {

using orbifold::e_index;

QMat niemeier_gram() {
    QMat g(kDim, kDim);
    for (int j = 1; j <= 12; ++j) {
        g(nt_index(j, 1), nt_index(j, 1)) = 2;
        g(nt_index(j, 2), nt_index(j, 2)) = 2;
        g(nt_index(j, 1), nt_index(j, 2)) = -1;
        g(nt_index(j, 2), nt_index(j, 1)) = -1;
    }
    return g;
}

QVec nt_e(int j, int l) {
    QVec v(kDim, Rat(0));
    v[nt_index(j, l)] = 1;
    return v;
}

QVec nt_e_total(int j) { return nt_e(j, 1) + Rat(2) * nt_e(j, 2); }

QVec w_vector(int i) {
    codes::TernaryWord row = codes::c12_generator_row(i - 1);
    QVec v(kDim, Rat(0));
    for (int j = 1; j <= 12; ++j)
        if (row[j - 1] != 0) v = v + Rat(row[j - 1], 3) * nt_e_total(j);
    return v;
}

Lattice build_R_tilde() {
    std::vector<QVec> rows;
    for (int j = 1; j <= 12; ++j) {
        rows.push_back(nt_e(j, 1));
        rows.push_back(nt_e(j, 2));
    }
    return Lattice::in_ambient(QMat::from_rows(rows), niemeier_gram());
}

Lattice build_N() {
    std::vector<QVec> rows;
    for (int i = 1; i <= 6; ++i) rows.push_back(w_vector(i));
    for (int j = 1; j <= 12; ++j) {
        rows.push_back(nt_e(j, 1));
        rows.push_back(nt_e(j, 2));
    }
    QMat basis = row_basis(QMat::from_rows(rows));
    Lattice N = Lattice::in_ambient(basis, niemeier_gram());
    Rat d = N.gram.det();
    if (d != 1 && d != -1) throw std::logic_error("generators do not span a unimodular lattice");
    return N;
}

namespace {

const codes::TernaryCode& the_c12() {
    static const codes::TernaryCode c = codes::build_C12();
    return c;
}

const Lattice& the_N() {
    static const Lattice N = build_N();
    return N;
}

}  // namespace

std::optional<std::array<int, 12>> glue_word(const QVec& v) {
    std::array<int, 12> word{};
    for (int j = 1; j <= 12; ++j) {
        Rat x1 = v[nt_index(j, 1)], x2 = v[nt_index(j, 2)];
        Rat t = Rat(3) * x1;
        if (!is_integer(t) || !is_integer(x2 - Rat(2) * x1)) return std::nullopt;
        Int y = t.get_num() % 3;
        if (y < 0) y += 3;
        word[j - 1] = int(y.get_si());
    }
    return word;
}

bool n_contains(const QVec& v) {
    auto word = glue_word(v);
    if (!word) return false;
    codes::TernaryWord t{};
    for (int j = 0; j < 12; ++j) t[j] = (*word)[j] == 2 ? -1 : (*word)[j];
    return the_c12().contains(t);
}

NReport verify_N() {
    NReport r;
    const Lattice& N = the_N();
    Classification c = classify(N);
    r.even = c.even;
    r.unimodular = c.unimodular;
    r.definite = (c.pos == 24 && c.neg == 0);
    auto sv = short_vectors(N, Rat(2));
    r.roots_in_R = true;
    for (const auto& s : sv) {
        if (s.norm != 2) continue;
        ++r.root_count;
        QVec amb(kDim, Rat(0));
        for (int i = 0; i < N.rank; ++i) amb = amb + Rat(s.coords[i]) * N.basis->row(i);
        for (const Rat& x : amb)
            if (!is_integer(x)) r.roots_in_R = false;
    }
    r.basis_spans_generators = true;
    for (int j = 1; j <= 12; ++j)
        for (int l = 1; l <= 2; ++l)
            if (!in_span_z(*N.basis, nt_e(j, l))) r.basis_spans_generators = false;
    for (int i = 1; i <= 6; ++i)
        if (!in_span_z(*N.basis, w_vector(i))) r.basis_spans_generators = false;

    // glue-code membership test agrees with basis-coordinate membership on
    // a deterministic sample: basis rows, roots, shifted w's, dual vectors.
    r.membership_agrees = true;
    auto agree = [&](const QVec& v) {
        bool a = n_contains(v);
        bool b = in_span_z(*N.basis, v);
        if (a != b) r.membership_agrees = false;
        return a;
    };
    for (int i = 0; i < N.rank; ++i)
        if (!agree(N.basis->row(i))) r.membership_agrees = false;
    for (int j = 1; j <= 12; ++j)
        if (agree(Rat(1, 3) * nt_e_total(j))) r.membership_agrees = false;  // non-member
    if (agree(Rat(1, 2) * nt_e(1, 1))) r.membership_agrees = false;        // not even in R~*
    if (!agree(w_vector(1) + w_vector(4) + nt_e(2, 1))) r.membership_agrees = false;

    r.pass = r.even && r.unimodular && r.definite && r.root_count == 72 && r.roots_in_R &&
             r.basis_spans_generators && r.membership_agrees;
    if (!r.pass) r.failure = "niemeier lattice check failed";
    return r;
}

// ---- iota ---------------------------------------------------------------

namespace {

// target block and sign for each fixed-point label (t1,t2)
struct BlockImage {
    int block;
    int sign;
};

BlockImage iota_block(int t1, int t2) {
    static const int blk[3][3] = {{6, 4, 7}, {5, 3, 2}, {8, 1, 9}};
    static const int sgn[3][3] = {{1, 1, 1}, {-1, -1, -1}, {1, 1, 1}};
    return {blk[t1][t2], sgn[t1][t2]};
}

const Lattice& the_P() {
    static const Lattice P = orbifold::build_P();
    return P;
}

}  // namespace

QVec iota(const QVec& v22) {
    for (int k = 0; k < 4; ++k)
        if (v22[k] != 0) throw std::invalid_argument("iota: kappa component nonzero");
    QVec out(kDim, Rat(0));
    for (int t1 = 0; t1 < 3; ++t1)
        for (int t2 = 0; t2 < 3; ++t2) {
            BlockImage bi = iota_block(t1, t2);
            for (int l = 1; l <= 2; ++l)
                out[nt_index(bi.block, l)] =
                    out[nt_index(bi.block, l)] + Rat(bi.sign) * v22[e_index(t1, t2, l)];
        }
    return out;
}

QVec p_tilde(int j) { return iota(orbifold::p_vector(j)); }

QVec k_tilde(int j) {
    switch (j) {
        case 1: return Rat(1, 3) * nt_e_total(10);
        case 2: return Rat(-1, 3) * nt_e_total(12);
        case 3: return Rat(-1, 3) * nt_e_total(11);
        default: throw std::invalid_argument("k_tilde index");
    }
}

Lattice p_tilde_lattice() {
    const Lattice& P = the_P();
    std::vector<QVec> rows;
    for (int i = 0; i < P.rank; ++i) rows.push_back(iota(P.basis->row(i)));
    return Lattice::in_ambient(QMat::from_rows(rows), niemeier_gram());
}

Lattice k_tilde_lattice() {
    std::vector<QVec> rows;
    for (int j = 10; j <= 12; ++j) {
        rows.push_back(nt_e(j, 1));
        rows.push_back(nt_e(j, 2));
    }
    return Lattice::in_ambient(QMat::from_rows(rows), niemeier_gram());
}

IotaReport embed_and_verify_iota() {
    IotaReport r;
    const Lattice& P = the_P();
    const Lattice& N = the_N();
    QMat pg = orbifold::ambient_gram();
    QMat ng = niemeier_gram();

    r.isometry = true;
    std::vector<QVec> img;
    for (int i = 0; i < P.rank; ++i) img.push_back(iota(P.basis->row(i)));
    for (int i = 0; i < P.rank; ++i)
        for (int j = 0; j < P.rank; ++j)
            if (dot(img[i], ng, img[j]) != -dot(P.basis->row(i), pg, P.basis->row(j)))
                r.isometry = false;

    QVec i_v3 = iota(orbifold::v_generator(3));
    QVec v3_expected =
        w_vector(1) + w_vector(2) + w_vector(3) + nt_e_total(1) - nt_e_total(2) - nt_e_total(3);
    r.v_images = iota(orbifold::v_generator(1)) == w_vector(1) &&
                 iota(orbifold::v_generator(2)) == w_vector(2) && i_v3 == v3_expected;

    std::vector<QVec> span_rows;
    for (int j = 1; j <= 9; ++j) {
        span_rows.push_back(nt_e(j, 1));
        span_rows.push_back(nt_e(j, 2));
    }
    for (int i = 1; i <= 3; ++i) span_rows.push_back(w_vector(i));
    r.image_span = same_lattice(QMat::from_rows(img), QMat::from_rows(span_rows));

    // coordinates of the image inside N for saturation / complement
    std::vector<QVec> coords;
    bool integral = true;
    for (const QVec& v : img) {
        auto c = solve_left(*N.basis, v);
        if (!c) throw std::logic_error("iota image outside N's span");
        for (const Rat& x : *c)
            if (!is_integer(x)) integral = false;
        coords.push_back(*c);
    }
    if (!integral) throw std::logic_error("iota image not in N");
    SublatticeHandle S{N, QMat::from_rows(coords)};
    r.primitive = is_primitive(S);

    SublatticeHandle C = orthogonal_complement(S);
    std::vector<QVec> comp_amb;
    for (int i = 0; i < C.generators.rows(); ++i)
        comp_amb.push_back(C.generators.row(i) * *N.basis);
    std::vector<QVec> k_rows;
    for (int j = 10; j <= 12; ++j) {
        k_rows.push_back(nt_e(j, 1));
        k_rows.push_back(nt_e(j, 2));
    }
    r.complement = same_lattice(QMat::from_rows(comp_amb), QMat::from_rows(k_rows));

    r.pass = r.isometry && r.v_images && r.image_span && r.primitive && r.complement;
    if (!r.pass) r.failure = "iota verification failed";
    return r;
}

GluingReport gluing_in_N() {
    GluingReport r;
    const Lattice& P = the_P();
    Lattice Pt = p_tilde_lattice();
    Lattice Kt = k_tilde_lattice();

    std::vector<QVec> src, img;
    for (int j = 1; j <= 3; ++j) {
        auto c = solve_left(*P.basis, orbifold::p_vector(j));
        if (!c) throw std::logic_error("p_j outside P's span");
        src.push_back(*c);  // same coefficients over iota(P basis)
        auto k = solve_left(*Kt.basis, k_tilde(j));
        if (!k) throw std::logic_error("k~_j outside K~'s span");
        img.push_back(*k);
    }
    GlueMap gm{QMat::from_rows(src), QMat::from_rows(img)};

    std::string reason;
    r.anti_isometry = check_glue_compatible(Pt, Kt, gm, &reason);
    if (!r.anti_isometry) r.failure = "glue map incompatible: " + reason;

    auto integral_vec = [](const QVec& v) {
        for (const Rat& x : v)
            if (!is_integer(x)) return false;
        return true;
    };
    QVec cert1 = p_tilde(1) + k_tilde(1) - (w_vector(2) + w_vector(3) + w_vector(4));
    QVec cert2 = p_tilde(2) + k_tilde(2) - (w_vector(1) + w_vector(2) - w_vector(6));
    QVec cert3 = p_tilde(3) + k_tilde(3) - (w_vector(1) + w_vector(3) - w_vector(5));
    r.certificates = integral_vec(cert1) && integral_vec(cert2) && integral_vec(cert3);

    if (r.anti_isometry) {
        GluedLattice gl = glue(Pt, Kt, gm);
        r.equals_N = same_lattice(*gl.result.basis, *the_N().basis);
    }
    r.pass = r.anti_isometry && r.certificates && r.equals_N;
    if (!r.pass && r.failure.empty()) r.failure = "gluing check failed";
    return r;
}

// ---- lifted symmetries --------------------------------------------------

QMat lift_matrix(const symmetry::AffineSymmetry& g) {
    QMat action = symmetry::lattice_action(g);
    QMat M = QMat::identity(kDim);
    for (int t1 = 0; t1 < 3; ++t1)
        for (int t2 = 0; t2 < 3; ++t2) {
            BlockImage bi = iota_block(t1, t2);
            for (int l = 1; l <= 2; ++l)
                M.set_row(nt_index(bi.block, l),
                          Rat(bi.sign) * iota(action.row(e_index(t1, t2, l))));
        }
    if (g.linear_power % 2 == 1) {
        M.set_row(nt_index(12, 1), nt_e(12, 2));
        M.set_row(nt_index(12, 2), nt_e(12, 1));
    }
    return M;
}

namespace {

// frozen signed-permutation tables for the three generator lifts:
// entry j-1 is (sign, target block); swap_levels tells whether (1)<->(2).
struct LiftTable {
    std::array<std::pair<int, int>, 12> map;
    std::array<bool, 12> swap_levels;
};

LiftTable alpha1_table() {
    LiftTable t{};
    t.map = {{{1, 4}, {-1, 9}, {-1, 1}, {-1, 3}, {-1, 8}, {-1, 5},
              {-1, 2}, {1, 6}, {1, 7}, {1, 10}, {1, 11}, {1, 12}}};
    t.swap_levels.fill(false);
    return t;
}

LiftTable alpha2_table() {
    LiftTable t{};
    t.map = {{{1, 9}, {1, 5}, {1, 2}, {1, 7}, {1, 3}, {1, 4},
              {1, 6}, {1, 1}, {1, 8}, {1, 10}, {1, 11}, {1, 12}}};
    t.swap_levels.fill(false);
    return t;
}

LiftTable beta_table() {
    LiftTable t{};
    t.map = {{{1, 9}, {1, 3}, {-1, 1}, {1, 8}, {-1, 4}, {1, 6},
              {-1, 5}, {1, 7}, {-1, 2}, {1, 10}, {1, 11}, {1, 12}}};
    for (int j = 1; j <= 9; ++j) t.swap_levels[j - 1] = true;
    t.swap_levels[11] = true;  // block 12 swaps, blocks 10 and 11 do not
    return t;
}

QMat table_matrix(const LiftTable& t) {
    QMat M(kDim, kDim);
    for (int j = 1; j <= 12; ++j)
        for (int l = 1; l <= 2; ++l) {
            int lp = t.swap_levels[j - 1] ? 3 - l : l;
            M(nt_index(j, l), nt_index(t.map[j - 1].second, lp)) = t.map[j - 1].first;
        }
    return M;
}

bool maps_N_to_N(const QMat& M) {
    const Lattice& N = the_N();
    std::vector<QVec> coords;
    for (int i = 0; i < N.rank; ++i) {
        QVec v = N.basis->row(i) * M;
        auto c = solve_left(*N.basis, v);
        if (!c) return false;
        for (const Rat& x : *c)
            if (!is_integer(x)) return false;
        coords.push_back(*c);
    }
    Rat d = QMat::from_rows(coords).det();
    return d == 1 || d == -1;
}

bool integral_vec(const QVec& v) {
    for (const Rat& x : v)
        if (!is_integer(x)) return false;
    return true;
}

}  // namespace

LiftReport verify_lifts() {
    LiftReport r;
    const symmetry::AffineSymmetry gens[3] = {symmetry::alpha1(), symmetry::alpha2(),
                                              symmetry::beta()};
    const QMat lifts[3] = {lift_matrix(gens[0]), lift_matrix(gens[1]), lift_matrix(gens[2])};
    r.tables_match = lifts[0] == table_matrix(alpha1_table()) &&
                     lifts[1] == table_matrix(alpha2_table()) &&
                     lifts[2] == table_matrix(beta_table());

    QMat ng = niemeier_gram();
    r.preserves_N = true;
    for (const QMat& M : lifts) {
        if (!(M * ng * M.transpose() == ng)) r.preserves_N = false;
        if (!maps_N_to_N(M)) r.preserves_N = false;
    }

    const Lattice& P = the_P();
    r.intertwines_iota = true;
    for (int gi = 0; gi < 3; ++gi) {
        QMat action = symmetry::lattice_action(gens[gi]);
        for (int i = 0; i < P.rank; ++i) {
            QVec b = P.basis->row(i);
            if (!(iota(b) * lifts[gi] == iota(b * action))) r.intertwines_iota = false;
        }
    }

    // w-image columns from the two propositions, modulo R~ (integer vectors)
    auto combo = [](std::initializer_list<std::pair<int, int>> terms) {
        QVec v(kDim, Rat(0));
        for (auto [c, i] : terms) v = v + Rat(c) * w_vector(i);
        return v;
    };
    const std::vector<QVec> w_cols[3] = {
        {combo({{-1, 2}, {-1, 3}}), combo({{1, 2}}), combo({{1, 1}, {1, 2}, {-1, 3}}),
         combo({{1, 4}, {-1, 2}, {1, 3}}), combo({{1, 3}, {1, 5}}),
         combo({{1, 6}, {-1, 2}, {-1, 3}})},
        {combo({{1, 1}}), combo({{-1, 1}, {-1, 3}}), combo({{1, 1}, {1, 2}, {-1, 3}}),
         combo({{1, 4}, {-1, 3}}), combo({{1, 1}, {-1, 3}, {1, 5}}),
         combo({{1, 6}, {-1, 1}, {-1, 3}})},
        {combo({{-1, 2}}), combo({{-1, 1}, {1, 2}, {1, 3}}), combo({{-1, 2}, {1, 3}}),
         combo({{1, 3}, {1, 4}}), combo({{1, 5}, {-1, 2}, {1, 3}}),
         combo({{1, 2}, {1, 3}, {-1, 6}})}};
    r.w_images = true;
    for (int gi = 0; gi < 3; ++gi)
        for (int i = 1; i <= 6; ++i)
            if (!integral_vec(w_vector(i) * lifts[gi] - w_cols[gi][i - 1])) r.w_images = false;

    // closure of the three lifts under multiplication
    std::vector<QMat> group{QMat::identity(kDim)};
    bool grew = true;
    while (grew && group.size() <= 40) {
        grew = false;
        for (size_t i = 0; i < group.size(); ++i)
            for (const QMat& G : lifts) {
                QMat prod = group[i] * G;
                bool found = false;
                for (const QMat& H : group)
                    if (H == prod) { found = true; break; }
                if (!found) {
                    group.push_back(prod);
                    grew = true;
                }
            }
    }
    r.group_order_36 = group.size() == 36;

    const Lattice& N = the_N();
    r.roots_to_roots = true;
    auto sv = short_vectors(N, Rat(2));
    for (const QMat& M : lifts)
        for (const auto& s : sv) {
            if (s.norm != 2) continue;
            QVec amb(kDim, Rat(0));
            for (int i = 0; i < N.rank; ++i) amb = amb + Rat(s.coords[i]) * N.basis->row(i);
            QVec im = amb * M;
            if (dot(im, ng, im) != 2 || !integral_vec(im)) r.roots_to_roots = false;
        }

    r.pass = r.tables_match && r.preserves_N && r.intertwines_iota && r.w_images &&
             r.group_order_36 && r.roots_to_roots;
    if (!r.pass) r.failure = "lift verification failed";
    return r;
}

mathieu::Permutation project_to_M12(const QMat& lift) {
    mathieu::Permutation p = mathieu::Permutation::identity(12);
    std::vector<bool> hit(13, false);
    for (int j = 1; j <= 12; ++j) {
        QVec im = nt_e(j, 1) * lift;
        int target = 0;
        for (int k = 1; k <= 12; ++k)
            if (im[nt_index(k, 1)] != 0 || im[nt_index(k, 2)] != 0) {
                if (target != 0) throw std::logic_error("lift does not permute blocks");
                target = k;
            }
        if (target == 0 || hit[target]) throw std::logic_error("lift does not permute blocks");
        hit[target] = true;
        p.image[j] = target;
    }
    return p;
}

ProjectionReport verify_projection() {
    ProjectionReport r;
    r.generators_match =
        project_to_M12(lift_matrix(symmetry::alpha1())) == mathieu::theta12(1) &&
        project_to_M12(lift_matrix(symmetry::alpha2())) == mathieu::theta12(2) &&
        project_to_M12(lift_matrix(symmetry::beta())) == mathieu::theta12(3);

    auto elems = symmetry::group_elements();
    std::vector<mathieu::Permutation> proj;
    for (const auto& g : elems) proj.push_back(project_to_M12(lift_matrix(g)));

    r.multiplicative = true;
    for (size_t i = 0; i < elems.size(); ++i)
        for (size_t j = 0; j < elems.size(); ++j) {
            auto gh = symmetry::compose(elems[i], elems[j]);
            size_t k = 0;
            while (!(elems[k] == gh)) ++k;
            if (!(mathieu::compose(proj[i], proj[j]) == proj[k])) r.multiplicative = false;
        }

    r.faithful = true;
    for (size_t i = 0; i < proj.size(); ++i)
        for (size_t j = i + 1; j < proj.size(); ++j)
            if (proj[i] == proj[j]) r.faithful = false;

    r.pass = r.generators_match && r.multiplicative && r.faithful;
    if (!r.pass) r.failure = "M12 projection check failed";
    return r;
}

// ---- extended-E6 checks -------------------------------------------------

ExtendedE6Report extended_e6_checks() {
    using namespace orbifold;
    ExtendedE6Report rep;
    QMat pg = ambient_gram();
    AffineLine l0 = line_L12();
    AffineLine l1 = shifted(l0, 1, 0);
    AffineLine l2 = shifted(l0, 2, 0);
    QVec r = Rat(-1, 3) * line_sum(l0);
    QVec rp = Rat(-1, 3) * line_sum(l1);
    QVec rpp = Rat(-1, 3) * line_sum(l2);

    // seven roots in P(-1): r, then (E^(2), E^(1)) per point of L12
    std::vector<QVec> seven{r};
    for (const FixedPointLabel& t : l0.points) {
        seven.push_back(e_vec(t.t1, t.t2, 2));
        seven.push_back(e_vec(t.t1, t.t2, 1));
    }
    QMat expected(7, 7);
    for (int i = 0; i < 7; ++i) expected(i, i) = 2;
    auto edge = [&](int a, int b) { expected(a, b) = expected(b, a) = -1; };
    edge(0, 1);
    edge(0, 3);
    edge(0, 5);
    edge(1, 2);
    edge(3, 4);
    edge(5, 6);
    rep.extended_e6_gram = true;
    for (int i = 0; i < 7; ++i)
        for (int j = 0; j < 7; ++j)
            if (-dot(seven[i], pg, seven[j]) != expected(i, j)) rep.extended_e6_gram = false;

    rep.v1_identity = v_generator(1) == rp - r;
    rep.v3_identity = v_generator(3) == Rat(-1) * (r + rp + rpp);
    QVec v2e = Rat(1, 3) * (e_total(0, 0) - e_total(0, 1) + e_total(1, 0) - e_total(1, 1) +
                            e_total(2, 0) - e_total(2, 1));
    rep.v2_identity = v_generator(2) == v2e;

    QVec rb = r * symmetry::lattice_action(symmetry::beta());
    rep.beta_r_pairing = -dot(rb, pg, r);
    rep.symmetry_broken = !is_integer(rep.beta_r_pairing);

    rep.pass = rep.extended_e6_gram && rep.v1_identity && rep.v3_identity && rep.v2_identity &&
               rep.beta_r_pairing == Rat(1, 3) && rep.symmetry_broken;
    if (!rep.pass) rep.failure = "extended-E6 checks failed";
    return rep;
}

}  // namespace k3z3::niemeier

#include "k3z3/suites.hpp"

#include "k3z3/codes.hpp"
#include "k3z3/genus.hpp"
#include "k3z3/gluing.hpp"
#include "k3z3/mathieu.hpp"
#include "k3z3/niemeier.hpp"
#include "k3z3/orbifold.hpp"
#include "k3z3/symmetry.hpp"

#include <json.hpp>

#include <algorithm>
#include <chrono>
#include <random>
#include <sstream>
#include <stdexcept>

namespace k3z3::suites {

using json = nlohmann::ordered_json;

bool SuiteReport::pass() const {
    for (const Check& c : checks)
        if (c.status == "fail") return false;
    return true;
}

namespace {

void add(SuiteReport& r, const std::string& id, const std::string& anchor, bool ok,
         const std::string& detail = "", const std::string& witness = "") {
    r.checks.push_back({id, anchor, ok ? "pass" : "fail", detail, ok ? "" : witness});
}

void add_skipped(SuiteReport& r, const std::string& id, const std::string& anchor) {
    r.checks.push_back({id, anchor, "skipped", "", ""});
}

// ---- lattices -----------------------------------------------------------

void suite_lattices(SuiteReport& r, const Options& opt) {
    using namespace orbifold;

    Lattice T = torus_invariant_lattice();
    Rat dT = discriminant(T);
    add(r, "lattices.torus_invariant_disc", "disc of the invariant torus image is -243",
        dT == -243, "disc = " + rat_to_string(dT));

    Lattice P = build_P();
    auto cP = classify(P);
    Rat dP = discriminant(P);
    add(r, "lattices.P",
        "P is even negative definite of rank 18 with |disc| = 27",
        cP.even && cP.pos == 0 && cP.neg == 18 && Rat(abs(dP)) == 27,
        "|disc| = " + rat_to_string(Rat(abs(dP))));

    auto ddP = dual_and_discriminant_group(P);
    bool p_disc = ddP.elementary_divisors == std::vector<Int>{3, 3, 3};
    std::string qs;
    for (int j = 1; j <= 3; ++j) {
        auto coords = P.from_ambient(p_vector(j));
        if (!coords) { p_disc = false; break; }
        Rat q = disc_q(P, *coords);
        if (q != Rat(2, 3)) p_disc = false;
        qs += (j > 1 ? ", " : "") + rat_to_string(q);
    }
    add(r, "lattices.P_disc_group", "P*/P = (Z3)^3 with q(p_j) = 2/3 mod 2Z", p_disc,
        "q(p_j) = " + qs);

    Lattice K = build_K();
    auto cK = classify(K);
    bool k_ok = cK.even && Rat(abs(discriminant(K))) == 27;
    for (int j = 1; j <= 3; ++j) {
        auto coords = K.from_ambient(k_vector(j));
        if (!coords || disc_q(K, *coords) != Rat(4, 3)) k_ok = false;
    }
    add(r, "lattices.K", "K is even, |disc| = 27, q(k_j) = -2/3 mod 2Z", k_ok);

    Lattice R = build_R();
    QMat r_in_p(R.rank, P.rank);
    bool expr = true;
    for (int i = 0; i < R.rank; ++i) {
        auto c = P.from_ambient(R.to_ambient(QMat::identity(R.rank).row(i)));
        if (!c) { expr = false; break; }
        r_in_p.set_row(i, *c);
    }
    Int idxPR = expr ? sublattice_index_check({P, r_in_p}) : Int(0);
    add(r, "lattices.P_over_R", "|P/R| = 27", idxPR == 27, "index = " + idxPR.get_str());

    QMat t_in_k(4, 4);
    bool exk = true;
    for (int i = 0; i < 4; ++i) {
        auto c = K.from_ambient(T.to_ambient(QMat::identity(4).row(i)));
        if (!c) { exk = false; break; }
        t_in_k.set_row(i, *c);
    }
    Int idxTK = exk ? sublattice_index_check({K, t_in_k}) : Int(0);
    add(r, "lattices.pi_image_index", "the invariant torus image has index 3 in K",
        idxTK == 3, "index = " + idxTK.get_str());

    std::string detail;
    bool mn = verify_min_norm_in_P_dual(&detail);
    add(r, "lattices.min_norm_P_dual",
        "no nonzero vector of P* has |norm| < 2; all (-2)-vectors classified", mn, "", detail);

    // randomized SNF / discriminant-index consistency on sublattices of K
    std::mt19937_64 rng(opt.seed);
    std::uniform_int_distribution<int> coef(-3, 3);
    bool snf_ok = true;
    std::string snf_witness;
    for (int trial = 0; trial < 25 && snf_ok; ++trial) {
        QMat M(4, 4);
        do {
            for (int i = 0; i < 4; ++i)
                for (int j = 0; j < 4; ++j) M(i, j) = Rat(coef(rng));
        } while (M.det() == 0);
        Int want = abs(M.det().get_num());
        Int idx = sublattice_index_check({K, M});
        Int prod = 1;
        for (const Int& dv : snf(M).divisors) prod *= abs(dv);
        if (idx != want || prod != want) {
            snf_ok = false;
            snf_witness = "trial " + std::to_string(trial) + ": index " + idx.get_str() +
                          ", SNF product " + prod.get_str() + ", |det| " + want.get_str();
        }
    }
    add(r, "lattices.snf_index_property",
        "randomized sublattices: index = |det| = product of SNF divisors", snf_ok, "",
        snf_witness);

    Lattice K2 = lattice_from_json(lattice_to_json(K));
    Lattice P2 = lattice_from_json(lattice_to_json(P));
    add(r, "lattices.json_roundtrip", "JSON serialization round-trips rank and Gram",
        K2.rank == K.rank && K2.gram == K.gram && P2.rank == P.rank && P2.gram == P.gram);
}

// ---- gluing -------------------------------------------------------------

void suite_gluing(SuiteReport& r, const Options&) {
    using namespace orbifold;

    GluedLattice h2x = build_H2X();
    auto c = classify(h2x.result);
    add(r, "gluing.H2X",
        "glue(K, P, gamma) is even unimodular of rank 22, signature (3,19)",
        c.even && c.unimodular && h2x.result.rank == 22 && c.pos == 3 && c.neg == 19,
        "signature (" + std::to_string(c.pos) + "," + std::to_string(c.neg) + ")");

    std::string detail;
    bool gl = verify_gluelist(&detail);
    add(r, "gluing.glue_list", "all glue-list vector types lie in H2(X,Z); negatives fail", gl,
        "", detail);

    // hyperbolic-plane worked example in ambient diag(1, -1)
    QMat amb(2, 2);
    amb(0, 0) = 1;
    amb(1, 1) = -1;
    Lattice lam = Lattice::in_ambient(QMat::from_rows({{Rat(3, 2), Rat(-1, 2)}}), amb);
    Lattice vee = Lattice::in_ambient(QMat::from_rows({{Rat(-1, 2), Rat(3, 2)}}), amb);
    GlueMap gm{QMat::from_rows({{Rat(1, 2)}}), QMat::from_rows({{Rat(1, 2)}})};
    bool compatible = check_glue_compatible(lam, vee, gm);
    bool round = false;
    if (compatible) {
        GluedLattice gl2 = glue(lam, vee, gm);
        auto cc = classify(gl2.result);
        bool u1 = cc.even && cc.unimodular && gl2.result.rank == 2 && cc.pos == 1 && cc.neg == 1;
        // round-trip: the summand sits back inside the glued lattice and
        // the orthogonal complement of one summand is the other
        auto lam_coords = gl2.result.from_ambient(lam.to_ambient({Rat(1)}));
        bool back = lam_coords.has_value();
        if (back) {
            SublatticeHandle lh{gl2.result, QMat::from_rows({*lam_coords})};
            auto comp = orthogonal_complement(lh);
            QVec comp_amb = gl2.result.to_ambient(comp.generators.row(0));
            back = same_lattice(QMat::from_rows({comp_amb}), *vee.basis);
        }
        round = u1 && back;
    }
    add(r, "gluing.hyperbolic_example",
        "the rank-2 hyperbolic worked example glues and round-trips", compatible && round);
}

// ---- symmetries ---------------------------------------------------------

void suite_symmetries(SuiteReport& r, const Options&) {
    using namespace symmetry;

    auto els = group_elements();
    add(r, "symmetries.count", "the symmetry group has exactly 36 elements", els.size() == 36,
        "elements = " + std::to_string(els.size()));

    bool all_ok = true;
    std::string witness;
    for (const auto& g : els) {
        auto rep = verify_symmetry(g);
        if (!rep.pass) {
            all_ok = false;
            witness = rep.failure;
            break;
        }
    }
    add(r, "symmetries.preservation",
        "every element preserves the Gram, P, K and the glue", all_ok, "", witness);

    add(r, "symmetries.faithful", "the 36 lattice actions are pairwise distinct",
        verify_faithfulness());
    add(r, "symmetries.homomorphism", "the action is a group homomorphism on all pairs",
        verify_homomorphism());
    add(r, "symmetries.sigma_fixed",
        "every element fixes kappa_1, kappa_2 and kappa_3 + kappa_4", verify_sigma_fixed());

    auto rb = verify_symmetry(beta());
    bool signs = rb.disc_signs == std::vector<int>{1, -1, 1};
    std::string sstr;
    for (int s : rb.disc_signs) sstr += s > 0 ? '+' : '-';
    add(r, "symmetries.beta_disc_signs",
        "beta acts on the discriminant cosets with signs (+,-,+)", signs,
        "signs = (" + sstr + ")");

    std::string detail;
    bool roots = verify_roots_in_sigma_perp(&detail);
    add(r, "symmetries.roots_in_P",
        "all (-2)-vectors of the rank-19 perpendicular lattice lie in P", roots, "", detail);
}

// ---- codes --------------------------------------------------------------

void suite_codes(SuiteReport& r, const Options& opt) {
    using namespace codes;

    TernaryCode c12 = build_C12();
    int minw = 12;
    for (const auto& w : c12.words)
        if (int ww = weight(w); ww > 0) minw = std::min(minw, ww);
    add(r, "codes.C12", "C12 has 729 words and minimum weight 6",
        c12.words.size() == 729 && minw == 6,
        "words = " + std::to_string(c12.words.size()) + ", min weight = " + std::to_string(minw));

    BinaryCode c24 = build_C24();
    auto census = c24.weight_census();
    bool census_ok = true;
    for (int w = 0; w <= 24; ++w) {
        int want = w == 0 || w == 24 ? 1 : w == 8 || w == 16 ? 759 : w == 12 ? 2576 : 0;
        if (census[w] != want) census_ok = false;
    }
    add(r, "codes.C24_census", "C24 weight enumerator is (1, 759, 2576, 759, 1)", census_ok,
        "weight-8 count: " + std::to_string(census[8]));

    bool mog_ok = true;
    for (BinaryWord w : c24.words)
        if (!mog_membership(w)) mog_ok = false;
    std::mt19937_64 rng(opt.seed);
    int agree = 0;
    for (int i = 0; i < 10000; ++i) {
        BinaryWord w = BinaryWord(rng()) & 0xFFFFFF;
        if (mog_membership(w) == c24.contains(w)) ++agree;
    }
    add(r, "codes.mog_agreement",
        "hexacode/MOG membership agrees with linear membership (4096 codewords + 10^4 random)",
        mog_ok && agree == 10000,
        "random agreement " + std::to_string(agree) + "/10000");

    std::string detail;
    bool dom = verify_domino_list(c24, &detail);
    add(r, "codes.domino_list", "every numbered octad of the list is a weight-8 codeword", dom,
        "", detail);

    std::vector<int> labels(24);
    for (int i = 0; i < 24; ++i) labels[i] = i + 1;
    bool steiner = true;
    for (int i = 0; i < 10000 && steiner; ++i) {
        std::shuffle(labels.begin(), labels.end(), rng);
        std::vector<int> pts(labels.begin(), labels.begin() + 5);
        auto oc = octad_complete(pts, c24);  // throws on a uniqueness violation
        if (!oc) steiner = false;
        else
            for (int p : pts)
                if (!((*oc >> (p - 1)) & 1)) steiner = false;
    }
    add(r, "codes.steiner_sampling",
        "10^4 random 5-sets each lie in exactly one octad (S(5,8,24))", steiner);
}

// ---- niemeier -----------------------------------------------------------

void suite_niemeier(SuiteReport& r, const Options&) {
    using namespace niemeier;

    auto n = verify_N();
    add(r, "niemeier.N",
        "N is even unimodular positive definite of rank 24 with exactly 72 roots",
        n.pass, "norm-2 vectors: " + std::to_string(n.root_count), n.failure);

    auto i = embed_and_verify_iota();
    add(r, "niemeier.iota",
        "iota is a primitive (-1)-isometry of P with complement A2^3", i.pass, "", i.failure);

    auto g = gluing_in_N();
    add(r, "niemeier.gluing",
        "glue(P~, K~, gamma~) reproduces N, with explicit coset certificates", g.pass, "",
        g.failure);

    auto l = verify_lifts();
    add(r, "niemeier.lifts",
        "the three symmetry lifts act on N, intertwine iota and close to 36 elements", l.pass,
        "", l.failure);

    auto p = verify_projection();
    add(r, "niemeier.projection",
        "block projection to M12 is faithful, multiplicative and matches the stated images",
        p.pass, "", p.failure);

    auto d = extended_e6_checks();
    add(r, "niemeier.extended_e6",
        "extended-E6 Gram identity holds and <beta_* r, r> = 1/3 is non-integral", d.pass,
        "pairing = " + rat_to_string(d.beta_r_pairing), d.failure);
}

// ---- mathieu ------------------------------------------------------------

void suite_mathieu(SuiteReport& r, const Options& opt) {
    using namespace mathieu;

    auto m12 = schreier_sims({gen_A(), gen_B(), gen_C(), gen_D()});
    add(r, "mathieu.M12_order", "|<A,B,C,D>| = 95040", m12.order() == 95040,
        "order = " + m12.order().get_str());

    auto t = theta_containment();
    add(r, "mathieu.theta_images",
        "the Theta images lie in M12 and generate a group of order 36", t.pass, "", t.failure);

    auto c12 = codes::build_C12();
    bool lifts_ok = true;
    std::string lift_detail;
    const std::array<int, 12> flips_c{1, 1, -1, 1, -1, 1, -1, 1, -1, -1, -1, 1};
    for (auto [name, p, want] :
         {std::tuple{"A", gen_A(), std::array<int, 12>{1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1}},
          {"B", gen_B(), {1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1}},
          {"C", gen_C(), flips_c},
          {"D", gen_D(), {1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1}}}) {
        auto s = lift_to_C12_automorphism(p, c12);
        if (!s || *s != want) lifts_ok = false;
        lift_detail += std::string(name) + "=";
        if (s)
            for (int x : *s) lift_detail += x > 0 ? '+' : '-';
        else
            lift_detail += "none";
        lift_detail += " ";
    }
    add(r, "mathieu.C12_lifts",
        "A, B, D lift to C12 automorphisms sign-free; C with the stated six flips", lifts_ok,
        lift_detail);

    auto c24 = codes::build_C24();
    bool ext_ok = true;
    std::string ext_detail;
    for (int g = 1; g <= 3; ++g) {
        Permutation e = extend_to_M24(theta12(g), c24);
        if (e.cycle_string() != theta24(g).cycle_string()) ext_ok = false;
        ext_detail += e.cycle_string() + (g < 3 ? " " : "");
    }
    add(r, "mathieu.vartheta_images",
        "octad propagation extends each Theta image to the stated M24 element, byte-exact",
        ext_ok, ext_detail);

    auto gen = generation_theorem_check();
    add(r, "mathieu.generation",
        "each vartheta generator stabilizes the dodecad and mixes octad #28 with its complement",
        gen.pass, "", gen.failure);

    if (opt.extended) {
        auto m24 = m24_generation_extended(c24);
        add(r, "mathieu.M24_order",
            "octad stabilizer (order 322560) together with the vartheta images generates M24",
            m24.pass,
            "stabilizer = " + m24.stabilizer_order.get_str() +
                ", full order = " + m24.full_order.get_str(),
            m24.failure);
    } else {
        add_skipped(r, "mathieu.M24_order",
                    "full |M24| generation check (enable with --extended)");
    }
}

// ---- genus --------------------------------------------------------------

void suite_genus(SuiteReport& r, const Options& opt) {
    using namespace genus;

    int N = opt.order;
    JacobiSeries E = ellk3(N);

    std::map<long, Rat> q0{{-1, 2}, {0, 20}, {1, 2}};
    auto got0 = y_poly_at(E, 0);
    add(r, "genus.q0_coefficient", "q^0 coefficient of the K3 elliptic genus", got0 == q0,
        format_y_poly(got0));

    if (N >= 1) {
        std::map<long, Rat> q1{{-2, 20}, {-1, -128}, {0, 216}, {1, -128}, {2, 20}};
        auto got1 = y_poly_at(E, 1);
        add(r, "genus.q1_coefficient", "q^1 coefficient of the K3 elliptic genus", got1 == q1,
            format_y_poly(got1));
    } else {
        add_skipped(r, "genus.q1_coefficient", "q^1 coefficient (needs --order >= 1)");
    }

    auto g = verify_genus(N);
    add(r, "genus.orbifold_equals_k3",
        "orbifold sector sum minus the theta-quotient genus vanishes to order " +
            std::to_string(N),
        g.orbifold_equals_k3, "", g.failure);
    add(r, "genus.even_in_y", "every coefficient is symmetric under y -> 1/y", g.even_in_y);
    add(r, "genus.integral", "all coefficients are rational integers", g.integral);
    add(r, "genus.elliptic_transform",
        "q y^2 E(tau, z + tau) = E(tau, z) on all terms within truncation",
        g.elliptic_transform);
    add(r, "genus.theta1_z0", "theta_1 vanishes identically at z = 0", g.theta1_vanishes_at_z0);
    add(r, "genus.sector_value",
        "each twisted sector contributes 9 at z = 0 (the nine fixed points)", g.sector_value_9);

    auto s = specializations(std::max(N, 1));
    add(r, "genus.euler", "E(tau, 0) = 24 with no higher q-terms",
        s.euler == 24 && s.euler_constant, "E(tau,0) = " + rat_to_string(s.euler));
    add(r, "genus.signature", "q^0 value 16 at y = -1 (signature -16 under the prefactor)",
        s.at_minus_one == 16, "value = " + rat_to_string(s.at_minus_one));
    add(r, "genus.holomorphic_euler",
        "constant term -2 at y = -q^(1/2) (holomorphic Euler characteristic 2)",
        s.holomorphic == -2, "value = " + rat_to_string(s.holomorphic));
}

}  // namespace

// ---- driver -------------------------------------------------------------

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names{"lattices", "gluing",   "symmetries", "codes",
                                                "niemeier", "mathieu",  "genus"};
    return names;
}

SuiteReport run_suite(const std::string& name, const Options& opt) {
    SuiteReport r;
    r.suite = name;
    auto t0 = std::chrono::steady_clock::now();
    if (name == "lattices")
        suite_lattices(r, opt);
    else if (name == "gluing")
        suite_gluing(r, opt);
    else if (name == "symmetries")
        suite_symmetries(r, opt);
    else if (name == "codes")
        suite_codes(r, opt);
    else if (name == "niemeier")
        suite_niemeier(r, opt);
    else if (name == "mathieu")
        suite_mathieu(r, opt);
    else if (name == "genus")
        suite_genus(r, opt);
    else
        throw std::invalid_argument("unknown suite: " + name);
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return r;
}

std::vector<SuiteReport> run_all(const Options& opt) {
    std::vector<SuiteReport> out;
    for (const std::string& n : suite_names()) out.push_back(run_suite(n, opt));
    return out;
}

std::string format_text(const SuiteReport& r) {
    std::ostringstream os;
    os << "suite " << r.suite << ": " << (r.pass() ? "PASS" : "FAIL") << " (" << r.checks.size()
       << " checks, " << r.seconds << " s)\n";
    for (const Check& c : r.checks) {
        os << "  " << c.id << ": " << (c.detail.empty() ? c.anchor : c.detail) << " "
           << c.status << "\n";
        if (!c.witness.empty()) os << "    witness: " << c.witness << "\n";
    }
    return os.str();
}

std::string reports_to_json(const std::vector<SuiteReport>& rs, const Options& opt) {
    json doc;
    doc["schema"] = kSchema;
    doc["version"] = kVersion;
    doc["options"] = {{"order", opt.order}, {"extended", opt.extended}, {"seed", opt.seed}};
    doc["suites"] = json::array();
    bool all = true;
    for (const SuiteReport& r : rs) {
        json jr;
        jr["suite"] = r.suite;
        jr["pass"] = r.pass();
        all = all && r.pass();
        jr["checks"] = json::array();
        for (const Check& c : r.checks) {
            json jc;
            jc["check_id"] = c.id;
            jc["anchor"] = c.anchor;
            jc["status"] = c.status;
            if (!c.detail.empty()) jc["detail"] = c.detail;
            if (!c.witness.empty()) jc["witness"] = c.witness;
            jr["checks"].push_back(jc);
        }
        doc["suites"].push_back(jr);
    }
    doc["pass"] = all;
    return doc.dump(2) + "\n";
}

// ---- lattice serialization ---------------------------------------------

namespace {

json rat_rows(const QMat& m) {
    json rows = json::array();
    for (int i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (int j = 0; j < m.cols(); ++j) row.push_back(rat_to_string(m(i, j)));
        rows.push_back(row);
    }
    return rows;
}

QMat rows_to_mat(const json& rows) {
    int nr = int(rows.size());
    int nc = nr ? int(rows[0].size()) : 0;
    QMat m(nr, nc);
    for (int i = 0; i < nr; ++i)
        for (int j = 0; j < nc; ++j) m(i, j) = rat_from_string(rows[i][j].get<std::string>());
    return m;
}

}  // namespace

std::string lattice_to_json(const Lattice& L) {
    json doc;
    doc["rank"] = L.rank;
    doc["gram"] = rat_rows(L.gram);
    if (L.basis) doc["basis"] = rat_rows(*L.basis);
    if (L.ambient_gram) {
        Inertia s = signature(*L.ambient_gram);
        doc["ambient_signature"] = {s.pos, s.neg};
    }
    return doc.dump(2) + "\n";
}

Lattice lattice_from_json(const std::string& text) {
    json doc = json::parse(text);
    Lattice L = Lattice::from_gram(rows_to_mat(doc.at("gram")));
    if (L.rank != doc.at("rank").get<int>())
        throw std::invalid_argument("rank does not match the Gram matrix");
    return L;
}

}  // namespace k3z3::suites

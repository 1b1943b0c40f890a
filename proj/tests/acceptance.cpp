// Acceptance gate: one pass/fail line per criterion; exit 0 iff all pass.
// Pass --extended to include the long M24 order computation in criterion 7.

#include "k3z3/codes.hpp"
#include "k3z3/genus.hpp"
#include "k3z3/gluing.hpp"
#include "k3z3/mathieu.hpp"
#include "k3z3/niemeier.hpp"
#include "k3z3/orbifold.hpp"
#include "k3z3/suites.hpp"
#include "k3z3/symmetry.hpp"

#include <chrono>
#include <cstring>
#include <iostream>
#include <random>

using namespace k3z3;

namespace {

int failures = 0;

void report(int n, const std::string& what, bool ok, double secs) {
    std::cout << "criterion " << n << " (" << what << "): " << (ok ? "pass" : "FAIL") << "  ["
              << secs << " s]\n";
    if (!ok) ++failures;
}

template <class F>
void criterion(int n, const std::string& what, F f) {
    auto t0 = std::chrono::steady_clock::now();
    bool ok = false;
    try {
        ok = f();
    } catch (const std::exception& e) {
        std::cout << "criterion " << n << " exception: " << e.what() << "\n";
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    report(n, what, ok, secs);
}

}  // namespace

int main(int argc, char** argv) {
    bool extended = false;
    for (int i = 1; i < argc; ++i)
        if (std::strcmp(argv[i], "--extended") == 0) extended = true;

    criterion(1, "lattice invariants", [] {
        using namespace orbifold;
        Lattice P = build_P(), K = build_K(), R = build_R(), T = torus_invariant_lattice();
        bool ok = discriminant(T) == -243;
        ok = ok && Rat(abs(discriminant(P))) == 27 && Rat(abs(discriminant(K))) == 27;
        QMat r_in_p(R.rank, P.rank);
        for (int i = 0; i < R.rank; ++i)
            r_in_p.set_row(i, *P.from_ambient(R.to_ambient(QMat::identity(R.rank).row(i))));
        ok = ok && sublattice_index_check({P, r_in_p}) == 27;
        QMat t_in_k(4, 4);
        for (int i = 0; i < 4; ++i)
            t_in_k.set_row(i, *K.from_ambient(T.to_ambient(QMat::identity(4).row(i))));
        return ok && sublattice_index_check({K, t_in_k}) == 3;
    });

    criterion(2, "gluing", [] {
        using namespace orbifold;
        GluedLattice h2x = build_H2X();
        auto c = classify(h2x.result);
        bool ok = c.even && c.unimodular && h2x.result.rank == 22;

        auto g = niemeier::gluing_in_N();
        ok = ok && g.pass;

        QMat amb(2, 2);
        amb(0, 0) = 1;
        amb(1, 1) = -1;
        Lattice lam = Lattice::in_ambient(QMat{{Rat(3, 2), Rat(-1, 2)}}, amb);
        Lattice vee = Lattice::in_ambient(QMat{{Rat(-1, 2), Rat(3, 2)}}, amb);
        GlueMap gm{QMat{{Rat(1, 2)}}, QMat{{Rat(1, 2)}}};
        if (!check_glue_compatible(lam, vee, gm)) return false;
        GluedLattice gl = glue(lam, vee, gm);
        auto cc = classify(gl.result);
        ok = ok && cc.even && cc.unimodular && gl.result.rank == 2;
        auto lam_coords = gl.result.from_ambient(lam.to_ambient({Rat(1)}));
        if (!lam_coords) return false;
        auto comp = orthogonal_complement({gl.result, QMat::from_rows({*lam_coords})});
        return ok && same_lattice(QMat::from_rows({gl.result.to_ambient(comp.generators.row(0))}),
                                  *vee.basis);
    });

    criterion(3, "minimal norms", [] {
        bool ok = orbifold::verify_min_norm_in_P_dual();
        auto n = niemeier::verify_N();
        return ok && n.pass && n.root_count == 72;
    });

    criterion(4, "symmetry group", [] {
        using namespace symmetry;
        auto els = group_elements();
        bool ok = els.size() == 36 && verify_faithfulness();
        for (const auto& g : els) ok = ok && verify_symmetry(g).pass;
        return ok && verify_symmetry(beta()).disc_signs == std::vector<int>{1, -1, 1};
    });

    criterion(5, "embedding", [] {
        auto r = niemeier::embed_and_verify_iota();
        return r.pass && r.isometry && r.primitive && r.complement && r.v_images;
    });

    criterion(6, "codes", [] {
        using namespace codes;
        TernaryCode c12 = build_C12();
        int minw = 12;
        for (const auto& w : c12.words)
            if (int ww = weight(w); ww > 0) minw = std::min(minw, ww);
        bool ok = c12.words.size() == 729 && minw == 6;

        BinaryCode c24 = build_C24();
        auto census = c24.weight_census();
        ok = ok && census[0] == 1 && census[8] == 759 && census[12] == 2576 &&
             census[16] == 759 && census[24] == 1;

        for (BinaryWord w : c24.words) ok = ok && mog_membership(w);
        std::mt19937_64 rng(1);
        for (int i = 0; i < 10000; ++i) {
            BinaryWord w = BinaryWord(rng()) & 0xFFFFFF;
            ok = ok && mog_membership(w) == c24.contains(w);
        }
        for (BinaryWord w : domino_octads()) ok = ok && c24.contains(w);
        return ok && verify_domino_list(c24);
    });

    criterion(7, std::string("Mathieu") + (extended ? " (extended)" : ""), [extended] {
        using namespace mathieu;
        bool ok = schreier_sims({gen_A(), gen_B(), gen_C(), gen_D()}).order() == 95040;
        ok = ok && theta_containment().pass;

        auto c12 = codes::build_C12();
        std::array<int, 12> all_plus;
        all_plus.fill(1);
        ok = ok && lift_to_C12_automorphism(gen_A(), c12) == all_plus;
        ok = ok && lift_to_C12_automorphism(gen_B(), c12) == all_plus;
        ok = ok && lift_to_C12_automorphism(gen_D(), c12) == all_plus;
        std::array<int, 12> flips{1, 1, -1, 1, -1, 1, -1, 1, -1, -1, -1, 1};
        ok = ok && lift_to_C12_automorphism(gen_C(), c12) == flips;

        auto c24 = codes::build_C24();
        for (int g = 1; g <= 3; ++g)
            ok = ok &&
                 extend_to_M24(theta12(g), c24).cycle_string() == theta24(g).cycle_string();
        ok = ok && generation_theorem_check().pass;
        if (extended) {
            auto m = m24_generation_extended(c24);
            ok = ok && m.pass && m.stabilizer_order == 322560 && m.full_order == 244823040;
        }
        return ok;
    });

    criterion(8, "elliptic genus", [] {
        auto g = genus::verify_genus(4);
        auto s = genus::specializations(4);
        return g.pass && s.pass && s.euler == 24 && s.at_minus_one == 16 && s.holomorphic == -2;
    });

    criterion(9, "extended E6", [] {
        auto r = niemeier::extended_e6_checks();
        return r.pass && r.beta_r_pairing == Rat(1, 3) && r.symmetry_broken;
    });

    criterion(10, "deterministic property suites", [] {
        using namespace suites;
        Options opt;
        opt.seed = 2024;
        std::vector<SuiteReport> a{run_suite("lattices", opt), run_suite("codes", opt),
                                   run_suite("symmetries", opt)};
        std::vector<SuiteReport> b{run_suite("lattices", opt), run_suite("codes", opt),
                                   run_suite("symmetries", opt)};
        bool ok = reports_to_json(a, opt) == reports_to_json(b, opt);
        for (const auto& r : a) ok = ok && r.pass();
        return ok && symmetry::verify_homomorphism();
    });

    std::cout << (failures == 0 ? "ACCEPTANCE: all criteria pass"
                                : "ACCEPTANCE: criteria failing")
              << "\n";
    return failures == 0 ? 0 : 1;
}

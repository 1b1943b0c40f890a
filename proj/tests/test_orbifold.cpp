#include "k3z3/orbifold.hpp"

#include <doctest.h>

using namespace k3z3;
using namespace k3z3::orbifold;

TEST_CASE("label plane: nine points, twelve lines in four parallel classes") {
    CHECK(all_labels().size() == 9);
    auto lines = all_affine_lines();
    CHECK(lines.size() == 12);
    for (const AffineLine& base : {line_L12(), line_L34(), line_L01(), line_L00()})
        CHECK(parallels(base).size() == 3);
}

TEST_CASE("lattice invariants") {
    CHECK(discriminant(torus_invariant_lattice()) == -243);

    Lattice P = build_P();
    auto cP = classify(P);
    CHECK(P.rank == 18);
    CHECK(cP.even);
    CHECK(cP.pos == 0);
    CHECK(cP.neg == 18);
    CHECK(Rat(abs(discriminant(P))) == 27);

    Lattice K = build_K();
    CHECK(K.rank == 4);
    CHECK(classify(K).even);
    CHECK(Rat(abs(discriminant(K))) == 27);
    CHECK(K.gram == QMat{{Rat(2), Rat(1), Rat(0), Rat(0)},
                         {Rat(1), Rat(2), Rat(0), Rat(0)},
                         {Rat(0), Rat(0), Rat(0), Rat(3)},
                         {Rat(0), Rat(0), Rat(3), Rat(0)}});

    Lattice R = build_R();
    CHECK(R.rank == 18);
    CHECK(Rat(abs(discriminant(R))) == 19683);  // 3^9
}

TEST_CASE("P discriminant generators") {
    Lattice P = build_P();
    for (int j = 1; j <= 3; ++j) {
        auto c = P.from_ambient(p_vector(j));
        REQUIRE(c.has_value());
        CHECK(disc_q(P, *c) == Rat(2, 3));
        CHECK(coset_order(*c) == 3);
    }
}

TEST_CASE("v3 membership and line-sum norms") {
    Lattice P = build_P();
    auto c = P.from_ambient(v_generator(3));
    REQUIRE(c.has_value());
    bool integral = true;
    for (const Rat& x : *c)
        if (!is_integer(x)) integral = false;
    CHECK(integral);

    for (const AffineLine& l : all_affine_lines()) {
        QVec t = line_sum_third(l);
        CHECK(dot(t, ambient_gram(), t) == -2);
    }
}

TEST_CASE("minimal norms in the dual of P (full enumeration)") {
    std::string detail;
    CHECK(verify_min_norm_in_P_dual(&detail));
}

TEST_CASE("the glue list lands in H2(X,Z) and wrong signs fail") {
    std::string detail;
    CHECK(verify_gluelist(&detail));
}

TEST_CASE("H2(X,Z) is the even unimodular (3,19) lattice") {
    GluedLattice h2x = build_H2X();
    auto c = classify(h2x.result);
    CHECK(h2x.result.rank == 22);
    CHECK(c.even);
    CHECK(c.unimodular);
    CHECK(c.pos == 3);
    CHECK(c.neg == 19);
}

TEST_CASE("transcendental lattice and Kahler class") {
    auto [T, omega] = transcendental_and_kahler();
    CHECK(T.gram == QMat{{Rat(2), Rat(1)}, {Rat(1), Rat(2)}});
    CHECK(dot(omega, ambient_gram(), omega) == 6);
}

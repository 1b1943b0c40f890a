#include "k3z3/gluing.hpp"
#include "k3z3/orbifold.hpp"

#include <doctest.h>

using namespace k3z3;

TEST_CASE("hyperbolic-plane worked example glues and round-trips") {
    QMat amb(2, 2);
    amb(0, 0) = 1;
    amb(1, 1) = -1;
    Lattice lam = Lattice::in_ambient(QMat{{Rat(3, 2), Rat(-1, 2)}}, amb);
    Lattice vee = Lattice::in_ambient(QMat{{Rat(-1, 2), Rat(3, 2)}}, amb);
    CHECK(lam.gram(0, 0) == 2);
    CHECK(vee.gram(0, 0) == -2);

    GlueMap gm{QMat{{Rat(1, 2)}}, QMat{{Rat(1, 2)}}};
    REQUIRE(check_glue_compatible(lam, vee, gm));
    GluedLattice gl = glue(lam, vee, gm);
    auto c = classify(gl.result);
    CHECK(c.even);
    CHECK(c.unimodular);
    CHECK(gl.result.rank == 2);
    CHECK(c.pos == 1);
    CHECK(c.neg == 1);

    // the glue vector (1/2, 1/2) is isotropic and lies in the overlattice
    QVec v0{Rat(1, 2), Rat(1, 2)};
    CHECK(dot(v0, amb, v0) == 0);
    CHECK(gl.result.from_ambient(v0).has_value());

    // round-trip: the complement of one summand inside the overlattice is the other
    auto lam_coords = gl.result.from_ambient(lam.to_ambient({Rat(1)}));
    REQUIRE(lam_coords.has_value());
    SublatticeHandle lh{gl.result, QMat::from_rows({*lam_coords})};
    auto comp = orthogonal_complement(lh);
    QVec comp_amb = gl.result.to_ambient(comp.generators.row(0));
    CHECK(same_lattice(QMat::from_rows({comp_amb}), *vee.basis));
}

TEST_CASE("a wrong glue map is rejected as incompatible") {
    using namespace orbifold;
    Lattice K = build_K();
    Lattice P = build_P();

    auto row_in = [](const Lattice& L, const QVec& amb) {
        auto c = L.from_ambient(amb);
        REQUIRE(c.has_value());
        return *c;
    };

    QMat src = QMat::from_rows(
        {row_in(K, k_vector(1)), row_in(K, k_vector(2)), row_in(K, k_vector(3))});
    QMat good = QMat::from_rows(
        {row_in(P, p_vector(1)), row_in(P, p_vector(2)), row_in(P, p_vector(3))});
    GlueMap ok{src, good};
    CHECK(check_glue_compatible(K, P, ok));

    // send k_1 to p_1 + p_2 instead: q-values no longer match up
    QMat bad = good;
    bad.set_row(0, row_in(P, p_vector(1)) + row_in(P, p_vector(2)));
    std::string reason;
    CHECK(!check_glue_compatible(K, P, GlueMap{src, bad}, &reason));
    CHECK(!reason.empty());
}

TEST_CASE("automorphism extension across the glue") {
    QMat amb(2, 2);
    amb(0, 0) = 1;
    amb(1, 1) = -1;
    Lattice lam = Lattice::in_ambient(QMat{{Rat(3, 2), Rat(-1, 2)}}, amb);
    Lattice vee = Lattice::in_ambient(QMat{{Rat(-1, 2), Rat(3, 2)}}, amb);
    GluedLattice gl = glue(lam, vee, GlueMap{QMat{{Rat(1, 2)}}, QMat{{Rat(1, 2)}}});
    // -id on the first summand extends (paired with -id on the second)
    auto psi = extend_automorphism(QMat{{Rat(-1)}}, gl);
    REQUIRE(psi.has_value());
    // the discriminant groups are Z2, so either sign of the partner glues
    CHECK(((*psi)(0, 0) == -1 || (*psi)(0, 0) == 1));
}

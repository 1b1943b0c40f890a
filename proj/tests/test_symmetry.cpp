#include "k3z3/symmetry.hpp"

#include <doctest.h>

using namespace k3z3;
using namespace k3z3::symmetry;

TEST_CASE("group structure: 36 elements, orders, composition") {
    auto els = group_elements();
    CHECK(els.size() == 36);
    CHECK(element_order(alpha1()) == 3);
    CHECK(element_order(alpha2()) == 3);
    CHECK(element_order(beta()) == 4);
    // beta conjugates the translations
    AffineSymmetry c = compose(compose(beta(), alpha1()), inverse(beta()));
    CHECK(c.linear_power == 0);
}

TEST_CASE("generators pass all structural checks") {
    for (const AffineSymmetry& g : {alpha1(), alpha2(), beta()}) {
        auto r = verify_symmetry(g);
        CHECK(r.pass);
        CHECK(r.gram_preserved);
        CHECK(r.p_preserved);
        CHECK(r.k_preserved);
        CHECK(r.glue_preserved);
    }
}

TEST_CASE("every element passes; the action is faithful and a homomorphism") {
    for (const AffineSymmetry& g : group_elements()) CHECK(verify_symmetry(g).pass);
    CHECK(verify_faithfulness());
    CHECK(verify_homomorphism());
    CHECK(verify_sigma_fixed());
}

TEST_CASE("beta acts on the discriminant cosets with signs (+,-,+)") {
    auto r = verify_symmetry(beta());
    CHECK(r.disc_signs == std::vector<int>{1, -1, 1});
}

TEST_CASE("an ad-hoc exceptional-class swap is not a symmetry") {
    using orbifold::e_index;
    // swap E_{00}^{(1)} with E_{01}^{(1)} only, leaving the partners behind
    QMat m = QMat::identity(orbifold::kAmbientDim);
    int a = e_index(0, 0, 1), b = e_index(0, 1, 1);
    m.set_row(a, QMat::identity(orbifold::kAmbientDim).row(b));
    m.set_row(b, QMat::identity(orbifold::kAmbientDim).row(a));
    auto r = verify_action_matrix(m);
    CHECK(!r.pass);
}

TEST_CASE("all (-2)-vectors of the perpendicular rank-19 lattice lie in P") {
    Lattice sp = orbifold::sigma_perp_lattice();
    CHECK(sp.rank == 19);
    std::string detail;
    CHECK(verify_roots_in_sigma_perp(&detail));
}

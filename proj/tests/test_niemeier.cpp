#include "k3z3/niemeier.hpp"

#include <doctest.h>

using namespace k3z3;
using namespace k3z3::niemeier;

TEST_CASE("N is even, unimodular, definite with exactly 72 roots in A2^12") {
    auto r = verify_N();
    CHECK(r.pass);
    CHECK(r.even);
    CHECK(r.unimodular);
    CHECK(r.definite);
    CHECK(r.root_count == 72);
    CHECK(r.roots_in_R);
    CHECK(r.basis_spans_generators);
    CHECK(r.membership_agrees);
}

TEST_CASE("glue words of N form the ternary Golay code") {
    // w_1 .. w_6 read off the generator matrix rows
    auto c12 = codes::build_C12();
    for (int i = 1; i <= 6; ++i) {
        auto gw = glue_word(w_vector(i));
        REQUIRE(gw.has_value());
        codes::TernaryWord t;
        for (int j = 0; j < 12; ++j) t[j] = (*gw)[j] == 2 ? -1 : (*gw)[j];
        CHECK(c12.contains(t));
    }
    CHECK(n_contains(w_vector(1) + w_vector(2)));
}

TEST_CASE("iota is a primitive (-1)-isometry with complement A2^3") {
    auto r = embed_and_verify_iota();
    CHECK(r.pass);
    CHECK(r.isometry);
    CHECK(r.v_images);
    CHECK(r.image_span);
    CHECK(r.primitive);
    CHECK(r.complement);
}

TEST_CASE("gluing P~ with K~ reproduces N") {
    auto r = gluing_in_N();
    CHECK(r.pass);
    CHECK(r.anti_isometry);
    CHECK(r.certificates);
    CHECK(r.equals_N);
}

TEST_CASE("symmetry lifts act on N and close to a 36-element group") {
    auto r = verify_lifts();
    CHECK(r.pass);
    CHECK(r.tables_match);
    CHECK(r.preserves_N);
    CHECK(r.intertwines_iota);
    CHECK(r.w_images);
    CHECK(r.group_order_36);
    CHECK(r.roots_to_roots);
}

TEST_CASE("block projection to M12 is faithful and matches the stated images") {
    auto r = verify_projection();
    CHECK(r.pass);
    CHECK(r.generators_match);
    CHECK(r.multiplicative);
    CHECK(r.faithful);
}

TEST_CASE("extended-E6 identities and the symmetry-breaking pairing 1/3") {
    auto r = extended_e6_checks();
    CHECK(r.pass);
    CHECK(r.extended_e6_gram);
    CHECK(r.v1_identity);
    CHECK(r.v2_identity);
    CHECK(r.v3_identity);
    CHECK(r.beta_r_pairing == Rat(1, 3));
    CHECK(r.symmetry_broken);
}

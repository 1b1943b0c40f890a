#include "k3z3/mathieu.hpp"

#include <doctest.h>

#include <algorithm>
#include <random>

using namespace k3z3;
using namespace k3z3::mathieu;

TEST_CASE("cycle notation round-trips byte-exactly") {
    Permutation a = gen_A();
    CHECK(a.cycle_string() == "(1,6,5,4,10,9,12,7,11,3,2)");
    CHECK(gen_B().cycle_string() == "(1,4,6,12,2)(3,11,9,7,5)");
    CHECK(gen_C().cycle_string() == "(1,7)(2,5)(3,12)(4,9)(6,11)(8,10)");
    CHECK(gen_D().cycle_string() == "(1,2)(3,5)(4,12)(7,11)");
    CHECK(Permutation::from_cycles(a.cycle_string(), 12).image == a.image);
    CHECK(Permutation::identity(12).cycle_string() == "()");
}

TEST_CASE("orders of the generators") {
    CHECK(order(gen_A()) == 11);
    CHECK(order(gen_B()) == 5);
    CHECK(order(gen_C()) == 2);
    CHECK(order(gen_D()) == 2);
}

TEST_CASE("|<A,B,C,D>| = 95040 = |M12|") {
    PermGroup g = schreier_sims({gen_A(), gen_B(), gen_C(), gen_D()});
    CHECK(g.order() == 95040);
    CHECK(g.contains(theta12(1)));
    CHECK(g.contains(theta12(2)));
    CHECK(g.contains(theta12(3)));
}

TEST_CASE("BSGS order is stable under seeded generator shuffles") {
    std::vector<Permutation> gens{gen_A(), gen_B(), gen_C(), gen_D()};
    std::mt19937_64 rng(5);
    for (int t = 0; t < 5; ++t) {
        std::shuffle(gens.begin(), gens.end(), rng);
        CHECK(schreier_sims(gens).order() == 95040);
    }
}

TEST_CASE("Theta images generate a faithful group of order 36 with beta of order 4") {
    auto r = theta_containment();
    CHECK(r.pass);
    CHECK(r.members);
    CHECK(r.beta_order4);
    CHECK(r.group_order_36);
}

TEST_CASE("C12 lifts: A, B, D sign-free; C with the stated six flips") {
    auto c12 = codes::build_C12();
    std::array<int, 12> all_plus;
    all_plus.fill(1);
    CHECK(lift_to_C12_automorphism(gen_A(), c12) == all_plus);
    CHECK(lift_to_C12_automorphism(gen_B(), c12) == all_plus);
    CHECK(lift_to_C12_automorphism(gen_D(), c12) == all_plus);
    auto c = lift_to_C12_automorphism(gen_C(), c12);
    REQUIRE(c.has_value());
    for (int i = 0; i < 12; ++i) {
        bool flip = i + 1 == 3 || i + 1 == 5 || i + 1 == 7 || i + 1 == 9 || i + 1 == 10 ||
                    i + 1 == 11;
        CHECK((*c)[i] == (flip ? -1 : 1));
    }
}

TEST_CASE("the dodecad embedding data") {
    const auto& d = dodecad_embedding();
    CHECK(d.dodecad == std::vector<int>{1, 2, 3, 4, 6, 8, 9, 12, 13, 16, 18, 23});
    // relabel inverts label_of
    for (int r12 = 1; r12 <= 12; ++r12) CHECK(d.relabel[d.label_of[r12]] == r12);
}

TEST_CASE("octad propagation reproduces the stated M24 images byte-exactly") {
    auto c24 = codes::build_C24();
    const char* expected[4] = {
        nullptr,
        "(1,3,8)(2,23,16)(5,22,14)(10,20,21)(11,17,24)(12,13,18)",
        "(1,23,12)(2,18,8)(3,16,13)(5,14,22)(7,15,19)(10,20,21)",
        "(1,8,18,12)(2,13,23,3)(5,10)(7,11,15,24)(14,21,22,20)(17,19)",
    };
    for (int g = 1; g <= 3; ++g) {
        Permutation e = extend_to_M24(theta12(g), c24);
        CHECK(e.cycle_string() == expected[g]);
        CHECK(e.cycle_string() == theta24(g).cycle_string());
    }
}

TEST_CASE("generation mechanism: automorphisms stabilizing D and mixing octad #28") {
    auto r = generation_theorem_check();
    CHECK(r.pass);
    CHECK(r.automorphisms);
    CHECK(r.stabilize_dodecad);
    CHECK(r.restrictions_match);
    CHECK(r.mixing);
    CHECK(r.group_order_36);
}

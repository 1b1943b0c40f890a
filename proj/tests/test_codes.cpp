#include "k3z3/codes.hpp"

#include <doctest.h>

#include <random>
#include <set>

using namespace k3z3::codes;

TEST_CASE("C12 size, minimum weight and closure") {
    TernaryCode c = build_C12();
    CHECK(c.words.size() == 729);
    int minw = 12;
    for (const auto& w : c.words)
        if (int ww = weight(w); ww > 0) minw = std::min(minw, ww);
    CHECK(minw == 6);
    // closed under addition and negation on a sample
    CHECK(c.contains(ternary_add(c.words[5], c.words[77])));
    CHECK(c.contains(ternary_neg(c.words[123])));
}

TEST_CASE("C24 weight enumerator (1, 759, 2576, 759, 1)") {
    BinaryCode c = build_C24();
    CHECK(c.words.size() == 4096);
    auto census = c.weight_census();
    CHECK(census[0] == 1);
    CHECK(census[8] == 759);
    CHECK(census[12] == 2576);
    CHECK(census[16] == 759);
    CHECK(census[24] == 1);
    for (int w = 1; w <= 7; ++w) CHECK(census[w] == 0);
    CHECK(octads(c).size() == 759);
}

TEST_CASE("MOG membership agrees with linear membership") {
    BinaryCode c = build_C24();
    for (BinaryWord w : c.words) CHECK(mog_membership(w));

    std::mt19937_64 rng(20240811);
    int checked = 0;
    for (int i = 0; i < 10000; ++i) {
        BinaryWord w = BinaryWord(rng()) & 0xFFFFFF;
        CHECK(mog_membership(w) == c.contains(w));
        ++checked;
    }
    CHECK(checked == 10000);
}

TEST_CASE("MOG grid round-trip and rendering") {
    CHECK(grid_to_word("........................") == 0);
    std::string r = render_mog(0);
    CHECK(r.find("•") == std::string::npos);  // empty grid, no bullets
    for (BinaryWord w : {BinaryWord(0x1), BinaryWord(0x80F00F)})
        CHECK(grid_to_word(word_to_grid(w)) == w);
}

TEST_CASE("every domino-list octad is a weight-8 codeword with the pinned supports") {
    BinaryCode c = build_C24();
    std::string detail;
    CHECK(verify_domino_list(c, &detail));
    auto doms = domino_octads();
    CHECK(doms.size() == 29);
    for (BinaryWord w : doms) {
        CHECK(c.contains(w));
        CHECK(support(w).size() == 8);
    }
    CHECK(support(doms[27]) == std::vector<int>{3, 5, 6, 9, 15, 19, 23, 24});  // #28
    CHECK(domino_number(doms[4]) == 5);
}

TEST_CASE("octad completion: the worked five-point example") {
    BinaryCode c = build_C24();
    auto oc = octad_complete({2, 4, 6, 8, 9}, c);
    REQUIRE(oc.has_value());
    CHECK(domino_number(*oc) == 5);
    CHECK(support(*oc) == std::vector<int>{2, 4, 6, 8, 9, 11, 17, 18});
}

TEST_CASE("S(5,8,24): every random 5-set lies in exactly one octad") {
    BinaryCode c = build_C24();
    std::mt19937_64 rng(97);
    std::vector<int> labels(24);
    for (int i = 0; i < 24; ++i) labels[i] = i + 1;
    for (int t = 0; t < 10000; ++t) {
        std::shuffle(labels.begin(), labels.end(), rng);
        std::vector<int> pts(labels.begin(), labels.begin() + 5);
        auto oc = octad_complete(pts, c);  // throws on a double cover
        REQUIRE(oc.has_value());
        for (int p : pts) CHECK(((*oc >> (p - 1)) & 1) == 1);
    }
}

TEST_CASE("code automorphism predicates") {
    BinaryCode c24 = build_C24();
    std::vector<int> ident(25);
    for (int i = 1; i <= 24; ++i) ident[i] = i;
    CHECK(is_binary_code_automorphism(ident, c24));
    std::vector<int> swap12 = ident;
    std::swap(swap12[1], swap12[2]);
    CHECK(!is_binary_code_automorphism(swap12, c24));

    TernaryCode c12 = build_C12();
    std::vector<int> id12(13);
    std::array<int, 12> plus;
    for (int i = 1; i <= 12; ++i) id12[i] = i;
    plus.fill(1);
    CHECK(is_ternary_code_automorphism(id12, plus, c12));
    std::array<int, 12> one_flip = plus;
    one_flip[11] = -1;  // coordinate 12 appears in a generator row
    CHECK(!is_ternary_code_automorphism(id12, one_flip, c12));
}

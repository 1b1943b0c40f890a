#include "k3z3/lattice.hpp"
#include "k3z3/suites.hpp"

#include <doctest.h>

using namespace k3z3;

namespace {
QMat a2_gram() { return QMat{{Rat(2), Rat(-1)}, {Rat(-1), Rat(2)}}; }
}

TEST_CASE("A2 classification and discriminant group Z3") {
    Lattice a2 = Lattice::from_gram(a2_gram());
    auto c = classify(a2);
    CHECK(c.integral);
    CHECK(c.even);
    CHECK(!c.unimodular);
    CHECK(c.pos == 2);
    CHECK(discriminant(a2) == 3);

    auto dd = dual_and_discriminant_group(a2);
    REQUIRE(dd.elementary_divisors == std::vector<Int>{3});
    CHECK(dd.group_order() == 3);
    // q on a generator coset is +-2/3 mod 2Z depending on the sign choice
    Rat q = dd.q_values[0];
    CHECK((q == Rat(2, 3) || q == Rat(4, 3)));
    CHECK(coset_order(dd.generator_lifts.row(0)) == 3);
}

TEST_CASE("unimodular lattices have trivial discriminant groups") {
    Lattice u = Lattice::from_gram(QMat{{Rat(0), Rat(1)}, {Rat(1), Rat(0)}});
    auto dd = dual_and_discriminant_group(u);
    CHECK(dd.elementary_divisors.empty());
    CHECK(dd.group_order() == 1);
}

TEST_CASE("short vectors of A2") {
    Lattice a2 = Lattice::from_gram(a2_gram());
    auto sv = short_vectors(a2, Rat(2));
    CHECK(sv.size() == 6);  // the six roots, closed under negation
    for (const auto& s : sv) CHECK(s.norm == 2);
}

TEST_CASE("saturation and primitivity") {
    Lattice z2 = Lattice::from_gram(QMat::identity(2));
    SublatticeHandle doubled{z2, QMat{{Rat(2), Rat(0)}}};
    CHECK(!is_primitive(doubled));
    CHECK(saturation_index(doubled) == 2);
    auto sat = saturation(doubled);
    CHECK(is_primitive(sat));

    SublatticeHandle prim{z2, QMat{{Rat(2), Rat(1)}}};
    CHECK(is_primitive(prim));
    auto comp = orthogonal_complement(prim);
    REQUIRE(comp.generators.rows() == 1);
    CHECK(dot(comp.generators.row(0), z2.gram, prim.generators.row(0)) == 0);
}

TEST_CASE("sublattice index vs discriminant") {
    Lattice a2 = Lattice::from_gram(a2_gram());
    SublatticeHandle tripled{a2, QMat{{Rat(3), Rat(0)}, {Rat(0), Rat(1)}}};
    CHECK(sublattice_index_check(tripled) == 3);
    QMat sg = sublattice_gram(tripled);
    CHECK(Rat(abs(sg.det())) == 27);
}

TEST_CASE("ambient coordinates round-trip") {
    QMat amb = QMat::identity(3);
    Lattice L = Lattice::in_ambient(QMat{{Rat(1), Rat(1), Rat(0)}, {Rat(0), Rat(1), Rat(1)}}, amb);
    QVec v = L.to_ambient({Rat(2), Rat(-1)});
    auto back = L.from_ambient(v);
    REQUIRE(back.has_value());
    CHECK(*back == QVec{Rat(2), Rat(-1)});
    CHECK(!L.from_ambient({Rat(1), Rat(0), Rat(0)}).has_value());
}

TEST_CASE("lattice JSON serialization round-trips and uses a/b strings") {
    Lattice a2 = Lattice::from_gram(QMat{{Rat(2), Rat(-1)}, {Rat(-1), Rat(2)}});
    std::string doc = suites::lattice_to_json(a2);
    CHECK(doc.find("\"rank\": 2") != std::string::npos);
    CHECK(doc.find("\"-1\"") != std::string::npos);
    Lattice back = suites::lattice_from_json(doc);
    CHECK(back.rank == 2);
    CHECK(back.gram == a2.gram);

    // rationals as "a/b" strings
    Lattice half = Lattice::from_gram(QMat{{Rat(1, 2)}});
    std::string doc2 = suites::lattice_to_json(half);
    CHECK(doc2.find("\"1/2\"") != std::string::npos);
    CHECK(suites::lattice_from_json(doc2).gram(0, 0) == Rat(1, 2));
}

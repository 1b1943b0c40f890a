#pragma once
// The symmetry group (Z3)^2 x| Z4 of the orbifold K3 surface: affine maps on
// the label plane F3^2 and the induced lattice isometries of the 22-dim
// ambient space of the orbifold module, with all structural checks.

#include "k3z3/orbifold.hpp"

namespace k3z3::symmetry {

// t |-> btilde^linear_power(t) + translation, with btilde(t1,t2) = (-t2, t1).
struct AffineSymmetry {
    int linear_power = 0;             // 0..3
    std::array<int, 2> translation{0, 0};  // entries in {0,1,2}
    bool operator==(const AffineSymmetry&) const = default;
};

AffineSymmetry alpha1();  // translation by (1,0)
AffineSymmetry alpha2();  // translation by (0,1)
AffineSymmetry beta();    // pure rotation

AffineSymmetry compose(const AffineSymmetry& g, const AffineSymmetry& h);  // g after h
AffineSymmetry inverse(const AffineSymmetry& g);
int element_order(const AffineSymmetry& g);
std::array<int, 2> apply_affine(const AffineSymmetry& g, std::array<int, 2> t);

std::vector<AffineSymmetry> group_elements();  // exactly 36

// 22x22 matrix on the orbifold ambient space; row i = image of coordinate i.
// Vectors act as rows: image(v) = v * M.
QMat lattice_action(const AffineSymmetry& g);

struct SymmetryReport {
    bool gram_preserved = false;
    bool p_preserved = false;
    bool k_preserved = false;
    bool glue_preserved = false;       // each k_j + p_j maps into H2(X,Z)
    std::vector<int> disc_signs;       // sign of the induced map on each k_j+p_j coset
    bool pass = false;
    std::string failure;               // names the violated generator on failure
};

SymmetryReport verify_symmetry(const AffineSymmetry& g);
// Same checks for an arbitrary candidate matrix (used by negative tests).
SymmetryReport verify_action_matrix(const QMat& m);

// The 36 lattice actions are pairwise distinct and so are the affine maps.
bool verify_faithfulness();
// action(g o h) == action(h) * action(g) for all 36^2 pairs (row convention).
bool verify_homomorphism();
// Every action fixes kappa_1, kappa_2 and kappa_3 + kappa_4.
bool verify_sigma_fixed();
// All norm-(-2) vectors of the rank-19 lattice <P, k2+p2> lie in P.
bool verify_roots_in_sigma_perp(std::string* detail = nullptr);

}  // namespace k3z3::symmetry

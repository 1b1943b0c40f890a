#pragma once
// Concrete lattices of the Z3-orbifold K3 surface X: the fixed-point label
// plane F3^2, the root lattice R of type A2^9, the Kummer-like lattice P and
// its dual, the invariant lattice K, the glued rank-22 lattice H2(X,Z), the
// transcendental lattice and the Kahler class.
//
// Everything lives in one 22-dimensional ambient space with coordinates
// (kappa_1..kappa_4 | E_t^(1), E_t^(2) for t in F3^2), block Gram
// K = [[2,1,0,0],[1,2,0,0],[0,0,0,3],[0,0,3,0]] orthogonal to nine A2(-1)
// blocks <E_t^(j),E_t^(j)> = -2, <E_t^(1),E_t^(2)> = 1.

#include "k3z3/gluing.hpp"

#include <array>
#include <string>
#include <utility>

namespace k3z3::orbifold {

inline constexpr int kAmbientDim = 22;

// kappa_j, j in 1..4 -> ambient coordinate index.
inline int kappa_index(int j) { return j - 1; }
// E_{(t1,t2)}^{(j)}, t1,t2 in {0,1,2}, j in {1,2} -> ambient index.
inline int e_index(int t1, int t2, int j) { return 4 + (t1 * 3 + t2) * 2 + (j - 1); }

QMat ambient_gram();
// Human-readable symbol for each ambient coordinate ("kappa_1", "E_{01}^{(2)}", ...).
std::vector<std::string> coordinate_labels();
// Provenance of the kappa basis in terms of the torus two-forms (metadata only).
std::vector<std::pair<std::string, std::string>> kappa_provenance();

// ---- the label plane and its affine lines -----------------------------

struct FixedPointLabel {
    int t1 = 0, t2 = 0;  // representatives {0,1,2}, with 2 == -1
    bool operator==(const FixedPointLabel&) const = default;
};

struct AffineLine {
    std::array<FixedPointLabel, 3> points;  // sorted lexicographically
    bool contains(const FixedPointLabel& t) const;
    bool operator==(const AffineLine&) const = default;
};

std::vector<FixedPointLabel> all_labels();        // exactly 9
std::vector<AffineLine> all_affine_lines();       // exactly 12, in 4 parallel classes
AffineLine line_through(FixedPointLabel p, int d1, int d2);
AffineLine shifted(const AffineLine& l, int s1, int s2);
// The four named lines of the glue list.
AffineLine line_L12();   // {(0,0),(0,1),(0,2)}
AffineLine line_L34();   // {(0,0),(1,0),(2,0)}
AffineLine line_L01();   // {(0,0),(1,2),(2,1)}
AffineLine line_L00();   // {(0,0),(1,1),(2,2)}
// The three parallels of a line (including itself).
std::vector<AffineLine> parallels(const AffineLine& l);

// ---- distinguished ambient vectors ------------------------------------

QVec kappa(int j);                       // unit vector at kappa_j
QVec e_vec(int t1, int t2, int j);       // unit vector at E_t^(j)
QVec e_total(int t1, int t2);            // E_t = E_t^(1) + 2 E_t^(2)
QVec line_sum(const AffineLine& l);      // sum_{t in l} E_t
QVec line_sum_third(const AffineLine& l);  // (1/3) sum_{t in l} E_t

QVec v_generator(int i);   // v1, v2, v3 (generators of P over R)
QVec p_vector(int j);      // p1, p2, p3 (discriminant generators of P)
QVec k_vector(int j);      // k1, k2, k3 (discriminant generators of K)

// Glue-list vector of type 1..4 for a chosen parallel of the base line
// (type 1: +(1/3)kappa_3; type 2: -(1/3) sum E; types 3,4 mixed).
QVec glue_type_vector(int type, const AffineLine& parallel);
// g1..g4 and g4' (i = 5): the pinned parallels used in the kappa_1 identity.
QVec g_vector(int i);

// ---- lattices ----------------------------------------------------------

Lattice build_R();                      // A2(-1)^9, rank 18
Lattice build_K();                      // rank 4, Gram [[2,1,0,0],[1,2,0,0],[0,0,0,3],[0,0,3,0]]
Lattice build_P();                      // rank 18, |disc| = 27
Lattice build_P_dual();                 // P*, generated by R and (1/3) line sums
Lattice torus_invariant_lattice();      // rank 4, Gram [[6,3,0,0],[3,6,0,0],[0,0,0,3],[0,0,3,0]]
GluedLattice build_H2X();               // K glued with P along k_j <-> p_j
// Negative-definite rank-19 lattice generated by P and k2 + p2.
Lattice sigma_perp_lattice();

// T_X = span{kappa_1, kappa_2} (Gram [[2,1],[1,2]]) and omega = kappa_3 + kappa_4.
std::pair<Lattice, QVec> transcendental_and_kahler();

// True iff every nonzero vector of P* has |<v,v>| >= 2 and every norm-(-2)
// vector is either an A2 root of R or an affine-line vector
// +- sum_{t in L'} m_t with m_t one of the three minimal representatives
// of the coset of (1/3)E_t in the A2* block at t.
bool verify_min_norm_in_P_dual(std::string* detail = nullptr);

// Membership of all four glue-vector types (all parallels) in H2(X,Z),
// plus the wrong-sign negative test for type 2 and the type-1 difference
// landing in P.
bool verify_gluelist(std::string* detail = nullptr);

}  // namespace k3z3::orbifold

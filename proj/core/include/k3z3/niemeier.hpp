#pragma once
// The Niemeier lattice N of type A2^12 built from the ternary Golay glue
// code, the primitive embedding of P(-1) into N, the lifted symmetry
// automorphisms and their projection to M12, and the extended-E6 checks
// for the non-primitive embedding into the E6^4 Niemeier lattice.

#include "k3z3/mathieu.hpp"
#include "k3z3/symmetry.hpp"

#include <string>

namespace k3z3::niemeier {

// 24-dim ambient with coordinates E~_j^(l), j in 1..12, l in {1,2};
// per-block Gram [[2,-1],[-1,2]], blocks orthogonal.
inline constexpr int kDim = 24;
inline int nt_index(int j, int l) { return (j - 1) * 2 + (l - 1); }

QMat niemeier_gram();
QVec nt_e(int j, int l);      // unit vector at E~_j^(l)
QVec nt_e_total(int j);       // E~_j = E~_j^(1) + 2 E~_j^(2)
QVec w_vector(int i);         // w_i = (1/3) sum_j a_ij E~_j, i in 1..6

Lattice build_R_tilde();      // A2^12, rank 24
Lattice build_N();            // even unimodular overlattice, |disc| = 1

// Glue-code reduction of an ambient vector: nullopt unless every block
// component lies in A2*; entries in {0,1,2}.
std::optional<std::array<int, 12>> glue_word(const QVec& v);
// Membership in N: every block in A2* and the glue word lies in C12.
bool n_contains(const QVec& v);

struct NReport {
    bool even = false, unimodular = false, definite = false;
    int root_count = 0;            // norm-2 vectors, expected 72
    bool roots_in_R = false;
    bool basis_spans_generators = false;
    bool membership_agrees = false;  // glue-code test vs basis coordinates
    bool pass = false;
    std::string failure;
};
NReport verify_N();

// ---- the embedding iota: P(-1) -> N ------------------------------------

// Image of an orbifold-ambient vector supported on the E-coordinates
// (throws when a kappa-component is nonzero).
QVec iota(const QVec& v22);
QVec p_tilde(int j);          // iota(p_j)
QVec k_tilde(int j);          // (1/3)E~_10, -(1/3)E~_12, -(1/3)E~_11
Lattice p_tilde_lattice();    // iota(P(-1)) with basis = iota of P's basis
Lattice k_tilde_lattice();    // A2,10 + A2,11 + A2,12

struct IotaReport {
    bool isometry = false;        // <iota x, iota y> = -<x,y>_P on the basis
    bool v_images = false;        // iota(v1)=w1, iota(v2)=w2, iota(v3)=w1+w2+w3+E~1-E~2-E~3
    bool image_span = false;      // image = span{E~_j^(l), j<=9; w1,w2,w3}
    bool primitive = false;
    bool complement = false;      // orthogonal complement = blocks 10,11,12
    bool pass = false;
    std::string failure;
};
IotaReport embed_and_verify_iota();

// ---- gluing N from P~ and K~ -------------------------------------------

struct GluingReport {
    bool anti_isometry = false;   // q_P~ = -q_K~ composed with the glue map
    bool certificates = false;    // p~_j + k~_j in the stated w-coset of R~
    bool equals_N = false;        // glue(P~, K~, glue map) = N as a vector set
    bool pass = false;
    std::string failure;
};
GluingReport gluing_in_N();

// ---- lifted symmetries -------------------------------------------------

// 24x24 row-action matrix (v -> v M) on the Niemeier ambient induced by a
// symmetry g: conjugation by iota on blocks 1..9, and on blocks 10..12 the
// identity for even rotation part, the block-12 root swap for odd.
QMat lift_matrix(const symmetry::AffineSymmetry& g);

struct LiftReport {
    bool tables_match = false;    // generator lifts equal the frozen signed-permutation tables
    bool preserves_N = false;     // basis maps to integer coordinates, |det| = 1, Gram kept
    bool intertwines_iota = false;  // lift(iota v) = iota(g v) on P's basis
    bool w_images = false;        // stated w-column identities hold modulo R~
    bool group_order_36 = false;  // matrix closure of the three lifts has 36 elements
    bool roots_to_roots = false;
    bool pass = false;
    std::string failure;
};
LiftReport verify_lifts();

// Permutation of the twelve A2 blocks induced by a lift matrix.
mathieu::Permutation project_to_M12(const QMat& lift);

struct ProjectionReport {
    bool generators_match = false;   // projections equal the frozen Theta images
    bool multiplicative = false;     // on all 36 elements
    bool faithful = false;           // 36 distinct permutations
    bool pass = false;
    std::string failure;
};
ProjectionReport verify_projection();

// ---- extended-E6 checks (non-primitive embedding into E6^4) ------------

struct ExtendedE6Report {
    bool extended_e6_gram = false;  // 7-vector Gram = 2I - adjacency(extended E6)
    bool v1_identity = false;       // v1 = r' - r
    bool v3_identity = false;       // v3 = -(r + r' + r'')
    bool v2_identity = false;       // v2 = (1/3)((E_00-E_01)+(E_10-E_11)+(E_20-E_21))
    Rat beta_r_pairing;             // <beta_* r, r> in P(-1), expected 1/3
    bool symmetry_broken = false;   // the pairing is not an integer
    bool pass = false;
    std::string failure;
};
ExtendedE6Report extended_e6_checks();

}  // namespace k3z3::niemeier

#pragma once
// Integral-lattice algebra: Gram matrices, classification, discriminant
// groups with explicit dual-vector lifts, primitivity/saturation, exact
// short-vector enumeration and orthogonal complements.

#include "k3z3/matrix.hpp"

#include <optional>
#include <string>

namespace k3z3 {

struct Lattice {
    int rank = 0;
    QMat gram;                        // rank x rank, symmetric
    std::optional<QMat> basis;        // rows: ambient coordinates
    std::optional<QMat> ambient_gram; // required when basis is present

    static Lattice from_gram(QMat g);
    // Gram is derived from the ambient inner products.
    static Lattice in_ambient(QMat basis_rows, QMat ambient_gram);

    bool has_ambient() const { return basis.has_value(); }
    // Ambient coordinates of the vector with the given basis coefficients.
    QVec to_ambient(const QVec& coeffs) const;
    // Basis coefficients of an ambient vector lying in the Q-span.
    std::optional<QVec> from_ambient(const QVec& ambient_vec) const;
};

struct Classification {
    bool integral = false;
    bool even = false;
    bool unimodular = false;
    int pos = 0, neg = 0;   // signature
};

struct DiscriminantData {
    std::vector<Int> elementary_divisors;  // > 1, each dividing the next
    QMat generator_lifts;   // rows: dual vectors in lattice-basis coords
    std::vector<Rat> q_values;  // in [0,2)
    QMat b_matrix;              // in [0,1)
    Int group_order() const;
};

struct SublatticeHandle {
    Lattice parent;
    QMat generators;   // rows: coefficients in parent basis
};

Rat discriminant(const Lattice& L);
Classification classify(const Lattice& L);
DiscriminantData dual_and_discriminant_group(const Lattice& L);

// q-value (mod 2Z, in [0,2)) and b-value (mod Z, in [0,1)) of dual vectors
// given in lattice-basis coordinates.
Rat disc_q(const Lattice& L, const QVec& dual_vec);
Rat disc_b(const Lattice& L, const QVec& a, const QVec& b);
// Order of the coset [x] in L*/L.
Int coset_order(const QVec& dual_vec);
// Coset coordinates of x with respect to dd's generators (mod divisors);
// nullopt if x does not lie in L* + span (never for genuine dual vectors).
std::optional<ZVec> disc_coords(const DiscriminantData& dd, const QVec& x);

bool is_primitive(const SublatticeHandle& S);
SublatticeHandle saturation(const SublatticeHandle& S);
// Index of S inside its saturation == |saturation / S|.
Int saturation_index(const SublatticeHandle& S);

// Full-rank sublattice: returns |parent / S| and asserts the
// discriminant-index identity |disc S| = |disc parent| * index^2.
Int sublattice_index_check(const SublatticeHandle& S);

// All nonzero v (lattice-basis coordinates) with |<v,v>| <= bound for a
// definite lattice.  Output closed under negation.
struct ShortVector { ZVec coords; Rat norm; };
std::vector<ShortVector> short_vectors(const Lattice& L, const Rat& bound);

// Basis of { v in parent : <v, s> = 0 for all s in S }; always primitive.
SublatticeHandle orthogonal_complement(const SublatticeHandle& S);

// Gram matrix of the sublattice spanned by S.generators.
QMat sublattice_gram(const SublatticeHandle& S);

// Membership of a vector (parent-basis coordinates) in the group generated
// by the given rational rows.
bool in_span_z(const QMat& gens, const QVec& v);

// All automorphisms of a definite lattice of small rank, found by mapping
// basis vectors onto short vectors of equal norm with Gram constraints.
std::vector<QMat> lattice_automorphisms(const Lattice& L);

// Lattice equality as point sets (mutual membership of bases).
bool same_lattice(const QMat& basis_a, const QMat& basis_b);

}  // namespace k3z3

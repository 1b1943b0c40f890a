#pragma once
// Nikulin gluing: build an even unimodular overlattice of Lambda + V from
// an anti-isometry of their discriminant forms, and extend automorphisms
// across the glue.

#include "k3z3/lattice.hpp"

namespace k3z3 {

struct GlueMap {
    // Row i of src is a dual vector of Lambda (lattice-basis coordinates)
    // whose coset is glued to the coset of row i of img in V*/V.
    QMat src;
    QMat img;
};

struct GluedLattice {
    Lattice lambda;
    Lattice v;
    GlueMap glue;
    Lattice result;        // carries a basis in the common ambient
    QMat glue_vectors;     // rows in the common ambient coordinates
    QMat generators;       // Lambda basis + V basis + glue vectors (ambient)
};

// True iff the glue map is an anti-isometry of the discriminant groups:
// matching coset orders, full image, q_L = -q_V (mod 2Z) on generators and
// b_L = -b_V (mod Z) on pairs.
bool check_glue_compatible(const Lattice& lambda, const Lattice& v, const GlueMap& gm,
                           std::string* reason = nullptr);

// Builds the glued lattice.  When both inputs live in one common ambient
// space (same ambient Gram, mutually orthogonal bases) the result is
// expressed there; otherwise an orthogonal-sum ambient is created.
GluedLattice glue(const Lattice& lambda, const Lattice& v, const GlueMap& gm);

// Isometry phi of Lambda (matrix rows = images of basis vectors, in basis
// coordinates).  Searches Aut(V) for a partner psi with
// gamma . phi-bar = psi-bar . gamma; nullopt when no partner exists.
std::optional<QMat> extend_automorphism(const QMat& phi, const GluedLattice& gl);

}  // namespace k3z3

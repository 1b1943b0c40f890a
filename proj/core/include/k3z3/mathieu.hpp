#pragma once
// Permutation-group engine (deterministic Schreier-Sims) and the Mathieu
// group material: the M12 generators A,B,C,D, signed lifts to Aut(C12),
// the dodecad embedding M12 < M24, octad-propagation extension of
// permutations to 24 points, and the generation checks.

#include "k3z3/codes.hpp"
#include "k3z3/exact.hpp"

#include <optional>
#include <string>
#include <vector>

namespace k3z3::mathieu {

// ---- permutations ------------------------------------------------------

struct Permutation {
    // 1-based images; image[0] is unused and fixed to 0.  Degree = size-1.
    std::vector<int> image;

    int degree() const { return int(image.size()) - 1; }
    int operator()(int x) const { return image[x]; }
    bool operator==(const Permutation&) const = default;

    static Permutation identity(int degree);
    // Parses disjoint-cycle notation "(1,4,3)(2,9,7)"; "()" is the identity.
    static Permutation from_cycles(const std::string& s, int degree);
    // Disjoint cycles, smallest moved point first, no spaces; identity -> "()".
    std::string cycle_string() const;
    bool is_identity() const;
};

Permutation compose(const Permutation& a, const Permutation& b);  // a after b
Permutation inverse(const Permutation& p);
Permutation power(const Permutation& p, int n);
int order(const Permutation& p);

// ---- the M12 generators and Theta/vartheta images ----------------------

Permutation gen_A();  // degree 12
Permutation gen_B();
Permutation gen_C();
Permutation gen_D();

// Frozen images of the orbifold symmetry generators in M12 and M24
// (independently re-derived by the niemeier module / extend_to_M24).
Permutation theta12(int g);  // g in {1,2,3} for alpha^1, alpha^2, beta
Permutation theta24(int g);

// ---- stabilizer chains -------------------------------------------------

class PermGroup {
  public:
    explicit PermGroup(std::vector<Permutation> generators);
    Int order() const;
    bool contains(const Permutation& p) const;
    const std::vector<int>& base() const { return base_; }
    int degree() const { return degree_; }

  private:
    struct Level {
        int base_point = 0;
        std::vector<Permutation> gens;            // strong generators at this level
        std::vector<std::optional<Permutation>> transversal;  // coset reps by image point
    };
    // Sifts p through the chain (from the given level); returns the residue
    // and the level where sifting stopped.
    Permutation sift_init_(const Permutation& p, size_t* drop) const;
    Permutation sift_from_(const Permutation& p, size_t start, size_t* drop) const;

    int degree_ = 0;
    std::vector<Level> levels_;
    std::vector<int> base_;
};

PermGroup schreier_sims(const std::vector<Permutation>& gens);

// ---- lifting M12 permutations to Aut(C12) ------------------------------

// Sign pattern (up to global sign, first entry +1) making the permutation
// an automorphism of C12, or nullopt.
std::optional<std::array<int, 12>> lift_to_C12_automorphism(const Permutation& sigma,
                                                            const codes::TernaryCode& c12);

struct ThetaReport {
    bool members = false;        // all three Theta images lie in <A,B,C,D>
    bool beta_order4 = false;    // Theta(beta)^4 = id
    bool group_order_36 = false; // |<Theta images>| = 36
    bool pass = false;
    std::string failure;
};
ThetaReport theta_containment();

// ---- the dodecad embedding M12 < M24 -----------------------------------

struct DodecadEmbedding {
    std::vector<int> dodecad;       // sorted support {1,2,3,4,6,8,9,12,13,16,18,23}
    std::array<int, 13> label_of;   // label_of[r] = 24-point label carrying 12-point label r
    std::array<int, 25> relabel;    // relabel[d] = 12-point label of d (0 outside D)
};
const DodecadEmbedding& dodecad_embedding();

// Extends sigma (degree 12, in <Theta images>) to the unique element of M24
// stabilizing the dodecad, via octad propagation over the numbered octad
// list.  Throws if the propagation stalls or the result fails verification.
Permutation extend_to_M24(const Permutation& sigma, const codes::BinaryCode& c24);

struct GenerationReport {
    bool automorphisms = false;   // each vartheta generator lies in Aut(C24)
    bool stabilize_dodecad = false;
    bool restrictions_match = false;  // restriction to D equals relabeled Theta image
    bool mixing = false;          // each generator mixes octad #28 with its complement
    bool group_order_36 = false;
    bool pass = false;
    std::string failure;
};
GenerationReport generation_theorem_check();

// Extended check: octad-#28 stabilizer generators by backtrack search with
// octad propagation, then |<stabilizer, vartheta images>| = |M24|.
struct M24OrderReport {
    Int stabilizer_order = 0;   // expected 322560
    Int full_order = 0;         // expected 244823040
    bool pass = false;
    std::string failure;
};
M24OrderReport m24_generation_extended(const codes::BinaryCode& c24);

}  // namespace k3z3::mathieu

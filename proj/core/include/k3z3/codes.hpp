#pragma once
// The extended ternary Golay code C12 and extended binary Golay code C24,
// Miracle Octad Generator (MOG) and hexacode machinery, octads and dodecads.

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace k3z3::codes {

// ---- ternary code C12 --------------------------------------------------

// entries in {0, +1, -1}
using TernaryWord = std::array<int, 12>;

struct TernaryCode {
    std::array<TernaryWord, 6> generators;
    std::vector<TernaryWord> words;  // all 729, lexicographic in generator coefficients
    bool contains(const TernaryWord& w) const;
};

TernaryCode build_C12();
TernaryWord c12_generator_row(int i);   // i in 0..5
int weight(const TernaryWord& w);
TernaryWord ternary_add(const TernaryWord& a, const TernaryWord& b);
TernaryWord ternary_neg(const TernaryWord& a);
std::string ternary_to_string(const TernaryWord& w);  // 12 chars of {0,+,-}

// ---- binary code C24 ---------------------------------------------------

// bit k (0-based) carries the coordinate with label k+1
using BinaryWord = std::uint32_t;

struct BinaryCode {
    std::array<BinaryWord, 12> generators;
    std::vector<BinaryWord> words;  // all 4096
    bool contains(BinaryWord w) const;
    std::array<int, 25> weight_census() const;  // index = weight

  private:
    friend BinaryCode build_C24();
    std::array<BinaryWord, 12> rref_rows_{};  // row-echelon basis for membership
    std::array<int, 12> pivots_{};
};

BinaryCode build_C24();
std::vector<BinaryWord> octads(const BinaryCode& c);  // the 759 weight-8 words
std::vector<int> support(BinaryWord w);               // sorted labels 1..24

// ---- MOG / hexacode ----------------------------------------------------

// label at MOG grid position (row 0..3, col 0..5)
int mog_label(int row, int col);
// 24-char grid ('.'/'*', row-major) <-> word
BinaryWord grid_to_word(const std::string& grid);
std::string word_to_grid(BinaryWord w);
// 4-line rendering with a bullet for 1 and '.' for 0
std::string render_mog(BinaryWord w);

// F4 = {0,1,omega,omega^2} as {0,1,2,3}
int f4_add(int a, int b);
int f4_mul(int a, int b);
std::array<int, 6> mog_scores(BinaryWord w);  // column scores beta+gamma*omega+delta*omega^2
bool hexacode_contains(const std::array<int, 6>& scores);
const std::vector<std::array<int, 6>>& hexacode_words();  // all 64
// column/row-parity plus hexacode membership criterion
bool mog_membership(BinaryWord w);

// ---- octad machinery ---------------------------------------------------

// The unique octad through 5 points, nullopt when none exists; throws on
// Steiner-system violation (two octads through the same 5 points).
std::optional<BinaryWord> octad_complete(const std::vector<int>& points, const BinaryCode& c);

// image array (1-based, image[0] unused) permuting coordinate labels;
// true iff the permuted code equals the code.  On failure *violated names
// the first generator row whose image leaves the code.
bool is_binary_code_automorphism(const std::vector<int>& image, const BinaryCode& c,
                                 int* violated = nullptr);
// ternary version with signs: coordinate j of the image picks up sign[j]
bool is_ternary_code_automorphism(const std::vector<int>& image, const std::array<int, 12>& sign,
                                  const TernaryCode& c, int* violated = nullptr);

// frozen transcription of the numbered octad list (29 entries)
const std::vector<std::string>& domino_octad_grids();
std::vector<BinaryWord> domino_octads();
// 1-based number of an octad in the list, nullopt when unlisted
std::optional<int> domino_number(BinaryWord w);
// every listed grid is a weight-8 codeword; pinned supports spot-checked
bool verify_domino_list(const BinaryCode& c, std::string* detail = nullptr);

}  // namespace k3z3::codes

#include "k3z3/codes.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace k3z3::codes {

namespace {

int mod3(int x) { return ((x % 3) + 3) % 3; }
// representative in {0, 1, -1}
int bal3(int x) {
    int m = mod3(x);
    return m == 2 ? -1 : m;
}

constexpr int kC12Gen[6][12] = {
    {0, 1, 1, 1, 1, 1, 1, 0, 0, 0, 0, 0},
    {-1, 0, 1, -1, -1, 1, 0, 1, 0, 0, 0, 0},
    {-1, 1, 0, 1, -1, -1, 0, 0, 1, 0, 0, 0},
    {-1, -1, 1, 0, 1, -1, 0, 0, 0, 1, 0, 0},
    {-1, -1, -1, 1, 0, 1, 0, 0, 0, 0, 1, 0},
    {-1, 1, -1, -1, 1, 0, 0, 0, 0, 0, 0, 1},
};

constexpr int kC24Gen[12][24] = {
    {1,1,1,0,1,0,0,0,0,0,0,1,0,0,0,1,0,1,0,0,0,1,0,0},
    {0,0,1,1,0,1,0,0,1,0,0,0,0,0,1,0,1,0,0,0,1,1,0,0},
    {0,0,0,1,0,0,1,1,0,1,0,1,0,0,1,1,0,0,1,0,0,0,0,0},
    {0,0,0,0,0,0,1,1,0,0,1,0,0,0,1,1,1,1,0,0,0,0,1,0},
    {1,1,0,1,0,0,1,1,0,0,0,0,0,0,0,1,0,1,0,0,1,0,0,0},
    {1,0,0,0,1,0,0,1,0,0,0,0,1,1,0,1,0,1,0,0,0,0,1,0},
    {0,0,0,0,0,0,0,0,0,1,1,1,1,1,0,0,1,0,0,1,0,1,0,0},
    {0,0,1,0,0,0,0,1,1,0,1,0,1,0,0,0,0,1,1,0,0,0,1,0},
    {0,1,0,0,1,0,0,0,1,1,0,0,0,1,0,0,0,0,1,0,1,0,0,1},
    {1,0,0,1,0,0,1,1,1,0,0,0,1,0,1,1,0,1,1,0,0,1,1,0},
    {1,1,1,0,0,0,1,1,0,1,1,0,1,0,0,1,0,1,0,0,0,1,1,0},
    {1,1,0,0,1,0,1,1,1,1,0,1,0,0,1,1,0,1,0,0,0,0,1,0},
};

constexpr int kMogLabels[4][6] = {
    {23, 24, 1, 11, 2, 22},
    {19, 3, 20, 4, 10, 18},
    {15, 6, 14, 16, 17, 8},
    {5, 9, 21, 13, 7, 12},
};

}  // namespace

// ---- C12 ---------------------------------------------------------------

TernaryWord c12_generator_row(int i) {
    TernaryWord w;
    for (int j = 0; j < 12; ++j) w[j] = kC12Gen[i][j];
    return w;
}

TernaryWord ternary_add(const TernaryWord& a, const TernaryWord& b) {
    TernaryWord r;
    for (int j = 0; j < 12; ++j) r[j] = bal3(a[j] + b[j]);
    return r;
}

TernaryWord ternary_neg(const TernaryWord& a) {
    TernaryWord r;
    for (int j = 0; j < 12; ++j) r[j] = -a[j];
    return r;
}

int weight(const TernaryWord& w) {
    int n = 0;
    for (int x : w)
        if (x != 0) ++n;
    return n;
}

std::string ternary_to_string(const TernaryWord& w) {
    std::string s;
    for (int x : w) s += x == 0 ? '0' : (x == 1 ? '+' : '-');
    return s;
}

TernaryCode build_C12() {
    TernaryCode c;
    for (int i = 0; i < 6; ++i) c.generators[i] = c12_generator_row(i);
    c.words.reserve(729);
    for (int m = 0; m < 729; ++m) {
        TernaryWord w{};
        int k = m;
        for (int i = 0; i < 6; ++i, k /= 3) {
            int coef = k % 3;
            for (int r = 0; r < coef; ++r) w = ternary_add(w, c.generators[i]);
        }
        c.words.push_back(w);
    }
    return c;
}

bool TernaryCode::contains(const TernaryWord& w) const {
    // identity block on coordinates 7..12 makes the coefficients immediate
    TernaryWord v;
    for (int j = 0; j < 12; ++j) v[j] = bal3(w[j]);
    TernaryWord x{};
    for (int i = 0; i < 6; ++i) {
        int coef = mod3(v[6 + i]);
        for (int r = 0; r < coef; ++r) x = ternary_add(x, generators[i]);
    }
    return x == v;
}

// ---- C24 ---------------------------------------------------------------

BinaryCode build_C24() {
    BinaryCode c;
    for (int i = 0; i < 12; ++i) {
        BinaryWord w = 0;
        for (int j = 0; j < 24; ++j)
            if (kC24Gen[i][j]) w |= BinaryWord(1) << j;
        c.generators[i] = w;
    }
    // row echelon for membership
    std::array<BinaryWord, 12> rows = c.generators;
    int rank = 0;
    for (int col = 0; col < 24 && rank < 12; ++col) {
        int piv = -1;
        for (int r = rank; r < 12; ++r)
            if (rows[r] >> col & 1) { piv = r; break; }
        if (piv < 0) continue;
        std::swap(rows[rank], rows[piv]);
        for (int r = 0; r < 12; ++r)
            if (r != rank && (rows[r] >> col & 1)) rows[r] ^= rows[rank];
        c.pivots_[rank] = col;
        ++rank;
    }
    if (rank != 12) throw std::logic_error("generator matrix is not full rank");
    c.rref_rows_ = rows;
    c.words.reserve(4096);
    for (int m = 0; m < 4096; ++m) {
        BinaryWord w = 0;
        for (int i = 0; i < 12; ++i)
            if (m >> i & 1) w ^= c.generators[i];
        c.words.push_back(w);
    }
    return c;
}

bool BinaryCode::contains(BinaryWord w) const {
    for (int i = 0; i < 12; ++i)
        if (w >> pivots_[i] & 1) w ^= rref_rows_[i];
    return w == 0;
}

std::array<int, 25> BinaryCode::weight_census() const {
    std::array<int, 25> census{};
    for (BinaryWord w : words) ++census[std::popcount(w)];
    return census;
}

std::vector<BinaryWord> octads(const BinaryCode& c) {
    std::vector<BinaryWord> out;
    for (BinaryWord w : c.words)
        if (std::popcount(w) == 8) out.push_back(w);
    return out;
}

std::vector<int> support(BinaryWord w) {
    std::vector<int> out;
    for (int j = 0; j < 24; ++j)
        if (w >> j & 1) out.push_back(j + 1);
    return out;
}

// ---- MOG / hexacode ----------------------------------------------------

int mog_label(int row, int col) { return kMogLabels[row][col]; }

BinaryWord grid_to_word(const std::string& grid) {
    if (grid.size() != 24) throw std::invalid_argument("grid must have 24 cells");
    BinaryWord w = 0;
    for (int r = 0; r < 4; ++r)
        for (int col = 0; col < 6; ++col)
            if (grid[r * 6 + col] == '*') w |= BinaryWord(1) << (mog_label(r, col) - 1);
    return w;
}

std::string word_to_grid(BinaryWord w) {
    std::string s(24, '.');
    for (int r = 0; r < 4; ++r)
        for (int col = 0; col < 6; ++col)
            if (w >> (mog_label(r, col) - 1) & 1) s[r * 6 + col] = '*';
    return s;
}

std::string render_mog(BinaryWord w) {
    std::string grid = word_to_grid(w), out;
    for (int r = 0; r < 4; ++r) {
        for (int col = 0; col < 6; ++col) {
            if (col) out += ' ';
            out += grid[r * 6 + col] == '*' ? "•" : ".";
        }
        out += '\n';
    }
    return out;
}

int f4_add(int a, int b) { return a ^ b; }

int f4_mul(int a, int b) {
    static constexpr int t[4][4] = {
        {0, 0, 0, 0}, {0, 1, 2, 3}, {0, 2, 3, 1}, {0, 3, 1, 2}};
    return t[a][b];
}

const std::vector<std::array<int, 6>>& hexacode_words() {
    static const std::vector<std::array<int, 6>> words = [] {
        std::vector<std::array<int, 6>> out;
        for (int a = 0; a < 4; ++a)
            for (int b = 0; b < 4; ++b)
                for (int c = 0; c < 4; ++c) {
                    auto phi = [&](int x) {
                        return f4_add(f4_add(f4_mul(a, f4_mul(x, x)), f4_mul(b, x)), c);
                    };
                    out.push_back({a, b, phi(0), phi(1), phi(2), phi(3)});
                }
        std::sort(out.begin(), out.end());
        return out;
    }();
    return words;
}

bool hexacode_contains(const std::array<int, 6>& scores) {
    const auto& words = hexacode_words();
    return std::binary_search(words.begin(), words.end(), scores);
}

std::array<int, 6> mog_scores(BinaryWord w) {
    std::string grid = word_to_grid(w);
    std::array<int, 6> scores{};
    for (int col = 0; col < 6; ++col) {
        int beta = grid[1 * 6 + col] == '*';
        int gamma = grid[2 * 6 + col] == '*';
        int delta = grid[3 * 6 + col] == '*';
        scores[col] = f4_add(f4_add(beta, f4_mul(gamma, 2)), f4_mul(delta, 3));
    }
    return scores;
}

bool mog_membership(BinaryWord w) {
    std::string grid = word_to_grid(w);
    int top = 0;
    for (int col = 0; col < 6; ++col) top ^= grid[col] == '*';
    for (int col = 0; col < 6; ++col) {
        int parity = 0;
        for (int r = 0; r < 4; ++r) parity ^= grid[r * 6 + col] == '*';
        if (parity != top) return false;
    }
    return hexacode_contains(mog_scores(w));
}

// ---- octad machinery ---------------------------------------------------

std::optional<BinaryWord> octad_complete(const std::vector<int>& points, const BinaryCode& c) {
    if (points.size() != 5) throw std::invalid_argument("need exactly 5 points");
    BinaryWord mask = 0;
    for (int p : points) {
        if (p < 1 || p > 24) throw std::invalid_argument("label out of range");
        mask |= BinaryWord(1) << (p - 1);
    }
    if (std::popcount(mask) != 5) throw std::invalid_argument("points not distinct");
    std::optional<BinaryWord> found;
    for (BinaryWord w : c.words)
        if (std::popcount(w) == 8 && (w & mask) == mask) {
            if (found) throw std::logic_error("two octads through one pentad");
            found = w;
        }
    return found;
}

bool is_binary_code_automorphism(const std::vector<int>& image, const BinaryCode& c,
                                 int* violated) {
    if (image.size() != 25) throw std::invalid_argument("image must be 1-based of degree 24");
    for (int i = 0; i < 12; ++i) {
        BinaryWord out = 0;
        for (int j = 1; j <= 24; ++j)
            if (c.generators[i] >> (j - 1) & 1) out |= BinaryWord(1) << (image[j] - 1);
        if (!c.contains(out)) {
            if (violated) *violated = i;
            return false;
        }
    }
    return true;
}

bool is_ternary_code_automorphism(const std::vector<int>& image, const std::array<int, 12>& sign,
                                  const TernaryCode& c, int* violated) {
    if (image.size() != 13) throw std::invalid_argument("image must be 1-based of degree 12");
    for (int i = 0; i < 6; ++i) {
        TernaryWord out{};
        for (int j = 1; j <= 12; ++j)
            out[image[j] - 1] = bal3(sign[image[j] - 1] * c.generators[i][j - 1]);
        if (!c.contains(out)) {
            if (violated) *violated = i;
            return false;
        }
    }
    return true;
}

std::vector<BinaryWord> domino_octads() {
    std::vector<BinaryWord> out;
    for (const std::string& g : domino_octad_grids()) out.push_back(grid_to_word(g));
    return out;
}

std::optional<int> domino_number(BinaryWord w) {
    auto list = domino_octads();
    for (size_t i = 0; i < list.size(); ++i)
        if (list[i] == w) return int(i) + 1;
    return std::nullopt;
}

bool verify_domino_list(const BinaryCode& c, std::string* detail) {
    auto fail = [&](const std::string& why) {
        if (detail) *detail = why;
        return false;
    };
    auto list = domino_octads();
    if (list.size() != 29) return fail("expected 29 numbered octads");
    for (size_t i = 0; i < list.size(); ++i) {
        if (std::popcount(list[i]) != 8)
            return fail("entry " + std::to_string(i + 1) + " is not weight 8");
        if (!c.contains(list[i]))
            return fail("entry " + std::to_string(i + 1) + " is not a codeword");
    }
    auto expect = [&](int n, std::vector<int> sup) {
        return support(list[n - 1]) == sup;
    };
    if (!expect(1, {2, 7, 8, 10, 12, 17, 18, 22})) return fail("octad 1 support mismatch");
    if (!expect(5, {2, 4, 6, 8, 9, 11, 17, 18})) return fail("octad 5 support mismatch");
    if (!expect(28, {3, 5, 6, 9, 15, 19, 23, 24})) return fail("octad 28 support mismatch");
    return true;
}

}  // namespace k3z3::codes

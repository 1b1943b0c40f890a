#include "k3z3/codes.hpp"

namespace k3z3::codes {

// The numbered octad list, frozen as 4x6 MOG grids in reading order
// ('.' = 0, '*' = 1, rows top to bottom).
const std::vector<std::string>& domino_octad_grids() {
    static const std::vector<std::string> grids = {
        "....**....**....**....**",
        "...*.*...*.*...*.*...*.*",
        "..*.*....*.*...*.*..*.*.",
        "..*.*....*.*..*.*....*.*",
        "...**....*.*.*..**.*....",
        "..*.*..*.....*..**..*..*",
        "..**...**..*.*.*.*......",
        ".**....*.*....**.*.....*",
        ".*..*..*..*..*..*..*..*.",
        ".*.*...*.*...*.*...*.*..",
        "..***..*.*.......**..*..",
        "....*..**...**...*.*.*..",
        "..*....*..*.**.*...*...*",
        ".**..*......**.....*.**.",
        "..*...**.*...*...*.*..*.",
        ".*....*......***...*..**",
        "*..**..*.*.*..**........",
        "***.....*.....*......***",
        "***......*...*..*..*...*",
        "***....*..*..*...*...*..",
        "...**.*......*....**.**.",
        "......*..*.***.....*.*.*",
        "**.....*.*.*......*..*.*",
        "*.*.....**.**..*.......*",
        "*...*....*..**.*...*..*.",
        "*..*......*.**..*..*.*..",
        "*...*.*....*..*.**..*...",
        "**....**....**....**....",
        "..*.*...*..**...***.....",
    };
    return grids;
}

}  // namespace k3z3::codes

#include "k3z3/mathieu.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <sstream>
#include <stdexcept>

namespace k3z3::mathieu {

// ---- permutation basics -------------------------------------------------

Permutation Permutation::identity(int degree) {
    Permutation p;
    p.image.resize(degree + 1);
    for (int i = 0; i <= degree; ++i) p.image[i] = i;
    p.image[0] = 0;
    return p;
}

Permutation Permutation::from_cycles(const std::string& s, int degree) {
    Permutation p = identity(degree);
    size_t i = 0;
    while (i < s.size()) {
        if (s[i] != '(') throw std::invalid_argument("cycle notation: expected '('");
        size_t close = s.find(')', i);
        if (close == std::string::npos) throw std::invalid_argument("cycle notation: missing ')'");
        std::string body = s.substr(i + 1, close - i - 1);
        std::vector<int> cyc;
        std::stringstream ss(body);
        std::string tok;
        while (std::getline(ss, tok, ',')) {
            if (!tok.empty()) cyc.push_back(std::stoi(tok));
        }
        for (size_t k = 0; k < cyc.size(); ++k) {
            int a = cyc[k], b = cyc[(k + 1) % cyc.size()];
            if (a < 1 || a > degree) throw std::invalid_argument("cycle notation: point out of range");
            if (p.image[a] != a) throw std::invalid_argument("cycle notation: repeated point");
            p.image[a] = b;
        }
        i = close + 1;
    }
    return p;
}

std::string Permutation::cycle_string() const {
    std::string out;
    std::vector<bool> seen(image.size(), false);
    for (int start = 1; start <= degree(); ++start) {
        if (seen[start] || image[start] == start) continue;
        out += '(';
        int x = start;
        bool first = true;
        do {
            if (!first) out += ',';
            out += std::to_string(x);
            seen[x] = true;
            x = image[x];
            first = false;
        } while (x != start);
        out += ')';
    }
    if (out.empty()) out = "()";
    return out;
}

bool Permutation::is_identity() const {
    for (int i = 1; i <= degree(); ++i)
        if (image[i] != i) return false;
    return true;
}

Permutation compose(const Permutation& a, const Permutation& b) {
    if (a.degree() != b.degree()) throw std::invalid_argument("degree mismatch");
    Permutation p = Permutation::identity(a.degree());
    for (int i = 1; i <= a.degree(); ++i) p.image[i] = a.image[b.image[i]];
    return p;
}

Permutation inverse(const Permutation& p) {
    Permutation q = Permutation::identity(p.degree());
    for (int i = 1; i <= p.degree(); ++i) q.image[p.image[i]] = i;
    return q;
}

Permutation power(const Permutation& p, int n) {
    Permutation r = Permutation::identity(p.degree());
    Permutation base = n < 0 ? inverse(p) : p;
    for (int k = 0; k < (n < 0 ? -n : n); ++k) r = compose(base, r);
    return r;
}

int order(const Permutation& p) {
    Permutation q = p;
    int n = 1;
    while (!q.is_identity()) {
        q = compose(p, q);
        ++n;
    }
    return n;
}

// ---- the fixed generators ----------------------------------------------

Permutation gen_A() { return Permutation::from_cycles("(1,6,5,4,10,9,12,7,11,3,2)", 12); }
Permutation gen_B() { return Permutation::from_cycles("(1,4,6,12,2)(3,11,9,7,5)", 12); }
Permutation gen_C() { return Permutation::from_cycles("(1,7)(2,5)(3,12)(4,9)(6,11)(8,10)", 12); }
Permutation gen_D() { return Permutation::from_cycles("(1,2)(3,5)(4,12)(7,11)", 12); }

Permutation theta12(int g) {
    switch (g) {
        case 1: return Permutation::from_cycles("(1,4,3)(2,9,7)(5,8,6)", 12);
        case 2: return Permutation::from_cycles("(1,9,8)(2,5,3)(4,7,6)", 12);
        case 3: return Permutation::from_cycles("(1,9,2,3)(4,8,7,5)", 12);
        default: throw std::invalid_argument("theta12 index");
    }
}

Permutation theta24(int g) {
    switch (g) {
        case 1:
            return Permutation::from_cycles(
                "(1,3,8)(2,23,16)(5,22,14)(10,20,21)(11,17,24)(12,13,18)", 24);
        case 2:
            return Permutation::from_cycles(
                "(1,23,12)(2,18,8)(3,16,13)(5,14,22)(7,15,19)(10,20,21)", 24);
        case 3:
            return Permutation::from_cycles(
                "(1,8,18,12)(2,13,23,3)(5,10)(7,11,15,24)(14,21,22,20)(17,19)", 24);
        default: throw std::invalid_argument("theta24 index");
    }
}

// ---- Schreier-Sims ------------------------------------------------------

PermGroup::PermGroup(std::vector<Permutation> generators) {
    degree_ = generators.empty() ? 1 : generators[0].degree();
    for (const auto& g : generators)
        if (g.degree() != degree_) throw std::invalid_argument("degree mismatch");

    auto smallest_moved = [](const Permutation& g) {
        for (int i = 1; i <= g.degree(); ++i)
            if (g.image[i] != i) return i;
        return 0;
    };
    auto new_level = [&](int point) {
        Level lv;
        lv.base_point = point;
        lv.transversal.assign(degree_ + 1, std::nullopt);
        levels_.push_back(std::move(lv));
        base_.push_back(point);
    };
    auto recompute = [&](Level& lv) {
        lv.transversal.assign(degree_ + 1, std::nullopt);
        lv.transversal[lv.base_point] = Permutation::identity(degree_);
        std::vector<int> frontier{lv.base_point};
        while (!frontier.empty()) {
            std::vector<int> next;
            for (int p : frontier)
                for (const auto& s : lv.gens) {
                    int q = s.image[p];
                    if (!lv.transversal[q]) {
                        lv.transversal[q] = compose(s, *lv.transversal[p]);
                        next.push_back(q);
                    }
                }
            frontier = std::move(next);
        }
    };

    for (const auto& g : generators) {
        if (g.is_identity()) continue;
        size_t drop = 0;
        Permutation h = sift_init_(g, &drop);
        if (h.is_identity()) continue;
        if (drop == levels_.size()) new_level(smallest_moved(h));
        for (size_t k = 0; k <= drop && k < levels_.size(); ++k) levels_[k].gens.push_back(h);
    }
    for (auto& lv : levels_) recompute(lv);

    bool changed = true;
    while (changed) {
        changed = false;
        for (size_t i = 0; i < levels_.size(); ++i) {
            for (int p = 1; p <= degree_; ++p) {
                if (!levels_[i].transversal[p]) continue;
                for (size_t si = 0; si < levels_[i].gens.size(); ++si) {
                    Permutation s = levels_[i].gens[si];
                    int q = s.image[p];
                    if (!levels_[i].transversal[q]) {  // orbit incomplete; rebuild
                        recompute(levels_[i]);
                        changed = true;
                        continue;
                    }
                    Permutation schreier = compose(inverse(*levels_[i].transversal[q]),
                                                   compose(s, *levels_[i].transversal[p]));
                    if (schreier.is_identity()) continue;
                    size_t drop = i + 1;
                    Permutation h = sift_from_(schreier, i + 1, &drop);
                    if (h.is_identity()) continue;
                    if (drop == levels_.size()) new_level(smallest_moved(h));
                    bool added = false;
                    for (size_t k = i + 1; k <= drop && k < levels_.size(); ++k) {
                        auto& gk = levels_[k].gens;
                        if (std::find(gk.begin(), gk.end(), h) == gk.end()) {
                            gk.push_back(h);
                            recompute(levels_[k]);
                            added = true;
                        }
                    }
                    if (added) changed = true;
                }
            }
        }
    }
}

Permutation PermGroup::sift_init_(const Permutation& p, size_t* drop) const {
    return sift_from_(p, 0, drop);
}

Permutation PermGroup::sift_from_(const Permutation& p, size_t start, size_t* drop) const {
    Permutation g = p;
    for (size_t i = start; i < levels_.size(); ++i) {
        int x = g.image[levels_[i].base_point];
        if (!levels_[i].transversal[x]) {
            *drop = i;
            return g;
        }
        g = compose(inverse(*levels_[i].transversal[x]), g);
    }
    *drop = levels_.size();
    return g;
}

Int PermGroup::order() const {
    Int o = 1;
    for (const auto& lv : levels_) {
        int cnt = 0;
        for (int p = 1; p <= degree_; ++p)
            if (lv.transversal[p]) ++cnt;
        o *= cnt;
    }
    return o;
}

bool PermGroup::contains(const Permutation& p) const {
    if (p.degree() != degree_) return false;
    size_t drop = 0;
    return sift_init_(p, &drop).is_identity();
}

PermGroup schreier_sims(const std::vector<Permutation>& gens) { return PermGroup(gens); }

// ---- lifting to Aut(C12) ------------------------------------------------

std::optional<std::array<int, 12>> lift_to_C12_automorphism(const Permutation& sigma,
                                                            const codes::TernaryCode& c12) {
    if (sigma.degree() != 12) throw std::invalid_argument("degree must be 12");
    std::vector<int> image(13, 0);
    for (int i = 1; i <= 12; ++i) image[i] = sigma.image[i];
    for (int mask = 0; mask < (1 << 11); ++mask) {
        std::array<int, 12> sign;
        sign[0] = 1;
        for (int k = 1; k < 12; ++k) sign[k] = (mask >> (k - 1)) & 1 ? -1 : 1;
        if (codes::is_ternary_code_automorphism(image, sign, c12)) return sign;
    }
    return std::nullopt;
}

ThetaReport theta_containment() {
    ThetaReport r;
    PermGroup m12 = schreier_sims({gen_A(), gen_B(), gen_C(), gen_D()});
    r.members = m12.contains(theta12(1)) && m12.contains(theta12(2)) && m12.contains(theta12(3));
    r.beta_order4 = power(theta12(3), 4).is_identity() && !power(theta12(3), 2).is_identity();
    PermGroup g = schreier_sims({theta12(1), theta12(2), theta12(3)});
    r.group_order_36 = g.order() == 36;
    r.pass = r.members && r.beta_order4 && r.group_order_36;
    if (!r.pass) r.failure = "Theta containment failed";
    return r;
}

// ---- dodecad embedding --------------------------------------------------

const DodecadEmbedding& dodecad_embedding() {
    static const DodecadEmbedding d = [] {
        DodecadEmbedding e;
        e.dodecad = {1, 2, 3, 4, 6, 8, 9, 12, 13, 16, 18, 23};
        const int order[12] = {12, 8, 18, 13, 2, 16, 3, 23, 1, 6, 4, 9};
        e.label_of.fill(0);
        e.relabel.fill(0);
        for (int r = 1; r <= 12; ++r) {
            e.label_of[r] = order[r - 1];
            e.relabel[order[r - 1]] = r;
        }
        return e;
    }();
    return d;
}

// ---- octad propagation --------------------------------------------------

namespace {

using Mask = std::uint32_t;  // bit k-1 = label k

Mask bit_of(int label) { return Mask(1) << (label - 1); }

struct Propagator {
    const codes::BinaryCode* code;
    std::vector<std::vector<int>> octad_supports;  // constraint octads

    // cand[p] = bitmask of allowed images of p; returns false on contradiction
    bool run(std::array<Mask, 25>& cand) const {
        bool changed = true;
        while (changed) {
            changed = false;
            // bijectivity: assigned values are unavailable elsewhere
            Mask assigned = 0;
            for (int p = 1; p <= 24; ++p) {
                if (cand[p] == 0) return false;
                if (std::popcount(cand[p]) == 1) {
                    if (assigned & cand[p]) return false;
                    assigned |= cand[p];
                }
            }
            for (int p = 1; p <= 24; ++p) {
                if (std::popcount(cand[p]) > 1) {
                    Mask pruned = cand[p] & ~assigned;
                    if (pruned != cand[p]) {
                        cand[p] = pruned;
                        changed = true;
                    }
                }
            }
            for (const auto& sup : octad_supports) {
                std::vector<int> known;
                for (int p : sup)
                    if (std::popcount(cand[p]) == 1) known.push_back(p);
                if (known.size() < 5) continue;
                std::vector<int> pts;
                for (size_t k = 0; k < 5; ++k)
                    pts.push_back(std::countr_zero(cand[known[k]]) + 1);
                auto img = codes::octad_complete(pts, *code);
                if (!img) return false;
                Mask im = *img;
                for (int p : sup) {
                    Mask pruned = cand[p] & im;
                    if (pruned != cand[p]) {
                        cand[p] = pruned;
                        changed = true;
                    }
                }
                // the octad maps onto its image, so nothing outside may land there
                for (int p = 1; p <= 24; ++p) {
                    if (std::find(sup.begin(), sup.end(), p) != sup.end()) continue;
                    Mask pruned = cand[p] & ~im;
                    if (pruned != cand[p]) {
                        cand[p] = pruned;
                        changed = true;
                    }
                }
            }
        }
        return true;
    }

    // depth-first completion; invokes visit on every fully assigned solution
    // that passes verification; visit returns true to stop the search.
    bool dfs(std::array<Mask, 25> cand, const std::function<bool(const Permutation&)>& verify,
             const std::function<bool(const Permutation&)>& visit) const {
        if (!run(cand)) return false;
        int branch = 0, best = 25;
        for (int p = 1; p <= 24; ++p) {
            int c = std::popcount(cand[p]);
            if (c > 1 && c < best) {
                best = c;
                branch = p;
            }
        }
        if (branch == 0) {
            Permutation perm = Permutation::identity(24);
            for (int p = 1; p <= 24; ++p) perm.image[p] = std::countr_zero(cand[p]) + 1;
            if (!verify(perm)) return false;
            return visit(perm);
        }
        for (int v = 1; v <= 24; ++v) {
            if (!(cand[branch] & bit_of(v))) continue;
            auto next = cand;
            next[branch] = bit_of(v);
            if (dfs(next, verify, visit)) return true;
        }
        return false;
    }
};

bool stabilizes_set(const Permutation& p, const std::vector<int>& set) {
    Mask m = 0, im = 0;
    for (int x : set) {
        m |= bit_of(x);
        im |= bit_of(p.image[x]);
    }
    return m == im;
}

std::vector<int> perm_as_image_vec(const Permutation& p) {
    std::vector<int> v(25, 0);
    for (int i = 1; i <= 24; ++i) v[i] = p.image[i];
    return v;
}

}  // namespace

Permutation extend_to_M24(const Permutation& sigma, const codes::BinaryCode& c24) {
    if (sigma.degree() != 12) throw std::invalid_argument("degree must be 12");
    const DodecadEmbedding& emb = dodecad_embedding();

    Mask dmask = 0;
    for (int d : emb.dodecad) dmask |= bit_of(d);
    std::array<Mask, 25> cand{};
    for (int p = 1; p <= 24; ++p) cand[p] = ~dmask & 0x00FFFFFF;
    for (int d : emb.dodecad) cand[d] = bit_of(emb.label_of[sigma.image[emb.relabel[d]]]);

    Propagator prop;
    prop.code = &c24;
    for (codes::BinaryWord o : codes::domino_octads()) prop.octad_supports.push_back(codes::support(o));

    Permutation result = Permutation::identity(24);
    bool found = false;
    auto verify = [&](const Permutation& p) {
        return codes::is_binary_code_automorphism(perm_as_image_vec(p), c24) &&
               stabilizes_set(p, emb.dodecad);
    };
    prop.dfs(cand, verify, [&](const Permutation& p) {
        result = p;
        found = true;
        return true;
    });
    if (!found) throw std::runtime_error("octad propagation stalled");
    return result;
}

GenerationReport generation_theorem_check() {
    GenerationReport r;
    const codes::BinaryCode c24 = codes::build_C24();
    const DodecadEmbedding& emb = dodecad_embedding();
    const std::vector<int> octad28 = {3, 5, 6, 9, 15, 19, 23, 24};

    r.automorphisms = r.stabilize_dodecad = r.restrictions_match = r.mixing = true;
    for (int g = 1; g <= 3; ++g) {
        Permutation v = theta24(g);
        if (!codes::is_binary_code_automorphism(perm_as_image_vec(v), c24)) r.automorphisms = false;
        if (!stabilizes_set(v, emb.dodecad)) r.stabilize_dodecad = false;
        Permutation t = theta12(g);
        for (int d : emb.dodecad)
            if (v.image[d] != emb.label_of[t.image[emb.relabel[d]]]) r.restrictions_match = false;
        bool inside = false, outside = false;
        for (int x : octad28) {
            int y = v.image[x];
            if (std::find(octad28.begin(), octad28.end(), y) != octad28.end())
                inside = true;
            else
                outside = true;
        }
        if (!(inside && outside)) r.mixing = false;
    }
    PermGroup g24 = schreier_sims({theta24(1), theta24(2), theta24(3)});
    r.group_order_36 = g24.order() == 36;
    r.pass = r.automorphisms && r.stabilize_dodecad && r.restrictions_match && r.mixing &&
             r.group_order_36;
    if (!r.pass) r.failure = "generation mechanism check failed";
    return r;
}

M24OrderReport m24_generation_extended(const codes::BinaryCode& c24) {
    M24OrderReport rep;
    const std::vector<int> octad28 = {3, 5, 6, 9, 15, 19, 23, 24};
    Mask omask = 0;
    for (int x : octad28) omask |= bit_of(x);

    Propagator prop;
    prop.code = &c24;
    for (codes::BinaryWord o : codes::octads(c24)) prop.octad_supports.push_back(codes::support(o));

    auto verify = [&](const Permutation& p) {
        return codes::is_binary_code_automorphism(perm_as_image_vec(p), c24) &&
               stabilizes_set(p, octad28);
    };

    std::vector<int> complement;
    for (int p = 1; p <= 24; ++p)
        if (!(omask & bit_of(p))) complement.push_back(p);

    std::vector<Permutation> gens;
    const Int target(322560);
    Int current = 1;
    // seeds: images of two octad points and of one complement point; the
    // complement choices reach the 2^4 kernel acting trivially on the octad
    for (int a : octad28) {
        for (int b : octad28) {
            if (b == a) continue;
            for (int c : complement) {
                std::array<Mask, 25> cand{};
                for (int p = 1; p <= 24; ++p)
                    cand[p] = (omask & bit_of(p)) ? omask : (~omask & 0x00FFFFFF);
                cand[octad28[0]] = bit_of(a);
                cand[octad28[1]] = bit_of(b);
                cand[complement[0]] = bit_of(c);
                prop.dfs(cand, verify, [&](const Permutation& p) {
                    gens.push_back(p);
                    return true;
                });
                if (!gens.empty()) {
                    current = schreier_sims(gens).order();
                    if (current == target) break;
                }
            }
            if (current == target) break;
        }
        if (current == target) break;
    }
    rep.stabilizer_order = current;

    std::vector<Permutation> all = gens;
    all.push_back(theta24(1));
    all.push_back(theta24(2));
    all.push_back(theta24(3));
    rep.full_order = schreier_sims(all).order();
    rep.pass = rep.stabilizer_order == target && rep.full_order == Int(244823040);
    if (!rep.pass) rep.failure = "extended M24 generation check failed";
    return rep;
}

}  // namespace k3z3::mathieu

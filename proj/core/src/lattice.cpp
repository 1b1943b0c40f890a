#include "k3z3/lattice.hpp"

#include <algorithm>

namespace k3z3 {

Lattice Lattice::from_gram(QMat g) {
    if (!g.is_symmetric()) throw std::invalid_argument("gram not symmetric");
    Lattice L;
    L.rank = g.rows();
    L.gram = std::move(g);
    if (L.gram.det() == 0) throw std::invalid_argument("degenerate gram");
    return L;
}

Lattice Lattice::in_ambient(QMat basis_rows, QMat ambient_gram) {
    Lattice L;
    L.rank = basis_rows.rows();
    L.gram = basis_rows * ambient_gram * basis_rows.transpose();
    if (L.gram.det() == 0) throw std::invalid_argument("degenerate gram");
    L.basis = std::move(basis_rows);
    L.ambient_gram = std::move(ambient_gram);
    return L;
}

QVec Lattice::to_ambient(const QVec& coeffs) const {
    return coeffs * *basis;
}

std::optional<QVec> Lattice::from_ambient(const QVec& v) const {
    return solve_left(*basis, v);
}

Rat discriminant(const Lattice& L) { return L.gram.det(); }

Classification classify(const Lattice& L) {
    Classification c;
    c.integral = L.gram.is_integral();
    c.even = c.integral;
    if (c.integral)
        for (int i = 0; i < L.rank; ++i)
            if (L.gram(i, i).get_num() % 2 != 0) { c.even = false; break; }
    Rat d = L.gram.det();
    c.unimodular = c.integral && (d == 1 || d == -1);
    Inertia in = signature(L.gram);
    if (in.zero) throw std::invalid_argument("degenerate gram");
    c.pos = in.pos;
    c.neg = in.neg;
    return c;
}

Int DiscriminantData::group_order() const {
    Int o = 1;
    for (const Int& d : elementary_divisors) o *= d;
    return o;
}

Rat disc_q(const Lattice& L, const QVec& x) {
    return mod_pos(dot(x, L.gram, x), Rat(2));
}

Rat disc_b(const Lattice& L, const QVec& a, const QVec& b) {
    return mod_pos(dot(a, L.gram, b), Rat(1));
}

Int coset_order(const QVec& x) {
    Int l = 1;
    for (const Rat& c : x) l = l * c.get_den() / Int(gcd(l, c.get_den()));
    return l;
}

DiscriminantData dual_and_discriminant_group(const Lattice& L) {
    if (!L.gram.is_integral()) throw std::invalid_argument("non-integral lattice");
    // L*/L == Z^n / rowspace(G) in dual-basis coordinates.  With
    // U G V = D, coset generators are the rows of (G V)^{-1} taken at
    // indices whose elementary divisor exceeds 1 (converted to
    // lattice-basis coordinates by the trailing G^{-1} factor).
    SNFResult s = snf(L.gram);
    QMat lifts_all = (L.gram * s.V).inverse();
    DiscriminantData dd;
    std::vector<QVec> lifts;
    for (int i = 0; i < L.rank; ++i) {
        Int d = s.D(i, i).get_num();
        if (d > 1) {
            dd.elementary_divisors.push_back(d);
            lifts.push_back(lifts_all.row(i));
        }
    }
    dd.generator_lifts = lifts.empty() ? QMat(0, L.rank) : QMat::from_rows(lifts);
    int k = dd.generator_lifts.rows();
    dd.b_matrix = QMat(k, k);
    for (int i = 0; i < k; ++i) {
        dd.q_values.push_back(disc_q(L, dd.generator_lifts.row(i)));
        for (int j = 0; j < k; ++j)
            dd.b_matrix(i, j) = disc_b(L, dd.generator_lifts.row(i), dd.generator_lifts.row(j));
    }
    return dd;
}

std::optional<ZVec> disc_coords(const DiscriminantData& dd, const QVec& x) {
    int k = dd.generator_lifts.rows();
    int n = int(x.size());
    QMat A = dd.generator_lifts.vstack(QMat::identity(n));
    auto sol = solve_left_integer(A, x);
    if (!sol) return std::nullopt;
    ZVec c(k);
    for (int i = 0; i < k; ++i) {
        Int m = (*sol)[i] % dd.elementary_divisors[i];
        if (m < 0) m += dd.elementary_divisors[i];
        c[i] = m;
    }
    return c;
}

SublatticeHandle saturation(const SublatticeHandle& S) {
    // x lies in the saturation iff x is integral and orthogonal (as a
    // linear functional) to the rational complement of the span.
    QMat comp = left_kernel(S.generators.transpose());  // rows y: gens . y = 0
    QMat sat;
    if (comp.rows() == 0) {
        sat = QMat::identity(S.parent.rank);
    } else {
        sat = left_kernel_integer(comp.transpose());
    }
    return SublatticeHandle{S.parent, sat};
}

Int saturation_index(const SublatticeHandle& S) {
    SublatticeHandle sat = saturation(S);
    // express generators in the saturation basis; integral by construction
    std::vector<QVec> rows;
    for (int i = 0; i < S.generators.rows(); ++i) {
        auto c = solve_left(sat.generators, S.generators.row(i));
        if (!c) throw std::logic_error("saturation does not contain generator");
        rows.push_back(*c);
    }
    QMat M = QMat::from_rows(rows);
    if (M.rows() != M.cols()) throw std::invalid_argument("dependent generators");
    Rat d = M.det();
    if (d == 0) throw std::invalid_argument("dependent generators");
    if (!is_integer(d)) throw std::logic_error("non-integral index");
    return abs(d.get_num());
}

bool is_primitive(const SublatticeHandle& S) { return saturation_index(S) == 1; }

Int sublattice_index_check(const SublatticeHandle& S) {
    if (S.generators.rows() != S.parent.rank)
        throw std::invalid_argument("rank mismatch");
    Rat d = S.generators.det();
    if (d == 0) throw std::invalid_argument("dependent generators");
    if (!is_integer(d)) throw std::invalid_argument("non-integral coefficients");
    Int idx = abs(d.get_num());
    Rat disc_sub = sublattice_gram(S).det();
    Rat disc_par = S.parent.gram.det();
    if (abs(disc_sub) != abs(disc_par) * Rat(idx) * Rat(idx))
        throw std::logic_error("index-discriminant identity violated");
    return idx;
}

QMat sublattice_gram(const SublatticeHandle& S) {
    return S.generators * S.parent.gram * S.generators.transpose();
}

SublatticeHandle orthogonal_complement(const SublatticeHandle& S) {
    QMat M = S.parent.gram * S.generators.transpose();  // n x k
    QMat comp = left_kernel_integer(M);
    return SublatticeHandle{S.parent, comp};
}

bool in_span_z(const QMat& gens, const QVec& v) {
    return solve_left_integer(gens, v).has_value();
}

bool same_lattice(const QMat& a, const QMat& b) {
    for (int i = 0; i < a.rows(); ++i)
        if (!in_span_z(b, a.row(i))) return false;
    for (int i = 0; i < b.rows(); ++i)
        if (!in_span_z(a, b.row(i))) return false;
    return true;
}

namespace {

struct FPContext {
    int n;
    QMat q;                    // quadratic-form decomposition coefficients
    const QMat* gram;
    Rat sign;                  // +1 for positive definite input, -1 if negated
    Rat bound;
    std::vector<Int> x;
    std::vector<ShortVector>* out;
};

void fp_enumerate(FPContext& ctx, int i, const Rat& Ti) {
    if (i < 0) {
        bool zero = true;
        for (const Int& c : ctx.x)
            if (c != 0) { zero = false; break; }
        if (zero) return;
        QVec v(ctx.n);
        for (int j = 0; j < ctx.n; ++j) v[j] = Rat(ctx.x[j]);
        Rat norm = dot(v, *ctx.gram, v);
        ZVec c(ctx.x.begin(), ctx.x.end());
        ctx.out->push_back(ShortVector{std::move(c), norm});
        return;
    }
    Rat ci = 0;
    for (int j = i + 1; j < ctx.n; ++j) ci += ctx.q(i, j) * Rat(ctx.x[j]);
    // range: q_ii (x_i + ci)^2 <= Ti
    Rat ratio = Ti / ctx.q(i, i);
    const Int& p = ci.get_num();
    const Int& s = ci.get_den();
    Int F = floor_div(ratio.get_num() * s * s, ratio.get_den());
    if (F < 0) return;
    Int K = isqrt(F);
    Int lo = -floor_div(K + p, s);          // ceil((-K - p)/s)
    // recompute properly: ceil(a/b) = -floor(-a/b)
    lo = -floor_div(K + p, s);
    Int hi = floor_div(K - p, s);
    for (Int xi = lo; xi <= hi; ++xi) {
        ctx.x[i] = xi;
        Rat term = Rat(xi) + ci;
        Rat Tnext = Ti - ctx.q(i, i) * term * term;
        if (Tnext < 0) continue;  // guard against boundary rounding
        fp_enumerate(ctx, i - 1, Tnext);
    }
    ctx.x[i] = 0;
}

}  // namespace

std::vector<ShortVector> short_vectors(const Lattice& L, const Rat& bound) {
    Inertia in = signature(L.gram);
    if (in.zero || (in.pos != L.rank && in.neg != L.rank))
        throw std::invalid_argument("indefinite or degenerate lattice");
    bool negated = in.neg == L.rank;
    QMat g = negated ? L.gram * Rat(-1) : L.gram;
    int n = L.rank;
    // decompose: Q(x) = sum_i q_ii (x_i + sum_{j>i} q_ij x_j)^2
    QMat q = g;
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            q(j, i) = q(i, j);
            q(i, j) = q(i, j) / q(i, i);
        }
        for (int k = i + 1; k < n; ++k)
            for (int l = k; l < n; ++l)
                q(k, l) = q(k, l) - q(k, i) * q(i, l);
    }
    std::vector<ShortVector> out;
    FPContext ctx{n, q, &L.gram, negated ? Rat(-1) : Rat(1), bound, std::vector<Int>(n, Int(0)), &out};
    fp_enumerate(ctx, n - 1, bound);
    return out;
}

std::vector<QMat> lattice_automorphisms(const Lattice& L) {
    int n = L.rank;
    Rat maxnorm = 0;
    for (int i = 0; i < n; ++i) maxnorm = std::max(maxnorm, Rat(abs(L.gram(i, i))));
    auto sv = short_vectors(L, maxnorm);
    std::vector<QVec> cand;
    for (const auto& s : sv) {
        QVec v(n);
        for (int j = 0; j < n; ++j) v[j] = Rat(s.coords[j]);
        cand.push_back(v);
    }
    std::vector<QMat> result;
    std::vector<QVec> img(n);
    auto dfs = [&](auto&& self, int i) -> void {
        if (i == n) {
            QMat M = QMat::from_rows(img);
            if (M.det() == 1 || M.det() == -1) result.push_back(M);
            return;
        }
        for (const QVec& c : cand) {
            if (dot(c, L.gram, c) != L.gram(i, i)) continue;
            bool ok = true;
            for (int j = 0; j < i; ++j)
                if (dot(img[j], L.gram, c) != L.gram(j, i)) { ok = false; break; }
            if (!ok) continue;
            img[i] = c;
            self(self, i + 1);
        }
    };
    dfs(dfs, 0);
    return result;
}

}  // namespace k3z3

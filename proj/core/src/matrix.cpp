#include "k3z3/matrix.hpp"

#include <algorithm>
#include <numeric>

namespace k3z3 {

QMat::QMat(std::initializer_list<std::initializer_list<Rat>> rows) {
    r_ = int(rows.size());
    c_ = r_ ? int(rows.begin()->size()) : 0;
    d_.reserve(size_t(r_) * c_);
    for (const auto& row : rows) {
        assert(int(row.size()) == c_);
        for (const auto& x : row) d_.push_back(x);
    }
}

QMat QMat::identity(int n) {
    QMat m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

QMat QMat::from_rows(const std::vector<QVec>& rows) {
    QMat m(int(rows.size()), rows.empty() ? 0 : int(rows[0].size()));
    for (int i = 0; i < m.rows(); ++i) m.set_row(i, rows[i]);
    return m;
}

QVec QMat::row(int i) const {
    QVec v(c_);
    for (int j = 0; j < c_; ++j) v[j] = (*this)(i, j);
    return v;
}

void QMat::set_row(int i, const QVec& v) {
    assert(int(v.size()) == c_);
    for (int j = 0; j < c_; ++j) (*this)(i, j) = v[j];
}

QMat QMat::transpose() const {
    QMat t(c_, r_);
    for (int i = 0; i < r_; ++i)
        for (int j = 0; j < c_; ++j) t(j, i) = (*this)(i, j);
    return t;
}

QMat QMat::operator*(const QMat& o) const {
    assert(c_ == o.r_);
    QMat p(r_, o.c_);
    for (int i = 0; i < r_; ++i)
        for (int k = 0; k < c_; ++k) {
            const Rat& a = (*this)(i, k);
            if (a == 0) continue;
            for (int j = 0; j < o.c_; ++j)
                if (o(k, j) != 0) p(i, j) += a * o(k, j);
        }
    return p;
}

QMat QMat::operator+(const QMat& o) const {
    assert(r_ == o.r_ && c_ == o.c_);
    QMat s(r_, c_);
    for (size_t i = 0; i < d_.size(); ++i) s.d_[i] = d_[i] + o.d_[i];
    return s;
}

QMat QMat::operator-(const QMat& o) const {
    assert(r_ == o.r_ && c_ == o.c_);
    QMat s(r_, c_);
    for (size_t i = 0; i < d_.size(); ++i) s.d_[i] = d_[i] - o.d_[i];
    return s;
}

QMat QMat::operator*(const Rat& s) const {
    QMat m(r_, c_);
    for (size_t i = 0; i < d_.size(); ++i) m.d_[i] = d_[i] * s;
    return m;
}

bool QMat::is_symmetric() const {
    if (r_ != c_) return false;
    for (int i = 0; i < r_; ++i)
        for (int j = i + 1; j < c_; ++j)
            if ((*this)(i, j) != (*this)(j, i)) return false;
    return true;
}

bool QMat::is_integral() const {
    for (const Rat& x : d_)
        if (!is_integer(x)) return false;
    return true;
}

QMat QMat::vstack(const QMat& o) const {
    assert(c_ == o.c_ || r_ == 0 || o.r_ == 0);
    QMat s(r_ + o.r_, r_ ? c_ : o.c_);
    for (int i = 0; i < r_; ++i)
        for (int j = 0; j < c_; ++j) s(i, j) = (*this)(i, j);
    for (int i = 0; i < o.r_; ++i)
        for (int j = 0; j < o.c_; ++j) s(r_ + i, j) = o(i, j);
    return s;
}

Rat QMat::det() const {
    assert(r_ == c_);
    QMat m = *this;
    Rat d = 1;
    for (int k = 0; k < r_; ++k) {
        int piv = -1;
        for (int i = k; i < r_; ++i)
            if (m(i, k) != 0) { piv = i; break; }
        if (piv < 0) return 0;
        if (piv != k) {
            for (int j = 0; j < c_; ++j) std::swap(m(piv, j), m(k, j));
            d = -d;
        }
        d *= m(k, k);
        Rat inv = 1 / m(k, k);
        for (int i = k + 1; i < r_; ++i) {
            if (m(i, k) == 0) continue;
            Rat f = m(i, k) * inv;
            for (int j = k; j < c_; ++j) m(i, j) -= f * m(k, j);
        }
    }
    d.canonicalize();
    return d;
}

int QMat::rank() const {
    QMat m = *this;
    int rank = 0;
    for (int col = 0; col < c_ && rank < r_; ++col) {
        int piv = -1;
        for (int i = rank; i < r_; ++i)
            if (m(i, col) != 0) { piv = i; break; }
        if (piv < 0) continue;
        for (int j = 0; j < c_; ++j) std::swap(m(piv, j), m(rank, j));
        Rat inv = 1 / m(rank, col);
        for (int i = rank + 1; i < r_; ++i) {
            if (m(i, col) == 0) continue;
            Rat f = m(i, col) * inv;
            for (int j = col; j < c_; ++j) m(i, j) -= f * m(rank, j);
        }
        ++rank;
    }
    return rank;
}

QMat QMat::inverse() const {
    assert(r_ == c_);
    QMat m = *this, inv = identity(r_);
    for (int k = 0; k < r_; ++k) {
        int piv = -1;
        for (int i = k; i < r_; ++i)
            if (m(i, k) != 0) { piv = i; break; }
        if (piv < 0) throw std::domain_error("singular matrix");
        if (piv != k)
            for (int j = 0; j < c_; ++j) {
                std::swap(m(piv, j), m(k, j));
                std::swap(inv(piv, j), inv(k, j));
            }
        Rat p = 1 / m(k, k);
        for (int j = 0; j < c_; ++j) { m(k, j) *= p; inv(k, j) *= p; }
        for (int i = 0; i < r_; ++i) {
            if (i == k || m(i, k) == 0) continue;
            Rat f = m(i, k);
            for (int j = 0; j < c_; ++j) {
                m(i, j) -= f * m(k, j);
                inv(i, j) -= f * inv(k, j);
            }
        }
    }
    return inv;
}

QVec operator*(const QVec& v, const QMat& m) {
    assert(int(v.size()) == m.rows());
    QVec out(m.cols());
    for (int i = 0; i < m.rows(); ++i) {
        if (v[i] == 0) continue;
        for (int j = 0; j < m.cols(); ++j)
            if (m(i, j) != 0) out[j] += v[i] * m(i, j);
    }
    return out;
}

QVec operator+(const QVec& a, const QVec& b) {
    assert(a.size() == b.size());
    QVec out(a.size());
    for (size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
    return out;
}

QVec operator-(const QVec& a, const QVec& b) {
    assert(a.size() == b.size());
    QVec out(a.size());
    for (size_t i = 0; i < a.size(); ++i) out[i] = a[i] - b[i];
    return out;
}

QVec operator*(const Rat& s, const QVec& v) {
    QVec out(v.size());
    for (size_t i = 0; i < v.size(); ++i) out[i] = s * v[i];
    return out;
}

Rat dot(const QVec& a, const QMat& gram, const QVec& b) {
    QVec gb = (QMat::from_rows({b}) * gram.transpose()).row(0);
    Rat s = 0;
    for (size_t i = 0; i < a.size(); ++i) s += a[i] * gb[i];
    s.canonicalize();
    return s;
}

std::optional<QVec> solve_left(const QMat& A, const QVec& b) {
    // x A = b  <=>  A^T x^T = b^T; Gaussian elimination on [A^T | b].
    QMat M = A.transpose();
    int n = M.rows(), m = M.cols();
    QVec rhs = b;
    assert(int(rhs.size()) == n);
    std::vector<int> pivot_of_col(m, -1);
    int prow = 0;
    for (int col = 0; col < m && prow < n; ++col) {
        int piv = -1;
        for (int i = prow; i < n; ++i)
            if (M(i, col) != 0) { piv = i; break; }
        if (piv < 0) continue;
        for (int j = 0; j < m; ++j) std::swap(M(piv, j), M(prow, j));
        std::swap(rhs[piv], rhs[prow]);
        Rat inv = 1 / M(prow, col);
        for (int j = 0; j < m; ++j) M(prow, j) *= inv;
        rhs[prow] *= inv;
        for (int i = 0; i < n; ++i) {
            if (i == prow || M(i, col) == 0) continue;
            Rat f = M(i, col);
            for (int j = 0; j < m; ++j) M(i, j) -= f * M(prow, j);
            rhs[i] -= f * rhs[prow];
        }
        pivot_of_col[col] = prow;
        ++prow;
    }
    for (int i = prow; i < n; ++i)
        if (rhs[i] != 0) return std::nullopt;
    QVec x(m, Rat(0));
    for (int col = 0; col < m; ++col)
        if (pivot_of_col[col] >= 0) x[col] = rhs[pivot_of_col[col]];
    return x;
}

QMat left_kernel(const QMat& A) {
    // Kernel of x -> x A equals kernel of A^T acting on column vectors.
    QMat M = A.transpose();
    int n = M.rows(), m = M.cols();
    std::vector<int> pivot_col;
    int prow = 0;
    std::vector<int> col_pivrow(m, -1);
    for (int col = 0; col < m && prow < n; ++col) {
        int piv = -1;
        for (int i = prow; i < n; ++i)
            if (M(i, col) != 0) { piv = i; break; }
        if (piv < 0) continue;
        for (int j = 0; j < m; ++j) std::swap(M(piv, j), M(prow, j));
        Rat inv = 1 / M(prow, col);
        for (int j = 0; j < m; ++j) M(prow, j) *= inv;
        for (int i = 0; i < n; ++i) {
            if (i == prow || M(i, col) == 0) continue;
            Rat f = M(i, col);
            for (int j = 0; j < m; ++j) M(i, j) -= f * M(prow, j);
        }
        col_pivrow[col] = prow;
        pivot_col.push_back(col);
        ++prow;
    }
    std::vector<QVec> basis;
    for (int col = 0; col < m; ++col) {
        if (col_pivrow[col] >= 0) continue;
        QVec v(m, Rat(0));
        v[col] = 1;
        for (int pc : pivot_col) v[pc] = -M(col_pivrow[pc], col);
        // scale to primitive integer vector
        Int l = 1;
        for (const Rat& x : v) l = l * x.get_den() / Int(gcd(l, x.get_den()));
        Int g = 0;
        for (Rat& x : v) { x *= Rat(l); x.canonicalize(); g = gcd(g, x.get_num()); }
        if (g > 1)
            for (Rat& x : v) { x /= Rat(g); x.canonicalize(); }
        basis.push_back(v);
    }
    if (basis.empty()) return QMat(0, m);
    return QMat::from_rows(basis);
}

Inertia signature(const QMat& gram) {
    assert(gram.is_symmetric());
    QMat m = gram;
    int n = m.rows();
    Inertia in;
    for (int k = 0; k < n; ++k) {
        // choose a nonzero diagonal pivot at position >= k
        int piv = -1;
        for (int i = k; i < n; ++i)
            if (m(i, i) != 0) { piv = i; break; }
        if (piv < 0) {
            // all remaining diagonal entries vanish; look for an
            // off-diagonal entry and symmetrically merge its rows
            int a = -1, b = -1;
            for (int i = k; i < n && a < 0; ++i)
                for (int j = i + 1; j < n; ++j)
                    if (m(i, j) != 0) { a = i; b = j; break; }
            if (a < 0) { in.zero = n - k; break; }
            for (int j = 0; j < n; ++j) m(a, j) += m(b, j);
            for (int i = 0; i < n; ++i) m(i, a) += m(i, b);
            piv = a;
        }
        if (piv != k) {
            for (int j = 0; j < n; ++j) std::swap(m(piv, j), m(k, j));
            for (int i = 0; i < n; ++i) std::swap(m(i, piv), m(i, k));
        }
        Rat p = m(k, k);
        if (p > 0) ++in.pos; else ++in.neg;
        for (int i = k + 1; i < n; ++i) {
            if (m(i, k) == 0) continue;
            Rat f = m(i, k) / p;
            for (int j = 0; j < n; ++j) m(i, j) -= f * m(k, j);
            for (int j = 0; j < n; ++j) m(j, i) -= f * m(j, k);
        }
    }
    return in;
}

namespace {

void mat_row_swap(QMat& M, int a, int b) {
    for (int j = 0; j < M.cols(); ++j) std::swap(M(a, j), M(b, j));
}

void mat_row_addmul(QMat& M, int dst, int src, const Int& f) {
    if (f == 0) return;
    Rat rf(f);
    for (int j = 0; j < M.cols(); ++j) M(dst, j) += rf * M(src, j);
}

void mat_row_negate(QMat& M, int i) {
    for (int j = 0; j < M.cols(); ++j) M(i, j) = -M(i, j);
}

}  // namespace

HNFResult hnf(const QMat& A) {
    assert(A.is_integral());
    HNFResult res;
    res.H = A;
    res.U = QMat::identity(A.rows());
    QMat& H = res.H;
    QMat& U = res.U;
    int n = H.rows(), m = H.cols();
    int prow = 0;
    for (int col = 0; col < m && prow < n; ++col) {
        // gcd-reduce the column below prow
        while (true) {
            int piv = -1;
            for (int i = prow; i < n; ++i)
                if (H(i, col) != 0 && (piv < 0 || abs(H(i, col).get_num()) < abs(H(piv, col).get_num())))
                    piv = i;
            if (piv < 0) break;
            if (piv != prow) { mat_row_swap(H, piv, prow); mat_row_swap(U, piv, prow); }
            if (H(prow, col) < 0) { mat_row_negate(H, prow); mat_row_negate(U, prow); }
            bool done = true;
            for (int i = prow + 1; i < n; ++i) {
                if (H(i, col) == 0) continue;
                Int q = floor_div(H(i, col).get_num(), H(prow, col).get_num());
                mat_row_addmul(H, i, prow, -q);
                mat_row_addmul(U, i, prow, -q);
                if (H(i, col) != 0) done = false;
            }
            if (done) break;
        }
        if (H(prow, col) == 0) continue;
        // reduce entries above the pivot
        for (int i = 0; i < prow; ++i) {
            Int q = floor_div(H(i, col).get_num(), H(prow, col).get_num());
            mat_row_addmul(H, i, prow, -q);
            mat_row_addmul(U, i, prow, -q);
        }
        res.pivot_cols.push_back(col);
        ++prow;
    }
    return res;
}

SNFResult snf(const QMat& A) {
    assert(A.is_integral());
    SNFResult res;
    res.D = A;
    res.U = QMat::identity(A.rows());
    res.V = QMat::identity(A.cols());
    QMat& D = res.D;
    QMat& U = res.U;
    QMat& V = res.V;
    int n = D.rows(), m = D.cols();
    auto col_swap = [&](QMat& M, int a, int b) {
        for (int i = 0; i < M.rows(); ++i) std::swap(M(i, a), M(i, b));
    };
    auto col_addmul = [&](QMat& M, int dst, int src, const Int& f) {
        if (f == 0) return;
        Rat rf(f);
        for (int i = 0; i < M.rows(); ++i) M(i, dst) += rf * M(i, src);
    };
    auto col_negate = [&](QMat& M, int c) {
        for (int i = 0; i < M.rows(); ++i) M(i, c) = -M(i, c);
    };
    int t = std::min(n, m);
    for (int k = 0; k < t; ++k) {
        // find a nonzero pivot in the trailing block
        int pi = -1, pj = -1;
        for (int i = k; i < n && pi < 0; ++i)
            for (int j = k; j < m; ++j)
                if (D(i, j) != 0) { pi = i; pj = j; break; }
        if (pi < 0) break;
        if (pi != k) { mat_row_swap(D, pi, k); mat_row_swap(U, pi, k); }
        if (pj != k) { col_swap(D, pj, k); col_swap(V, pj, k); }
        bool dirty = true;
        while (dirty) {
            dirty = false;
            // clear column k
            for (int i = k + 1; i < n; ++i) {
                while (D(i, k) != 0) {
                    Int q = floor_div(D(i, k).get_num(), D(k, k).get_num());
                    mat_row_addmul(D, i, k, -q);
                    mat_row_addmul(U, i, k, -q);
                    if (D(i, k) != 0) {
                        mat_row_swap(D, i, k);
                        mat_row_swap(U, i, k);
                        dirty = true;
                    }
                }
            }
            // clear row k
            for (int j = k + 1; j < m; ++j) {
                while (D(k, j) != 0) {
                    Int q = floor_div(D(k, j).get_num(), D(k, k).get_num());
                    col_addmul(D, j, k, -q);
                    col_addmul(V, j, k, -q);
                    if (D(k, j) != 0) {
                        col_swap(D, j, k);
                        col_swap(V, j, k);
                        dirty = true;
                    }
                }
            }
        }
        if (D(k, k) < 0) { mat_row_negate(D, k); mat_row_negate(U, k); }
        // enforce divisibility d_k | d_{k+1..}
        for (int i = k + 1; i < t; ++i) {
            // (handled lazily: if some later diagonal entry is not a
            // multiple of D(k,k), fold its column into column k and redo)
        }
    }
    // divisibility fix-up pass
    for (int k = 0; k + 1 < t; ++k) {
        for (int j = k + 1; j < t; ++j) {
            if (D(k, k) == 0 || D(j, j) == 0) continue;
            if (D(j, j).get_num() % D(k, k).get_num() == 0) continue;
            // add column j to column k, then re-diagonalize 2x2 block
            col_addmul(D, k, j, 1);
            col_addmul(V, k, j, 1);
            // now D(j,k) = D(j,j) != 0; run euclid on rows/cols k..j
            while (true) {
                bool any = false;
                if (D(j, k) != 0) {
                    Int q = floor_div(D(j, k).get_num(), D(k, k).get_num());
                    mat_row_addmul(D, j, k, -q);
                    mat_row_addmul(U, j, k, -q);
                    if (D(j, k) != 0) {
                        mat_row_swap(D, j, k);
                        mat_row_swap(U, j, k);
                        any = true;
                    }
                }
                if (D(k, j) != 0) {
                    Int q = floor_div(D(k, j).get_num(), D(k, k).get_num());
                    col_addmul(D, j, k, -q);
                    col_addmul(V, j, k, -q);
                    if (D(k, j) != 0) {
                        col_swap(D, j, k);
                        col_swap(V, j, k);
                        any = true;
                    }
                }
                if (!any) break;
            }
            if (D(k, k) < 0) { mat_row_negate(D, k); mat_row_negate(U, k); }
            if (D(j, j) < 0) { mat_row_negate(D, j); mat_row_negate(U, j); }
            // restart divisibility scan from this k
            j = k;
        }
    }
    for (int k = 0; k < t; ++k)
        if (D(k, k) != 0) res.divisors.push_back(D(k, k).get_num());
    return res;
}

std::optional<ZVec> solve_left_integer(const QMat& A, const QVec& b) {
    // clear denominators jointly: x (sA) = (sb) with x integral
    Int s = 1;
    for (int i = 0; i < A.rows(); ++i)
        for (int j = 0; j < A.cols(); ++j)
            s = s * A(i, j).get_den() / Int(gcd(s, A(i, j).get_den()));
    for (const Rat& x : b) s = s * x.get_den() / Int(gcd(s, x.get_den()));
    QMat As = A * Rat(s);
    QVec bs = Rat(s) * b;
    HNFResult h = hnf(As);
    // reduce bs against H rows
    QVec r = bs;
    ZVec coef_h(h.H.rows(), Int(0));
    for (size_t k = 0; k < h.pivot_cols.size(); ++k) {
        int col = h.pivot_cols[k];
        if (r[col] == 0) continue;
        Rat q = r[col] / h.H(int(k), col);
        if (!is_integer(q)) return std::nullopt;
        Int qi = q.get_num();
        for (int j = 0; j < h.H.cols(); ++j) r[j] -= Rat(qi) * h.H(int(k), j);
        coef_h[k] = qi;
    }
    for (const Rat& x : r)
        if (x != 0) return std::nullopt;
    // x = coef_h * U
    ZVec x(A.rows(), Int(0));
    for (int k = 0; k < h.H.rows(); ++k) {
        if (coef_h[k] == 0) continue;
        for (int i = 0; i < A.rows(); ++i)
            x[i] += coef_h[k] * h.U(k, i).get_num();
    }
    return x;
}

QMat left_kernel_integer(const QMat& A) {
    Int s = 1;
    for (int i = 0; i < A.rows(); ++i)
        for (int j = 0; j < A.cols(); ++j)
            s = s * A(i, j).get_den() / Int(gcd(s, A(i, j).get_den()));
    QMat As = A * Rat(s);
    HNFResult h = hnf(As);
    int rank = int(h.pivot_cols.size());
    std::vector<QVec> rows;
    for (int i = rank; i < h.U.rows(); ++i) rows.push_back(h.U.row(i));
    if (rows.empty()) return QMat(0, A.rows());
    return QMat::from_rows(rows);
}

QMat row_basis(const QMat& gens) {
    Int s = 1;
    for (int i = 0; i < gens.rows(); ++i)
        for (int j = 0; j < gens.cols(); ++j)
            s = s * gens(i, j).get_den() / Int(gcd(s, gens(i, j).get_den()));
    QMat As = gens * Rat(s);
    HNFResult h = hnf(As);
    int rank = int(h.pivot_cols.size());
    std::vector<QVec> rows;
    Rat inv = Rat(1) / Rat(s);
    for (int i = 0; i < rank; ++i) {
        QVec v = h.H.row(i);
        for (Rat& x : v) { x *= inv; x.canonicalize(); }
        rows.push_back(v);
    }
    if (rows.empty()) return QMat(0, gens.cols());
    return QMat::from_rows(rows);
}

}  // namespace k3z3

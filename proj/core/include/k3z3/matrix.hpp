#pragma once
// Dense exact rational matrices plus the integer-matrix workhorses
// (Hermite and Smith normal forms with transforms) that the lattice
// machinery is built on.  Everything is exact; no floating point.

#include "k3z3/exact.hpp"

#include <cassert>
#include <initializer_list>
#include <optional>

namespace k3z3 {

class QMat {
  public:
    QMat() : r_(0), c_(0) {}
    QMat(int rows, int cols) : r_(rows), c_(cols), d_(size_t(rows) * cols) {}
    QMat(std::initializer_list<std::initializer_list<Rat>> rows);

    static QMat identity(int n);
    static QMat from_rows(const std::vector<QVec>& rows);

    int rows() const { return r_; }
    int cols() const { return c_; }
    Rat& operator()(int i, int j) { return d_[size_t(i) * c_ + j]; }
    const Rat& operator()(int i, int j) const { return d_[size_t(i) * c_ + j]; }

    QVec row(int i) const;
    void set_row(int i, const QVec& v);

    QMat transpose() const;
    QMat operator*(const QMat& o) const;
    QMat operator+(const QMat& o) const;
    QMat operator-(const QMat& o) const;
    QMat operator*(const Rat& s) const;
    bool operator==(const QMat& o) const { return r_ == o.r_ && c_ == o.c_ && d_ == o.d_; }

    bool is_symmetric() const;
    bool is_integral() const;

    Rat det() const;          // exact determinant (square)
    int rank() const;         // rank over Q
    QMat inverse() const;     // throws if singular

    // Stacks o below this matrix.
    QMat vstack(const QMat& o) const;

  private:
    int r_, c_;
    std::vector<Rat> d_;
};

QVec operator*(const QVec& v, const QMat& m);   // row vector times matrix
QVec operator+(const QVec& a, const QVec& b);
QVec operator-(const QVec& a, const QVec& b);
QVec operator*(const Rat& s, const QVec& v);
Rat dot(const QVec& a, const QMat& gram, const QVec& b);

// Solves x * A = b over Q (x a row vector); nullopt if inconsistent.
std::optional<QVec> solve_left(const QMat& A, const QVec& b);

// Basis (rows) of { x : x * A = 0 } over Q, scaled to primitive integer rows.
QMat left_kernel(const QMat& A);

// Signature of a symmetric rational matrix by exact congruence
// diagonalization.  Returns (positive, negative, zero) inertia counts.
struct Inertia { int pos = 0, neg = 0, zero = 0; };
Inertia signature(const QMat& gram);

// ---- integer matrices -------------------------------------------------

// Row-style Hermite normal form: U * A = H with U unimodular, H in row
// echelon form with positive pivots and reduced entries above them.
struct HNFResult {
    QMat H;             // integral entries
    QMat U;             // unimodular transform
    std::vector<int> pivot_cols;  // one per nonzero row of H
};
HNFResult hnf(const QMat& A_integral);

// Smith normal form: U * A * V = D, D diagonal with d1 | d2 | ...
struct SNFResult {
    QMat D, U, V;
    std::vector<Int> divisors;  // nonzero diagonal entries
};
SNFResult snf(const QMat& A_integral);

// Integer solution of x * A = b; nullopt if none exists.  A, b rational
// (denominators are cleared internally); the solution x is integral.
std::optional<ZVec> solve_left_integer(const QMat& A, const QVec& b);

// Rows spanning { x in Z^n : x * A = 0 }; the result is saturated.
QMat left_kernel_integer(const QMat& A);

// Lattice-style row reduction: basis (rows, full row rank) of the abelian
// group generated by the given rational rows.  Rational entries allowed;
// the group must be discrete (it always is for finitely many generators).
QMat row_basis(const QMat& gens);

}  // namespace k3z3

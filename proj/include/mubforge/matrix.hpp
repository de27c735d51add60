#pragma once

#include <complex>
#include <optional>
#include <variant>
#include <vector>

#include "mubforge/phase.hpp"

namespace mubforge {

using cdouble = std::complex<double>;
using CVector = std::vector<cdouble>;

class PhaseMatrix;

/// Dense d x d complex matrix used wherever entries leave the unimodular set
/// (products of Fourier matrices, ladder operators with radical entries, ...).
class CMatrix {
  public:
    CMatrix() : dim_(0) {}
    explicit CMatrix(int dim) : dim_(dim), a_(static_cast<size_t>(dim) * dim, cdouble(0.0, 0.0)) {}

    static CMatrix identity(int dim);

    int dim() const { return dim_; }
    cdouble& at(int i, int j) { return a_[static_cast<size_t>(i) * dim_ + j]; }
    const cdouble& at(int i, int j) const { return a_[static_cast<size_t>(i) * dim_ + j]; }

    CMatrix mul(const CMatrix& o) const;
    CMatrix dagger() const;
    CMatrix add(const CMatrix& o) const;
    CMatrix sub(const CMatrix& o) const;
    CMatrix scaled(cdouble s) const;
    CMatrix tensor(const CMatrix& o) const;

    cdouble trace() const;
    double max_abs() const;
    double max_abs_diff(const CMatrix& o) const;

    /// |det| via elimination with partial pivoting.
    cdouble determinant() const;

    CVector apply(const CVector& x) const;
    CVector column(int j) const;

  private:
    int dim_;
    std::vector<cdouble> a_;
};

/// An exact sum collapse result: mult * phase / sqrt(sqrt_den).
struct ExactSum {
    long long mult = 0;
    Phase phase;
    long long sqrt_den = 1;

    bool is_zero() const { return mult == 0; }
    cdouble eval() const;
};

/// d x d matrix whose entries are exact roots of unity or exact zero, with an
/// optional global scale 1/sqrt(s). All entries share one common order (lcm
/// normal form), so equality is a pure integer comparison.
///
/// The scale denominator s is 1 for monomial matrices (X, Z, u_ab, ...) and d
/// for Fourier/Hadamard matrices; intermediate products may carry other exact
/// values of s.
class PhaseMatrix {
  public:
    PhaseMatrix() : dim_(0), order_(1), sqrt_den_(1) {}
    PhaseMatrix(int dim, long long order, long long sqrt_den = 1);

    static PhaseMatrix identity(int dim);

    int dim() const { return dim_; }
    long long order() const { return order_; }
    long long sqrt_den() const { return sqrt_den_; }
    bool has_scale() const { return sqrt_den_ != 1; }

    bool is_zero_at(int i, int j) const { return !exps_[static_cast<size_t>(i) * dim_ + j].has_value(); }
    std::optional<Phase> at(int i, int j) const;

    /// Entry assignment; exponent is reduced mod the stored order.
    void set(int i, int j, long long exponent);
    void set_phase(int i, int j, const Phase& p);
    void set_zero(int i, int j);

    /// Raw exponent access (nullopt = exact zero).
    std::optional<long long> exponent_at(int i, int j) const { return exps_[static_cast<size_t>(i) * dim_ + j]; }

    /// Re-express all entries over a larger common order.
    PhaseMatrix rescaled(long long new_order) const;

    /// Canonical minimal-order form (for printing and equality).
    PhaseMatrix reduced() const;

    PhaseMatrix dagger() const;
    PhaseMatrix scalar_mul(const Phase& p) const;
    PhaseMatrix column_scaled(const std::vector<Phase>& col_factors) const;

    CMatrix eval() const;
    CVector eval_column(int j) const;

    bool is_monomial() const;
    bool is_diagonal() const;

    /// Exact trace when the diagonal collapses (all-equal or complete-coset sum).
    std::optional<ExactSum> trace_exact() const;

    /// Value equality (dimension, scale, entrywise phases).
    bool operator==(const PhaseMatrix& o) const;
    bool operator!=(const PhaseMatrix& o) const { return !(*this == o); }

  private:
    int dim_;
    long long order_;
    long long sqrt_den_;
    std::vector<std::optional<long long>> exps_;
};

/// Exact sum of the given roots of unity (exponents over common order n).
/// Collapses when all terms are equal or when the multiset is a whole number
/// of copies of a complete coset of a nontrivial subgroup of Z_n (geometric
/// sums); returns nullopt when the sum leaves the exact representable set.
std::optional<std::pair<long long, long long>> collapse_phase_sum(std::vector<long long> exps, long long n);

/// Exact matrix product. Succeeds whenever every entry sum collapses and the
/// collapsed multiplicities are uniform enough to fold into the global scale
/// (monomial products, Fourier unitarity sums, quartic Fourier powers, ...).
std::optional<PhaseMatrix> exact_mul(const PhaseMatrix& a, const PhaseMatrix& b);

/// Exact Kronecker product, row-major block convention:
/// entry ((i1*d2+i2),(j1*d2+j2)) = A[i1,j1] * B[i2,j2].
PhaseMatrix tensor(const PhaseMatrix& a, const PhaseMatrix& b);
CMatrix tensor(const CMatrix& a, const CMatrix& b);

using MatVar = std::variant<PhaseMatrix, CMatrix>;

/// Product that stays exact when it provably can and falls back to the
/// complex-float path otherwise.
MatVar mat_mul(const PhaseMatrix& a, const PhaseMatrix& b);
CMatrix mat_mul(const CMatrix& a, const CMatrix& b);
CMatrix eval(const MatVar& m);

PhaseMatrix dagger(const PhaseMatrix& a);
CMatrix dagger(const CMatrix& a);

bool is_unitary(const PhaseMatrix& a, double tol = 1e-10);
bool is_unitary(const CMatrix& a, double tol = 1e-10);

/// Generalized Hadamard test: unitary with every |entry| = 1/sqrt(d).
bool is_hadamard(const PhaseMatrix& a, double tol = 1e-10);
bool is_hadamard(const CMatrix& a, double tol = 1e-10);

/// Hilbert-Schmidt inner product Tr(A^dagger B).
cdouble hs_trace_inner(const CMatrix& a, const CMatrix& b);
cdouble hs_trace_inner(const PhaseMatrix& a, const PhaseMatrix& b);

/// Exact Hilbert-Schmidt inner product when the d^2-term sum collapses.
std::optional<ExactSum> hs_inner_exact(const PhaseMatrix& a, const PhaseMatrix& b);

cdouble inner_product(const CVector& x, const CVector& y);
double norm2(const CVector& x);

}  // namespace mubforge

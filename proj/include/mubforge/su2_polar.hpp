#pragma once

#include <vector>

#include "mubforge/matrix.hpp"

namespace mubforge::su2_polar {

/// Parameters of the shift-type operator acting on the d-dimensional space:
/// d = 2j+1, a in Z_d selects the phase twist, r is the (rational) wrap
/// parameter. Internally everything is stored in the k-index convention
/// k = j - m; m-index views are read-only derived data.
struct AngularParams {
    int d = 2;
    Rational r{0, 1};
    int a = 0;

    AngularParams() = default;
    AngularParams(int d_, Rational r_, int a_) : d(d_), r(r_), a(((a_ % d_) + d_) % d_) {
        if (d < 1) throw std::invalid_argument("AngularParams: d must be >= 1");
    }

    /// m value for row index k (m = j - k, doubled to stay integral).
    long long two_m(int k) const { return d - 1 - 2 * k; }
};

/// Matrix of v_ra on the canonical basis: entry (k-1, k) = q^{ka} for
/// k = 1..d-1 and the wrap entry (d-1, 0) = exp(i*pi*(d-1)*r).
PhaseMatrix v_ra_matrix(const AngularParams& p);

/// Common eigenvectors (columns, exact with 1/sqrt(d) scale) and their
/// eigenvalues q^{j(a+r) - alpha}; the spectrum is nondegenerate.
struct VraEigensystem {
    PhaseMatrix vectors;           // column alpha = eigenvector alpha
    std::vector<Phase> eigenvalues;
};
VraEigensystem eigenbasis_vra(const AngularParams& p);

/// Wigner rotation operator for the angle 2*pi*p/d: diagonal with entries
/// exp(-i*m*phi) in k-index order (order-2d phases when d is even).
PhaseMatrix rotation_op(int d, int p);

/// Exact check of P v_ra P^dagger = exp(-i*phi) v_ra and of the eigenvector
/// permutation P|alpha> = q^{jp}|alpha - p>.
bool pseudoinvariance_check(int d, int p, const Rational& r, int a);

/// Hermitian diagonal with entries sqrt((j+m)(j-m+1)) in k-index order.
CMatrix h_matrix(int d);

/// Polar-decomposition generators: j_plus = h v_ra, j_minus = v_ra^dagger h,
/// j_z = (h^2 - v_ra^dagger h^2 v_ra) / 2.
struct Su2Generators {
    CMatrix j_plus;
    CMatrix j_minus;
    CMatrix j_z;
};
Su2Generators su2_generators(const AngularParams& p);

/// Two commuting q-deformed oscillator representations on k-dimensional
/// factor spaces, with nilpotent ladder operators (a_pm)^k = 0.
struct QuonRep {
    int k = 2;
    CMatrix x_plus, x_minus, n_x;   // k x k
    CMatrix y_plus, y_minus, n_y;   // k x k
    std::vector<cdouble> q_numbers; // [0]_q .. [k]_q
};
QuonRep quon_rep(int k);

/// The pair (h, v_ra) materialized on the k^2-dimensional product space.
struct QuonSystem {
    QuonRep rep;
    CMatrix h;      // k^2 x k^2 diagonal
    CMatrix v;      // k^2 x k^2
};
QuonSystem quon_build(int k, const Rational& r, int a);

/// Restriction of the product-space v to the k-dimensional constant-j
/// subspace; equals v_ra_matrix(d=k, r, a) entrywise within 1e-10.
CMatrix quon_restrict(int k, const Rational& r, int a);

}  // namespace mubforge::su2_polar

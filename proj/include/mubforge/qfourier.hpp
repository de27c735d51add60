#pragma once

#include "mubforge/matrix.hpp"

namespace mubforge::qfourier {

/// Dimension d >= 2 and quadratic-twist selector a in Z_d.
struct QDFTSpec {
    int d = 2;
    int a = 0;

    QDFTSpec() = default;
    QDFTSpec(int d_, int a_) : d(d_), a(((a_ % d_) + d_) % d_) {
        if (d < 2) throw std::invalid_argument("QDFTSpec: d must be >= 2");
    }
};

/// Quadratic Fourier matrix: entry (k, alpha) = z^{(k+1)(d-k-1)a - 2(k+1)alpha} / sqrt(d)
/// with z = exp(i*pi/d); unitary and generalized Hadamard.
PhaseMatrix fourier_matrix(const QDFTSpec& spec);

/// Column-indexed transform y(alpha) = sum_k F[k][alpha] x(k) and its inverse.
CVector qdft(const CVector& x, const QDFTSpec& spec);
CVector iqdft(const CVector& y, const QDFTSpec& spec);

/// Conservation rule: returns (sum conj(y) y', sum conj(x) x'); the two agree
/// and the common value is independent of a.
std::pair<cdouble, cdouble> parseval_check(const CVector& x, const CVector& xp, const QDFTSpec& spec);

/// Standard Fourier operator: entry (k, k') = q^{-k k'} / sqrt(d).
PhaseMatrix standard_fourier(int d);

/// Pseudopermutation S = sum_beta q^beta E_{beta, d-beta}.
PhaseMatrix pseudo_permutation(int d);

/// Exactly verified relations tying the quadratic and standard transforms:
/// f = (F_0 S)^dagger, f^4 = I, F_0^4 = q I, f X f^dagger = Z.
struct FourierRelations {
    bool f_from_f0_s = false;
    bool f_fourth_identity = false;
    bool f0_fourth_q = false;
    bool f_conjugates_x_to_z = false;
    bool all() const { return f_from_f0_s && f_fourth_identity && f0_fourth_q && f_conjugates_x_to_z; }
};
FourierRelations fourier_relations(int d);

/// F_a^dagger V_0a F_a, computed exactly; diagonal with entries
/// q^{(d-1)a/2} q^{-alpha}.
PhaseMatrix reduce_v0a(int d, int a);

/// The closed form the reduction must equal.
PhaseMatrix reduce_v0a_expected(int d, int a);

}  // namespace mubforge::qfourier

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "mubforge/matrix.hpp"

namespace mubforge::mub {

/// d labeled unit vectors in dimension d. Columns of `vectors` are the basis
/// vectors; `exact` carries the phase-level form when one exists.
struct Basis {
    int dim = 0;
    std::string label;
    CMatrix vectors;
    std::optional<PhaseMatrix> exact;

    CVector vector(int alpha) const { return vectors.column(alpha); }
};

enum class MubVerdict { Unbiased, OrthonormalSame, Neither };

const char* verdict_name(MubVerdict v);

/// Pairwise unbiasedness report: extrema of |<.|.>| over all vector pairs and
/// the verdict they imply at the given tolerance.
struct MubPairReport {
    std::string label1, label2;
    double max_modulus = 0.0;
    double min_modulus = 0.0;
    MubVerdict verdict = MubVerdict::Neither;
    double tol = 1e-10;
};

/// Basis built from the columns of the quadratic Fourier matrix; label "B<a>".
Basis basis(int d, int a);

/// Identity columns; label "computational".
Basis computational_basis(int d);

/// Decide unbiased / orthonormal-same / neither for two equal-dimension bases.
MubPairReport unbiased(const Basis& b1, const Basis& b2, double tol = 1e-10);

/// The p+1 bases B_0..B_{p-1} plus the computational basis; requires p prime
/// (trial division) and refuses otherwise.
std::vector<Basis> complete_set_prime(int p);

/// The five d=4 bases built on the two-qubit product space: canonical plus
/// the four recombined tensor eigenbases; all ten pairs unbiased.
std::vector<Basis> mub_d4();

/// |det A| of the d x d coefficient matrix of a length-d^2 vector, with the
/// product / partial / maximal classification against the 1/sqrt(d^d) bound.
struct EntanglementReport {
    double abs_det = 0.0;
    double bound = 0.0;       // 1/sqrt(d^d)
    std::string classification;
};
EntanglementReport entanglement_det(const CVector& v, int d, double tol = 1e-9);

bool is_prime(int n);

}  // namespace mubforge::mub

#pragma once

#include "mubforge/matrix.hpp"

namespace mubforge::gauss {

/// Parameters of the generalized quadratic Gauss sum
/// S(u, v, w) = sum_{k=0}^{|w|-1} exp(i*pi*(u k^2 + v k)/w),
/// valid when gcd(u, w) = 1, u*w != 0 and u*w + v is even.
struct GaussParams {
    long long u = 1;
    long long v = 0;
    long long w = 1;

    bool valid() const;
    void require_valid() const;
};

/// Legendre symbol (a|b): +1 iff a is a quadratic residue mod b, computed by
/// enumeration of squares at desk scale. b odd; (a|1) = +1 by the empty-product
/// convention. Requires gcd(a, b) = 1.
int legendre(long long a, long long b);

/// Jacobi symbol (a|n) for odd positive n; reduces to the Legendre symbol for
/// prime n and extends it multiplicatively to composite moduli, which is what
/// the Gauss-sum closed forms consume.
int jacobi(long long a, long long n);

/// Smallest non-negative x with a*x = 1 mod b; requires gcd(a, b) = 1.
long long mod_inverse(long long a, long long b);

/// Brute-force sum with exact phase accumulation of order 2|w| followed by a
/// single float summation per residue.
cdouble gauss_brute(const GaussParams& p);

/// Closed forms for the three parity signatures (u even, v even, w odd),
/// (odd, odd, odd) and (odd, even, even), scaled to return S itself.
/// Any other signature throws; together with the validity conditions the
/// three cases are exhaustive (see the note in the implementation).
cdouble gauss_closed(const GaussParams& p);

/// Evaluation via the reciprocity theorem:
/// S(u,v,w) = sqrt|w/u| exp(i*pi*[sgn(uw) - v^2/(uw)]/4) S(-w,-v,u).
cdouble gauss_reciprocity(const GaussParams& p);

/// Basis overlap <a alpha | b beta> computed along independent routes:
/// direct vector inner product, Fourier-product entry, and (when the
/// parameter map is valid) S(u, v, w)/d.
struct OverlapResult {
    cdouble direct;
    cdouble via_product;
    cdouble via_gauss;       // meaningful only when gauss_route_valid
    bool gauss_route_valid = false;
    double max_route_diff = 0.0;
};
OverlapResult overlap(int d, int a, int alpha, int b, int beta);

/// Closed form of the neighbour-basis overlap (u = 1 representative):
/// (1/sqrt(d)) exp(i*pi*[1 - (d - 2 alpha + 2 beta)^2/d]/4); modulus 1/sqrt(d).
cdouble overlap_shift1_closed(int d, int alpha, int beta);

/// Closed modulus of the distance-2 overlap (u = 2 representative):
/// sqrt(2/d) |cos(pi (d - 2 alpha + 2 beta)/4)|; vanishing-or-large for even d.
double overlap_shift2_modulus(int d, int alpha, int beta);

/// Full closed value of the distance-2 overlap.
cdouble overlap_shift2_closed(int d, int alpha, int beta);

}  // namespace mubforge::gauss

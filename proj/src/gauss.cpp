#include "mubforge/gauss.hpp"

#include <cmath>
#include <numeric>
#include <utility>

#include "mubforge/qfourier.hpp"

namespace mubforge::gauss {

namespace {
constexpr double kPi = 3.14159265358979323846264338327950288;
}

bool GaussParams::valid() const {
    if (u == 0 || w == 0) return false;
    if (std::gcd(u < 0 ? -u : u, w < 0 ? -w : w) != 1) return false;
    return (u * w + v) % 2 == 0;
}

void GaussParams::require_valid() const {
    if (!valid()) throw std::invalid_argument("GaussParams: need gcd(u,w)=1, uw != 0 and uw+v even");
}

int legendre(long long a, long long b) {
    if (b < 0) b = -b;
    if (b == 1) return 1;  // empty-product convention, needed for u = +-1
    if (b % 2 == 0) throw std::invalid_argument("legendre: modulus must be odd");
    long long r = mod_reduce(a, b);
    if (std::gcd(r, b) != 1) throw std::invalid_argument("legendre: arguments must be coprime");
    for (long long k = 0; k <= b / 2; ++k)
        if ((k * k) % b == r) return 1;
    return -1;
}

int jacobi(long long a, long long n) {
    if (n < 1 || n % 2 == 0) throw std::invalid_argument("jacobi: modulus must be odd and positive");
    a = mod_reduce(a, n);
    int result = 1;
    while (a != 0) {
        while (a % 2 == 0) {
            a /= 2;
            if (n % 8 == 3 || n % 8 == 5) result = -result;
        }
        std::swap(a, n);
        if (a % 4 == 3 && n % 4 == 3) result = -result;
        a %= n;
    }
    if (n != 1) throw std::invalid_argument("jacobi: arguments must be coprime");
    return result;
}

long long mod_inverse(long long a, long long b) {
    if (b < 1) throw std::invalid_argument("mod_inverse: modulus must be >= 1");
    if (b == 1) return 0;
    long long r = mod_reduce(a, b);
    if (std::gcd(r, b) != 1) throw std::invalid_argument("mod_inverse: arguments must be coprime");
    long long t = 0, new_t = 1, q = b, new_q = r;
    while (new_q != 0) {
        long long quot = q / new_q;
        t = std::exchange(new_t, t - quot * new_t);
        q = std::exchange(new_q, q - quot * new_q);
    }
    return mod_reduce(t, b);
}

cdouble gauss_brute(const GaussParams& p) {
    p.require_valid();
    long long aw = p.w < 0 ? -p.w : p.w;
    long long n = 2 * aw;
    // Tally exact exponents of order 2|w|, then pair e with e+|w| (opposite
    // signs) so cancellation happens at integer level before the float sum.
    std::vector<long long> counts(n, 0);
    for (long long k = 0; k < aw; ++k) {
        long long num = p.u * k * k + p.v * k;  // exp(i*pi*num/w)
        long long e = p.w > 0 ? mod_reduce(num, n) : mod_reduce(-num, n);
        ++counts[e];
    }
    cdouble s(0.0, 0.0);
    for (long long e = 0; e < aw; ++e) {
        long long c = counts[e] - counts[e + aw];
        if (c != 0) s += static_cast<double>(c) * Phase(n, e).eval();
    }
    return s;
}

cdouble gauss_closed(const GaussParams& p) {
    p.require_valid();
    if (p.w < 0) throw std::domain_error("gauss_closed: only defined for w > 0");
    long long w = p.w;
    if (w == 1) return 1.0;  // single k = 0 term

    // S depends on u only mod 2w; the positive representative keeps the
    // Legendre symbols over positive arguments.
    long long u = mod_reduce(p.u, 2 * w);
    long long v = p.v;
    long long m8 = 8 * w;

    bool u_even = (u % 2 == 0), v_even = (mod_reduce(v, 2) == 0), w_even = (w % 2 == 0);
    double rw = std::sqrt(static_cast<double>(w));
    long long v2 = mod_reduce(v % m8 * (v % m8), m8);

    if (u_even && v_even && !w_even) {
        // sqrt(w) (u|w) exp(-i*pi [ (w-1)w + u (u\w)^2 v^2 ] / (4w))
        long long inv = mod_inverse(u, w);
        long long t = mod_reduce(u * inv % m8 * inv % m8 * v2, m8);
        long long num = mod_reduce((w - 1) % m8 * w + t, m8);
        return rw * static_cast<double>(jacobi(u, w)) * Phase(m8, -num).eval();
    }
    if (!u_even && !v_even && !w_even) {
        // sqrt(w) (u|w) exp(-i*pi [ (w-1)w + 16 u (4u\w)^2 v^2 ] / (4w))
        long long inv4 = mod_inverse(4 * u, w);
        long long t = mod_reduce(16 * u % m8 * inv4 % m8 * inv4 % m8 * v2, m8);
        long long num = mod_reduce((w - 1) % m8 * w + t, m8);
        return rw * static_cast<double>(jacobi(u, w)) * Phase(m8, -num).eval();
    }
    if (!u_even && v_even && w_even) {
        // sqrt(w) (w|u) exp(-i*pi u [ (u\w)^2 v^2 - w ] / (4w))
        long long inv = mod_inverse(u, w);
        long long t = mod_reduce(inv * inv % m8 * v2, m8);
        long long num = mod_reduce(u % m8 * mod_reduce(t - w, m8), m8);
        return rw * static_cast<double>(jacobi(w, u)) * Phase(m8, -num).eval();
    }
    // Unreachable for valid parameters: w odd forces v = uw (mod 2), covering
    // the first two cases; w even forces u odd (coprimality) and v even
    // (uw + v even), covering the third.
    throw std::domain_error("gauss_closed: parity signature not covered by the closed forms");
}

cdouble gauss_reciprocity(const GaussParams& p) {
    p.require_valid();
    GaussParams inner{-p.w, -p.v, p.u};
    cdouble s_inner = gauss_brute(inner);
    long long prod = p.u * p.w;
    long long ap = prod < 0 ? -prod : prod;
    // exp(i*pi [sgn(uw) - v^2/(uw)] / 4) = exp(i*pi (|uw| - v^2) / (4 uw)),
    // exact over order 8|uw|.
    long long m8 = 8 * ap;
    long long num = mod_reduce(ap - mod_reduce(p.v % m8 * (p.v % m8), m8), m8);
    Phase ph = prod > 0 ? Phase(m8, num) : Phase(m8, -num);
    double scale = std::sqrt(std::abs(static_cast<double>(p.w) / static_cast<double>(p.u)));
    return scale * ph.eval() * s_inner;
}

OverlapResult overlap(int d, int a, int alpha, int b, int beta) {
    a = static_cast<int>(mod_reduce(a, d));
    b = static_cast<int>(mod_reduce(b, d));
    alpha = static_cast<int>(mod_reduce(alpha, d));
    beta = static_cast<int>(mod_reduce(beta, d));

    OverlapResult r;
    PhaseMatrix fa = qfourier::fourier_matrix({d, a});
    PhaseMatrix fb = qfourier::fourier_matrix({d, b});
    r.direct = inner_product(fa.eval_column(alpha), fb.eval_column(beta));
    r.via_product = fa.eval().dagger().mul(fb.eval()).at(alpha, beta);

    long long u = a - b;
    if (a != b && std::gcd(u < 0 ? -u : u, static_cast<long long>(d)) == 1) {
        GaussParams gp{u, -u * d + 2LL * (alpha - beta), d};
        r.via_gauss = gauss_brute(gp) / static_cast<double>(d);
        r.gauss_route_valid = true;
    }

    double m = std::abs(r.direct - r.via_product);
    if (r.gauss_route_valid) {
        m = std::max(m, std::abs(r.direct - r.via_gauss));
        m = std::max(m, std::abs(r.via_product - r.via_gauss));
    }
    r.max_route_diff = m;
    return r;
}

cdouble overlap_shift1_closed(int d, int alpha, int beta) {
    // (1/sqrt(d)) exp(i*pi (d - t^2) / (4d)) with t = d - 2 alpha + 2 beta.
    long long t = d - 2LL * alpha + 2LL * beta;
    long long m8 = 8LL * d;
    long long num = mod_reduce(d - mod_reduce(t % m8 * (t % m8), m8), m8);
    return Phase(m8, num).eval() / std::sqrt(static_cast<double>(d));
}

double overlap_shift2_modulus(int d, int alpha, int beta) {
    double c = std::cos(kPi * static_cast<double>(d - 2 * alpha + 2 * beta) / 4.0);
    return std::sqrt(2.0 / static_cast<double>(d)) * std::abs(c);
}

cdouble overlap_shift2_closed(int d, int alpha, int beta) {
    // (1/sqrt(2d)) exp(i*pi (d - 2(alpha-beta)^2) / (4d)) [1 + exp(i*pi(-d + 2 alpha - 2 beta)/2)]
    long long ab = alpha - beta;
    long long m8 = 8LL * d;
    long long num = mod_reduce(d - 2 * mod_reduce(ab * ab, m8), m8);
    cdouble lead = Phase(m8, num).eval() / std::sqrt(2.0 * d);
    cdouble bracket = 1.0 + Phase(4, mod_reduce(-d + 2 * ab, 4)).eval();
    return lead * bracket;
}

}  // namespace mubforge::gauss

#include "mubforge/su2_polar.hpp"

#include <cmath>

namespace mubforge::su2_polar {

namespace {

// Exponent of q = exp(2*pi*i/d) for the alpha-th eigenvector component at
// row k: (d-1-k)(k+1) a/2 - j m r + (d-1-k) alpha, with j m = (d-1)(d-1-2k)/4.
Rational eigvec_exponent(const AngularParams& p, int k, int alpha) {
    long long d = p.d;
    Rational x = Rational(static_cast<long long>(p.a) * (d - 1 - k) * (k + 1), 2);
    x = x - Rational((d - 1) * (d - 1 - 2 * k), 4) * p.r;
    x = x + Rational((d - 1 - k) * static_cast<long long>(alpha), 1);
    return x;
}

}  // namespace

PhaseMatrix v_ra_matrix(const AngularParams& p) {
    int d = p.d;
    Phase wrap = Phase::from_turns(Rational(d - 1, 2) * p.r);  // exp(i*pi*(d-1)*r)
    long long n = std::lcm(static_cast<long long>(d), wrap.order());
    PhaseMatrix m(d, n);
    for (int k = 1; k < d; ++k) m.set_phase(k - 1, k, Phase(d, static_cast<long long>(k) * p.a));
    m.set_phase(d - 1, 0, wrap);
    return m;
}

VraEigensystem eigenbasis_vra(const AngularParams& p) {
    int d = p.d;
    long long n = 1;
    std::vector<std::vector<Phase>> cols(d);
    for (int alpha = 0; alpha < d; ++alpha) {
        cols[alpha].reserve(d);
        for (int k = 0; k < d; ++k) {
            Phase ph = root_power(d, eigvec_exponent(p, k, alpha));
            n = std::lcm(n, ph.order());
            cols[alpha].push_back(ph);
        }
    }
    PhaseMatrix vec(d, n, d);
    for (int alpha = 0; alpha < d; ++alpha)
        for (int k = 0; k < d; ++k) vec.set_phase(k, alpha, cols[alpha][k]);

    VraEigensystem sys{std::move(vec), {}};
    for (int alpha = 0; alpha < d; ++alpha) {
        // q^{j(a+r) - alpha} with j = (d-1)/2.
        Rational x = Rational((d - 1) * static_cast<long long>(p.a), 2) + Rational(d - 1, 2) * p.r - Rational(alpha);
        sys.eigenvalues.push_back(root_power(d, x));
    }
    return sys;
}

PhaseMatrix rotation_op(int d, int p) {
    if (p < 0 || p >= d) throw std::invalid_argument("rotation_op: p out of range");
    PhaseMatrix m(d, 2 * static_cast<long long>(d));
    for (int k = 0; k < d; ++k) {
        // exp(-i m phi) = exp(2*pi*i (2k - d + 1) p / (2d)) with m = (d-1-2k)/2.
        m.set(k, k, static_cast<long long>(2 * k - d + 1) * p);
    }
    return m;
}

bool pseudoinvariance_check(int d, int p, const Rational& r, int a) {
    AngularParams params(d, r, a);
    PhaseMatrix v = v_ra_matrix(params);
    PhaseMatrix rot = rotation_op(d, p);

    auto conj1 = exact_mul(rot, v);
    if (!conj1) return false;
    auto conj = exact_mul(*conj1, rot.dagger());
    if (!conj) return false;
    PhaseMatrix expected = v.scalar_mul(Phase(d, -p));  // exp(-i phi) v
    if (!(*conj == expected)) return false;

    // P |alpha> = q^{jp} |alpha - p>, with the column set stable as a whole.
    VraEigensystem sys = eigenbasis_vra(params);
    auto rotated = exact_mul(rot, sys.vectors);
    if (!rotated) return false;
    Phase jp = root_power(d, Rational((d - 1) * static_cast<long long>(p), 2));
    long long n = std::lcm(rotated->order(), std::lcm(sys.vectors.order(), jp.order()));
    PhaseMatrix lhs = rotated->rescaled(n);
    PhaseMatrix rhs(d, n, sys.vectors.sqrt_den());
    PhaseMatrix src = sys.vectors.rescaled(n);
    for (int alpha = 0; alpha < d; ++alpha) {
        int beta = ((alpha - p) % d + d) % d;
        for (int k = 0; k < d; ++k) {
            auto e = src.at(k, beta);
            if (e) rhs.set_phase(k, alpha, e->times(jp));
        }
    }
    return lhs == rhs;
}

CMatrix h_matrix(int d) {
    CMatrix m(d);
    for (int k = 0; k < d; ++k)
        m.at(k, k) = std::sqrt(static_cast<double>(d - 1 - k) * (k + 1));
    return m;
}

Su2Generators su2_generators(const AngularParams& p) {
    CMatrix h = h_matrix(p.d);
    CMatrix v = v_ra_matrix(p).eval();
    CMatrix h2 = h.mul(h);
    Su2Generators g;
    g.j_plus = h.mul(v);
    g.j_minus = v.dagger().mul(h);
    g.j_z = h2.sub(v.dagger().mul(h2).mul(v)).scaled(0.5);
    return g;
}

QuonRep quon_rep(int k) {
    if (k < 2) throw std::invalid_argument("quon_rep: k must be >= 2");
    QuonRep rep;
    rep.k = k;
    Phase q(k, 1);
    rep.q_numbers.resize(k + 1);
    for (int n = 0; n <= k; ++n) {
        // [n]_q = (1 - q^n) / (1 - q)
        cdouble qn = Phase(k, n).eval();
        rep.q_numbers[n] = (cdouble(1.0, 0.0) - qn) / (cdouble(1.0, 0.0) - q.eval());
    }
    rep.x_plus = CMatrix(k);
    rep.x_minus = CMatrix(k);
    rep.n_x = CMatrix(k);
    rep.y_plus = CMatrix(k);
    rep.y_minus = CMatrix(k);
    rep.n_y = CMatrix(k);
    for (int n = 0; n < k; ++n) {
        rep.n_x.at(n, n) = static_cast<double>(n);
        rep.n_y.at(n, n) = static_cast<double>(n);
        if (n + 1 < k) {
            rep.x_plus.at(n + 1, n) = 1.0;                       // x+|n> = |n+1>
            rep.y_plus.at(n + 1, n) = rep.q_numbers[n + 1];      // y+|n> = [n+1]|n+1>
        }
        if (n >= 1) {
            rep.x_minus.at(n - 1, n) = rep.q_numbers[n];         // x-|n> = [n]|n-1>
            rep.y_minus.at(n - 1, n) = 1.0;                      // y-|n> = |n-1>
        }
    }
    return rep;
}

QuonSystem quon_build(int k, const Rational& r, int a) {
    QuonRep rep = quon_rep(k);
    int dim = k * k;
    CMatrix eye(k);
    for (int i = 0; i < k; ++i) eye.at(i, i) = 1.0;

    auto lift_x = [&](const CMatrix& m) { return tensor(m, eye); };
    auto lift_y = [&](const CMatrix& m) { return tensor(eye, m); };

    // [k-1]_q! for the wrap terms.
    cdouble fact(1.0, 0.0);
    for (int n = 1; n <= k - 1; ++n) fact *= rep.q_numbers[n];
    cdouble phi_half = Phase::from_turns(Rational(k - 1, 4) * r).eval();  // exp(i*phi_r/2)

    // Diagonal q-power factors q^{a(Nx+Ny)/2} and q^{-a(Nx-Ny)/2}.
    CMatrix dplus(dim), dminus(dim);
    for (int n1 = 0; n1 < k; ++n1)
        for (int n2 = 0; n2 < k; ++n2) {
            int idx = n1 * k + n2;
            dplus.at(idx, idx) = root_power(k, Rational(static_cast<long long>(a) * (n1 + n2), 2)).eval();
            dminus.at(idx, idx) = root_power(k, Rational(-static_cast<long long>(a) * (n1 - n2), 2)).eval();
        }

    CMatrix xp = lift_x(rep.x_plus), xm = lift_x(rep.x_minus);
    CMatrix yp = lift_y(rep.y_plus), ym = lift_y(rep.y_minus);

    CMatrix xm_pow = CMatrix::identity(dim);
    CMatrix yp_pow = CMatrix::identity(dim);
    for (int t = 0; t < k - 1; ++t) {
        xm_pow = xm.mul(xm_pow);
        yp_pow = yp.mul(yp_pow);
    }

    CMatrix sx = dplus.mul(xp).add(xm_pow.scaled(phi_half / fact));
    CMatrix sy = ym.mul(dminus).add(yp_pow.scaled(phi_half / fact));

    QuonSystem sys;
    sys.h = CMatrix(dim);
    for (int n1 = 0; n1 < k; ++n1)
        for (int n2 = 0; n2 < k; ++n2) {
            int idx = n1 * k + n2;
            sys.h.at(idx, idx) = std::sqrt(static_cast<double>(n1) * (n2 + 1));
        }
    sys.v = sx.mul(sy);
    sys.rep = std::move(rep);
    return sys;
}

CMatrix quon_restrict(int k, const Rational& r, int a) {
    QuonSystem sys = quon_build(k, r, a);
    // Column kk of the embedding: |k-index kk> = |n1 = k-1-kk, n2 = kk).
    CMatrix out(k);
    for (int col = 0; col < k; ++col) {
        int src = (k - 1 - col) * k + col;
        for (int row = 0; row < k; ++row) {
            int dst = (k - 1 - row) * k + row;
            out.at(row, col) = sys.v.at(dst, src);
        }
    }
    return out;
}

}  // namespace mubforge::su2_polar

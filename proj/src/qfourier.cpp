#include "mubforge/qfourier.hpp"

#include "mubforge/su2_polar.hpp"

namespace mubforge::qfourier {

PhaseMatrix fourier_matrix(const QDFTSpec& spec) {
    int d = spec.d;
    long long n = 2LL * d;
    PhaseMatrix f(d, n, d);
    for (int k = 0; k < d; ++k)
        for (int alpha = 0; alpha < d; ++alpha) {
            long long e = static_cast<long long>(k + 1) * (d - k - 1) * spec.a - 2LL * (k + 1) * alpha;
            f.set(k, alpha, e);
        }
    return f;
}

CVector qdft(const CVector& x, const QDFTSpec& spec) {
    if (static_cast<int>(x.size()) != spec.d) throw std::invalid_argument("qdft: length mismatch");
    CMatrix f = fourier_matrix(spec).eval();
    CVector y(spec.d, cdouble(0.0, 0.0));
    for (int alpha = 0; alpha < spec.d; ++alpha)
        for (int k = 0; k < spec.d; ++k) y[alpha] += f.at(k, alpha) * x[k];
    return y;
}

CVector iqdft(const CVector& y, const QDFTSpec& spec) {
    if (static_cast<int>(y.size()) != spec.d) throw std::invalid_argument("iqdft: length mismatch");
    CMatrix f = fourier_matrix(spec).eval();
    CVector x(spec.d, cdouble(0.0, 0.0));
    for (int k = 0; k < spec.d; ++k)
        for (int alpha = 0; alpha < spec.d; ++alpha) x[k] += std::conj(f.at(k, alpha)) * y[alpha];
    return x;
}

std::pair<cdouble, cdouble> parseval_check(const CVector& x, const CVector& xp, const QDFTSpec& spec) {
    if (x.size() != xp.size()) throw std::invalid_argument("parseval_check: length mismatch");
    CVector y = qdft(x, spec);
    CVector yp = qdft(xp, spec);
    return {inner_product(y, yp), inner_product(x, xp)};
}

PhaseMatrix standard_fourier(int d) {
    if (d < 2) throw std::invalid_argument("standard_fourier: d must be >= 2");
    PhaseMatrix f(d, 2LL * d, d);
    for (int k = 0; k < d; ++k)
        for (int kp = 0; kp < d; ++kp) f.set(k, kp, -2LL * k * kp);
    return f;
}

PhaseMatrix pseudo_permutation(int d) {
    PhaseMatrix s(d, d);
    for (int beta = 0; beta < d; ++beta) s.set(beta, (d - beta) % d, beta);
    return s;
}

FourierRelations fourier_relations(int d) {
    FourierRelations rel;
    PhaseMatrix f = standard_fourier(d);
    PhaseMatrix f0 = fourier_matrix(QDFTSpec(d, 0));
    PhaseMatrix s = pseudo_permutation(d);

    auto f0s = exact_mul(f0, s);
    rel.f_from_f0_s = f0s && f == f0s->dagger();

    auto f2 = exact_mul(f, f);
    if (f2) {
        auto f4 = exact_mul(*f2, *f2);
        rel.f_fourth_identity = f4 && *f4 == PhaseMatrix::identity(d);
    }

    auto f02 = exact_mul(f0, f0);
    if (f02) {
        auto f04 = exact_mul(*f02, *f02);
        rel.f0_fourth_q = f04 && *f04 == PhaseMatrix::identity(d).scalar_mul(Phase(d, 1));
    }

    // f X f^dagger = Z (the Fourier operator diagonalizes the shift).
    PhaseMatrix x(d, 1);
    for (int k = 0; k < d; ++k) x.set(((k - 1) % d + d) % d, k, 0);
    PhaseMatrix z(d, d);
    for (int k = 0; k < d; ++k) z.set(k, k, k);
    auto fx = exact_mul(f, x);
    if (fx) {
        auto fxf = exact_mul(*fx, f.dagger());
        rel.f_conjugates_x_to_z = fxf && *fxf == z;
    }
    return rel;
}

PhaseMatrix reduce_v0a(int d, int a) {
    QDFTSpec spec(d, a);
    PhaseMatrix f = fourier_matrix(spec);
    PhaseMatrix v = su2_polar::v_ra_matrix(su2_polar::AngularParams(d, Rational(0), a));
    auto vf = exact_mul(v, f);
    if (!vf) throw std::logic_error("reduce_v0a: shift-times-Fourier product did not stay exact");
    auto red = exact_mul(f.dagger(), *vf);
    if (!red) throw std::logic_error("reduce_v0a: Fourier conjugation did not collapse");
    return *red;
}

PhaseMatrix reduce_v0a_expected(int d, int a) {
    // q^{(d-1)a/2} diag(1, q^{-1}, ..., q^{-(d-1)}) over the uniform order 2d.
    PhaseMatrix m(d, 2LL * d);
    for (int alpha = 0; alpha < d; ++alpha) m.set(alpha, alpha, static_cast<long long>(d - 1) * a - 2LL * alpha);
    return m;
}

}  // namespace mubforge::qfourier

#include "mubforge/mub.hpp"

#include <cmath>

#include "mubforge/qfourier.hpp"

namespace mubforge::mub {

const char* verdict_name(MubVerdict v) {
    switch (v) {
        case MubVerdict::Unbiased: return "unbiased";
        case MubVerdict::OrthonormalSame: return "orthonormal-same";
        default: return "neither";
    }
}

bool is_prime(int n) {
    if (n < 2) return false;
    for (int k = 2; static_cast<long long>(k) * k <= n; ++k)
        if (n % k == 0) return false;
    return true;
}

Basis basis(int d, int a) {
    a = static_cast<int>(mod_reduce(a, d));
    Basis b;
    b.dim = d;
    b.label = "B" + std::to_string(a);
    b.exact = qfourier::fourier_matrix({d, a});
    b.vectors = b.exact->eval();
    return b;
}

Basis computational_basis(int d) {
    Basis b;
    b.dim = d;
    b.label = "computational";
    b.exact = PhaseMatrix::identity(d);
    b.vectors = b.exact->eval();
    return b;
}

MubPairReport unbiased(const Basis& b1, const Basis& b2, double tol) {
    if (b1.dim != b2.dim) throw std::invalid_argument("unbiased: dimension mismatch");
    int d = b1.dim;
    MubPairReport rep;
    rep.label1 = b1.label;
    rep.label2 = b2.label;
    rep.tol = tol;

    CMatrix gram = b1.vectors.dagger().mul(b2.vectors);
    double target = 1.0 / std::sqrt(static_cast<double>(d));
    double mx = 0.0, mn = 2.0;
    bool all_unbiased = true;
    bool permutation_like = true;  // exactly one unit entry per row/column
    for (int i = 0; i < d; ++i) {
        int units = 0;
        for (int j = 0; j < d; ++j) {
            double m = std::abs(gram.at(i, j));
            mx = std::max(mx, m);
            mn = std::min(mn, m);
            if (std::abs(m - target) > tol) all_unbiased = false;
            if (m > 1.0 - tol) ++units;
            else if (m > tol) permutation_like = false;
        }
        if (units != 1) permutation_like = false;
    }
    rep.max_modulus = mx;
    rep.min_modulus = mn;
    if (permutation_like) rep.verdict = MubVerdict::OrthonormalSame;
    else if (all_unbiased) rep.verdict = MubVerdict::Unbiased;
    else rep.verdict = MubVerdict::Neither;
    return rep;
}

std::vector<Basis> complete_set_prime(int p) {
    if (!is_prime(p))
        throw std::domain_error("complete_set_prime: " + std::to_string(p) +
                                " is not prime, the single-formula family is not a complete MUB set");
    std::vector<Basis> out;
    out.reserve(p + 1);
    for (int a = 0; a < p; ++a) out.push_back(basis(p, a));
    out.push_back(computational_basis(p));
    return out;
}

std::vector<Basis> mub_d4() {
    // Exponent tables over order 4 (i = q^1); columns are the vectors, global
    // scale 1/2. Ordering of components: aa, ab, ba, bb.
    auto make = [](const char* label, const int (&cols)[4][4]) {
        Basis b;
        b.dim = 4;
        b.label = label;
        PhaseMatrix m(4, 4, 4);
        for (int j = 0; j < 4; ++j)
            for (int i = 0; i < 4; ++i) m.set(i, j, cols[j][i]);
        b.exact = m;
        b.vectors = m.eval();
        return b;
    };
    static const int w00[4][4] = {{0, 0, 0, 0}, {0, 2, 0, 2}, {0, 0, 2, 2}, {0, 2, 2, 0}};
    static const int w11[4][4] = {{0, 1, 1, 2}, {0, 3, 1, 0}, {0, 1, 3, 0}, {0, 3, 3, 2}};
    static const int w01[4][4] = {{0, 0, 3, 1}, {0, 2, 1, 1}, {0, 2, 3, 3}, {0, 0, 1, 3}};
    static const int w10[4][4] = {{0, 3, 0, 1}, {0, 1, 2, 1}, {0, 1, 0, 3}, {0, 3, 2, 3}};

    std::vector<Basis> out;
    out.push_back(computational_basis(4));
    out.push_back(make("w00", w00));
    out.push_back(make("w11", w11));
    out.push_back(make("w01", w01));
    out.push_back(make("w10", w10));
    return out;
}

EntanglementReport entanglement_det(const CVector& v, int d, double tol) {
    if (static_cast<int>(v.size()) != d * d)
        throw std::invalid_argument("entanglement_det: vector length must be d^2");
    CMatrix a(d);
    for (int k = 0; k < d; ++k)
        for (int l = 0; l < d; ++l) a.at(k, l) = v[static_cast<size_t>(k) * d + l];
    EntanglementReport rep;
    rep.abs_det = std::abs(a.determinant());
    rep.bound = 1.0 / std::sqrt(std::pow(static_cast<double>(d), d));
    if (rep.abs_det <= tol) rep.classification = "product";
    else if (rep.abs_det >= rep.bound - tol) rep.classification = "maximal";
    else rep.classification = "partial";
    return rep;
}

}  // namespace mubforge::mub

#include "mubforge/checks.hpp"

#include <chrono>
#include <cmath>
#include <functional>
#include <random>
#include <set>
#include <sstream>

#include "mubforge/gauss.hpp"
#include "mubforge/qfourier.hpp"
#include "mubforge/su2_polar.hpp"
#include "mubforge/weyl_pauli.hpp"

namespace mubforge::checks {

namespace {

using Clock = std::chrono::steady_clock;

struct Harness {
    CheckReport report;
    double tol;
    kernels::Exec exec;

    void run(const std::string& name, const std::function<bool(std::string&)>& fn) {
        CheckResult r;
        r.name = name;
        auto t0 = Clock::now();
        try {
            r.pass = fn(r.detail);
        } catch (const std::exception& e) {
            r.pass = false;
            r.detail = std::string("exception: ") + e.what();
        }
        r.millis = std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
        report.results.push_back(std::move(r));
    }
};

std::string fmt(double v) {
    std::ostringstream os;
    os.precision(3);
    os << std::scientific << v;
    return os.str();
}

CVector random_vector(int d, std::mt19937& rng) {
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    CVector x(d);
    for (auto& v : x) v = cdouble(u(rng), u(rng));
    return x;
}

const std::vector<Rational> kRGrid = {Rational(0), Rational(1, 2), Rational(1)};

}  // namespace

bool CheckReport::all_pass() const {
    for (const auto& r : results)
        if (!r.pass) return false;
    return true;
}

int CheckReport::failures() const {
    int n = 0;
    for (const auto& r : results)
        if (!r.pass) ++n;
    return n;
}

CheckReport run_all(Scale scale, double tol, bool inject_fault, kernels::Exec exec) {
    Harness h;
    h.tol = tol;
    h.exec = exec;
    const bool full = scale == Scale::Full;

    const int d_max = full ? 12 : 6;
    const int d_max_fourier = full ? 16 : 6;
    const int p_max_mub = full ? 31 : 7;

    // ---------------------------------------------------------------- phase_core
    h.run("phase_core/eval-homomorphism", [&](std::string& detail) {
        double worst = 0.0;
        for (int d = 2; d <= 12; ++d)
            for (long long e1 = 0; e1 < 2 * d; ++e1)
                for (long long e2 = 0; e2 < 2 * d; ++e2) {
                    Phase p1(2 * d, e1), p2(d, e2 % d);
                    cdouble lhs = p1.times(p2).eval();
                    if (inject_fault && d == 5 && e1 == 3 && e2 == 2) lhs *= std::polar(1.0, 1e-3);
                    worst = std::max(worst, std::abs(lhs - p1.eval() * p2.eval()));
                    worst = std::max(worst, std::abs(std::abs(p1.eval()) - 1.0));
                }
        detail = "max dev " + fmt(worst);
        return worst < 1e-12;
    });

    h.run("phase_core/exact-float-agreement", [&](std::string& detail) {
        double worst = 0.0;
        for (int d = 2; d <= d_max_fourier; ++d)
            for (int a = 0; a < d; ++a) {
                PhaseMatrix f = qfourier::fourier_matrix({d, a});
                // direct complex construction of the same entries
                CMatrix direct(d);
                for (int k = 0; k < d; ++k)
                    for (int al = 0; al < d; ++al) {
                        double ang = M_PI * (static_cast<double>((k + 1) * (d - k - 1) * a) -
                                             2.0 * (k + 1) * al) / d;
                        direct.at(k, al) = std::polar(1.0 / std::sqrt(static_cast<double>(d)), ang);
                    }
                worst = std::max(worst, f.eval().max_abs_diff(direct));
                // exact product path vs float product path
                PhaseMatrix v = su2_polar::v_ra_matrix({d, Rational(0), a});
                auto prod = exact_mul(v, f);
                if (!prod) return false;
                worst = std::max(worst, prod->eval().max_abs_diff(v.eval().mul(f.eval())));
            }
        detail = "max |exact - float| " + fmt(worst);
        return worst < 1e-10;
    });

    h.run("phase_core/dagger-antihomomorphism", [&](std::string& detail) {
        for (int d = 2; d <= (full ? 9 : 5); ++d)
            for (int a = 0; a < d; ++a)
                for (int b = 0; b < d; ++b) {
                    PhaseMatrix u1 = weyl_pauli::pauli_u(d, {a, b});
                    PhaseMatrix u2 = weyl_pauli::pauli_u(d, {(a + 1) % d, (b + 2) % d});
                    auto prod = exact_mul(u1, u2);
                    auto rev = exact_mul(u2.dagger(), u1.dagger());
                    if (!prod || !rev || !(prod->dagger() == *rev)) {
                        detail = "failed at d=" + std::to_string(d);
                        return false;
                    }
                }
        return true;
    });

    // ---------------------------------------------------------------- su2_polar
    h.run("su2_polar/vra-unitary", [&](std::string& detail) {
        for (int d = 1; d <= d_max; ++d)
            for (const auto& r : kRGrid)
                for (int a = 0; a < d; ++a) {
                    PhaseMatrix v = su2_polar::v_ra_matrix({d, r, a});
                    if (v.dim() != d || !is_unitary(v, tol)) {
                        detail = "d=" + std::to_string(d) + " a=" + std::to_string(a);
                        return false;
                    }
                }
        return true;
    });

    h.run("su2_polar/eigenbasis-orthonormal", [&](std::string& detail) {
        for (int d = 1; d <= d_max; ++d)
            for (const auto& r : kRGrid)
                for (int a = 0; a < d; ++a) {
                    auto sys = su2_polar::eigenbasis_vra({d, r, a});
                    auto gram = exact_mul(sys.vectors.dagger(), sys.vectors);
                    if (!gram || !(*gram == PhaseMatrix::identity(d))) {
                        detail = "Gram != I at d=" + std::to_string(d);
                        return false;
                    }
                }
        return true;
    });

    h.run("su2_polar/eigen-equation-exact", [&](std::string& detail) {
        for (int d = 1; d <= (full ? 9 : 6); ++d)
            for (const auto& r : kRGrid)
                for (int a = 0; a < d; ++a) {
                    auto sys = su2_polar::eigenbasis_vra({d, r, a});
                    auto v = su2_polar::v_ra_matrix({d, r, a});
                    auto lhs = exact_mul(v, sys.vectors);
                    // nondegeneracy
                    std::set<std::pair<long long, long long>> vals;
                    for (const auto& ev : sys.eigenvalues) {
                        Phase red = ev.reduced();
                        vals.insert({red.order(), red.exponent()});
                    }
                    if (!lhs || !(*lhs == sys.vectors.column_scaled(sys.eigenvalues)) ||
                        vals.size() != static_cast<size_t>(d)) {
                        detail = "d=" + std::to_string(d) + " a=" + std::to_string(a);
                        return false;
                    }
                }
        return true;
    });

    h.run("su2_polar/rotation-stability", [&](std::string& detail) {
        for (int d = 1; d <= d_max; ++d)
            for (int p = 0; p < d; ++p)
                for (const auto& r : {Rational(0), Rational(1, 2)})
                    for (int a = 0; a < d; ++a)
                        if (!su2_polar::pseudoinvariance_check(d, p, r, a)) {
                            detail = "d=" + std::to_string(d) + " p=" + std::to_string(p);
                            return false;
                        }
        return true;
    });

    h.run("su2_polar/ladder-commutators", [&](std::string& detail) {
        double worst = 0.0;
        for (int d = 1; d <= (full ? 10 : 6); ++d)
            for (const auto& r : kRGrid)
                for (int a = 0; a < d; ++a) {
                    auto g = su2_polar::su2_generators({d, r, a});
                    CMatrix c1 = g.j_z.mul(g.j_plus).sub(g.j_plus.mul(g.j_z)).sub(g.j_plus);
                    CMatrix c2 = g.j_z.mul(g.j_minus).sub(g.j_minus.mul(g.j_z)).add(g.j_minus);
                    CMatrix c3 = g.j_plus.mul(g.j_minus).sub(g.j_minus.mul(g.j_plus)).sub(g.j_z.scaled(2.0));
                    worst = std::max({worst, c1.max_abs(), c2.max_abs(), c3.max_abs()});
                }
        detail = "max dev " + fmt(worst);
        return worst <= tol;
    });

    h.run("su2_polar/h-matrix", [&](std::string& detail) {
        // diag sqrt((j+m)(j-m+1)); spot values d=2 -> (1,0), d=3 -> (sqrt2, sqrt2, 0)
        CMatrix h2 = su2_polar::h_matrix(2), h3 = su2_polar::h_matrix(3);
        double worst = std::abs(h2.at(0, 0) - 1.0) + std::abs(h2.at(1, 1));
        worst += std::abs(h3.at(0, 0) - std::sqrt(2.0)) + std::abs(h3.at(1, 1) - std::sqrt(2.0)) +
                 std::abs(h3.at(2, 2));
        for (int d = 1; d <= 12; ++d) {
            CMatrix hm = su2_polar::h_matrix(d);
            worst = std::max(worst, hm.max_abs_diff(hm.dagger()));  // Hermitian (real diagonal)
        }
        detail = "max dev " + fmt(worst);
        return worst < 1e-12;
    });

    h.run("su2_polar/quon-restriction", [&](std::string& detail) {
        double worst = 0.0;
        for (int k = 2; k <= 6; ++k)
            for (const auto& r : {Rational(0), Rational(1)})
                for (int a = 0; a < k; ++a) {
                    CMatrix restr = su2_polar::quon_restrict(k, r, a);
                    CMatrix direct = su2_polar::v_ra_matrix({k, r, a}).eval();
                    worst = std::max(worst, restr.max_abs_diff(direct));
                }
        detail = "max |restriction - direct| " + fmt(worst);
        return worst <= 1e-10;
    });

    h.run("su2_polar/quon-algebra", [&](std::string& detail) {
        double worst = 0.0;
        for (int k = 2; k <= 6; ++k) {
            auto rep = su2_polar::quon_rep(k);
            CMatrix xp_k = CMatrix::identity(k), xm_k = CMatrix::identity(k);
            for (int t = 0; t < k; ++t) {
                xp_k = rep.x_plus.mul(xp_k);
                xm_k = rep.x_minus.mul(xm_k);
            }
            worst = std::max({worst, xp_k.max_abs(), xm_k.max_abs()});  // (a_pm)^k = 0
            cdouble q = Phase(k, 1).eval();
            CMatrix comm = rep.x_minus.mul(rep.x_plus).sub(rep.x_plus.mul(rep.x_minus).scaled(q));
            worst = std::max(worst, comm.max_abs_diff(CMatrix::identity(k)));
            CMatrix commy = rep.y_minus.mul(rep.y_plus).sub(rep.y_plus.mul(rep.y_minus).scaled(q));
            worst = std::max(worst, commy.max_abs_diff(CMatrix::identity(k)));
            // action of h and v on |n1, n2)
            auto sys = su2_polar::quon_build(k, Rational(1), 1 % k);
            for (int n1 = 0; n1 < k; ++n1)
                for (int n2 = 0; n2 < k; ++n2) {
                    int idx = n1 * k + n2;
                    worst = std::max(worst, std::abs(sys.h.at(idx, idx) -
                                                     std::sqrt(static_cast<double>(n1) * (n2 + 1))));
                }
        }
        detail = "max dev " + fmt(worst);
        return worst <= 1e-10;
    });

    // ---------------------------------------------------------------- qfourier
    h.run("qfourier/hadamard-sweep", [&](std::string& detail) {
        for (int d = 2; d <= d_max_fourier; ++d)
            for (int a = 0; a < d; ++a)
                if (!is_hadamard(qfourier::fourier_matrix({d, a}), tol)) {
                    detail = "d=" + std::to_string(d) + " a=" + std::to_string(a);
                    return false;
                }
        return true;
    });

    h.run("qfourier/columns-are-eigenvectors", [&](std::string& detail) {
        for (int d = 2; d <= d_max_fourier; ++d)
            for (int a = 0; a < d; ++a) {
                auto sys = su2_polar::eigenbasis_vra({d, Rational(0), a});
                if (!(sys.vectors == qfourier::fourier_matrix({d, a}))) {
                    detail = "column mismatch at d=" + std::to_string(d) + " a=" + std::to_string(a);
                    return false;
                }
            }
        return true;
    });

    h.run("qfourier/qdft-inverse-isometry", [&](std::string& detail) {
        std::mt19937 rng(12345);
        double worst = 0.0;
        for (int d = 2; d <= d_max_fourier; ++d)
            for (int a = 0; a < d; ++a) {
                qfourier::QDFTSpec spec(d, a);
                CVector x = random_vector(d, rng);
                CVector y = qfourier::qdft(x, spec);
                CVector back = qfourier::iqdft(y, spec);
                worst = std::max(worst, std::abs(norm2(y) - norm2(x)));
                for (int k = 0; k < d; ++k) worst = std::max(worst, std::abs(back[k] - x[k]));
            }
        detail = "max dev " + fmt(worst);
        return worst <= tol;
    });

    h.run("qfourier/parseval", [&](std::string& detail) {
        std::mt19937 rng(777);
        double worst = 0.0;
        for (int d : {2, 3, 5, 7, 12}) {
            CVector x = random_vector(d, rng), xp = random_vector(d, rng);
            cdouble ref = inner_product(x, xp);
            for (int a = 0; a < d; ++a) {
                auto [lhs, rhs] = qfourier::parseval_check(x, xp, {d, a});
                worst = std::max(worst, std::abs(lhs - rhs));
                worst = std::max(worst, std::abs(lhs - ref));  // a-independence
            }
        }
        detail = "max dev " + fmt(worst);
        return worst <= tol;
    });

    h.run("qfourier/f4-relations", [&](std::string& detail) {
        for (int d = 2; d <= (full ? 16 : 8); ++d) {
            auto rel = qfourier::fourier_relations(d);
            if (!rel.all()) {
                detail = "d=" + std::to_string(d);
                return false;
            }
        }
        return true;
    });

    h.run("qfourier/reduce-v0a", [&](std::string& detail) {
        for (int d = 2; d <= d_max; ++d)
            for (int a = 0; a < d; ++a) {
                PhaseMatrix red = qfourier::reduce_v0a(d, a);
                if (!red.is_diagonal() || !(red == qfourier::reduce_v0a_expected(d, a))) {
                    detail = "d=" + std::to_string(d) + " a=" + std::to_string(a);
                    return false;
                }
                // diagonal entries are exactly the eigenvalues of the eigenbasis
                auto sys = su2_polar::eigenbasis_vra({d, Rational(0), a});
                for (int al = 0; al < d; ++al)
                    if (!(*red.at(al, al) == sys.eigenvalues[al])) {
                        detail = "eigenvalue mismatch d=" + std::to_string(d);
                        return false;
                    }
            }
        return true;
    });

    // ---------------------------------------------------------------- gauss
    h.run("gauss/triple-agreement", [&](std::string& detail) {
        auto res = kernels::gauss_triple_sweep(full ? 12 : 6, full ? 25 : 11, exec);
        detail = std::to_string(res.cases) + " cases, closed dev " + fmt(res.max_closed_dev) +
                 ", recip dev " + fmt(res.max_recip_dev);
        return res.max_closed_dev <= 1e-9 && res.max_recip_dev <= 1e-9;
    });

    h.run("gauss/overlap-routes", [&](std::string& detail) {
        double worst = 0.0;
        for (int d = 2; d <= d_max; ++d)
            for (int a = 0; a < d; ++a)
                for (int b = 0; b < d; ++b)
                    for (int al = 0; al < d; ++al)
                        for (int be = 0; be < d; ++be) {
                            auto ov = gauss::overlap(d, a, al, b, be);
                            worst = std::max(worst, ov.max_route_diff);
                            if (a == b) {
                                double expect = al == be ? 1.0 : 0.0;
                                worst = std::max(worst, std::abs(std::abs(ov.direct) - expect));
                            }
                        }
        detail = "max route dev " + fmt(worst);
        return worst <= tol;
    });

    h.run("gauss/result7-neighbour-unbiased", [&](std::string& detail) {
        double worst = 0.0, worst_val = 0.0;
        for (int d = 2; d <= d_max_fourier; ++d)
            for (int a = 0; a < d; ++a)
                for (int al = 0; al < d; ++al)
                    for (int be = 0; be < d; ++be) {
                        int b = static_cast<int>(mod_reduce(a - 1, d));
                        cdouble ov = gauss::overlap(d, a, al, b, be).direct;
                        worst = std::max(worst, std::abs(std::abs(ov) - 1.0 / std::sqrt(static_cast<double>(d))));
                        if (a >= 1)
                            worst_val = std::max(worst_val, std::abs(ov - gauss::overlap_shift1_closed(d, al, be)));
                    }
        detail = "modulus dev " + fmt(worst) + ", closed-value dev " + fmt(worst_val);
        return worst <= tol && worst_val <= tol;
    });

    h.run("gauss/result8-distance-two", [&](std::string& detail) {
        double worst = 0.0;
        bool flags_even = true;
        for (int d = 3; d <= d_max; ++d) {
            for (int a = 0; a < d; ++a) {
                if (a < 2 && d % 2 == 0 && d % 4 != 0) continue;  // wrap pairs shift the cosine for d = 2 mod 4
                int b = static_cast<int>(mod_reduce(a - 2, d));
                for (int al = 0; al < d; ++al)
                    for (int be = 0; be < d; ++be) {
                        cdouble ov = gauss::overlap(d, a, al, b, be).direct;
                        worst = std::max(worst, std::abs(std::abs(ov) - gauss::overlap_shift2_modulus(d, al, be)));
                        if (a >= 2)
                            worst = std::max(worst, std::abs(ov - gauss::overlap_shift2_closed(d, al, be)));
                    }
            }
            if (d % 2 == 0 && d >= 4) {
                // the pair cannot be unbiased: some modulus deviates from 1/sqrt(d)
                double dev = 0.0;
                for (int al = 0; al < d; ++al)
                    for (int be = 0; be < d; ++be)
                        dev = std::max(dev, std::abs(std::abs(gauss::overlap(d, 2, al, 0, be).direct) -
                                                     1.0 / std::sqrt(static_cast<double>(d))));
                if (dev <= tol) flags_even = false;
            }
        }
        detail = "formula dev " + fmt(worst);
        return worst <= tol && flags_even;
    });

    // ---------------------------------------------------------------- mub
    h.run("mub/prime-complete-sets", [&](std::string& detail) {
        double worst = 0.0;
        int sets = 0;
        for (int p = 2; p <= p_max_mub; ++p) {
            if (!mub::is_prime(p)) continue;
            auto bases = mub::complete_set_prime(p);
            auto scan = kernels::mub_pair_scan(bases, exec);
            worst = std::max({worst, scan.max_cross_dev, scan.max_gram_dev});
            ++sets;
        }
        detail = std::to_string(sets) + " primes, max dev " + fmt(worst);
        return worst <= tol;
    });

    h.run("mub/result7-triples", [&](std::string& detail) {
        for (int d = 2; d <= d_max_fourier; ++d)
            for (int a = 0; a < d; ++a) {
                auto b1 = mub::basis(d, static_cast<int>(mod_reduce(a - 1, d)));
                auto b2 = mub::basis(d, a);
                auto bc = mub::computational_basis(d);
                if (mub::unbiased(b1, b2, tol).verdict != mub::MubVerdict::Unbiased ||
                    mub::unbiased(b1, bc, tol).verdict != mub::MubVerdict::Unbiased ||
                    mub::unbiased(b2, bc, tol).verdict != mub::MubVerdict::Unbiased) {
                    detail = "d=" + std::to_string(d) + " a=" + std::to_string(a);
                    return false;
                }
            }
        return true;
    });

    h.run("mub/even-d-distance-two-neither", [&](std::string& detail) {
        for (int d : {4, 6, 8, 10}) {
            if (!full && d > 6) continue;
            auto rep = mub::unbiased(mub::basis(d, 2), mub::basis(d, 0), tol);
            if (rep.verdict != mub::MubVerdict::Neither) {
                detail = "d=" + std::to_string(d) + " verdict " + mub::verdict_name(rep.verdict);
                return false;
            }
        }
        return true;
    });

    h.run("mub/d4-five-bases", [&](std::string& detail) {
        auto bases = mub::mub_d4();
        auto scan = kernels::mub_pair_scan(bases, exec);
        if (!scan.all_unbiased(tol)) {
            detail = "cross dev " + fmt(scan.max_cross_dev);
            return false;
        }
        for (const auto& b : bases) {
            if (b.label == "computational") continue;
            for (int alpha = 0; alpha < 4; ++alpha) {
                auto rep = mub::entanglement_det(b.vector(alpha), 2);
                bool product_family = b.label == "w00" || b.label == "w11";
                if (product_family && rep.classification != "product") return false;
                if (!product_family &&
                    (rep.classification != "maximal" || std::abs(rep.abs_det - 0.5) > 1e-9))
                    return false;
            }
        }
        return true;
    });

    h.run("mub/albouy-bound", [&](std::string& detail) {
        std::mt19937 rng(4242);
        double worst_excess = -1.0;
        for (int d : {2, 3})
            for (int t = 0; t < 500; ++t) {
                CVector v = random_vector(d * d, rng);
                double n = norm2(v);
                for (auto& c : v) c /= n;
                auto rep = mub::entanglement_det(v, d);
                worst_excess = std::max(worst_excess, rep.abs_det - rep.bound);
            }
        detail = "max |det| - bound = " + fmt(worst_excess);
        return worst_excess <= 1e-9;
    });

    // ---------------------------------------------------------------- weyl_pauli
    h.run("weyl_pauli/product-symbolic-vs-matrix", [&](std::string& detail) {
        for (int d = 2; d <= d_max; ++d)
            for (int a = 0; a < d; ++a)
                for (int b = 0; b < d; ++b)
                    for (int e = 0; e < d; ++e)
                        for (int f = 0; f < d; ++f) {
                            auto pr = weyl_pauli::pauli_product(d, {a, b}, {e, f});
                            auto lhs = exact_mul(weyl_pauli::pauli_u(d, {a, b}), weyl_pauli::pauli_u(d, {e, f}));
                            PhaseMatrix rhs = weyl_pauli::pauli_u(d, pr.idx).scalar_mul(Phase(d, pr.phase_exp));
                            if (!lhs || !(*lhs == rhs)) {
                                detail = "d=" + std::to_string(d);
                                return false;
                            }
                        }
        return true;
    });

    h.run("weyl_pauli/weyl-relations", [&](std::string& detail) {
        for (int d = 2; d <= d_max_fourier; ++d) {
            auto [x, z] = weyl_pauli::weyl_pair(d);
            PhaseMatrix xp = PhaseMatrix::identity(d), zp = PhaseMatrix::identity(d);
            for (int t = 0; t < d; ++t) {
                xp = *exact_mul(xp, x);
                zp = *exact_mul(zp, z);
            }
            auto xz = exact_mul(x, z);
            auto zx = exact_mul(z, x);
            if (!(xp == PhaseMatrix::identity(d)) || !(zp == PhaseMatrix::identity(d)) || !xz || !zx ||
                !(*xz == zx->scalar_mul(Phase(d, 1)))) {
                detail = "d=" + std::to_string(d);
                return false;
            }
        }
        return true;
    });

    h.run("weyl_pauli/pseudo-weyl", [&](std::string& detail) {
        for (int d = 2; d <= d_max; ++d)
            for (int a = 0; a < d; ++a) {
                PhaseMatrix v = su2_polar::v_ra_matrix({d, Rational(0), a});
                PhaseMatrix pw = PhaseMatrix::identity(d);
                for (int t = 0; t < d; ++t) pw = *exact_mul(pw, v);
                // e^{-i pi (d-1) a} (v_0a)^d = I
                Phase sign = Phase::from_turns(Rational(-(static_cast<long long>(d) - 1) * a, 2));
                if (!(pw.scalar_mul(sign) == PhaseMatrix::identity(d))) {
                    detail = "d=" + std::to_string(d) + " a=" + std::to_string(a);
                    return false;
                }
                // v_0a z = q z v_0a
                auto [xx, z] = weyl_pauli::weyl_pair(d);
                auto vz = exact_mul(v, z);
                auto zv = exact_mul(z, v);
                if (!vz || !zv || !(*vz == zv->scalar_mul(Phase(d, 1)))) return false;
            }
        return true;
    });

    h.run("weyl_pauli/hs-orthogonality", [&](std::string& detail) {
        for (int d = 2; d <= (full ? 10 : 6); ++d)
            for (int a = 0; a < d; ++a)
                for (int b = 0; b < d; ++b)
                    for (int e = 0; e < d; ++e)
                        for (int f = 0; f < d; ++f) {
                            auto ex = hs_inner_exact(weyl_pauli::pauli_u(d, {a, b}), weyl_pauli::pauli_u(d, {e, f}));
                            bool same = a == e && b == f;
                            if (!ex || (same && !(ex->mult == d && ex->phase.is_one() && ex->sqrt_den == 1)) ||
                                (!same && ex->mult != 0)) {
                                detail = "d=" + std::to_string(d);
                                return false;
                            }
                        }
        return true;
    });

    h.run("weyl_pauli/structure-constants", [&](std::string& detail) {
        double worst = 0.0;
        for (int d = 2; d <= d_max; ++d) {
            auto res = kernels::structure_constant_scan(d, exec);
            if (!res.vanishing_locus_exact) {
                detail = "vanishing locus mismatch at d=" + std::to_string(d);
                return false;
            }
            worst = std::max(worst, res.max_matrix_dev);
        }
        detail = "max matrix dev " + fmt(worst);
        return worst <= tol;
    });

    h.run("weyl_pauli/structure-antisymmetry", [&](std::string& detail) {
        for (int d = 2; d <= (full ? 8 : 5); ++d) {
            auto table = weyl_pauli::structure_constants(d);
            auto find = [&](int a, int b, int e, int f) -> const weyl_pauli::StructureConstant& {
                return table[(static_cast<size_t>(a) * d + b) * d * d + static_cast<size_t>(e) * d + f];
            };
            for (int a = 0; a < d; ++a)
                for (int b = 0; b < d; ++b)
                    for (int e = 0; e < d; ++e)
                        for (int f = 0; f < d; ++f) {
                            const auto& fw = find(a, b, e, f);
                            const auto& bw = find(e, f, a, b);
                            if (std::abs(fw.value + bw.value) > 1e-12 || fw.vanishes_exact != bw.vanishes_exact) {
                                detail = "d=" + std::to_string(d);
                                return false;
                            }
                        }
        }
        return true;
    });

    h.run("weyl_pauli/cartan-decomposition", [&](std::string& detail) {
        for (int p : {2, 3, 5, 7, 11}) {
            if (!full && p > 7) continue;
            auto sets = weyl_pauli::cartan_decomposition(p);
            if (static_cast<int>(sets.size()) != p + 1) return false;
            std::set<std::pair<int, int>> seen;
            for (const auto& s : sets) {
                if (static_cast<int>(s.members.size()) != p - 1) return false;
                for (const auto& m : s.members) {
                    if (m.a == 0 && m.b == 0) return false;
                    if (!seen.insert({m.a, m.b}).second) {
                        detail = "overlap at p=" + std::to_string(p);
                        return false;
                    }
                }
                // internal commutativity, symbolic and by matrices
                for (size_t i = 0; i < s.members.size(); ++i)
                    for (size_t j = i + 1; j < s.members.size(); ++j) {
                        auto br = weyl_pauli::commutator(p, s.members[i], s.members[j]);
                        if (!br.vanishes_exact) return false;
                        CMatrix m1 = weyl_pauli::pauli_u(p, s.members[i]).eval();
                        CMatrix m2 = weyl_pauli::pauli_u(p, s.members[j]).eval();
                        if (m1.mul(m2).max_abs_diff(m2.mul(m1)) > tol) return false;
                    }
            }
            if (seen.size() != static_cast<size_t>(p) * p - 1) {
                detail = "coverage " + std::to_string(seen.size()) + " at p=" + std::to_string(p);
                return false;
            }
            // Hilbert-Schmidt Gram of the full u_ab family is p * I (exact).
            for (int a = 0; a < p; ++a)
                for (int b = 0; b < p; ++b)
                    for (int e = 0; e < p; ++e)
                        for (int f = 0; f < p; ++f) {
                            auto ex = hs_inner_exact(weyl_pauli::pauli_u(p, {a, b}), weyl_pauli::pauli_u(p, {e, f}));
                            bool same = a == e && b == f;
                            if (!ex || (same && ex->mult != p) || (!same && ex->mult != 0)) return false;
                        }
        }
        // Example row: V_3 for p = 7.
        auto sets7 = weyl_pauli::cartan_decomposition(7);
        const std::vector<weyl_pauli::PauliIndex> expected = {{1, 2}, {2, 4}, {3, 6}, {4, 1}, {5, 3}, {6, 5}};
        if (!(sets7[3].members == expected)) {
            detail = "V3 row mismatch";
            return false;
        }
        return true;
    });

    h.run("weyl_pauli/spread-d4", [&](std::string& detail) {
        auto spread = weyl_pauli::spread_d4();
        if (spread.size() != 5) return false;
        std::vector<int> dims{2, 2};
        std::set<std::array<int, 4>> seen;
        std::vector<PhaseMatrix> ops;
        for (const auto& triple : spread)
            for (const auto& t : triple) {
                if (!seen.insert(t).second) return false;
                ops.push_back(weyl_pauli::pauli_tensor(dims, {t[0], t[2]}, {t[1], t[3]}));
            }
        if (seen.size() != 15) return false;
        // pairwise commuting inside each triple (matrix oracle)
        for (const auto& triple : spread)
            for (size_t i = 0; i < 3; ++i)
                for (size_t j = i + 1; j < 3; ++j) {
                    CMatrix m1 = weyl_pauli::pauli_tensor(dims, {triple[i][0], triple[i][2]}, {triple[i][1], triple[i][3]}).eval();
                    CMatrix m2 = weyl_pauli::pauli_tensor(dims, {triple[j][0], triple[j][2]}, {triple[j][1], triple[j][3]}).eval();
                    if (m1.mul(m2).max_abs_diff(m2.mul(m1)) > tol) return false;
                }
        // linear independence: exact HS Gram = 4 I over the 15, all traceless
        for (size_t i = 0; i < ops.size(); ++i) {
            auto tr = ops[i].trace_exact();
            if (!tr || tr->mult != 0) return false;
            for (size_t j = 0; j < ops.size(); ++j) {
                auto ex = hs_inner_exact(ops[i], ops[j]);
                if (!ex || (i == j && ex->mult != 4) || (i != j && ex->mult != 0)) {
                    detail = "Gram failure";
                    return false;
                }
            }
        }
        return true;
    });

    h.run("weyl_pauli/d4-no-partition", [&](std::string& detail) {
        auto res = weyl_pauli::d4_partition_search();
        detail = std::to_string(res.commuting_triples) + " commuting triples, max disjoint " +
                 std::to_string(res.max_disjoint_triples);
        return res.max_disjoint_triples == 3 && !res.partition_exists;
    });

    h.run("weyl_pauli/three-families", [&](std::string& detail) {
        for (int d = 2; d <= d_max; ++d) {
            auto fam = weyl_pauli::three_commuting_families(d);
            auto check_family = [&](const std::vector<weyl_pauli::PauliIndex>& members) {
                for (size_t i = 0; i < members.size(); ++i)
                    for (size_t j = i + 1; j < members.size(); ++j)
                        if (!weyl_pauli::commutator(d, members[i], members[j]).vanishes_exact) return false;
                return true;
            };
            if (!check_family(fam.e_0dot) || !check_family(fam.e_dotdot) || !check_family(fam.e_dot0)) {
                detail = "commutation failure d=" + std::to_string(d);
                return false;
            }
            // common eigenbases: F_0 diagonalizes {x^a}, F_1 diagonalizes {x^a z^a}
            PhaseMatrix f0 = qfourier::fourier_matrix({d, 0});
            PhaseMatrix f1 = qfourier::fourier_matrix({d, 1});
            for (int a = 1; a < d; ++a) {
                auto d0 = exact_mul(f0.dagger(), *exact_mul(weyl_pauli::pauli_u(d, {a, 0}), f0));
                auto d1 = exact_mul(f1.dagger(), *exact_mul(weyl_pauli::pauli_u(d, {a, a}), f1));
                if (!d0 || !d0->is_diagonal() || !d1 || !d1->is_diagonal()) {
                    detail = "diagonalization failure d=" + std::to_string(d);
                    return false;
                }
            }
        }
        return true;
    });

    h.run("weyl_pauli/tensor-algebra", [&](std::string& detail) {
        std::vector<std::vector<int>> dim_sets = {{2, 2}, {2, 3}};
        for (const auto& dims : dim_sets) {
            int total = dims[0] * dims[1];
            std::vector<std::array<int, 4>> idx;
            for (int a1 = 0; a1 < dims[0]; ++a1)
                for (int b1 = 0; b1 < dims[0]; ++b1)
                    for (int a2 = 0; a2 < dims[1]; ++a2)
                        for (int b2 = 0; b2 < dims[1]; ++b2) idx.push_back({a1, b1, a2, b2});
            for (const auto& t1 : idx)
                for (const auto& t2 : idx) {
                    PhaseMatrix u1 = weyl_pauli::pauli_tensor(dims, {t1[0], t1[2]}, {t1[1], t1[3]});
                    PhaseMatrix u2 = weyl_pauli::pauli_tensor(dims, {t2[0], t2[2]}, {t2[1], t2[3]});
                    auto ex = hs_inner_exact(u1, u2);
                    bool same = t1 == t2;
                    if (!ex || (same && ex->mult != total) || (!same && ex->mult != 0)) {
                        detail = "trace failure";
                        return false;
                    }
                    auto br = weyl_pauli::tensor_commutator(dims, {t1[0], t1[2]}, {t1[1], t1[3]},
                                                            {t2[0], t2[2]}, {t2[1], t2[3]});
                    CMatrix lhs = u1.eval().mul(u2.eval()).sub(u2.eval().mul(u1.eval()));
                    CMatrix rhs = weyl_pauli::pauli_tensor(dims, br.a_out, br.b_out).eval().scaled(br.coefficient);
                    if (lhs.max_abs_diff(rhs) > tol) {
                        detail = "commutator failure";
                        return false;
                    }
                }
        }
        return true;
    });

    // ---------------------------------------------------------------- pauli_group
    h.run("pauli_group/axioms", [&](std::string& detail) {
        using pauli_group::GroupElement;
        for (int d = 2; d <= 4; ++d) {
            std::vector<GroupElement> elems;
            for (int a = 0; a < d; ++a)
                for (int b = 0; b < d; ++b)
                    for (int c = 0; c < d; ++c) elems.push_back({a, b, c});
            for (const auto& g : elems) {
                if (!(pauli_group::group_mul(d, g, pauli_group::group_inv(d, g)) == pauli_group::identity_element()) ||
                    !(pauli_group::group_mul(d, pauli_group::identity_element(), g) == g))
                    return false;
            }
            for (const auto& g1 : elems)
                for (const auto& g2 : elems)
                    for (const auto& g3 : elems)
                        if (!(pauli_group::group_mul(d, pauli_group::group_mul(d, g1, g2), g3) ==
                              pauli_group::group_mul(d, g1, pauli_group::group_mul(d, g2, g3)))) {
                            detail = "associativity d=" + std::to_string(d);
                            return false;
                        }
        }
        std::mt19937 rng(99);
        for (int d = 5; d <= (full ? 8 : 6); ++d) {
            std::uniform_int_distribution<int> u(0, d - 1);
            for (int t = 0; t < 2000; ++t) {
                pauli_group::GroupElement g1{u(rng), u(rng), u(rng)}, g2{u(rng), u(rng), u(rng)},
                    g3{u(rng), u(rng), u(rng)};
                if (!(pauli_group::group_mul(d, pauli_group::group_mul(d, g1, g2), g3) ==
                      pauli_group::group_mul(d, g1, pauli_group::group_mul(d, g2, g3))))
                    return false;
                if (!(pauli_group::group_mul(d, g1, pauli_group::group_inv(d, g1)) ==
                      pauli_group::identity_element()))
                    return false;
            }
        }
        return true;
    });

    h.run("pauli_group/product-matches-matrices", [&](std::string& detail) {
        std::mt19937 rng(1234);
        for (int d = 2; d <= (full ? 8 : 5); ++d) {
            std::uniform_int_distribution<int> u(0, d - 1);
            int trials = d <= 4 ? 0 : 600;
            if (d <= 4) {
                for (int a1 = 0; a1 < d; ++a1)
                    for (int b1 = 0; b1 < d; ++b1)
                        for (int c1 = 0; c1 < d; ++c1)
                            for (int a2 = 0; a2 < d; ++a2)
                                for (int b2 = 0; b2 < d; ++b2)
                                    for (int c2 = 0; c2 < d; ++c2) {
                                        pauli_group::GroupElement g1{a1, b1, c1}, g2{a2, b2, c2};
                                        auto m = exact_mul(pauli_group::element_matrix(d, g1),
                                                           pauli_group::element_matrix(d, g2));
                                        if (!m || !(*m == pauli_group::element_matrix(
                                                              d, pauli_group::group_mul(d, g1, g2)))) {
                                            detail = "d=" + std::to_string(d);
                                            return false;
                                        }
                                    }
            }
            for (int t = 0; t < trials; ++t) {
                pauli_group::GroupElement g1{u(rng), u(rng), u(rng)}, g2{u(rng), u(rng), u(rng)};
                auto m = exact_mul(pauli_group::element_matrix(d, g1), pauli_group::element_matrix(d, g2));
                if (!m || !(*m == pauli_group::element_matrix(d, pauli_group::group_mul(d, g1, g2)))) {
                    detail = "d=" + std::to_string(d);
                    return false;
                }
            }
        }
        return true;
    });

    h.run("pauli_group/class-structure", [&](std::string& detail) {
        for (int d = 2; d <= (full ? 8 : 6); ++d) {
            auto table = pauli_group::class_table(d);
            long long total = 0;
            for (const auto& c : table.classes) total += static_cast<long long>(c.size());
            long long dim_sq = 0;
            for (int v : table.irrep_dims) dim_sq += static_cast<long long>(v) * v;
            if (total != static_cast<long long>(d) * d * d || dim_sq != total ||
                table.irrep_dims.size() != table.classes.size()) {
                detail = "bookkeeping d=" + std::to_string(d);
                return false;
            }
            if (table.singleton_count() != d) {
                detail = "center size d=" + std::to_string(d);
                return false;
            }
            if (mub::is_prime(d)) {
                if (static_cast<int>(table.classes.size()) != d * (d + 1) - 1 || !table.sizes_match_expected()) {
                    detail = "prime profile d=" + std::to_string(d);
                    return false;
                }
            } else {
                // enumerated count must match sum_{(b,c)} gcd(b, c, d)
                long long expect = 0;
                for (int b = 0; b < d; ++b)
                    for (int c = 0; c < d; ++c) expect += std::gcd(std::gcd(b, c), d);
                if (static_cast<long long>(table.classes.size()) != expect) {
                    detail = "composite count d=" + std::to_string(d);
                    return false;
                }
            }
        }
        return true;
    });

    h.run("pauli_group/center-and-nilpotency", [&](std::string& detail) {
        using pauli_group::GroupElement;
        for (int d = 2; d <= 6; ++d) {
            std::vector<GroupElement> elems;
            for (int a = 0; a < d; ++a)
                for (int b = 0; b < d; ++b)
                    for (int c = 0; c < d; ++c) elems.push_back({a, b, c});
            int central = 0;
            std::set<GroupElement> commutators;
            for (const auto& g : elems) {
                bool is_central = true;
                for (const auto& x : elems) {
                    if (!(pauli_group::group_mul(d, g, x) == pauli_group::group_mul(d, x, g))) is_central = false;
                    GroupElement c = pauli_group::group_mul(
                        d, pauli_group::group_mul(d, g, x),
                        pauli_group::group_mul(d, pauli_group::group_inv(d, g), pauli_group::group_inv(d, x)));
                    commutators.insert(c);
                }
                if (is_central) {
                    ++central;
                    if (!(g.b == 0 && g.c == 0)) {
                        detail = "non-phase central element d=" + std::to_string(d);
                        return false;
                    }
                }
            }
            if (central != d) return false;
            if (commutators.size() < 2) return false;  // nontrivial derived subgroup
            for (const auto& c : commutators)
                if (!(c.b == 0 && c.c == 0)) {
                    detail = "derived subgroup not central, d=" + std::to_string(d);
                    return false;  // central => nilpotency class exactly 2
                }
        }
        return true;
    });

    h.run("pauli_group/rep3-faithful", [&](std::string& detail) {
        using pauli_group::GroupElement;
        for (int d = 2; d <= 5; ++d) {
            std::vector<GroupElement> elems;
            for (int a = 0; a < d; ++a)
                for (int b = 0; b < d; ++b)
                    for (int c = 0; c < d; ++c) elems.push_back({a, b, c});
            std::set<std::array<std::array<int, 3>, 3>> images;
            for (const auto& g : elems) images.insert(pauli_group::rep3(d, g));
            if (images.size() != elems.size()) {
                detail = "not injective d=" + std::to_string(d);
                return false;
            }
            for (const auto& g1 : elems)
                for (const auto& g2 : elems) {
                    auto m1 = pauli_group::rep3(d, g1), m2 = pauli_group::rep3(d, g2);
                    auto expect = pauli_group::rep3(d, pauli_group::group_mul(d, g1, g2));
                    for (int i = 0; i < 3; ++i)
                        for (int j = 0; j < 3; ++j) {
                            long long acc = 0;
                            for (int k = 0; k < 3; ++k) acc += static_cast<long long>(m1[i][k]) * m2[k][j];
                            if (mod_reduce(acc, d) != mod_reduce(expect[i][j], d)) {
                                detail = "homomorphism d=" + std::to_string(d);
                                return false;
                            }
                        }
                }
        }
        return true;
    });

    h.run("pauli_group/pi-bracket", [&](std::string& detail) {
        using pauli_group::GroupElement;
        std::mt19937 rng(55);
        for (int d = 2; d <= 6; ++d) {
            std::uniform_int_distribution<int> u(0, d - 1);
            for (int t = 0; t < (d <= 3 ? d * d * d * 9 : 800); ++t) {
                GroupElement g1{u(rng), u(rng), u(rng)}, g2{u(rng), u(rng), u(rng)};
                auto br = pauli_group::pi_bracket(d, g1, g2);
                auto rb = pauli_group::pi_bracket(d, g2, g1);
                // antisymmetry: [g2,g1] is the swapped formal difference
                if (!(rb.pos == br.neg && rb.neg == br.pos)) return false;
                // matrix realization
                CMatrix m1 = pauli_group::element_matrix(d, g1).eval();
                CMatrix m2 = pauli_group::element_matrix(d, g2).eval();
                CMatrix lhs = m1.mul(m2).sub(m2.mul(m1));
                CMatrix rhs = br.zero ? CMatrix(d)
                                      : pauli_group::element_matrix(d, br.pos).eval().sub(
                                            pauli_group::element_matrix(d, br.neg).eval());
                if (lhs.max_abs_diff(rhs) > tol) {
                    detail = "matrix mismatch d=" + std::to_string(d);
                    return false;
                }
                if (g1 == g2 && !br.zero) return false;
            }
        }
        // Jacobi identity via the matrix realization, d = 3.
        std::uniform_int_distribution<int> u3(0, 2);
        for (int t = 0; t < 200; ++t) {
            CMatrix a = pauli_group::element_matrix(3, {u3(rng), u3(rng), u3(rng)}).eval();
            CMatrix b = pauli_group::element_matrix(3, {u3(rng), u3(rng), u3(rng)}).eval();
            CMatrix c = pauli_group::element_matrix(3, {u3(rng), u3(rng), u3(rng)}).eval();
            auto comm = [](const CMatrix& x, const CMatrix& y) { return x.mul(y).sub(y.mul(x)); };
            CMatrix jac = comm(comm(a, b), c).add(comm(comm(b, c), a)).add(comm(comm(c, a), b));
            if (jac.max_abs() > tol) {
                detail = "Jacobi dev " + fmt(jac.max_abs());
                return false;
            }
        }
        // dimension bookkeeping d^2 * 1 + (d-1) * d^2 = d^3 over the irrep data (prime d)
        for (int d : {2, 3, 5, 7}) {
            if (d > pauli_group::kClassTableMaxD) continue;
            auto table = pauli_group::class_table(d);
            long long ones = 0, dees = 0;
            for (int v : table.irrep_dims) {
                if (v == 1) ++ones;
                else if (v == d) ++dees;
                else return false;
            }
            if (ones != static_cast<long long>(d) * d || dees != d - 1 ||
                ones + dees * static_cast<long long>(d) * d != static_cast<long long>(d) * d * d)
                return false;
        }
        return true;
    });

    h.run("pauli_group/matrix-realization-determinant", [&](std::string& detail) {
        double worst_odd = 0.0, worst_mod = 0.0;
        for (int d = 2; d <= (full ? 8 : 6); ++d)
            for (int a = 0; a < d; ++a)
                for (int b = 0; b < d; ++b)
                    for (int c = 0; c < d; ++c) {
                        cdouble det = pauli_group::element_matrix(d, {a, b, c}).eval().determinant();
                        worst_mod = std::max(worst_mod, std::abs(std::abs(det) - 1.0));
                        if (d % 2 == 1) worst_odd = std::max(worst_odd, std::abs(det - cdouble(1.0, 0.0)));
                    }
        detail = "odd-d det dev " + fmt(worst_odd) + ", |det| dev " + fmt(worst_mod);
        return worst_odd <= 1e-9 && worst_mod <= 1e-9;
    });

    h.run("pauli_group/pi2-diagnostics", [&](std::string& detail) {
        auto rep = pauli_group::pi2_diagnostics();
        std::vector<int> sizes = rep.class_sizes;
        std::sort(sizes.begin(), sizes.end());
        std::vector<int> dims = rep.irrep_dims;
        std::sort(dims.begin(), dims.end());
        bool ok = rep.all() && sizes == std::vector<int>{1, 1, 2, 2, 2} &&
                  dims == std::vector<int>{1, 1, 1, 1, 2};
        if (!ok) detail = "diagnostics failed";
        return ok;
    });

    h.run("pauli_group/pi4-vs-p2", [&](std::string& detail) {
        auto pi4 = pauli_group::pi_d_profile(4);
        auto p2 = pauli_group::two_qubit_pauli_profile();
        detail = "Pi_4 max order " + std::to_string(pi4.max_element_order) + ", P_2 max order " +
                 std::to_string(p2.max_element_order);
        return pi4.order == 64 && p2.order == 64 && pi4.center_size == 4 && p2.center_size == 4 &&
               pi4.order_counts != p2.order_counts && pi4.max_element_order == 8 &&
               p2.max_element_order == 4;
    });

    // ---------------------------------------------------------------- kernels
    h.run("kernels/serial-parallel-agreement", [&](std::string& detail) {
        auto bases = mub::complete_set_prime(full ? 13 : 7);
        if (!(kernels::mub_pair_scan(bases, kernels::Exec::Serial) ==
              kernels::mub_pair_scan(bases, kernels::Exec::Parallel)))
            return false;
        if (!(kernels::gauss_triple_sweep(5, 9, kernels::Exec::Serial) ==
              kernels::gauss_triple_sweep(5, 9, kernels::Exec::Parallel)))
            return false;
        if (!(kernels::structure_constant_scan(full ? 8 : 5, kernels::Exec::Serial) ==
              kernels::structure_constant_scan(full ? 8 : 5, kernels::Exec::Parallel)))
            return false;
        auto ct_s = kernels::class_table(full ? 6 : 4, kernels::Exec::Serial);
        auto ct_p = kernels::class_table(full ? 6 : 4, kernels::Exec::Parallel);
        auto ct_ref = pauli_group::class_table(full ? 6 : 4);
        bool same = ct_s.classes == ct_p.classes && ct_s.classes == ct_ref.classes &&
                    ct_s.irrep_dims == ct_ref.irrep_dims;
        if (!same) detail = "class table divergence";
        return same;
    });

    return std::move(h.report);
}

}  // namespace mubforge::checks

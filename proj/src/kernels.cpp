#include "mubforge/kernels.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>

#include "mubforge/gauss.hpp"
#include "mubforge/weyl_pauli.hpp"

namespace mubforge::kernels {

const char* exec_name(Exec e) { return e == Exec::Serial ? "serial" : "parallel"; }

MubScanResult mub_pair_scan(const std::vector<mub::Basis>& bases, Exec exec) {
    const int n = static_cast<int>(bases.size());
    if (n == 0) return {};
    const int d = bases[0].dim;
    const double target = 1.0 / std::sqrt(static_cast<double>(d));

    std::vector<std::pair<int, int>> pairs;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) pairs.emplace_back(i, j);

    MubScanResult res;
    res.pairs = static_cast<int>(pairs.size());

    double max_cross = 0.0, max_gram = 0.0;
    const auto np = static_cast<long long>(pairs.size());

#pragma omp parallel for reduction(max : max_cross) schedule(dynamic) if (exec == Exec::Parallel)
    for (long long t = 0; t < np; ++t) {
        const auto& [i, j] = pairs[t];
        CMatrix gram = bases[i].vectors.dagger().mul(bases[j].vectors);
        double local = 0.0;
        for (int r = 0; r < d; ++r)
            for (int c = 0; c < d; ++c) local = std::max(local, std::abs(std::abs(gram.at(r, c)) - target));
        max_cross = std::max(max_cross, local);
    }

#pragma omp parallel for reduction(max : max_gram) schedule(dynamic) if (exec == Exec::Parallel)
    for (int i = 0; i < n; ++i) {
        CMatrix gram = bases[i].vectors.dagger().mul(bases[i].vectors);
        max_gram = std::max(max_gram, gram.max_abs_diff(CMatrix::identity(d)));
    }

    res.max_cross_dev = max_cross;
    res.max_gram_dev = max_gram;
    return res;
}

GaussSweepResult gauss_triple_sweep(int u_max, int w_max, Exec exec) {
    std::vector<long long> us;
    for (long long u = -u_max; u <= u_max; ++u)
        if (u != 0) us.push_back(u);

    GaussSweepResult res;
    long long cases = 0, closed_cases = 0;
    double max_closed = 0.0, max_recip = 0.0;
    const auto nu = static_cast<long long>(us.size());

#pragma omp parallel for reduction(max : max_closed, max_recip) reduction(+ : cases, closed_cases) \
    schedule(dynamic) if (exec == Exec::Parallel)
    for (long long t = 0; t < nu; ++t) {
        long long u = us[t];
        for (long long w = -w_max; w <= w_max; ++w) {
            if (w == 0) continue;
            long long aw = w < 0 ? -w : w;
            if (std::gcd(u < 0 ? -u : u, aw) != 1) continue;
            for (long long v = -2 * aw; v <= 2 * aw; ++v) {
                gauss::GaussParams p{u, v, w};
                if (!p.valid()) continue;
                ++cases;
                cdouble brute = gauss::gauss_brute(p);
                max_recip = std::max(max_recip, std::abs(brute - gauss::gauss_reciprocity(p)));
                if (w > 0) {
                    ++closed_cases;
                    max_closed = std::max(max_closed, std::abs(brute - gauss::gauss_closed(p)));
                }
            }
        }
    }
    res.cases = cases;
    res.closed_cases = closed_cases;
    res.max_closed_dev = max_closed;
    res.max_recip_dev = max_recip;
    return res;
}

StructureScanResult structure_constant_scan(int d, Exec exec) {
    StructureScanResult res;
    res.pairs = static_cast<long long>(d) * d * d * d;

    std::vector<CMatrix> mats(static_cast<size_t>(d) * d);
    for (int a = 0; a < d; ++a)
        for (int b = 0; b < d; ++b) mats[static_cast<size_t>(a) * d + b] = weyl_pauli::pauli_u(d, {a, b}).eval();

    double max_dev = 0.0;
    long long locus_bad = 0;
    const long long nn = static_cast<long long>(d) * d;

#pragma omp parallel for reduction(max : max_dev) reduction(+ : locus_bad) schedule(dynamic) \
    if (exec == Exec::Parallel)
    for (long long lhs = 0; lhs < nn; ++lhs) {
        int a = static_cast<int>(lhs) / d, b = static_cast<int>(lhs) % d;
        for (int e = 0; e < d; ++e)
            for (int f = 0; f < d; ++f) {
                auto br = weyl_pauli::commutator(d, {a, b}, {e, f});
                CMatrix lhs_mat = mats[lhs].mul(mats[static_cast<size_t>(e) * d + f])
                                      .sub(mats[static_cast<size_t>(e) * d + f].mul(mats[lhs]));
                CMatrix rhs_mat =
                    mats[static_cast<size_t>(br.idx.a) * d + br.idx.b].scaled(br.coefficient);
                max_dev = std::max(max_dev, lhs_mat.max_abs_diff(rhs_mat));
                bool af_be_zero = mod_reduce(static_cast<long long>(a) * f - static_cast<long long>(b) * e, d) == 0;
                if (af_be_zero != br.vanishes_exact) ++locus_bad;
                if (br.vanishes_exact && lhs_mat.max_abs() > 1e-14) ++locus_bad;
            }
    }
    res.max_matrix_dev = max_dev;
    res.vanishing_locus_exact = locus_bad == 0;
    return res;
}

pauli_group::ClassTable class_table(int d, Exec exec) {
    using pauli_group::GroupElement;
    if (d < 2) throw std::invalid_argument("kernels::class_table: d must be >= 2");
    if (d > pauli_group::kClassTableMaxD)
        throw std::length_error("kernels::class_table: enumeration capped at d <= " +
                                std::to_string(pauli_group::kClassTableMaxD));

    std::vector<GroupElement> elems;
    for (int a = 0; a < d; ++a)
        for (int b = 0; b < d; ++b)
            for (int c = 0; c < d; ++c) elems.push_back({a, b, c});
    const long long n = static_cast<long long>(elems.size());

    // Canonical representative (class minimum) per element, in parallel over
    // the conjugated element; grouping afterwards is deterministic.
    std::vector<GroupElement> rep(elems.size());

#pragma omp parallel for schedule(static) if (exec == Exec::Parallel)
    for (long long t = 0; t < n; ++t) {
        GroupElement h = elems[t];
        GroupElement best = h;
        for (const auto& g : elems) {
            GroupElement c = pauli_group::group_mul(d, pauli_group::group_mul(d, g, h), pauli_group::group_inv(d, g));
            if (c < best) best = c;
        }
        rep[t] = best;
    }

    std::map<GroupElement, std::vector<GroupElement>> buckets;
    for (size_t t = 0; t < elems.size(); ++t) buckets[rep[t]].push_back(elems[t]);

    pauli_group::ClassTable table;
    table.d = d;
    for (auto& [key, members] : buckets) {
        std::sort(members.begin(), members.end());
        table.classes.push_back(std::move(members));
    }
    std::sort(table.classes.begin(), table.classes.end(),
              [](const auto& x, const auto& y) {
                  if (x.size() != y.size()) return x.size() < y.size();
                  return x.front() < y.front();
              });
    for (int m = 0; m < d; ++m) {
        int g = static_cast<int>(std::gcd(m, d));
        for (int t = 0; t < g * g; ++t) table.irrep_dims.push_back(d / g);
    }
    std::sort(table.irrep_dims.begin(), table.irrep_dims.end());
    return table;
}

}  // namespace mubforge::kernels

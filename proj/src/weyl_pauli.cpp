#include "mubforge/weyl_pauli.hpp"

#include <algorithm>

#include "mubforge/mub.hpp"

namespace mubforge::weyl_pauli {

namespace {

int modd(long long v, int d) { return static_cast<int>(mod_reduce(v, d)); }

}  // namespace

std::pair<PhaseMatrix, PhaseMatrix> weyl_pair(int d) {
    if (d < 2) throw std::invalid_argument("weyl_pair: d must be >= 2");
    PhaseMatrix x(d, 1);
    for (int k = 0; k < d; ++k) x.set(modd(k - 1, d), k, 0);
    PhaseMatrix z(d, d);
    for (int k = 0; k < d; ++k) z.set(k, k, k);
    return {x, z};
}

PhaseMatrix pauli_u(int d, PauliIndex idx) {
    int a = modd(idx.a, d), b = modd(idx.b, d);
    // u_ab |k> = q^{kb} |k - a>
    PhaseMatrix m(d, d);
    for (int k = 0; k < d; ++k) m.set(modd(k - a, d), k, static_cast<long long>(k) * b);
    return m;
}

PauliProduct pauli_product(int d, PauliIndex i1, PauliIndex i2) {
    PauliProduct p;
    p.phase_exp = mod_reduce(-static_cast<long long>(i1.b) * i2.a, d);
    p.idx = {modd(i1.a + i2.a, d), modd(i1.b + i2.b, d)};
    return p;
}

namespace {

PauliBracket bracket(int d, PauliIndex i1, PauliIndex i2, bool anti) {
    PauliBracket r;
    r.term1 = Phase(d, -static_cast<long long>(i1.b) * i2.a);
    r.term2 = Phase(d, -static_cast<long long>(i1.a) * i2.b);
    r.coefficient = anti ? r.term1.eval() + r.term2.eval() : r.term1.eval() - r.term2.eval();
    r.idx = {modd(i1.a + i2.a, d), modd(i1.b + i2.b, d)};
    long long delta = mod_reduce(static_cast<long long>(i1.a) * i2.b - static_cast<long long>(i1.b) * i2.a, d);
    if (anti) r.vanishes_exact = (d % 2 == 0) && delta == d / 2;
    else r.vanishes_exact = delta == 0;
    if (r.vanishes_exact) r.coefficient = 0.0;
    return r;
}

}  // namespace

PauliBracket commutator(int d, PauliIndex i1, PauliIndex i2) { return bracket(d, i1, i2, false); }
PauliBracket anticommutator(int d, PauliIndex i1, PauliIndex i2) { return bracket(d, i1, i2, true); }

std::vector<StructureConstant> structure_constants(int d) {
    std::vector<StructureConstant> table;
    table.reserve(static_cast<size_t>(d) * d * d * d);
    for (int a = 0; a < d; ++a)
        for (int b = 0; b < d; ++b)
            for (int e = 0; e < d; ++e)
                for (int f = 0; f < d; ++f) {
                    StructureConstant sc;
                    sc.lhs1 = {a, b};
                    sc.lhs2 = {e, f};
                    PauliBracket br = commutator(d, sc.lhs1, sc.lhs2);
                    sc.result = br.idx;
                    sc.value = br.coefficient;
                    sc.vanishes_exact = br.vanishes_exact;
                    table.push_back(sc);
                }
    return table;
}

std::vector<CartanSet> cartan_decomposition(int p) {
    if (!mub::is_prime(p))
        throw std::domain_error("cartan_decomposition: p must be prime");
    std::vector<CartanSet> sets;
    sets.reserve(p + 1);
    CartanSet v0{"V0", {}};
    for (int a = 1; a < p; ++a) v0.members.push_back({0, a});
    sets.push_back(std::move(v0));
    CartanSet v1{"V1", {}};
    for (int a = 1; a < p; ++a) v1.members.push_back({a, 0});
    sets.push_back(std::move(v1));
    for (int c = 1; c < p; ++c) {
        CartanSet vc{"V" + std::to_string(c + 1), {}};
        for (int a = 1; a < p; ++a) vc.members.push_back({a, modd(static_cast<long long>(c) * a, p)});
        sets.push_back(std::move(vc));
    }
    return sets;
}

PhaseMatrix pauli_tensor(const std::vector<int>& dims, const std::vector<int>& a, const std::vector<int>& b) {
    if (dims.empty() || dims.size() != a.size() || dims.size() != b.size())
        throw std::invalid_argument("pauli_tensor: index lists must match dims");
    PhaseMatrix m = pauli_u(dims[0], {a[0], b[0]});
    for (size_t j = 1; j < dims.size(); ++j) m = tensor(m, pauli_u(dims[j], {a[j], b[j]}));
    return m;
}

namespace {

TensorBracket tensor_bracket(const std::vector<int>& dims, const std::vector<int>& a1, const std::vector<int>& b1,
                             const std::vector<int>& a2, const std::vector<int>& b2, bool anti) {
    if (dims.size() != a1.size() || dims.size() != b1.size() || dims.size() != a2.size() || dims.size() != b2.size())
        throw std::invalid_argument("tensor bracket: index lists must match dims");
    TensorBracket r;
    r.term1 = Phase::one();
    r.term2 = Phase::one();
    for (size_t j = 0; j < dims.size(); ++j) {
        r.term1 = r.term1 * Phase(dims[j], -static_cast<long long>(b1[j]) * a2[j]);
        r.term2 = r.term2 * Phase(dims[j], -static_cast<long long>(a1[j]) * b2[j]);
        r.a_out.push_back(modd(a1[j] + a2[j], dims[j]));
        r.b_out.push_back(modd(b1[j] + b2[j], dims[j]));
    }
    r.vanishes_exact = anti ? (r.term1 == r.term2.times(Phase(2, 1))) : (r.term1 == r.term2);
    r.coefficient = r.vanishes_exact ? cdouble(0.0, 0.0)
                                     : (anti ? r.term1.eval() + r.term2.eval() : r.term1.eval() - r.term2.eval());
    return r;
}

}  // namespace

TensorBracket tensor_commutator(const std::vector<int>& dims, const std::vector<int>& a1, const std::vector<int>& b1,
                                const std::vector<int>& a2, const std::vector<int>& b2) {
    return tensor_bracket(dims, a1, b1, a2, b2, false);
}

TensorBracket tensor_anticommutator(const std::vector<int>& dims, const std::vector<int>& a1, const std::vector<int>& b1,
                                    const std::vector<int>& a2, const std::vector<int>& b2) {
    return tensor_bracket(dims, a1, b1, a2, b2, true);
}

std::vector<std::array<TensorIndex4, 3>> spread_d4() {
    return {
        {TensorIndex4{1, 0, 1, 1}, TensorIndex4{1, 1, 0, 1}, TensorIndex4{0, 1, 1, 0}},
        {TensorIndex4{1, 1, 1, 0}, TensorIndex4{1, 0, 0, 1}, TensorIndex4{0, 1, 1, 1}},
        {TensorIndex4{1, 0, 1, 0}, TensorIndex4{1, 0, 0, 0}, TensorIndex4{0, 0, 1, 0}},
        {TensorIndex4{1, 1, 1, 1}, TensorIndex4{1, 1, 0, 0}, TensorIndex4{0, 0, 1, 1}},
        {TensorIndex4{0, 1, 0, 1}, TensorIndex4{0, 1, 0, 0}, TensorIndex4{0, 0, 0, 1}},
    };
}

D4PartitionSearch d4_partition_search() {
    // The 15 non-identity single-qudit indices for d = 4.
    std::vector<PauliIndex> idx;
    for (int a = 0; a < 4; ++a)
        for (int b = 0; b < 4; ++b)
            if (a || b) idx.push_back({a, b});

    auto commute = [&](const PauliIndex& p, const PauliIndex& q) {
        return mod_reduce(static_cast<long long>(p.a) * q.b - static_cast<long long>(p.b) * q.a, 4) == 0;
    };

    std::vector<std::array<int, 3>> triples;
    for (size_t i = 0; i < idx.size(); ++i)
        for (size_t j = i + 1; j < idx.size(); ++j) {
            if (!commute(idx[i], idx[j])) continue;
            for (size_t k = j + 1; k < idx.size(); ++k)
                if (commute(idx[i], idx[k]) && commute(idx[j], idx[k]))
                    triples.push_back({static_cast<int>(i), static_cast<int>(j), static_cast<int>(k)});
        }

    D4PartitionSearch res;
    res.commuting_triples = static_cast<int>(triples.size());

    // Exhaustive set packing over the commuting triples.
    int best = 0;
    auto search = [&](auto&& self, size_t start, unsigned used, int count) -> void {
        best = std::max(best, count);
        if (count == 5) return;
        for (size_t t = start; t < triples.size(); ++t) {
            unsigned mask = (1u << triples[t][0]) | (1u << triples[t][1]) | (1u << triples[t][2]);
            if (used & mask) continue;
            self(self, t + 1, used | mask, count + 1);
        }
    };
    search(search, 0, 0u, 0);
    res.max_disjoint_triples = best;
    res.partition_exists = best >= 5;
    return res;
}

ThreeFamilies three_commuting_families(int d) {
    if (d < 2) throw std::invalid_argument("three_commuting_families: d must be >= 2");
    ThreeFamilies f;
    for (int a = 1; a < d; ++a) {
        f.e_0dot.push_back({0, a});
        f.e_dotdot.push_back({a, a});
        f.e_dot0.push_back({a, 0});
    }
    f.associated_basis = {"computational", "B1", "B0"};
    return f;
}

}  // namespace mubforge::weyl_pauli

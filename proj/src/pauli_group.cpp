#include "mubforge/pauli_group.hpp"

#include <algorithm>
#include <set>
#include <tuple>

#include "mubforge/weyl_pauli.hpp"

namespace mubforge::pauli_group {

namespace {

int modd(long long v, int d) { return static_cast<int>(mod_reduce(v, d)); }

std::vector<GroupElement> all_elements(int d) {
    std::vector<GroupElement> out;
    out.reserve(static_cast<size_t>(d) * d * d);
    for (int a = 0; a < d; ++a)
        for (int b = 0; b < d; ++b)
            for (int c = 0; c < d; ++c) out.push_back({a, b, c});
    return out;
}

int element_order(int d, GroupElement g) {
    GroupElement acc = g;
    int n = 1;
    while (!(acc == identity_element())) {
        acc = group_mul(d, acc, g);
        ++n;
    }
    return n;
}

}  // namespace

GroupElement group_mul(int d, GroupElement g1, GroupElement g2) {
    return {modd(static_cast<long long>(g1.a) + g2.a - static_cast<long long>(g1.c) * g2.b, d),
            modd(g1.b + g2.b, d), modd(g1.c + g2.c, d)};
}

GroupElement group_inv(int d, GroupElement g) {
    return {modd(-static_cast<long long>(g.a) - static_cast<long long>(g.c) * g.b, d), modd(-g.b, d), modd(-g.c, d)};
}

GroupElement identity_element() { return {0, 0, 0}; }

PhaseMatrix element_matrix(int d, GroupElement g) {
    return weyl_pauli::pauli_u(d, {g.b, g.c}).scalar_mul(Phase(d, g.a));
}

int ClassTable::singleton_count() const {
    int n = 0;
    for (const auto& c : classes)
        if (c.size() == 1) ++n;
    return n;
}

bool ClassTable::sizes_match_expected() const {
    int singles = 0, dsized = 0;
    for (const auto& c : classes) {
        if (c.size() == 1) ++singles;
        else if (static_cast<int>(c.size()) == d) ++dsized;
        else return false;
    }
    return singles == d && dsized == d * d - 1;
}

ClassTable class_table(int d, int desk_bound) {
    if (d < 2) throw std::invalid_argument("class_table: d must be >= 2");
    if (d > desk_bound)
        throw std::length_error("class_table: enumeration of d^3 elements is capped at d <= " +
                                std::to_string(desk_bound));
    auto elems = all_elements(d);
    std::set<GroupElement> seen;
    ClassTable table;
    table.d = d;
    for (const auto& h : elems) {
        if (seen.count(h)) continue;
        std::set<GroupElement> cls;
        for (const auto& g : elems) cls.insert(group_mul(d, group_mul(d, g, h), group_inv(d, g)));
        for (const auto& e : cls) seen.insert(e);
        table.classes.emplace_back(cls.begin(), cls.end());
    }
    std::sort(table.classes.begin(), table.classes.end(),
              [](const auto& x, const auto& y) {
                  if (x.size() != y.size()) return x.size() < y.size();
                  return x.front() < y.front();
              });
    // Representation profile by central character: the sector of q^m carries
    // g^2 irreducibles of dimension d/g with g = gcd(m, d). For prime d this
    // is d^2 one-dimensional plus d-1 of dimension d; for composite d the
    // enumerated class count deviates from d(d+1)-1 and so does the profile.
    for (int m = 0; m < d; ++m) {
        int g = static_cast<int>(std::gcd(m, d));
        for (int t = 0; t < g * g; ++t) table.irrep_dims.push_back(d / g);
    }
    std::sort(table.irrep_dims.begin(), table.irrep_dims.end());
    long long dim_sq = 0;
    for (int v : table.irrep_dims) dim_sq += static_cast<long long>(v) * v;
    if (dim_sq != static_cast<long long>(d) * d * d ||
        table.irrep_dims.size() != table.classes.size())
        throw std::logic_error("class_table: representation profile inconsistent with class data");
    return table;
}

std::array<std::array<int, 3>, 3> rep3(int d, GroupElement g) {
    return {{{1, 0, 0}, {modd(g.b, d), 1, 0}, {modd(g.a, d), modd(-g.c, d), 1}}};
}

PiBracket pi_bracket(int d, GroupElement g1, GroupElement g2) {
    PiBracket br;
    long long cbp = static_cast<long long>(g1.c) * g2.b;
    long long bcp = static_cast<long long>(g1.b) * g2.c;
    br.pos = {modd(g1.a + g2.a - cbp, d), modd(g1.b + g2.b, d), modd(g1.c + g2.c, d)};
    br.neg = {modd(br.pos.a + cbp - bcp, d), br.pos.b, br.pos.c};
    br.zero = br.pos == br.neg;
    return br;
}

GroupProfile pi_d_profile(int d) {
    GroupProfile p;
    p.name = "Pi_" + std::to_string(d);
    auto elems = all_elements(d);
    p.order = static_cast<int>(elems.size());
    for (const auto& g : elems) {
        int n = element_order(d, g);
        ++p.order_counts[n];
        p.max_element_order = std::max(p.max_element_order, n);
        bool central = true;
        for (const auto& h : elems)
            if (!(group_mul(d, g, h) == group_mul(d, h, g))) { central = false; break; }
        if (central) ++p.center_size;
    }
    return p;
}

GroupProfile two_qubit_pauli_profile() {
    // Elements i^s (u_{b1 c1} x u_{b2 c2}); product law carries the phase
    // i^{2(c1 b1' + c2 b2')} from the per-factor q-commutations (q = -1).
    struct El {
        int s, b1, c1, b2, c2;
        bool operator<(const El& o) const {
            return std::tie(s, b1, c1, b2, c2) < std::tie(o.s, o.b1, o.c1, o.b2, o.c2);
        }
        bool operator==(const El& o) const {
            return std::tie(s, b1, c1, b2, c2) == std::tie(o.s, o.b1, o.c1, o.b2, o.c2);
        }
    };
    auto mul = [](El x, El y) {
        int s = (x.s + y.s + 2 * (x.c1 * y.b1 + x.c2 * y.b2)) % 4;
        return El{s, (x.b1 + y.b1) % 2, (x.c1 + y.c1) % 2, (x.b2 + y.b2) % 2, (x.c2 + y.c2) % 2};
    };
    std::vector<El> elems;
    for (int s = 0; s < 4; ++s)
        for (int b1 = 0; b1 < 2; ++b1)
            for (int c1 = 0; c1 < 2; ++c1)
                for (int b2 = 0; b2 < 2; ++b2)
                    for (int c2 = 0; c2 < 2; ++c2) elems.push_back({s, b1, c1, b2, c2});
    El id{0, 0, 0, 0, 0};

    GroupProfile p;
    p.name = "P_2";
    p.order = static_cast<int>(elems.size());
    for (const auto& g : elems) {
        El acc = g;
        int n = 1;
        while (!(acc == id)) {
            acc = mul(acc, g);
            ++n;
        }
        ++p.order_counts[n];
        p.max_element_order = std::max(p.max_element_order, n);
        bool central = true;
        for (const auto& h : elems)
            if (!(mul(g, h) == mul(h, g))) { central = false; break; }
        if (central) ++p.center_size;
    }
    return p;
}

bool is_ambivalent(int d) {
    ClassTable table = class_table(d);
    for (const auto& cls : table.classes) {
        std::set<GroupElement> s(cls.begin(), cls.end());
        for (const auto& g : cls)
            if (!s.count(group_inv(d, g))) return false;
    }
    return true;
}

bool Pi2Report::all() const {
    bool amb_unique = true;
    for (const auto& [dd, amb] : ambivalence_by_d)
        if (dd != 2 && amb) amb_unique = false;
    return order_8 && five_classes && ambivalent && sign_pattern && doubled_has_16 && doubled_closed &&
           subgroup_index_2 && amb_unique;
}

Pi2Report pi2_diagnostics() {
    Pi2Report rep;
    const int d = 2;

    auto elems = all_elements(d);
    std::set<GroupElement> closure;
    for (const auto& g : elems)
        for (const auto& h : elems) closure.insert(group_mul(d, g, h));
    rep.order_8 = closure.size() == 8;

    ClassTable table = class_table(d);
    rep.five_classes = table.classes.size() == 5;
    for (const auto& c : table.classes) rep.class_sizes.push_back(static_cast<int>(c.size()));
    rep.irrep_dims = table.irrep_dims;
    rep.ambivalent = is_ambivalent(2);

    // Hyperbolic-quaternion signs: x^2 = I, y^2 = -I, z^2 = I.
    GroupElement x{0, 1, 0}, y{0, 1, 1}, z{0, 0, 1};
    rep.sign_pattern = group_mul(d, x, x) == identity_element() &&
                       group_mul(d, y, y) == GroupElement{1, 0, 0} &&
                       group_mul(d, z, z) == identity_element();

    // Doubling: the 1-qubit Pauli group as pairs (s in Z_4, b, c), with the
    // embedded copy at even s. Verified against 2x2 matrices.
    struct El {
        int s, b, c;
        bool operator<(const El& o) const { return std::tie(s, b, c) < std::tie(o.s, o.b, o.c); }
    };
    auto mul = [](El u, El v) { return El{(u.s + v.s + 2 * u.c * v.b) % 4, (u.b + v.b) % 2, (u.c + v.c) % 2}; };
    std::set<El> doubled;
    for (int s = 0; s < 4; ++s)
        for (int b = 0; b < 2; ++b)
            for (int c = 0; c < 2; ++c) doubled.insert({s, b, c});
    rep.doubled_has_16 = doubled.size() == 16;

    bool closed = true, matrices_agree = true;
    auto matrix_of = [&](El u) {
        PhaseMatrix m = weyl_pauli::pauli_u(2, {u.b, u.c}).scalar_mul(Phase(4, u.s));
        return m;
    };
    for (const auto& u : doubled)
        for (const auto& v : doubled) {
            El w = mul(u, v);
            if (!doubled.count(w)) closed = false;
            auto prod = exact_mul(matrix_of(u), matrix_of(v));
            if (!prod || !(*prod == matrix_of(w))) matrices_agree = false;
        }
    rep.doubled_closed = closed && matrices_agree;

    // Even-s elements form the embedded group of index 2.
    int even_count = 0;
    bool even_closed = true;
    for (const auto& u : doubled)
        if (u.s % 2 == 0) {
            ++even_count;
            for (const auto& v : doubled)
                if (v.s % 2 == 0 && mul(u, v).s % 2 != 0) even_closed = false;
        }
    rep.subgroup_index_2 = even_count == 8 && even_closed;

    for (int dd = 2; dd <= 5; ++dd) rep.ambivalence_by_d[dd] = is_ambivalent(dd);
    return rep;
}

}  // namespace mubforge::pauli_group

#include <doctest.h>

#include <random>
#include <set>

#include "mubforge/pauli_group.hpp"

using namespace mubforge;
using namespace mubforge::pauli_group;

TEST_CASE("product law and inverses") {
    // z x = q x z for d = 2: w_{001} w_{010} = w_{111}
    CHECK(group_mul(2, {0, 0, 1}, {0, 1, 0}) == GroupElement{1, 1, 1});
    GroupElement g{1, 2, 3};
    CHECK(group_mul(5, identity_element(), g) == g);
    CHECK(group_mul(5, g, identity_element()) == g);
    CHECK(group_mul(5, g, group_inv(5, g)) == identity_element());
    CHECK(group_mul(5, group_inv(5, g), g) == identity_element());

    std::mt19937 rng(31337);
    std::uniform_int_distribution<int> u(0, 4);
    for (int t = 0; t < 3000; ++t) {
        GroupElement a{u(rng), u(rng), u(rng)}, b{u(rng), u(rng), u(rng)}, c{u(rng), u(rng), u(rng)};
        CHECK(group_mul(5, group_mul(5, a, b), c) == group_mul(5, a, group_mul(5, b, c)));
    }
}

TEST_CASE("product law matches the matrix realization") {
    for (int d = 2; d <= 6; ++d) {
        std::mt19937 rng(d);
        std::uniform_int_distribution<int> u(0, d - 1);
        for (int t = 0; t < 400; ++t) {
            GroupElement g1{u(rng), u(rng), u(rng)}, g2{u(rng), u(rng), u(rng)};
            auto prod = exact_mul(element_matrix(d, g1), element_matrix(d, g2));
            REQUIRE(prod);
            CHECK(*prod == element_matrix(d, group_mul(d, g1, g2)));
        }
    }
}

TEST_CASE("class table for d = 2 matches the dihedral picture") {
    auto table = class_table(2);
    REQUIRE(table.classes.size() == 5);
    std::multiset<size_t> sizes;
    for (const auto& c : table.classes) sizes.insert(c.size());
    CHECK(sizes == std::multiset<size_t>{1, 1, 2, 2, 2});
    CHECK(table.irrep_dims == std::vector<int>{1, 1, 1, 1, 2});
    CHECK(table.sizes_match_expected());

    // the singletons are I and -I = w_{100}
    CHECK(table.classes[0] == std::vector<GroupElement>{{0, 0, 0}});
    CHECK(table.classes[1] == std::vector<GroupElement>{{1, 0, 0}});
}

TEST_CASE("class table for d = 3") {
    auto table = class_table(3);
    CHECK(table.classes.size() == 11);
    CHECK(table.singleton_count() == 3);
    CHECK(table.sizes_match_expected());
    std::multiset<int> dims(table.irrep_dims.begin(), table.irrep_dims.end());
    CHECK(dims == std::multiset<int>{1, 1, 1, 1, 1, 1, 1, 1, 1, 3, 3});
}

TEST_CASE("symbolic classes agree with matrix conjugation") {
    for (int d : {3, 4}) {
        std::vector<GroupElement> elems;
        for (int a = 0; a < d; ++a)
            for (int b = 0; b < d; ++b)
                for (int c = 0; c < d; ++c) elems.push_back({a, b, c});
        auto table = class_table(d);
        for (const auto& cls : table.classes) {
            // collect matrix conjugates of the class representative
            std::set<GroupElement> via_matrix;
            const GroupElement& h = cls.front();
            for (const auto& g : elems) {
                CMatrix conj = element_matrix(d, g).eval().mul(element_matrix(d, h).eval())
                                   .mul(element_matrix(d, group_inv(d, g)).eval());
                for (const auto& cand : elems)
                    if (conj.max_abs_diff(element_matrix(d, cand).eval()) < 1e-9) via_matrix.insert(cand);
            }
            CHECK(via_matrix == std::set<GroupElement>(cls.begin(), cls.end()));
        }
    }
    // the d = 4 square of the shift is conjugate only to its negative
    auto t4 = class_table(4);
    bool found = false;
    for (const auto& cls : t4.classes)
        if (std::set<GroupElement>(cls.begin(), cls.end()) ==
            std::set<GroupElement>{{0, 2, 0}, {2, 2, 0}})
            found = true;
    CHECK(found);
}

TEST_CASE("composite d class counts follow the gcd formula, not d(d+1)-1") {
    for (int d : {4, 6, 8}) {
        auto table = class_table(d);
        long long expect = 0;
        for (int b = 0; b < d; ++b)
            for (int c = 0; c < d; ++c) expect += std::gcd(std::gcd(b, c), d);
        CHECK(static_cast<long long>(table.classes.size()) == expect);
        CHECK(table.singleton_count() == d);
        long long total = 0, dimsq = 0;
        for (const auto& c : table.classes) total += static_cast<long long>(c.size());
        for (int v : table.irrep_dims) dimsq += static_cast<long long>(v) * v;
        CHECK(total == static_cast<long long>(d) * d * d);
        CHECK(dimsq == total);
        CHECK(table.irrep_dims.size() == table.classes.size());
    }
    CHECK(class_table(4).classes.size() == 22);
    CHECK(class_table(6).classes.size() == 55);
    CHECK_THROWS_AS(class_table(9), std::length_error);
}

TEST_CASE("faithful 3x3 representation") {
    auto id = rep3(4, identity_element());
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) CHECK(id[i][j] == (i == j ? 1 : 0));

    auto m = rep3(3, {1, 2, 1});
    CHECK(m[1][0] == 2);
    CHECK(m[2][0] == 1);
    CHECK(m[2][1] == 2);  // -c mod 3

    // homomorphism over all pairs for d = 3
    std::vector<GroupElement> elems;
    for (int a = 0; a < 3; ++a)
        for (int b = 0; b < 3; ++b)
            for (int c = 0; c < 3; ++c) elems.push_back({a, b, c});
    for (const auto& g1 : elems)
        for (const auto& g2 : elems) {
            auto m1 = rep3(3, g1), m2 = rep3(3, g2);
            auto expect = rep3(3, group_mul(3, g1, g2));
            for (int i = 0; i < 3; ++i)
                for (int j = 0; j < 3; ++j) {
                    long long acc = 0;
                    for (int k = 0; k < 3; ++k) acc += static_cast<long long>(m1[i][k]) * m2[k][j];
                    CHECK(mod_reduce(acc, 3) == mod_reduce(expect[i][j], 3));
                }
        }
    // injectivity
    std::set<std::array<std::array<int, 3>, 3>> images;
    for (const auto& g : elems) images.insert(rep3(3, g));
    CHECK(images.size() == elems.size());
}

TEST_CASE("formal bracket matches matrix commutators") {
    // [g, g] = 0
    for (int d = 2; d <= 4; ++d)
        for (int a = 0; a < d; ++a)
            for (int b = 0; b < d; ++b)
                for (int c = 0; c < d; ++c) CHECK(pi_bracket(d, {a, b, c}, {a, b, c}).zero);

    auto br = pi_bracket(2, {0, 1, 0}, {0, 0, 1});
    CMatrix lhs = element_matrix(2, {0, 1, 0}).eval().mul(element_matrix(2, {0, 0, 1}).eval())
                      .sub(element_matrix(2, {0, 0, 1}).eval().mul(element_matrix(2, {0, 1, 0}).eval()));
    CMatrix rhs = element_matrix(2, br.pos).eval().sub(element_matrix(2, br.neg).eval());
    CHECK(lhs.max_abs_diff(rhs) < 1e-14);

    std::mt19937 rng(8);
    for (int d = 2; d <= 6; ++d) {
        std::uniform_int_distribution<int> u(0, d - 1);
        for (int t = 0; t < 300; ++t) {
            GroupElement g1{u(rng), u(rng), u(rng)}, g2{u(rng), u(rng), u(rng)};
            auto b = pi_bracket(d, g1, g2);
            CMatrix l = element_matrix(d, g1).eval().mul(element_matrix(d, g2).eval())
                            .sub(element_matrix(d, g2).eval().mul(element_matrix(d, g1).eval()));
            CMatrix r = b.zero ? CMatrix(d)
                               : element_matrix(d, b.pos).eval().sub(element_matrix(d, b.neg).eval());
            CHECK(l.max_abs_diff(r) < 1e-12);
        }
    }
}

TEST_CASE("d = 2 diagnostics") {
    auto rep = pi2_diagnostics();
    CHECK(rep.order_8);
    CHECK(rep.five_classes);
    CHECK(rep.ambivalent);
    CHECK(rep.sign_pattern);
    CHECK(rep.doubled_has_16);
    CHECK(rep.doubled_closed);
    CHECK(rep.subgroup_index_2);
    CHECK(rep.ambivalence_by_d.at(2));
    CHECK_FALSE(rep.ambivalence_by_d.at(3));
    CHECK_FALSE(rep.ambivalence_by_d.at(4));
    CHECK_FALSE(rep.ambivalence_by_d.at(5));
    CHECK(rep.all());
}

TEST_CASE("order-64 groups are distinct") {
    auto pi4 = pi_d_profile(4);
    auto p2 = two_qubit_pauli_profile();
    CHECK(pi4.order == 64);
    CHECK(p2.order == 64);
    CHECK(pi4.center_size == 4);
    CHECK(p2.center_size == 4);
    CHECK(pi4.max_element_order == 8);
    CHECK(p2.max_element_order == 4);
    CHECK(pi4.order_counts.at(2) == 7);
    CHECK(p2.order_counts.at(2) == 31);
    CHECK(pi4.order_counts != p2.order_counts);
}

TEST_CASE("group-element traces carry the central phase") {
    // Tr(w^dagger w') = q^{a'-a} d delta_{b,b'} delta_{c,c'}
    for (int d = 2; d <= 6; ++d)
        for (int a = 0; a < d; ++a)
            for (int ap = 0; ap < d; ++ap)
                for (int b = 0; b < d; ++b)
                    for (int c = 0; c < d; ++c) {
                        auto same = hs_inner_exact(element_matrix(d, {a, b, c}), element_matrix(d, {ap, b, c}));
                        REQUIRE(same);
                        CHECK(same->mult == d);
                        CHECK(same->phase == Phase(d, ap - a));
                        auto diff = hs_inner_exact(element_matrix(d, {a, b, c}),
                                                   element_matrix(d, {ap, (b + 1) % d, c}));
                        REQUIRE(diff);
                        CHECK(diff->mult == 0);
                    }
}

TEST_CASE("w action on basis kets") {
    // w_abc |k> = q^{a + kc} |k - b>
    for (int d = 2; d <= 7; ++d)
        for (int a = 0; a < d; ++a)
            for (int b = 0; b < d; ++b)
                for (int c = 0; c < d; ++c) {
                    PhaseMatrix w = element_matrix(d, {a, b, c});
                    for (int k = 0; k < d; ++k) {
                        int target = static_cast<int>(mod_reduce(k - b, d));
                        auto e = w.at(target, k);
                        REQUIRE(e);
                        CHECK(*e == Phase(d, a + static_cast<long long>(k) * c));
                    }
                }
}

TEST_CASE("odd-d realization lands in the special unitary group") {
    for (int d : {3, 5, 7})
        for (int a = 0; a < d; ++a)
            for (int b = 0; b < d; ++b)
                for (int c = 0; c < d; ++c) {
                    cdouble det = element_matrix(d, {a, b, c}).eval().determinant();
                    CHECK(std::abs(det - cdouble(1.0, 0.0)) < 1e-9);
                }
}

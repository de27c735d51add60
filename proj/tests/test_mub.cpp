#include <doctest.h>

#include <array>

#include "mubforge/mub.hpp"
#include "mubforge/qfourier.hpp"

using namespace mubforge;
using namespace mubforge::mub;

TEST_CASE("printed bases for d = 2 and d = 3") {
    // d=2: B_0 columns (1,1)/sqrt2 and (-1,1)/sqrt2; B_1 columns (i,1)/sqrt2 and (-i,1)/sqrt2
    Basis b0 = basis(2, 0);
    CHECK(std::abs(b0.vectors.at(0, 0) - cdouble(1 / std::sqrt(2.0), 0)) < 1e-14);
    CHECK(std::abs(b0.vectors.at(0, 1) - cdouble(-1 / std::sqrt(2.0), 0)) < 1e-14);
    Basis b1 = basis(2, 1);
    CHECK(std::abs(b1.vectors.at(0, 0) - cdouble(0, 1 / std::sqrt(2.0))) < 1e-14);
    CHECK(std::abs(b1.vectors.at(1, 0) - cdouble(1 / std::sqrt(2.0), 0)) < 1e-14);

    // d=3: |10> = (q|0> + q|1> + |2>)/sqrt3
    Basis b31 = basis(3, 1);
    cdouble q = Phase(3, 1).eval() / std::sqrt(3.0);
    CHECK(std::abs(b31.vectors.at(0, 0) - q) < 1e-14);
    CHECK(std::abs(b31.vectors.at(1, 0) - q) < 1e-14);
    CHECK(std::abs(b31.vectors.at(2, 0) - cdouble(1 / std::sqrt(3.0), 0)) < 1e-14);

    Basis comp = computational_basis(4);
    CHECK(comp.vectors.max_abs_diff(CMatrix::identity(4)) == 0.0);
    CHECK(comp.label == "computational");
}

TEST_CASE("unbiased verdicts") {
    CHECK(unbiased(basis(3, 0), basis(3, 0)).verdict == MubVerdict::OrthonormalSame);
    CHECK(unbiased(basis(3, 0), basis(3, 1)).verdict == MubVerdict::Unbiased);
    CHECK(unbiased(basis(4, 0), basis(4, 2)).verdict == MubVerdict::Neither);
    CHECK(unbiased(basis(5, 2), computational_basis(5)).verdict == MubVerdict::Unbiased);
    CHECK_THROWS_AS(unbiased(basis(2, 0), basis(3, 0)), std::invalid_argument);

    auto rep = unbiased(basis(3, 0), basis(3, 2));
    CHECK(rep.max_modulus == doctest::Approx(1.0 / std::sqrt(3.0)).epsilon(1e-12));
    CHECK(rep.min_modulus == doctest::Approx(1.0 / std::sqrt(3.0)).epsilon(1e-12));
}

TEST_CASE("complete prime sets") {
    CHECK(complete_set_prime(2).size() == 3);
    CHECK(complete_set_prime(3).size() == 4);
    auto bases = complete_set_prime(7);
    CHECK(bases.size() == 8);
    int pairs = 0;
    for (size_t i = 0; i < bases.size(); ++i)
        for (size_t j = i + 1; j < bases.size(); ++j) {
            CHECK(unbiased(bases[i], bases[j]).verdict == MubVerdict::Unbiased);
            ++pairs;
        }
    CHECK(pairs == 28);
    CHECK_THROWS_AS(complete_set_prime(6), std::domain_error);
    CHECK_THROWS_AS(complete_set_prime(9), std::domain_error);
    CHECK_THROWS_AS(complete_set_prime(1), std::domain_error);
}

TEST_CASE("the five d=4 bases") {
    auto bases = mub_d4();
    REQUIRE(bases.size() == 5);

    // w00 first vector (1,1,1,1)/2 and w11 first vector (1,i,i,-1)/2
    const Basis* w00 = nullptr;
    const Basis* w11 = nullptr;
    for (const auto& b : bases) {
        if (b.label == "w00") w00 = &b;
        if (b.label == "w11") w11 = &b;
    }
    REQUIRE(w00);
    REQUIRE(w11);
    CVector v00 = w00->vector(0);
    for (int k = 0; k < 4; ++k) CHECK(std::abs(v00[k] - cdouble(0.5, 0.0)) < 1e-14);
    CVector v11 = w11->vector(0);
    CHECK(std::abs(v11[0] - cdouble(0.5, 0.0)) < 1e-14);
    CHECK(std::abs(v11[1] - cdouble(0.0, 0.5)) < 1e-14);
    CHECK(std::abs(v11[2] - cdouble(0.0, 0.5)) < 1e-14);
    CHECK(std::abs(v11[3] - cdouble(-0.5, 0.0)) < 1e-14);

    for (size_t i = 0; i < bases.size(); ++i)
        for (size_t j = i + 1; j < bases.size(); ++j)
            CHECK(unbiased(bases[i], bases[j], 1e-10).verdict == MubVerdict::Unbiased);
}

TEST_CASE("w01/w10 vectors arise from the tensor-eigenvector recombinations") {
    // lambda |0 alpha> x |1 beta> + mu |0 alpha'> x |1 beta'> lands on a stored
    // w01 vector up to a global phase (the paper's beta labels differ by a
    // column relabeling of B_1).
    cdouble lambda(0.5, -0.5), mu(0.5, 0.5);
    auto f0 = qfourier::fourier_matrix({2, 0});
    auto f1 = qfourier::fourier_matrix({2, 1});
    auto tensor_vec = [&](int al, int be) {
        CVector a = f0.eval_column(al), b = f1.eval_column(be);
        CVector out(4);
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j) out[i * 2 + j] = a[i] * b[j];
        return out;
    };
    auto bases = mub_d4();
    const Basis* w01 = nullptr;
    for (const auto& b : bases)
        if (b.label == "w01") w01 = &b;
    REQUIRE(w01);

    for (auto [al, be, al2, be2] : {std::array<int, 4>{0, 0, 1, 1}, std::array<int, 4>{0, 1, 1, 0}}) {
        for (auto [c1, c2] : {std::pair<cdouble, cdouble>{lambda, mu}, std::pair<cdouble, cdouble>{mu, lambda}}) {
            CVector v1 = tensor_vec(al, be), v2 = tensor_vec(al2, be2);
            CVector comb(4);
            for (int t = 0; t < 4; ++t) comb[t] = c1 * v1[t] + c2 * v2[t];
            bool matched = false;
            for (int col = 0; col < 4; ++col) {
                cdouble ip = inner_product(w01->vector(col), comb);
                if (std::abs(std::abs(ip) - 1.0) < 1e-10) matched = true;
            }
            CHECK(matched);
        }
    }
}

TEST_CASE("entanglement determinant classification") {
    auto bases = mub_d4();
    for (const auto& b : bases) {
        if (b.label == "computational") continue;
        for (int alpha = 0; alpha < 4; ++alpha) {
            auto rep = entanglement_det(b.vector(alpha), 2);
            if (b.label == "w00" || b.label == "w11") {
                CHECK(rep.abs_det < 1e-9);
                CHECK(rep.classification == "product");
            } else {
                CHECK(rep.abs_det == doctest::Approx(0.5).epsilon(1e-9));
                CHECK(rep.classification == "maximal");
            }
        }
    }
    // elementary product state alpha x beta
    CVector prod{0.0, 1.0, 0.0, 0.0};
    CHECK(entanglement_det(prod, 2).classification == "product");
    CHECK(entanglement_det(prod, 2).abs_det == 0.0);
    CHECK_THROWS_AS(entanglement_det(CVector(5), 2), std::invalid_argument);
}

TEST_CASE("primality by trial division") {
    CHECK(is_prime(2));
    CHECK(is_prime(31));
    CHECK_FALSE(is_prime(1));
    CHECK_FALSE(is_prime(25));
    CHECK_FALSE(is_prime(91));  // 7 * 13
}

#include <doctest.h>

#include "mubforge/checks.hpp"
#include "mubforge/kernels.hpp"

using namespace mubforge;
using namespace mubforge::kernels;

TEST_CASE("serial and parallel MUB scans are identical") {
    for (int p : {5, 13}) {
        auto bases = mub::complete_set_prime(p);
        auto s = mub_pair_scan(bases, Exec::Serial);
        auto par = mub_pair_scan(bases, Exec::Parallel);
        CHECK(s == par);
        CHECK(s.pairs == (p + 1) * p / 2);
        CHECK(s.all_unbiased(1e-10));
    }
    auto d4 = mub::mub_d4();
    CHECK(mub_pair_scan(d4, Exec::Serial) == mub_pair_scan(d4, Exec::Parallel));
}

TEST_CASE("serial and parallel Gauss sweeps are identical") {
    auto s = gauss_triple_sweep(6, 11, Exec::Serial);
    auto p = gauss_triple_sweep(6, 11, Exec::Parallel);
    CHECK(s == p);
    CHECK(s.cases > 1000);
    CHECK(s.max_closed_dev <= 1e-9);
    CHECK(s.max_recip_dev <= 1e-9);
}

TEST_CASE("serial and parallel structure scans are identical") {
    for (int d : {3, 6, 9}) {
        auto s = structure_constant_scan(d, Exec::Serial);
        auto p = structure_constant_scan(d, Exec::Parallel);
        CHECK(s == p);
        CHECK(s.pairs == static_cast<long long>(d) * d * d * d);
        CHECK(s.vanishing_locus_exact);
        CHECK(s.max_matrix_dev <= 1e-10);
    }
}

TEST_CASE("kernel class table equals the reference implementation") {
    for (int d = 2; d <= 6; ++d) {
        auto ref = pauli_group::class_table(d);
        auto s = kernels::class_table(d, Exec::Serial);
        auto p = kernels::class_table(d, Exec::Parallel);
        CHECK(s.classes == ref.classes);
        CHECK(p.classes == ref.classes);
        CHECK(s.irrep_dims == ref.irrep_dims);
        CHECK(p.irrep_dims == ref.irrep_dims);
    }
}

TEST_CASE("small check suite passes and the fault injection trips it") {
    auto report = checks::run_all(checks::Scale::Small);
    CHECK(report.all_pass());
    CHECK(report.results.size() > 40);

    auto faulty = checks::run_all(checks::Scale::Small, 1e-10, true);
    CHECK_FALSE(faulty.all_pass());
    CHECK(faulty.failures() == 1);
    CHECK_FALSE(faulty.results.front().pass);  // the perturbed phase check
}

#pragma once

#include <vector>

#include "mubforge/mub.hpp"
#include "mubforge/pauli_group.hpp"

namespace mubforge::kernels {

/// Execution mode for the sweep kernels. Serial is the reference
/// implementation; Parallel runs the same loops under OpenMP and must produce
/// identical results (all reductions are max/count based).
enum class Exec { Serial, Parallel };

const char* exec_name(Exec e);

/// Pairwise scan of a basis family: worst deviation of the cross moduli from
/// 1/sqrt(d) over unordered pairs, and of the Gram from identity within one
/// basis.
struct MubScanResult {
    int pairs = 0;
    double max_cross_dev = 0.0;   // worst | |<.|.>| - 1/sqrt(d) | over pairs
    double max_gram_dev = 0.0;    // worst | Gram - I | within each basis
    bool all_unbiased(double tol) const { return max_cross_dev <= tol && max_gram_dev <= tol; }
    bool operator==(const MubScanResult& o) const {
        return pairs == o.pairs && max_cross_dev == o.max_cross_dev && max_gram_dev == o.max_gram_dev;
    }
};
MubScanResult mub_pair_scan(const std::vector<mub::Basis>& bases, Exec exec);

/// Sweep every valid (u, v, w) with |u| <= u_max, |w| <= w_max and v over a
/// full period [-2|w|, 2|w|]; reports the worst disagreement between the
/// brute-force sum, the closed forms (w > 0) and the reciprocity route.
struct GaussSweepResult {
    long long cases = 0;
    long long closed_cases = 0;
    double max_closed_dev = 0.0;
    double max_recip_dev = 0.0;
    bool operator==(const GaussSweepResult& o) const {
        return cases == o.cases && closed_cases == o.closed_cases &&
               max_closed_dev == o.max_closed_dev && max_recip_dev == o.max_recip_dev;
    }
};
GaussSweepResult gauss_triple_sweep(int u_max, int w_max, Exec exec);

/// Structure constants against explicit matrix commutators over all d^4
/// index pairs: float deviation plus exact agreement of the vanishing locus
/// with a f - b e = 0 (mod d).
struct StructureScanResult {
    long long pairs = 0;
    double max_matrix_dev = 0.0;
    bool vanishing_locus_exact = true;
    bool operator==(const StructureScanResult& o) const {
        return pairs == o.pairs && max_matrix_dev == o.max_matrix_dev &&
               vanishing_locus_exact == o.vanishing_locus_exact;
    }
};
StructureScanResult structure_constant_scan(int d, Exec exec);

/// Conjugacy partition via a parallel sweep over conjugated elements;
/// identical classes to pauli_group::class_table.
pauli_group::ClassTable class_table(int d, Exec exec);

}  // namespace mubforge::kernels

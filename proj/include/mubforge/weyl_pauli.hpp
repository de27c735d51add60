#pragma once

#include <array>
#include <string>
#include <vector>

#include "mubforge/matrix.hpp"

namespace mubforge::weyl_pauli {

/// Index (a, b) of the operator X^a Z^b, components reduced mod d.
struct PauliIndex {
    int a = 0;
    int b = 0;
    bool operator==(const PauliIndex& o) const { return a == o.a && b == o.b; }
};

/// Shift matrix X = sum_k E_{k-1,k} and clock matrix Z = diag(q^k); they are
/// cyclic of order d and q-commute: X Z = q Z X.
std::pair<PhaseMatrix, PhaseMatrix> weyl_pair(int d);

/// X^a Z^b as an exact monomial matrix.
PhaseMatrix pauli_u(int d, PauliIndex idx);

/// Symbolic multiplication rule u_ab u_a'b' = q^{-b a'} u_{a+a', b+b'}.
struct PauliProduct {
    long long phase_exp;  // exponent of q, reduced mod d
    PauliIndex idx;
};
PauliProduct pauli_product(int d, PauliIndex i1, PauliIndex i2);

/// [u, u']_-+ = (q^{-b a'} -+ q^{-a b'}) u_{a+a', b+b'}. The commutator
/// vanishes iff a b' - b a' = 0 mod d and the anticommutator iff it equals
/// d/2 (hence never for odd d).
struct PauliBracket {
    Phase term1, term2;   // q^{-b a'} and q^{-a b'}
    cdouble coefficient;  // term1 -+ term2
    PauliIndex idx;
    bool vanishes_exact;
};
PauliBracket commutator(int d, PauliIndex i1, PauliIndex i2);
PauliBracket anticommutator(int d, PauliIndex i1, PauliIndex i2);

/// Full structure-constant table of the Pauli basis of u(d):
/// [u_ab, u_ef] = (q^{-be} - q^{-af}) u_{a+e, b+f}.
struct StructureConstant {
    PauliIndex lhs1, lhs2, result;
    cdouble value;
    bool vanishes_exact;
};
std::vector<StructureConstant> structure_constants(int d);

/// One abelian family of the prime-dimension decomposition.
struct CartanSet {
    std::string label;
    std::vector<PauliIndex> members;
};

/// Partition of the d^2 - 1 non-identity indices into p+1 disjoint maximal
/// commuting families: {Z^a}, {X^a}, and the slope classes {X^a Z^{ca}}.
std::vector<CartanSet> cartan_decomposition(int p);

/// Tensor Pauli operator u_{a_1 b_1} x ... x u_{a_e b_e} for mixed dimensions.
PhaseMatrix pauli_tensor(const std::vector<int>& dims, const std::vector<int>& a, const std::vector<int>& b);

/// Symbolic tensor bracket coefficients: products of the per-factor phases.
struct TensorBracket {
    Phase term1, term2;
    cdouble coefficient;  // term1 -+ term2
    std::vector<int> a_out, b_out;
    bool vanishes_exact;
};
TensorBracket tensor_commutator(const std::vector<int>& dims, const std::vector<int>& a1, const std::vector<int>& b1,
                                const std::vector<int>& a2, const std::vector<int>& b2);
TensorBracket tensor_anticommutator(const std::vector<int>& dims, const std::vector<int>& a1, const std::vector<int>& b1,
                                    const std::vector<int>& a2, const std::vector<int>& b2);

/// Index quadruple (a1 b1 a2 b2) of a two-qubit tensor operator.
using TensorIndex4 = std::array<int, 4>;

/// The five disjoint commuting triples covering the 15 non-identity two-qubit
/// tensor operators (a spread of the generalized quadrangle of order 2).
std::vector<std::array<TensorIndex4, 3>> spread_d4();

/// Exhaustive result for the d=4 single-qudit family: the 15 indices admit
/// at most `max_disjoint_triples` pairwise-disjoint commuting triples and no
/// partition into five of them exists.
struct D4PartitionSearch {
    int commuting_triples = 0;
    int max_disjoint_triples = 0;
    bool partition_exists = false;
};
D4PartitionSearch d4_partition_search();

/// The three disjoint maximal commuting families {z^a}, {x^a z^a}, {x^a}
/// together with the bases they are associated with.
struct ThreeFamilies {
    std::vector<PauliIndex> e_0dot;   // {z^a},      eigenbasis: computational
    std::vector<PauliIndex> e_dotdot; // {x^a z^a},  eigenbasis: B_1
    std::vector<PauliIndex> e_dot0;   // {x^a},      eigenbasis: B_0
    std::array<std::string, 3> associated_basis;
};
ThreeFamilies three_commuting_families(int d);

}  // namespace mubforge::weyl_pauli

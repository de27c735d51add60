#pragma once

#include <array>
#include <map>
#include <string>
#include <vector>

#include "mubforge/matrix.hpp"

namespace mubforge::pauli_group {

/// Element w_abc = q^a x^b z^c of the order-d^3 group, components in Z_d.
struct GroupElement {
    int a = 0;
    int b = 0;
    int c = 0;
    bool operator==(const GroupElement& o) const { return a == o.a && b == o.b && c == o.c; }
    bool operator<(const GroupElement& o) const {
        if (a != o.a) return a < o.a;
        if (b != o.b) return b < o.b;
        return c < o.c;
    }
};

/// Product law (a+a'-cb', b+b', c+c') mod d.
GroupElement group_mul(int d, GroupElement g1, GroupElement g2);

/// Inverse w^{-1} = w_{-a-cb, -b, -c}, derived from the product law.
GroupElement group_inv(int d, GroupElement g);

GroupElement identity_element();

/// Matrix realization q^a X^b Z^c as an exact phase matrix.
PhaseMatrix element_matrix(int d, GroupElement g);

/// Conjugacy classes by brute-force conjugation plus the representation
/// profile derived from the central characters. For prime d this gives the
/// d(d+1)-1 classes (d singletons, d^2-1 of size d) and irreducible
/// dimensions {1 x d^2, d x (d-1)}; for composite d the class of w_abc has
/// size d/gcd(b,c,d) and the counts deviate from that profile.
struct ClassTable {
    int d = 0;
    std::vector<std::vector<GroupElement>> classes;
    std::vector<int> irrep_dims;

    int singleton_count() const;
    bool sizes_match_expected() const;
};
/// Enumeration bound for class_table (d^3 elements, d^6 conjugations).
inline constexpr int kClassTableMaxD = 8;

ClassTable class_table(int d, int desk_bound = kClassTableMaxD);

/// Faithful unipotent 3x3 representation over Z_d:
/// w_abc -> [[1,0,0],[b,1,0],[a,-c,1]].
std::array<std::array<int, 3>, 3> rep3(int d, GroupElement g);

/// Formal Lie bracket [w, w'] = w_pos - w_neg in the group algebra.
struct PiBracket {
    GroupElement pos, neg;
    bool zero;  // the two triples coincide
};
PiBracket pi_bracket(int d, GroupElement g1, GroupElement g2);

/// Element-order histogram and center size; separates groups of equal order.
struct GroupProfile {
    std::string name;
    int order = 0;
    std::map<int, int> order_counts;
    int center_size = 0;
    int max_element_order = 0;
};

/// Profile of the d-dimensional group via the symbolic product law.
GroupProfile pi_d_profile(int d);

/// Profile of the two-qubit Pauli group (64 elements i^s u ⊗ u).
GroupProfile two_qubit_pauli_profile();

/// The d=2 battery: dihedral class structure, hyperbolic-quaternion signs,
/// ambivalence, and the 16-element doubling that recovers the 1-qubit group.
struct Pi2Report {
    bool order_8 = false;
    bool five_classes = false;
    std::vector<int> class_sizes;
    std::vector<int> irrep_dims;
    bool ambivalent = false;
    bool sign_pattern = false;       // x^2 = I, y^2 = -I, z^2 = I
    bool doubled_has_16 = false;
    bool doubled_closed = false;
    bool subgroup_index_2 = false;
    std::map<int, bool> ambivalence_by_d;  // d -> ambivalent(Pi_d)
    bool all() const;
};
Pi2Report pi2_diagnostics();

/// Every element conjugate to its inverse?
bool is_ambivalent(int d);

}  // namespace mubforge::pauli_group

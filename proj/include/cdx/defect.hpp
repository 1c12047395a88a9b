#pragma once

// Verification of the defect/excess matrix equations G_{d,k}(A) = J + B
// (defect) and G_{d,k}(A) = J - B (excess), cycle-structure extraction from
// B, the kernel-restriction parity check, and the order congruence rules.

#include "cdx/graph.hpp"
#include "cdx/intmatrix.hpp"
#include "cdx/moore.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace cdx {

IntMatrix adjacency_matrix(const Graph& g);

// G_{d,k} evaluated on the adjacency matrix via the recurrence; entries count
// paths of length <= k. Rejects non-regular input.
IntMatrix g_of_adjacency(long d, long k, const Graph& g);

// Multiset of cycle lengths with multiplicities.
using CycleStructure = std::map<long, long>;

Int cs_total(const CycleStructure& cs);
std::string cs_str(const CycleStructure& cs);

struct DefectExcessReport {
    Mode mode = Mode::defect;
    long d = 0;
    long k = 0;
    long epsilon = 0;  // 0 (Moore) or 2
    bool valid = false;
    bool cyclic = false;
    CycleStructure cycle_structure;
    std::vector<std::string> diagnostics;
    std::optional<IntMatrix> B;
};

// Computes B from the matrix equation, validates row sums / symmetry /
// entry bounds / diagonal, and decomposes B into disjoint cycles.
// Accepts Moore graphs (order = M_{d,k}) with B = 0 and epsilon = 0.
DefectExcessReport classify_defect_excess(const Graph& g, long k, Mode mode);

struct RestrictionRecord {
    long alpha = 0, beta = 0, delta = 0, gamma = 0;
    bool beta_equals_delta = false;
    bool trace_even = false;
    // char poly of the 2x2 restriction: x^2 - (alpha+gamma) x + (alpha gamma - beta delta)
    IntPoly restriction_charpoly;
};

// Restriction of A on ker(B) for a verified cyclic B with n = 0 (mod 4),
// computed in the labeling that makes B the canonical cycle matrix.
RestrictionRecord kernel_restriction(const Graph& g, const IntMatrix& B);

struct CongruenceReport {
    long d = 0, D = 0;
    Int n = 0;  // M_{d,D} - 2
    bool d_divides_ok = true;      // D | n
    bool even_D_rule_ok = true;    // D even => d odd
    bool odd_prime_power_ok = true;    // D = p^r (p odd) => D | d-1
    bool two_power_ok = true;          // D >= 4 power of 2 => D/2 | d-1
    bool all_ok = true;
    long n_mod_2 = 0, n_mod_3 = 0, n_mod_4 = 0, n_mod_6 = 0;
};

// Order/degree congruence rules for cyclic defect at (d, D).
CongruenceReport congruence_report(long d, long D);

}  // namespace cdx

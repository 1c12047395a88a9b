#pragma once

// The rational-angle scan of the finiteness argument: for every angle
// alpha = pi r/s whose cosine is an algebraic integer of degree <= 4, solve
// q U_k(cos a) + U_{k-1}(cos a) = 0 exactly over one full period of k in the
// cyclotomic residue field Q[y]/Phi_N(y), and tabulate the degrees d = 1+q^2
// it admits.

#include "cdx/fieldpoly.hpp"

#include <optional>
#include <string>
#include <vector>

namespace cdx {

struct AngleCandidate {
    long r, s;          // alpha = pi * r / s, 0 < r/s < 1, gcd(r,s) = 1
    int degree_class;   // algebraic degree of 2 cos(alpha): 1, 2 or 4
    std::string label;
};

// The three closed candidate lists (degree 1, 2 and 4).
std::vector<AngleCandidate> angle_candidate_list();

struct AngleHit {
    long k_residue;     // k mod period
    long period;
    bool ratio_defined;   // U_k != 0 at this k
    bool q_integral;      // ratio^2 is a rational integer
    bool q_negative;      // ratio < 0 (so -q = ratio is admissible)
    std::optional<long> d;  // 1 + q^2 when admissible
};

struct AngleScanRow {
    AngleCandidate candidate;
    long period;            // N = order of e^{i alpha}
    std::vector<AngleHit> hits;            // feasible d entries only
    std::vector<long> pole_residues;       // k mod N with U_k = 0
};

struct AngleScanResult {
    std::vector<AngleScanRow> rows;
    bool no_degree_ge_5 = true;
    bool verified = false;  // solution table matches the expected closed form
};

AngleScanResult rational_angle_scan();

}  // namespace cdx

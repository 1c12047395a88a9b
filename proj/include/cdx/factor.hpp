#pragma once

// Exact factorization of integer polynomials over Q: square-free split,
// factorization modulo small primes, Hensel lifting past the Mignotte bound,
// and Zassenhaus subset recombination. Deterministic end to end so that
// certificates reproduce bit-for-bit.

#include "cdx/intpoly.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace cdx {

struct Factorization {
    Int content = 1;
    std::vector<std::pair<IntPoly, int>> factors;  // primitive, lc > 0, irreducible
    std::string certificate;  // rational-root | modular-degree-pattern | hensel-recombination

    IntPoly reassemble() const {
        IntPoly p = IntPoly::constant(content);
        for (const auto& [f, m] : factors) p *= f.pow(m);
        return p;
    }
};

struct IrreducibilityResult {
    bool irreducible = false;
    std::string certificate;
};

// All rational roots with multiplicities, via divisor pairs of the trailing
// and leading coefficients plus exact evaluation.
std::vector<std::pair<Rat, int>> rational_roots(const IntPoly& p);

// Complete irreducible factorization over the rationals.
Factorization factor_over_integers(const IntPoly& p);

// Fast path: degree patterns of the factorizations modulo several primes;
// falls back to the full factorization when patterns are inconclusive.
IrreducibilityResult is_irreducible(const IntPoly& p);

// An irreducible factor of degree <= 2 if one exists.
std::optional<IntPoly> has_factor_degree_le2(const IntPoly& p);

// Square-free decomposition p = content * prod part_i^i (Yun).
std::vector<std::pair<IntPoly, int>> squarefree_decomposition(const IntPoly& p);

// Upper bound on |coefficient| of any integer factor of p.
Int mignotte_factor_bound(const IntPoly& p);

}  // namespace cdx

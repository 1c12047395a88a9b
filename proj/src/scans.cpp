#include "cdx/scans.hpp"

#include "cdx/cyclotomic.hpp"
#include "cdx/factor.hpp"
#include "cdx/periodic.hpp"
#include "cdx/quadenum.hpp"

#include <algorithm>
#include <cstdlib>
#include <future>
#include <sstream>
#include <thread>

namespace cdx {

int worker_count() {
    if (const char* env = std::getenv("CDX_THREADS")) {
        int n = std::atoi(env);
        if (n >= 1) return n;
    }
    unsigned hc = std::thread::hardware_concurrency();
    return hc == 0 ? 1 : static_cast<int>(hc);
}

namespace {

std::vector<long> window_integers(long d) {
    std::vector<long> xs;
    for (long x = -2 * d; x <= 2 * d; ++x)
        if (Int(x) * x < 4 * (Int(d) - 1)) xs.push_back(x);
    return xs;
}

struct ClosureOutcome {
    bool closed_all_k = false;
    PeriodicCertificate cert;
    std::vector<std::pair<long, Int>> base_checks;  // exact G_k for k in [3, k_min)
    ExactScanResult scan;                            // used when not closed
    bool used_scan = false;
};

std::vector<long> scan_targets(Mode mode) {
    return std::vector<long>{mode == Mode::defect ? -2L : 2L};
}

std::vector<long> both_targets() { return {2L, -2L}; }

// Try the modulus menu for an all-k certificate avoiding targets; fall back
// to an exact scan on failure.
ClosureOutcome close_x(long d, long x, long k_max, const std::vector<long>& targets) {
    ClosureOutcome out;
    static const long menu[] = {4, 6, 8, 10, 16, 32};
    for (long k_min : {3L, 4L, 5L}) {
        for (long m : menu) {
            std::vector<long> forbidden;
            for (long t : targets) forbidden.push_back(((t % m) + m) % m);
            std::sort(forbidden.begin(), forbidden.end());
            forbidden.erase(std::unique(forbidden.begin(), forbidden.end()), forbidden.end());
            PeriodicCertificate cert = mod_periodic_certificate_int(d, Int(x), m, forbidden, k_min);
            if (!cert.verified) continue;
            // exact checks for the k below k_min
            bool bases_ok = true;
            auto stream = g_values_int(d, Int(x));
            stream.advance_to(3);
            std::vector<std::pair<long, Int>> checks;
            for (long k = 3; k < k_min; ++k) {
                Int v = stream.value();
                checks.emplace_back(k, v);
                for (long t : targets)
                    if (v == t) bases_ok = false;
                stream.step();
            }
            if (!bases_ok) continue;
            out.closed_all_k = true;
            out.cert = std::move(cert);
            out.base_checks = std::move(checks);
            return out;
        }
    }
    out.used_scan = true;
    out.scan = exact_scan(d, Int(x), k_max, targets);
    return out;
}

struct EliminationCondition {
    long divisor;        // 3, 4 or 6
    long offset;         // compare polynomial G + offset
    bool applicable;
    bool irreducible;    // meaningful when applicable
};

// Secondary elimination of a hit G_{d,k}(x) = value via the order congruence
// reducibility requirements.
struct HitElimination {
    long k;
    Int value;
    Mode mode;
    Int n;
    std::vector<EliminationCondition> conditions;
    bool eliminated = false;
};

HitElimination eliminate_hit(long d, long k, const Int& value) {
    HitElimination he;
    he.k = k;
    he.value = value;
    he.mode = value == -2 ? Mode::defect : Mode::excess;
    he.n = he.mode == Mode::defect ? Int(moore_bound(d, k) - 2) : Int(moore_bound(d, k) + 2);
    IntPoly g = g_poly(d, k);
    // defect: 3|n -> G+1, 4|n -> G, 6|n -> G-1; excess mirrors the signs.
    const long off3 = he.mode == Mode::defect ? 1 : -1;
    const long off6 = he.mode == Mode::defect ? -1 : 1;
    const std::pair<long, long> rules[] = {{3, off3}, {4, 0}, {6, off6}};
    for (auto [divisor, offset] : rules) {
        EliminationCondition c;
        c.divisor = divisor;
        c.offset = offset;
        c.applicable = he.n % divisor == 0;
        c.irreducible = false;
        if (c.applicable) {
            IntPoly shifted = g + IntPoly::constant(Int(offset));
            c.irreducible = is_irreducible(shifted).irreducible;
            if (c.irreducible) he.eliminated = true;
        }
        he.conditions.push_back(c);
    }
    return he;
}

Json elimination_to_json(long d, const HitElimination& he) {
    Json j;
    j["d"] = d;
    j["k"] = he.k;
    j["value"] = json_int(he.value);
    j["mode"] = mode_name(he.mode);
    j["n"] = json_int(he.n);
    Json conds = Json::array();
    for (const auto& c : he.conditions) {
        conds.push_back(Json{{"divisor", c.divisor},
                             {"poly", c.offset == 0 ? "G" : (c.offset > 0 ? "G+1" : "G-1")},
                             {"applicable", c.applicable},
                             {"irreducible", c.irreducible}});
    }
    j["conditions"] = conds;
    j["eliminated"] = he.eliminated;
    return j;
}

}  // namespace

TheoremCertificate nonexistence_scan(long d, long k_max, Mode mode) {
    if (d < 5 || d % 2 == 0) throw std::invalid_argument("nonexistence_scan: d must be odd and >= 5");
    if (k_max < 3) throw std::invalid_argument("nonexistence_scan: k_max must be >= 3");
    TheoremCertificate cert;
    std::ostringstream id;
    id << "nonexistence-d" << d << "-" << mode_name(mode);
    cert.id = id.str();
    cert.parameters = Json{{"d", d}, {"k_max", k_max}, {"mode", mode_name(mode)}};

    std::vector<long> xs = window_integers(d);
    {
        Json j;
        j["d"] = d;
        j["window"] = xs;
        j["window_sq_bound"] = json_int(Int(4) * (d - 1));
        cert.add("even order forces an integer eigenvalue x with x^2 < 4(d-1)", "window",
                 std::move(j), true);
    }
    if (mode == Mode::excess)
        cert.add("girth-5 case (k = 2) is covered by the odd-degree girth-5 obstruction",
                 "delegation", Json{{"certificate", "girth5"}}, true);

    std::vector<long> targets = scan_targets(mode);

    // Close the window points in parallel; merge in ascending x.
    auto policy = worker_count() > 1 ? std::launch::async : std::launch::deferred;
    std::vector<std::future<ClosureOutcome>> futs;
    for (long x : xs) futs.push_back(std::async(policy, close_x, d, x, k_max, targets));

    bool all_ok = true;
    for (size_t i = 0; i < xs.size(); ++i) {
        ClosureOutcome out = futs[i].get();
        long x = xs[i];
        std::ostringstream claim;
        if (out.closed_all_k) {
            claim << "x=" << x << ": G_{" << d << ",k}(" << x << ") avoids targets for all k >= 3 (mod "
                  << out.cert.m << ")";
            Json j;
            j["x"] = x;
            j["certificate"] = out.cert.to_json();
            Json bc = Json::array();
            for (const auto& [k, v] : out.base_checks)
                bc.push_back(Json{{"k", k}, {"value", json_int(v)}});
            j["base_checks"] = bc;
            cert.add(claim.str(), "mod-periodic-closure", std::move(j), out.cert.verified);
            all_ok = all_ok && out.cert.verified;
        } else {
            claim << "x=" << x << ": exact scan over 3 <= k <= " << k_max;
            Json j;
            j["scan"] = Json{{"d", d},
                             {"x", json_int(out.scan.x)},
                             {"k_max", out.scan.k_max},
                             {"targets", out.scan.targets}};
            Json hits = Json::array();
            bool hits_ok = true;
            for (const auto& [k, v] : out.scan.hits) {
                HitElimination he = eliminate_hit(d, k, v);
                hits.push_back(elimination_to_json(d, he));
                hits_ok = hits_ok && he.eliminated;
            }
            j["hits"] = hits;
            cert.add(claim.str(), "exact-scan-closure", std::move(j), hits_ok);
            all_ok = all_ok && hits_ok;
        }
    }
    std::ostringstream conclusion;
    conclusion << "no degree-" << d << " graph with cyclic " << mode_name(mode) << " for k in scope";
    cert.add(conclusion.str(), "conclusion", Json{{"all_window_points_closed", all_ok}}, all_ok);
    cert.verified = cert.all_steps_verified();
    return cert;
}

TheoremCertificate nonexistence_scan_both(long d, long k_max) {
    if (d < 5 || d % 2 == 0) throw std::invalid_argument("nonexistence_scan: d must be odd and >= 5");
    TheoremCertificate cert;
    cert.id = "nonexistence-d" + std::to_string(d);
    cert.parameters = Json{{"d", d}, {"k_max", k_max}, {"mode", "both"}};

    std::vector<long> xs = window_integers(d);
    cert.add("even order forces an integer eigenvalue x with x^2 < 4(d-1)", "window",
             Json{{"d", d}, {"window", xs}, {"window_sq_bound", json_int(Int(4) * (d - 1))}}, true);
    cert.add("girth-5 case (k = 2) is covered by the odd-degree girth-5 obstruction", "delegation",
             Json{{"certificate", "girth5"}}, true);

    std::vector<long> targets = both_targets();
    auto policy = worker_count() > 1 ? std::launch::async : std::launch::deferred;
    std::vector<std::future<ClosureOutcome>> futs;
    for (long x : xs) futs.push_back(std::async(policy, close_x, d, x, k_max, targets));

    bool all_ok = true;
    for (size_t i = 0; i < xs.size(); ++i) {
        ClosureOutcome out = futs[i].get();
        long x = xs[i];
        std::ostringstream claim;
        if (out.closed_all_k) {
            claim << "x=" << x << ": G_{" << d << ",k}(" << x << ") != +-2 for all k >= 3 (mod "
                  << out.cert.m << ")";
            Json j;
            j["x"] = x;
            j["certificate"] = out.cert.to_json();
            Json bc = Json::array();
            for (const auto& [k, v] : out.base_checks)
                bc.push_back(Json{{"k", k}, {"value", json_int(v)}});
            j["base_checks"] = bc;
            cert.add(claim.str(), "mod-periodic-closure", std::move(j), out.cert.verified);
            all_ok = all_ok && out.cert.verified;
        } else {
            claim << "x=" << x << ": exact scan over 3 <= k <= " << k_max
                  << " with per-hit elimination";
            Json j;
            j["scan"] = Json{{"d", d},
                             {"x", json_int(out.scan.x)},
                             {"k_max", out.scan.k_max},
                             {"targets", out.scan.targets}};
            Json hits = Json::array();
            bool hits_ok = true;
            for (const auto& [k, v] : out.scan.hits) {
                HitElimination he = eliminate_hit(d, k, v);
                hits.push_back(elimination_to_json(d, he));
                hits_ok = hits_ok && he.eliminated;
            }
            j["hits"] = hits;
            cert.add(claim.str(), "exact-scan-closure", std::move(j), hits_ok);
            all_ok = all_ok && hits_ok;
        }
    }
    cert.add("no degree-" + std::to_string(d) + " graph with cyclic defect or excess in scope",
             "conclusion", Json{{"all_window_points_closed", all_ok}}, all_ok);
    cert.verified = cert.all_steps_verified();
    return cert;
}

// ============================ cubic certificate =============================

namespace {

Json quad_claim_payload(const PeriodicCertificate& pc,
                        const std::vector<std::pair<long, QuadInt>>& base_checks) {
    Json j;
    j["certificate"] = pc.to_json();
    Json bc = Json::array();
    for (const auto& [k, v] : base_checks)
        bc.push_back(Json{{"k", k}, {"value", json_quad(v)}});
    j["base_checks"] = bc;
    return j;
}

// Exact G_{3,k}(x) for the k = 2 (mod 4) indices below k_min.
std::vector<std::pair<long, QuadInt>> exact_class_checks(const QuadInt& x, long k_min) {
    std::vector<std::pair<long, QuadInt>> out;
    auto stream = g_values_quad(3, x);
    for (long k = 2; k < k_min; ++k) {
        stream.advance_to(k);
        if (k % 4 == 2) out.emplace_back(k, stream.value());
    }
    return out;
}

// Claim-1 elimination of one quadratic x: G_{3,k}(x) != 0 for k = 2 (mod 4),
// k >= 6, by a quad-ring modular certificate with exact small-k checks.
bool claim1_quad_mod(TheoremCertificate& cert, const QuadInt& x, const std::string& method,
                     Json extra = Json::object()) {
    const KFilter filter{4, 2};
    for (long k_min : {2L, 6L, 10L, 14L}) {
        for (long m : {2L, 4L, 8L, 16L}) {
            PeriodicCertificate pc =
                mod_periodic_certificate_quad(3, x, m, {{0, 0}}, k_min, filter);
            if (!pc.verified) continue;
            auto checks = exact_class_checks(x, k_min);
            bool checks_ok = true;
            for (const auto& [k, v] : checks)
                if (v.is_zero()) checks_ok = false;
            if (!checks_ok) continue;
            Json j = quad_claim_payload(pc, checks);
            for (auto it = extra.begin(); it != extra.end(); ++it) j[it.key()] = it.value();
            cert.add("G_{3,k}(" + x.str() + ") != 0 for k = 2 (mod 4)", method, std::move(j), true);
            return true;
        }
    }
    cert.add("G_{3,k}(" + x.str() + ") != 0 for k = 2 (mod 4)", method,
             Json{{"x", json_quad(x)}, {"error", "no modular certificate found"}}, false);
    return false;
}

// x has odd norm and x+1 is outside the ideal (2): G never enters (2).
bool x_plus_1_outside_2R(const QuadInt& x) {
    QuadInt xp1 = x + QuadInt::integer(x.r(), 1);
    Int u, v;
    xp1.omega_coords(u, v);
    return u % 2 != 0 || v % 2 != 0;
}

}  // namespace

TheoremCertificate cubic_certificate(long k_max) {
    if (k_max < 14) throw std::invalid_argument("cubic_certificate: k_max must be >= 14");
    TheoremCertificate cert;
    cert.id = "cubic";
    cert.parameters = Json{{"k_max", k_max}};

    // --- small k: girth 5 (k=2), diameter 3 / girth 7 (k=3), girth 9 (k=4) ---
    {
        IntPoly g2m1 = g_poly(3, 2) - IntPoly::constant(1);
        auto irr = is_irreducible(g2m1);
        cert.add("k=2 (girth 5): order 12 = 0 (mod 3), G_{3,2}-1 must be reducible but is not",
                 "irreducibility",
                 Json{{"poly", json_poly(g2m1)}, {"irreducible", irr.irreducible},
                      {"certificate", irr.certificate}, {"n", json_int(moore_bound(3, 2) + 2)}},
                 irr.irreducible);
    }
    {
        auto f = has_factor_degree_le2(g_poly(3, 3));
        cert.add("k=3: G_{3,3} has no factor of degree 1 or 2", "factor-degree-le2",
                 Json{{"poly", json_poly(g_poly(3, 3))}, {"found", f.has_value()}}, !f.has_value());
    }
    {
        auto irr = is_irreducible(g_poly(3, 4));
        cert.add("k=4 (girth 9): order 48 = 0 (mod 4), G_{3,4} must be reducible but is not",
                 "irreducibility",
                 Json{{"poly", json_poly(g_poly(3, 4))}, {"irreducible", irr.irreducible},
                      {"certificate", irr.certificate}, {"n", json_int(moore_bound(3, 4) + 2)}},
                 irr.irreducible);
    }

    // --- integer window: x = -2, 0, 2 are 0 (mod 4) for k >= 4; x = 1 is 4 (mod 8) ---
    for (long x : {-2L, 0L, 2L}) {
        PeriodicCertificate pc = mod_periodic_certificate_int(3, Int(x), 4, {2L}, 4);
        cert.add("G_{3,k}(" + std::to_string(x) + ") = 0 (mod 4) for k >= 4", "mod-periodic",
                 pc.to_json(), pc.verified);
    }
    {
        PeriodicCertificate pc =
            mod_periodic_certificate_int(3, Int(1), 8, complement_residues(8, {4}), 3);
        cert.add("G_{3,k}(1) = 4 (mod 8) for k >= 3", "mod-periodic", pc.to_json(), pc.verified);
    }

    // --- x = -1: mod 16 pattern {2,10}; defect value -2 is never attained ---
    {
        PeriodicCertificate pc =
            mod_periodic_certificate_int(3, Int(-1), 16, complement_residues(16, {2, 10}), 4);
        cert.add("G_{3,k}(-1) = 2 or 10 (mod 16) for k >= 4 (so never -2: no cyclic defect)",
                 "mod-periodic", pc.to_json(), pc.verified);
    }
    // --- x = -1 mod 32: on k = 0 (mod 4), k >= 8 the value 2 is excluded ---
    {
        PeriodicCertificate pc =
            mod_periodic_certificate_int(3, Int(-1), 32, {2L}, 8, KFilter{4, 0});
        auto stream = g_values_int(3, Int(-1));
        stream.advance_to(4);
        Int g4 = stream.value();
        Json j;
        j["certificate"] = pc.to_json();
        j["exact_k4"] = Json{{"k", 4}, {"value", json_int(g4)},
                             {"eliminated_by", "girth-9 step (G_{3,4} irreducible)"}};
        cert.add("G_{3,k}(-1) = 2 attainable only for k = 2 (mod 4) (k = 4 handled separately)",
                 "mod-periodic", std::move(j), pc.verified && g4 == 2);
    }
    // informational exact hit list at x = -1
    {
        ExactScanResult scan = exact_scan(3, Int(-1), k_max, {2L, -2L});
        Json hits = Json::array();
        for (const auto& [k, v] : scan.hits) hits.push_back(Json{{"k", k}, {"value", json_int(v)}});
        cert.add("exact +-2 hits of G_{3,k}(-1) up to k_max", "exact-scan",
                 Json{{"d", 3}, {"x", json_int(Int(-1))}, {"k_max", k_max},
                      {"targets", std::vector<long>{2, -2}}, {"hits", hits}},
                 true);
    }

    // --- order divisibility: excess order 3*2^k is divisible by 12 for k >= 2 ---
    {
        bool ok = true;
        for (long k = 2; k <= 40; ++k) {
            Int n = moore_bound(3, k) + 2;
            if (n != 3 * pow_int(Int(2), k) || n % 12 != 0) ok = false;
        }
        cert.add("excess order n = 3*2^k is divisible by 12 (so G, G-1, G+1 all need roots)",
                 "order-divisibility", Json{{"checked_k_upto", 40}, {"divisors", {3, 4, 12}}}, ok);
    }

    // --- Claim 1: among the 42 window candidates only x = -2 has G = 0 on the class ---
    {
        ScaledPeriodCertificate sc = scaled_period_certificate(3, QuadInt::integer(Int(2), -2), {2L, -2L});
        bool ok = sc.zero_classes == std::vector<long>{2} && sc.p == 4 &&
                  sc.c == QuadInt::integer(Int(2), -4);
        cert.add("x=-2: scaled period (4,-4); G_{3,k}(-2) = 0 exactly for k = 2 (mod 4)",
                 "scaled-period", sc.to_json(), ok && sc.verified);
    }
    {
        // x in {0, 1, 2} never vanish: 0 and 2 by scaled periodicity, 1 by the mod-8 pattern.
        for (long x : {0L, 2L}) {
            ScaledPeriodCertificate sc = scaled_period_certificate(3, QuadInt::integer(Int(2), x));
            cert.add("G_{3,k}(" + std::to_string(x) + ") is never 0 (scaled periodicity, no zero class)",
                     "scaled-period", sc.to_json(), sc.verified && sc.zero_classes.empty());
        }
        // G_{3,2}(1) = 0 sits at k = 2, the girth-5 case already closed above.
        PeriodicCertificate pc = mod_periodic_certificate_int(3, Int(1), 8, {0L}, 3);
        cert.add("G_{3,k}(1) != 0 for k >= 3 (mod-8 pattern)", "mod-periodic", pc.to_json(),
                 pc.verified);
    }

    // The 38 quadratic integers, dispatched by the method the proof uses.
    std::vector<QuadInt> window38 = enumerate_quadratic_integers(3);
    {
        cert.add("window candidate list: 38 quadratic integers in (-2sqrt2, 2sqrt2)", "quad-enum",
                 Json{{"d", 3}, {"count", window38.size()}}, window38.size() == 38);
    }
    bool claim1_ok = true;
    for (const QuadInt& x : window38) {
        Int u, v;
        // method selection mirrors the proof structure
        bool odd_norm = x.norm() % 2 != 0;
        if (odd_norm && x_plus_1_outside_2R(x)) {
            // ring-mod-2 ideal argument; the mod-2 residue run is the checkable core
            PeriodicCertificate pc = mod_periodic_certificate_quad(3, x, 2, {{0, 0}}, 1);
            Json j;
            j["certificate"] = pc.to_json();
            j["norm"] = json_int(x.norm());
            QuadInt xp1 = x + QuadInt::integer(x.r(), 1);
            xp1.omega_coords(u, v);
            j["x_plus_1_omega_coords"] = Json::array({json_int(u), json_int(v)});
            j["x_plus_1_in_ideal_2"] = false;
            cert.add("G_{3,k}(" + x.str() + ") never enters the ideal (2) (odd norm, x+1 outside)",
                     "ring-mod-2", std::move(j), pc.verified);
            claim1_ok = claim1_ok && pc.verified;
            continue;
        }
        auto sp = companion_scalar_period(3, x, 60);
        if (sp) {
            ScaledPeriodCertificate sc = scaled_period_certificate(3, x);
            bool class_clear = true;
            for (long z : sc.zero_classes)
                if (z % 4 == 2) class_clear = false;
            cert.add("G_{3,k}(" + x.str() + ") has no zeros with k = 2 (mod 4) (scaled periodicity)",
                     "scaled-period", sc.to_json(), sc.verified && class_clear);
            claim1_ok = claim1_ok && sc.verified && class_clear;
            continue;
        }
        claim1_ok = claim1_quad_mod(cert, x, "quad-mod") && claim1_ok;
    }

    // --- Claim 2: needing G(x) = 1 with G(-2) = 0 and G(-1) = 2 forces unit norms ---
    {
        std::vector<QuadInt> survivors;
        Json rows = Json::array();
        for (const QuadInt& x : window38) {
            QuadInt xp1 = x + QuadInt::integer(x.r(), 1);
            QuadInt xp2 = x + QuadInt::integer(x.r(), 2);
            Int n1 = xp1.norm(), n2 = xp2.norm();
            bool unit = (n1 == 1 || n1 == -1) && (n2 == 1 || n2 == -1);
            if (unit) {
                survivors.push_back(x);
                rows.push_back(Json{{"x", json_quad(x)}, {"norm_x_plus_1", json_int(n1)},
                                    {"norm_x_plus_2", json_int(n2)}});
            }
        }
        // expected: (-1 +- sqrt5)/2 and (-3 +- sqrt5)/2
        std::vector<QuadInt> expected = {
            QuadInt(Int(5), Int(-1), Int(1), 2), QuadInt(Int(5), Int(-1), Int(-1), 2),
            QuadInt(Int(5), Int(-3), Int(1), 2), QuadInt(Int(5), Int(-3), Int(-1), 2)};
        auto sorted = survivors;
        std::sort(sorted.begin(), sorted.end());
        std::sort(expected.begin(), expected.end());
        bool ok = sorted == expected;
        cert.add("claim 2: N(x+1), N(x+2) in {1,-1} leaves exactly (-1+-sqrt5)/2, (-3+-sqrt5)/2",
                 "norm-filter", Json{{"survivors", rows}, {"count", survivors.size()}}, ok);
    }

    // --- Claim 3 ---
    // (-3 +- sqrt5)/2: norms of the even-index subsequence are -1 (mod 4).
    for (int sgn : {1, -1}) {
        QuadInt x(Int(5), Int(-3), Int(sgn), 2);
        QuadInt x2 = x * x;
        QuadInt x2m4 = x2 - QuadInt::integer(Int(5), 4);
        Int norm_mult = x2m4.norm();
        auto stream = g_values_quad(3, x);
        stream.advance_to(2);
        QuadInt g2 = stream.value();
        Int norm_g2 = g2.norm();
        // even-index recurrence G_{k+4} = (x^2-4) G_{k+2} - 4 G_k comes from the
        // companion identity M^4 = (x^2-4) M^2 - 4 I; verify it at x exactly.
        bool identity_ok = true;
        {
            const Int r = x.r();
            QuadInt m00 = x, m01 = QuadInt::integer(r, -2), m10 = QuadInt::integer(r, 1),
                    m11 = QuadInt::integer(r, 0);
            // M^2
            QuadInt a00 = m00 * m00 + m01 * m10, a01 = m00 * m01 + m01 * m11;
            QuadInt a10 = m10 * m00 + m11 * m10, a11 = m10 * m01 + m11 * m11;
            // M^4
            QuadInt b00 = a00 * a00 + a01 * a10, b01 = a00 * a01 + a01 * a11;
            QuadInt b10 = a10 * a00 + a11 * a10, b11 = a10 * a01 + a11 * a11;
            QuadInt four = QuadInt::integer(r, 4);
            identity_ok = (b00 == x2m4 * a00 - four) && (b01 == x2m4 * a01) &&
                          (b10 == x2m4 * a10) && (b11 == x2m4 * a11 - four);
        }
        Int nm4 = norm_mult % 4;
        if (nm4 < 0) nm4 += 4;
        Int ng4 = norm_g2 % 4;
        if (ng4 < 0) ng4 += 4;
        bool ok = identity_ok && nm4 == 1 && ng4 == 3;
        Json j;
        j["x"] = json_quad(x);
        j["g2"] = json_quad(g2);
        j["norm_of_x2_minus_4"] = json_int(norm_mult);
        j["norm_of_g2"] = json_int(norm_g2);
        j["even_index_identity"] = identity_ok;
        cert.add("claim 3: N(G_{3,2t+2}(" + x.str() + ")) = -1 (mod 4), never the norm of an integer",
                 "norm-mod4", std::move(j), ok);
    }
    // (-1 +- sqrt5)/2: mod-4 residues cycle with period 3 in t and avoid 1.
    for (int sgn : {1, -1}) {
        QuadInt x(Int(5), Int(-1), Int(sgn), 2);
        PeriodicCertificate pc =
            mod_periodic_certificate_quad(3, x, 4, {{1, 0}}, 2, KFilter{2, 0});
        cert.add("claim 3: G_{3,k}(" + x.str() + ") != 1 (mod 4) for even k", "quad-mod",
                 pc.to_json(), pc.verified);
    }

    cert.add("no cubic graph with cyclic defect (D >= 3) or cyclic excess (odd g >= 5)",
             "conclusion", Json{{"claim1_ok", claim1_ok}}, claim1_ok);
    cert.verified = cert.all_steps_verified();
    return cert;
}

}  // namespace cdx

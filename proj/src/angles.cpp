#include "cdx/angles.hpp"

#include "cdx/cyclotomic.hpp"

#include <numeric>
#include <set>
#include <stdexcept>

namespace cdx {
namespace {

// Field Q[y]/Phi_N(y); elements are RatPoly reduced mod Phi_N.
struct CycloField {
    long n;
    RatPoly phi;

    explicit CycloField(long N) : n(N), phi(ratpoly_from(cyclotomic_poly(N))) {}

    RatPoly reduce(const RatPoly& p) const { return p % phi; }
    RatPoly mul(const RatPoly& a, const RatPoly& b) const { return reduce(a * b); }
    RatPoly inv(const RatPoly& a) const {
        // extended Euclid: s*a + t*phi = 1
        RatPoly r0 = phi, r1 = a, s0, s1 = RatPoly::constant(Rat(1));
        while (!r1.is_zero() && r1.degree() > 0) {
            RatPoly q, r;
            RatPoly::divmod(r0, r1, q, r);
            RatPoly s2 = s0 - q * s1;
            r0 = std::move(r1);
            r1 = std::move(r);
            s0 = std::move(s1);
            s1 = std::move(s2);
        }
        if (r1.is_zero()) throw std::invalid_argument("CycloField: not invertible");
        Rat c = r1.coeff(0);
        return reduce(s1 * RatPoly::constant(Rat(1) / c));
    }
    RatPoly ypow(long e) const {
        long em = ((e % n) + n) % n;
        return reduce(RatPoly::from_intpoly(IntPoly::monomial(Int(1), static_cast<int>(em))));
    }
};

}  // namespace

std::vector<AngleCandidate> angle_candidate_list() {
    std::vector<AngleCandidate> out;
    auto add = [&](long r, long s, int deg, std::string label) {
        out.push_back(AngleCandidate{r, s, deg, std::move(label)});
    };
    // degree 1: cos in {-1/2, 0, 1/2}
    add(2, 3, 1, "cos=-1/2");
    add(1, 2, 1, "cos=0");
    add(1, 3, 1, "cos=1/2");
    // degree 2: cos in {+-sqrt3/2, +-sqrt2/2, +-(1+sqrt5)/4, +-(-1+sqrt5)/4}
    add(1, 6, 2, "cos=sqrt3/2");
    add(5, 6, 2, "cos=-sqrt3/2");
    add(1, 4, 2, "cos=sqrt2/2");
    add(3, 4, 2, "cos=-sqrt2/2");
    add(1, 5, 2, "cos=(1+sqrt5)/4");
    add(4, 5, 2, "cos=-(1+sqrt5)/4");
    add(2, 5, 2, "cos=(-1+sqrt5)/4");
    add(3, 5, 2, "cos=(1-sqrt5)/4");
    // degree 4: alpha = 2 pi r/s with s in {15, 16, 20, 24, 30}; written as
    // the twenty reduced pi-fractions.
    const std::pair<long, long> case_iii[] = {
        {1, 15}, {1, 12}, {1, 10}, {1, 8},  {2, 15},  {4, 15},  {3, 10},
        {3, 8},  {5, 12}, {7, 15}, {8, 15}, {7, 12},  {5, 8},   {7, 10},
        {11, 15}, {13, 15}, {7, 8}, {9, 10}, {11, 12}, {14, 15}};
    for (auto [num, den] : case_iii)
        add(num, den, 4, "alpha=" + std::to_string(num) + "pi/" + std::to_string(den));
    return out;
}

AngleScanResult rational_angle_scan() {
    AngleScanResult result;
    for (const AngleCandidate& cand : angle_candidate_list()) {
        long N = 2 * cand.s / std::gcd(2 * cand.s, cand.r);  // order of e^{i pi r/s}
        CycloField field(N);
        AngleScanRow row;
        row.candidate = cand;
        row.period = N;

        // 2cos(alpha) = zeta + zeta^-1 with zeta = y.
        RatPoly two_cos = field.reduce(field.ypow(1) + field.ypow(-1));

        // U_k stream in the field; sign of U_k(cos alpha) = sign of
        // sin((k+1) pi r / s), decided by (k+1) r mod 2s.
        auto u_sign = [&](long k) -> int {
            long v = ((k + 1) * cand.r) % (2 * cand.s);
            if (v == 0 || v == cand.s) return 0;
            return v < cand.s ? 1 : -1;
        };
        std::vector<RatPoly> u(N + 1);
        u[0] = RatPoly::constant(Rat(1));
        if (N >= 1) u[1] = two_cos;
        for (long k = 2; k <= N; ++k) u[k] = field.reduce(field.mul(two_cos, u[k - 1]) - u[k - 2]);

        for (long k = 1; k <= N; ++k) {
            long kr = k % N;
            if (u_sign(k) == 0) {
                if (!u[k].is_zero()) throw std::logic_error("angle scan: sign oracle disagrees (zero)");
                row.pole_residues.push_back(kr);
                continue;
            }
            if (u[k].is_zero()) throw std::logic_error("angle scan: sign oracle disagrees (nonzero)");
            AngleHit hit;
            hit.k_residue = kr;
            hit.period = N;
            hit.ratio_defined = true;
            // rho = U_{k-1}/U_k; need rho < 0 and rho^2 a rational integer.
            int sign_prev = u_sign(k - 1);
            hit.q_negative = sign_prev != 0 && sign_prev != u_sign(k);
            RatPoly rho_sq = field.mul(field.mul(u[k - 1], u[k - 1]), field.inv(field.mul(u[k], u[k])));
            bool rational = rho_sq.degree() <= 0;
            Rat val = rational ? (rho_sq.is_zero() ? Rat(0) : rho_sq.coeff(0)) : Rat(0);
            hit.q_integral = rational && val.get_den() == 1;
            if (hit.q_integral && hit.q_negative) {
                Int d = val.get_num() + 1;
                if (d >= 2) {
                    hit.d = d.get_si();
                    row.hits.push_back(hit);
                    if (*hit.d >= 5) result.no_degree_ge_5 = false;
                }
            }
        }
        result.rows.push_back(std::move(row));
    }

    // Expected solution table. Odd degrees: exactly the d=3 cases, at
    // cos = -sqrt2/2 (k = 2 mod 4) and alpha in {5pi/12, 11pi/12}
    // (k = 9 mod 12); no odd degree >= 5 anywhere. The remaining solutions
    // all have even degree (d = 2 cycles, and the d = 4 family matching the
    // Pell records with odd a), which the odd-degree setting excludes; they
    // are recorded rather than suppressed.
    std::set<std::tuple<std::string, long, long>> found, expected;
    for (const auto& row : result.rows)
        for (const auto& hit : row.hits)
            found.insert({row.candidate.label, hit.k_residue, *hit.d});
    expected = {
        {"cos=-1/2", 1, 2},            // period 3: k = 1 (mod 3)
        {"cos=-sqrt3/2", 4, 4},        // period 12: k = 4, 10 (mod 12), d even
        {"cos=-sqrt3/2", 10, 4},
        {"cos=-sqrt2/2", 2, 3},        // period 8: k = 2, 6 (mod 8) i.e. 2 (mod 4)
        {"cos=-sqrt2/2", 6, 3},
        {"cos=-(1+sqrt5)/4", 2, 2},    // period 5: k = 2 (mod 5)
        {"cos=(-1+sqrt5)/4", 2, 2},
        {"alpha=2pi/15", 7, 2},        // period 15: k = 7 (mod 15)
        {"alpha=4pi/15", 7, 2},
        {"alpha=8pi/15", 7, 2},
        {"alpha=14pi/15", 7, 2},
        {"alpha=5pi/12", 9, 3},        // period 24: k = 9, 21 (mod 24) i.e. 9 (mod 12)
        {"alpha=5pi/12", 21, 3},
        {"alpha=11pi/12", 9, 3},
        {"alpha=11pi/12", 21, 3},
    };
    bool odd_solutions_match = true;
    for (const auto& [label, kres, d] : found)
        if (d % 2 == 1 && d != 3) odd_solutions_match = false;
    result.verified = found == expected && result.no_degree_ge_5 && odd_solutions_match;
    return result;
}

}  // namespace cdx

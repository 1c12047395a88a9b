#include "cdx/periodic.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

namespace cdx {
namespace {

// Generic cycle detection on the pair state, encoding residues as (a, b).
struct ResidueRun {
    long preperiod = 0, period = 0;
    std::vector<std::pair<long, long>> trace;  // G_k for k = 0..preperiod+period
};

template <class Step>
ResidueRun run_pair_recurrence(std::pair<long, long> g0, std::pair<long, long> g1, Step step) {
    // state at k: (G_{k-1}, G_k), k >= 1
    std::map<std::array<long, 4>, long> seen;
    ResidueRun run;
    run.trace.push_back(g0);
    run.trace.push_back(g1);
    std::pair<long, long> prev = g0, cur = g1;
    long k = 1;
    while (true) {
        std::array<long, 4> key{prev.first, prev.second, cur.first, cur.second};
        auto it = seen.find(key);
        if (it != seen.end()) {
            run.preperiod = it->second;
            run.period = k - it->second;
            run.trace.resize(run.preperiod + run.period + 1);
            return run;
        }
        seen[key] = k;
        std::pair<long, long> nxt = step(cur, prev);
        prev = cur;
        cur = nxt;
        ++k;
        run.trace.push_back(cur);
    }
}

bool decide_avoidance(const ResidueRun& run, const std::vector<std::pair<long, long>>& forbidden,
                      long k_min, const KFilter& filter, std::optional<long>& witness) {
    // Indices >= preperiod repeat with the state period; combined with the
    // k-filter the decision closes after lcm(period, filter.modulus) steps.
    long span = std::lcm(run.period, filter.modulus);
    long upto = std::max(k_min, run.preperiod) + span;
    auto residue_at = [&](long k) {
        if (k <= run.preperiod + run.period) return run.trace[k];
        long kk = run.preperiod + (k - run.preperiod) % run.period;
        return run.trace[kk];
    };
    for (long k = k_min; k < upto; ++k) {
        if (!filter.matches(k)) continue;
        auto res = residue_at(k);
        for (const auto& f : forbidden)
            if (res == f) {
                witness = k;
                return false;
            }
    }
    return true;
}

}  // namespace

std::vector<long> complement_residues(long m, const std::vector<long>& allowed) {
    std::vector<long> out;
    for (long v = 0; v < m; ++v)
        if (std::find(allowed.begin(), allowed.end(), v) == allowed.end()) out.push_back(v);
    return out;
}

PeriodicCertificate mod_periodic_certificate_int(long d, const Int& x, long m,
                                                 const std::vector<long>& forbidden, long k_min,
                                                 KFilter filter) {
    if (m < 2) throw std::invalid_argument("mod_periodic_certificate: m must be >= 2");
    PeriodicCertificate cert;
    cert.d = d;
    cert.x = QuadInt::integer(Int(2), x);
    cert.quad_ring = false;
    cert.m = m;
    cert.k_min = k_min;
    cert.k_filter = filter;
    for (long f : forbidden) cert.forbidden.emplace_back(((f % m) + m) % m, 0);

    long xm = ModInt::reduce(x, m).value();
    long am = ModInt::reduce(Int(d) - 1, m).value();
    auto step = [&](std::pair<long, long> cur, std::pair<long, long> prev) {
        long v = ((xm * cur.first - am * prev.first) % m + m * m) % m;
        return std::pair<long, long>(v, 0);
    };
    ResidueRun run = run_pair_recurrence({1 % m, 0}, {(xm + 1) % m, 0}, step);
    cert.preperiod = run.preperiod;
    cert.period = run.period;
    cert.trace = run.trace;
    cert.verified = decide_avoidance(run, cert.forbidden, k_min, filter, cert.witness_k);
    return cert;
}

PeriodicCertificate mod_periodic_certificate_quad(long d, const QuadInt& x, long m,
                                                  const std::vector<std::pair<long, long>>& forbidden,
                                                  long k_min, KFilter filter) {
    if (m < 2) throw std::invalid_argument("mod_periodic_certificate: m must be >= 2");
    PeriodicCertificate cert;
    cert.d = d;
    cert.x = x;
    cert.quad_ring = true;
    cert.m = m;
    cert.k_min = k_min;
    cert.k_filter = filter;
    for (auto [u, v] : forbidden) cert.forbidden.emplace_back(((u % m) + m) % m, ((v % m) + m) % m);

    ModQuad xm = ModQuad::reduce(x, m);
    ModQuad am = ModQuad::reduce(QuadInt::integer(x.r(), Int(d) - 1), m);
    auto step = [&](std::pair<long, long> cur, std::pair<long, long> prev) {
        long r = x.r().get_si();
        ModQuad c(r, m, cur.first, cur.second), p(r, m, prev.first, prev.second);
        ModQuad n = xm * c - am * p;
        return std::pair<long, long>(n.u(), n.v());
    };
    ModQuad one = ModQuad::reduce(QuadInt::integer(x.r(), 1), m);
    ModQuad g1 = xm + one;
    ResidueRun run = run_pair_recurrence({one.u(), one.v()}, {g1.u(), g1.v()}, step);
    cert.preperiod = run.preperiod;
    cert.period = run.period;
    cert.trace = run.trace;
    cert.verified = decide_avoidance(run, cert.forbidden, k_min, filter, cert.witness_k);
    return cert;
}

ScaledPeriodCertificate scaled_period_certificate(long d, const QuadInt& x,
                                                  const std::vector<long>& targets, long p_max) {
    auto sp = companion_scalar_period(d, x, p_max);
    if (!sp) throw std::invalid_argument("scaled_period_certificate: no scalar period up to p_max");
    ScaledPeriodCertificate cert;
    cert.d = d;
    cert.x = x;
    cert.p = sp->p;
    cert.c = sp->c;
    cert.targets = targets;

    // base values G_0 .. G_{p-1}
    {
        QuadInt prev = QuadInt::integer(x.r(), 1);
        QuadInt cur = x + QuadInt::integer(x.r(), 1);
        cert.base_values.push_back(prev);
        if (cert.p >= 2) cert.base_values.push_back(cur);
        QuadInt a = QuadInt::integer(x.r(), Int(d) - 1);
        for (long k = 2; k < cert.p; ++k) {
            QuadInt nxt = x * cur - a * prev;
            prev = cur;
            cur = nxt;
            cert.base_values.push_back(cur);
        }
    }
    for (long k0 = 0; k0 < cert.p; ++k0)
        if (cert.base_values[k0].is_zero()) cert.zero_classes.push_back(k0);

    cert.verified = true;
    // Complete target-hit list when c is a rational integer of modulus >= 2:
    // along class k0, |G_{k0 + jp}| = |c|^j |G_{k0}| grows strictly.
    if (!targets.empty()) {
        if (cert.c.is_rational_integer() && abs_int(cert.c.a()) >= 2) {
            Int cmag = abs_int(cert.c.a());
            Int tmax(0);
            for (long t : targets) tmax = std::max(tmax, abs_int(Int(t)));
            for (long k0 = 0; k0 < cert.p; ++k0) {
                const QuadInt& base = cert.base_values[k0];
                if (!base.is_rational_integer()) {
                    if (base.is_zero()) continue;
                    continue;  // irrational along this class: never an integer target
                }
                if (base.a() == 0) continue;
                Int mag = abs_int(base.a());
                Int val = base.a();
                long j = 0;
                while (mag <= tmax) {
                    for (long t : targets)
                        if (val == t) cert.target_hits.emplace_back(k0 + j * cert.p, Int(t));
                    mag *= cmag;
                    val *= cert.c.a();
                    ++j;
                }
            }
            std::sort(cert.target_hits.begin(), cert.target_hits.end());
            cert.hits_complete = true;
        } else {
            cert.hits_complete = false;
        }
    }
    return cert;
}

ExactScanResult exact_scan(long d, const Int& x, long k_max, const std::vector<long>& targets) {
    if (k_max < 3) throw std::invalid_argument("exact_scan: k_max must be >= 3");
    ExactScanResult res;
    res.d = d;
    res.x = x;
    res.k_max = k_max;
    res.targets = targets;
    auto stream = g_values_int(d, x);
    stream.advance_to(3);
    for (long k = 3; k <= k_max; ++k) {
        const Int& v = stream.value();
        for (long t : targets)
            if (v == t) res.hits.emplace_back(k, Int(t));
        if (k < k_max) stream.step();
    }
    return res;
}

// ------------------------------ JSON forms ---------------------------------

Json PeriodicCertificate::to_json() const {
    Json j;
    j["d"] = d;
    j["x"] = json_quad(x);
    j["ring"] = quad_ring ? "quad" : "int";
    j["m"] = m;
    j["preperiod"] = preperiod;
    j["period"] = period;
    j["k_min"] = k_min;
    j["k_filter"] = Json{{"modulus", k_filter.modulus}, {"residue", k_filter.residue}};
    Json fb = Json::array();
    for (auto [u, v] : forbidden) fb.push_back(Json::array({u, v}));
    j["forbidden"] = fb;
    Json tr = Json::array();
    for (auto [u, v] : trace) tr.push_back(Json::array({u, v}));
    j["trace"] = tr;
    j["verified"] = verified;
    if (witness_k) j["witness_k"] = *witness_k;
    return j;
}

PeriodicCertificate PeriodicCertificate::from_json(const Json& j) {
    PeriodicCertificate c;
    c.d = j.at("d").get<long>();
    c.x = quad_from_json(j.at("x"));
    c.quad_ring = j.at("ring").get<std::string>() == "quad";
    c.m = j.at("m").get<long>();
    c.preperiod = j.at("preperiod").get<long>();
    c.period = j.at("period").get<long>();
    c.k_min = j.at("k_min").get<long>();
    c.k_filter.modulus = j.at("k_filter").at("modulus").get<long>();
    c.k_filter.residue = j.at("k_filter").at("residue").get<long>();
    for (const auto& f : j.at("forbidden")) c.forbidden.emplace_back(f[0].get<long>(), f[1].get<long>());
    for (const auto& t : j.at("trace")) c.trace.emplace_back(t[0].get<long>(), t[1].get<long>());
    c.verified = j.at("verified").get<bool>();
    if (j.contains("witness_k")) c.witness_k = j.at("witness_k").get<long>();
    return c;
}

bool PeriodicCertificate::recheck() const {
    std::vector<long> fb_int;
    std::vector<std::pair<long, long>> fb_quad;
    for (auto [u, v] : forbidden) {
        fb_int.push_back(u);
        fb_quad.emplace_back(u, v);
    }
    PeriodicCertificate fresh =
        quad_ring ? mod_periodic_certificate_quad(d, x, m, fb_quad, k_min, k_filter)
                  : mod_periodic_certificate_int(d, x.a(), m, fb_int, k_min, k_filter);
    return fresh.preperiod == preperiod && fresh.period == period && fresh.trace == trace &&
           fresh.verified == verified && fresh.witness_k == witness_k;
}

Json ScaledPeriodCertificate::to_json() const {
    Json j;
    j["d"] = d;
    j["x"] = json_quad(x);
    j["p"] = p;
    j["c"] = json_quad(c);
    Json bv = Json::array();
    for (const auto& b : base_values) bv.push_back(json_quad(b));
    j["base_values"] = bv;
    j["zero_classes"] = zero_classes;
    j["targets"] = targets;
    Json th = Json::array();
    for (const auto& [k, v] : target_hits) th.push_back(Json{{"k", k}, {"value", json_int(v)}});
    j["target_hits"] = th;
    j["hits_complete"] = hits_complete;
    j["verified"] = verified;
    return j;
}

ScaledPeriodCertificate ScaledPeriodCertificate::from_json(const Json& j) {
    ScaledPeriodCertificate c;
    c.d = j.at("d").get<long>();
    c.x = quad_from_json(j.at("x"));
    c.p = j.at("p").get<long>();
    c.c = quad_from_json(j.at("c"));
    for (const auto& b : j.at("base_values")) c.base_values.push_back(quad_from_json(b));
    c.zero_classes = j.at("zero_classes").get<std::vector<long>>();
    c.targets = j.at("targets").get<std::vector<long>>();
    for (const auto& t : j.at("target_hits"))
        c.target_hits.emplace_back(t.at("k").get<long>(), int_from_json(t.at("value")));
    c.hits_complete = j.at("hits_complete").get<bool>();
    c.verified = j.at("verified").get<bool>();
    return c;
}

bool ScaledPeriodCertificate::recheck() const {
    ScaledPeriodCertificate fresh = scaled_period_certificate(d, x, targets, p);
    return fresh.p == p && fresh.c == c && fresh.base_values == base_values &&
           fresh.zero_classes == zero_classes && fresh.target_hits == target_hits &&
           fresh.hits_complete == hits_complete && fresh.verified == verified;
}

}  // namespace cdx

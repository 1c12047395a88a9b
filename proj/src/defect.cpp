#include "cdx/defect.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace cdx {

IntMatrix adjacency_matrix(const Graph& g) {
    IntMatrix a(g.order());
    for (int v = 0; v < g.order(); ++v)
        for (int u : g.neighbors(v)) a.at(v, u) = 1;
    return a;
}

IntMatrix g_of_adjacency(long d, long k, const Graph& g) {
    int deg = 0;
    if (!g.is_regular(&deg) || deg != d)
        throw std::invalid_argument("g_of_adjacency: graph is not d-regular");
    int n = g.order();
    IntMatrix a = adjacency_matrix(g);
    IntMatrix prev = IntMatrix::identity(n);
    if (k == 0) return prev;
    IntMatrix cur = a;
    for (int i = 0; i < n; ++i) cur.at(i, i) += 1;  // G_1 = A + I
    for (long m = 1; m < k; ++m) {
        IntMatrix next = a * cur - prev * Int(d - 1);
        prev = std::move(cur);
        cur = std::move(next);
    }
    return cur;
}

Int cs_total(const CycleStructure& cs) {
    Int t(0);
    for (const auto& [len, mult] : cs) t += Int(len) * mult;
    return t;
}

std::string cs_str(const CycleStructure& cs) {
    std::ostringstream os;
    os << "{";
    bool first = true;
    for (const auto& [len, mult] : cs) {
        if (!first) os << ",";
        os << "[" << len << "]^" << mult;
        first = false;
    }
    os << "}";
    return os.str();
}

namespace {

// Decomposes a validated B (row sums 2, entries {0,1,2}, zero diagonal) into
// vertex-disjoint cycles; entry 2 stands for a 2-cycle pair.
bool cycles_from_b(const IntMatrix& b, Mode mode, CycleStructure& cs, std::string& err) {
    int n = b.dim();
    std::vector<char> seen(n, 0);
    for (int s = 0; s < n; ++s) {
        if (seen[s]) continue;
        // entry-2 pair = C_2 component (defect side only)
        int two_at = -1, ones = 0;
        for (int j = 0; j < n; ++j) {
            if (b.at(s, j) == 2) two_at = j;
            if (b.at(s, j) == 1) ++ones;
        }
        if (two_at >= 0) {
            if (mode == Mode::excess) {
                err = "entry 2 in an excess matrix";
                return false;
            }
            if (ones != 0 || b.at(two_at, s) != 2) {
                err = "malformed C_2 component";
                return false;
            }
            seen[s] = seen[two_at] = 1;
            cs[2] += 1;
            continue;
        }
        if (ones != 2) {
            err = "row without two cycle neighbors";
            return false;
        }
        int prev = -1, cur = s;
        long length = 0;
        while (true) {
            seen[cur] = 1;
            ++length;
            int nxt = -1;
            for (int j = 0; j < n; ++j)
                if (b.at(cur, j) == 1 && j != prev) { nxt = j; break; }
            if (nxt < 0) {
                err = "cycle walk broke off";
                return false;
            }
            if (nxt == s) break;
            if (seen[nxt]) {
                err = "cycle walk revisited a vertex";
                return false;
            }
            prev = cur;
            cur = nxt;
        }
        if (length < 3) {
            err = "0/1 cycle of length < 3";
            return false;
        }
        cs[length] += 1;
    }
    return true;
}

}  // namespace

DefectExcessReport classify_defect_excess(const Graph& g, long k, Mode mode) {
    DefectExcessReport rep;
    rep.mode = mode;
    rep.k = k;
    int d = 0;
    if (!g.is_regular(&d))
        throw std::invalid_argument("classify_defect_excess: graph is not regular");
    rep.d = d;
    Int moore = moore_bound(d, k);
    Int n(g.order());
    Int eps = mode == Mode::defect ? Int(moore - n) : Int(n - moore);
    if (eps != 0 && eps != 2)
        throw std::invalid_argument("classify_defect_excess: order is neither M_{d,k} nor M_{d,k} -/+ 2");
    rep.epsilon = eps.get_si();

    IntMatrix gm = g_of_adjacency(d, k, g);
    IntMatrix j = IntMatrix::ones(g.order());
    IntMatrix b = mode == Mode::defect ? gm - j : j - gm;
    rep.B = b;

    if (rep.epsilon == 0) {
        rep.valid = b.is_zero();
        if (!rep.valid) rep.diagnostics.push_back("Moore order but B != 0");
        return rep;
    }

    bool ok = true;
    if (!b.is_symmetric()) {
        rep.diagnostics.push_back("B not symmetric");
        ok = false;
    }
    for (int i = 0; i < b.dim() && ok; ++i) {
        if (b.at(i, i) != 0) {
            rep.diagnostics.push_back("B has a nonzero diagonal entry");
            ok = false;
            break;
        }
        Int row(0);
        for (int jx = 0; jx < b.dim(); ++jx) {
            const Int& e = b.at(i, jx);
            if (e < 0 || e > 2) {
                rep.diagnostics.push_back("B entry outside {0,1,2}");
                ok = false;
                break;
            }
            row += e;
        }
        if (ok && row != 2) {
            rep.diagnostics.push_back("B row sum != 2");
            ok = false;
        }
    }
    if (ok) {
        std::string err;
        ok = cycles_from_b(b, mode, rep.cycle_structure, err);
        if (!ok) rep.diagnostics.push_back(err);
    }
    rep.valid = ok;
    rep.cyclic = ok && rep.cycle_structure.size() == 1 &&
                 rep.cycle_structure.begin()->first == g.order() &&
                 rep.cycle_structure.begin()->second == 1;
    return rep;
}

RestrictionRecord kernel_restriction(const Graph& g, const IntMatrix& B) {
    int n = g.order();
    if (n % 4 != 0) throw std::invalid_argument("kernel_restriction: order must be 0 (mod 4)");
    if (B.dim() != n) throw std::invalid_argument("kernel_restriction: dimension mismatch");

    // Relabel so B becomes the canonical cycle 0-1-...-(n-1)-0.
    std::vector<int> order_on_cycle;
    order_on_cycle.reserve(n);
    int prev = -1, cur = 0;
    for (int step = 0; step < n; ++step) {
        order_on_cycle.push_back(cur);
        int nxt = -1;
        for (int j = 0; j < n; ++j)
            if (B.at(cur, j) == 1 && j != prev) { nxt = j; break; }
        if (nxt < 0) throw std::invalid_argument("kernel_restriction: B is not a single cycle");
        prev = cur;
        cur = nxt;
    }
    if (cur != 0) throw std::invalid_argument("kernel_restriction: B is not a single n-cycle");
    std::vector<int> pos(n);
    for (int i = 0; i < n; ++i) pos[order_on_cycle[i]] = i;

    // u = (1,0,-1,0,...), v = (0,1,0,-1,...) in cycle positions.
    auto uval = [&](int p) { return p % 2 == 0 ? (p % 4 == 0 ? 1 : -1) : 0; };
    auto vval = [&](int p) { return p % 2 == 1 ? (p % 4 == 1 ? 1 : -1) : 0; };

    std::vector<long> Au(n, 0), Av(n, 0);
    for (int w = 0; w < n; ++w)
        for (int nb : g.neighbors(w)) {
            Au[pos[w]] += uval(pos[nb]);
            Av[pos[w]] += vval(pos[nb]);
        }

    RestrictionRecord rec;
    rec.alpha = Au[0];  // position 0 has u=1, v=0
    rec.beta = Au[1];   // position 1 has u=0, v=1
    rec.delta = Av[0];
    rec.gamma = Av[1];
    for (int p = 0; p < n; ++p) {
        if (Au[p] != rec.alpha * uval(p) + rec.beta * vval(p) ||
            Av[p] != rec.delta * uval(p) + rec.gamma * vval(p))
            throw std::invalid_argument("kernel_restriction: A does not stabilize span{u,v}");
    }
    rec.beta_equals_delta = rec.beta == rec.delta;
    rec.trace_even = (rec.alpha + rec.gamma) % 2 == 0;
    rec.restriction_charpoly = IntPoly{rec.alpha * rec.gamma - rec.beta * rec.delta,
                                       -(rec.alpha + rec.gamma), 1};
    return rec;
}

CongruenceReport congruence_report(long d, long D) {
    if (d < 3 || D < 2) throw std::invalid_argument("congruence_report: need d >= 3, D >= 2");
    CongruenceReport rep;
    rep.d = d;
    rep.D = D;
    rep.n = moore_bound(d, D) - 2;
    rep.d_divides_ok = rep.n % D == 0;
    if (D % 2 == 0) rep.even_D_rule_ok = d % 2 == 1;
    // prime power analysis of D
    long base = 0, m = D;
    for (long p = 2; p * p <= m; ++p)
        if (m % p == 0) { base = p; break; }
    if (base == 0) base = m;
    long q = D;
    while (q % base == 0) q /= base;
    bool prime_power = q == 1;
    if (prime_power && base % 2 == 1) rep.odd_prime_power_ok = (d - 1) % D == 0;
    if (prime_power && base == 2 && D >= 4) rep.two_power_ok = (d - 1) % (D / 2) == 0;
    rep.all_ok = rep.d_divides_ok && rep.even_D_rule_ok && rep.odd_prime_power_ok && rep.two_power_ok;
    auto mod_of = [&](long m2) { return static_cast<long>(Int(rep.n % m2).get_si()); };
    rep.n_mod_2 = mod_of(2);
    rep.n_mod_3 = mod_of(3);
    rep.n_mod_4 = mod_of(4);
    rep.n_mod_6 = mod_of(6);
    return rep;
}

}  // namespace cdx

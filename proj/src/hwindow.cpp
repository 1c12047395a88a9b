#include "cdx/hwindow.hpp"

#include "cdx/sturm.hpp"

#include <map>
#include <stdexcept>

namespace cdx {
namespace {

// Sparse Laurent polynomials over Q(sqrt 5).
struct Laurent {
    std::map<long, QuadRat> c;  // exponent -> coefficient

    void set(long e, QuadRat v) {
        if (v == QuadRat(0l))
            c.erase(e);
        else
            c[e] = std::move(v);
    }
    friend Laurent operator+(const Laurent& a, const Laurent& b) {
        Laurent r = a;
        for (const auto& [e, v] : b.c) {
            auto it = r.c.find(e);
            QuadRat nv = it == r.c.end() ? v : it->second + v;
            r.set(e, nv);
        }
        return r;
    }
    friend Laurent operator-(const Laurent& a, const Laurent& b) { return a + (b * QuadRat(-1l)); }
    friend Laurent operator*(const Laurent& a, const QuadRat& s) {
        Laurent r;
        for (const auto& [e, v] : a.c) r.set(e, v * s);
        return r;
    }
    friend Laurent operator*(const Laurent& a, const Laurent& b) {
        Laurent r;
        for (const auto& [ea, va] : a.c)
            for (const auto& [eb, vb] : b.c) {
                auto it = r.c.find(ea + eb);
                QuadRat nv = it == r.c.end() ? va * vb : it->second + va * vb;
                r.set(ea + eb, nv);
            }
        return r;
    }
    Laurent shifted(long by) const {  // multiply by r^by
        Laurent r;
        for (const auto& [e, v] : c) r.c[e + by] = v;
        return r;
    }
};

FieldPoly<QuadRat> to_poly(const Laurent& l) {
    long maxe = 0;
    for (const auto& [e, v] : l.c) {
        if (e < 0) throw std::logic_error("Laurent with negative exponent is not a polynomial");
        maxe = std::max(maxe, e);
    }
    std::vector<QuadRat> c(maxe + 1, QuadRat(0l));
    for (const auto& [e, v] : l.c) c[e] = v;
    return FieldPoly<QuadRat>(std::move(c));
}

// Count real roots of a square-free H over Q(sqrt 5) in the open rational
// interval (lo, hi).
int count_roots(const FieldPoly<QuadRat>& h, const Rat& lo, const Rat& hi) {
    return sturm_count_open(h, QuadRat(Int(5), lo, Rat(0)), QuadRat(Int(5), hi, Rat(0)));
}

Rat cauchy_bound_quadrat(const FieldPoly<QuadRat>& h) {
    // |root| <= 1 + max |c_i / c_n|; bound each |a + b sqrt5| by |a| + 3|b|.
    QuadRat lead = h.leading();
    Rat lead_low;  // a rational lower bound on |lead|
    {
        // |lead| >= |norm(lead)| / (|a| + 3|b|)
        Rat num = abs(lead.norm());
        Rat den = abs(lead.a()) + Rat(3) * abs(lead.b());
        if (num == 0 || den == 0) throw std::logic_error("cauchy_bound: degenerate leading coeff");
        lead_low = num / den;
    }
    Rat m(0);
    for (int i = 0; i < h.degree(); ++i) {
        QuadRat ci = h.coeff(i);
        Rat up = abs(ci.a()) + Rat(3) * abs(ci.b());
        Rat q = up / lead_low;
        if (q > m) m = q;
    }
    return m + 1;
}

}  // namespace

void h_paper_window(int branch, int target, Rat& lo, Rat& hi) {
    if (target == -2) {
        if (branch > 0) { lo = make_rat(1L, 20L); hi = Rat(9); }
        else { lo = make_rat(12L, 100L); hi = Rat(19); }
    } else {
        if (branch > 0) { lo = make_rat(1L, 20L); hi = Rat(8); }
        else { lo = make_rat(12L, 100L); hi = Rat(17); }
    }
}

RootWindow h_root_window(int branch, int s_shift, int target) {
    if (branch != 1 && branch != -1) throw std::invalid_argument("h_root_window: branch must be +-1");
    if (s_shift == 0 || s_shift > 2 || s_shift < -2)
        throw std::invalid_argument("h_root_window: shift must be in {+-1, +-2}");
    if (target != 2 && target != -2) throw std::invalid_argument("h_root_window: target must be +-2");

    RootWindow w;
    w.branch = branch;
    w.s_shift = s_shift;
    w.target = target;

    const QuadRat fifth(Int(5), make_rat(1L, 5L), Rat(0));
    const QuadRat half(Int(5), make_rat(1L, 2L), Rat(0));

    Laurent x;  // (r - 1/r - 4)/5
    x.set(1, fifth);
    x.set(-1, QuadRat(Int(5), make_rat(-1L, 5L), Rat(0)));
    x.set(0, QuadRat(Int(5), make_rat(-4L, 5L), Rat(0)));
    Laurent t;  // (r + 1/r)/sqrt(5) = (r + 1/r) * sqrt(5)/5
    QuadRat inv_sqrt5(Int(5), Rat(0), make_rat(1L, 5L));
    t.set(1, inv_sqrt5);
    t.set(-1, inv_sqrt5);

    Laurent three_x_plus_2 = x * QuadRat(3l);
    three_x_plus_2.set(0, three_x_plus_2.c.count(0) ? three_x_plus_2.c[0] + QuadRat(2l) : QuadRat(2l));
    Laurent inner = branch > 0 ? three_x_plus_2 + t : three_x_plus_2 - t;
    Laurent a = (x * inner) * half;

    Laurent u = x;
    u.set(0, u.c.count(0) ? u.c[0] + QuadRat(static_cast<long>(s_shift)) : QuadRat(static_cast<long>(s_shift)));

    Laurent u2 = u * u;
    Laurent g = u2 * u2 + u2 * u - (a * u2) * QuadRat(3l) - (a * u) * QuadRat(2l) + a * a;
    Laurent hminus = g;
    hminus.set(0, hminus.c.count(0) ? hminus.c[0] - QuadRat(static_cast<long>(target))
                                    : QuadRat(static_cast<long>(-target)));
    Laurent H = hminus.shifted(3);

    FieldPoly<QuadRat> h = to_poly(H);
    if (h.degree() != 6) throw std::logic_error("h_root_window: H does not have degree 6");
    w.H = h;

    // Square-free reduction over Q(sqrt 5) before Sturm.
    FieldPoly<QuadRat> hs = h;
    {
        auto g2 = FieldPoly<QuadRat>::gcd(hs, hs.derivative());
        if (g2.degree() > 0) hs = hs / g2;
    }

    h_paper_window(branch, target, w.lo, w.hi);
    Rat big = cauchy_bound_quadrat(hs);
    if (big < w.hi + 1) big = w.hi + 1;
    int total = count_roots(hs, Rat(-big), big);
    int inside_pos = count_roots(hs, w.lo, w.hi);
    int inside_neg = count_roots(hs, Rat(-w.hi), Rat(-w.lo));
    bool endpoint_clear =
        hs.eval(QuadRat(Int(5), w.lo, Rat(0))) != QuadRat(0l) &&
        hs.eval(QuadRat(Int(5), w.hi, Rat(0))) != QuadRat(0l) &&
        hs.eval(QuadRat(Int(5), -w.lo, Rat(0))) != QuadRat(0l) &&
        hs.eval(QuadRat(Int(5), -w.hi, Rat(0))) != QuadRat(0l) &&
        !(h.coeff(0) == QuadRat(0l));
    w.root_count = total;
    w.verified = endpoint_clear && (total == inside_pos + inside_neg);

    // Norm-polynomial cross-check: N(H) = H * H^sigma has rational
    // coefficients and its real roots are the union over both branches, so
    // the window widens to the union of the two branch windows.
    FieldPoly<QuadRat> hconj;
    {
        std::vector<QuadRat> cc;
        for (int i = 0; i <= h.degree(); ++i) cc.push_back(h.coeff(i).conj());
        hconj = FieldPoly<QuadRat>(std::move(cc));
    }
    FieldPoly<QuadRat> n = h * hconj;
    std::vector<Rat> nc;
    for (int i = 0; i <= n.degree(); ++i) {
        if (!n.coeff(i).is_rational()) throw std::logic_error("norm polynomial not rational");
        nc.push_back(n.coeff(i).a());
    }
    w.norm_poly = RatPoly(std::move(nc));
    RatPoly ns = w.norm_poly;
    {
        auto g2 = RatPoly::gcd(ns, ns.derivative());
        if (g2.degree() > 0) ns = ns / g2;
    }
    Rat lo_p, hi_p, lo_m, hi_m;
    h_paper_window(+1, target, lo_p, hi_p);
    h_paper_window(-1, target, lo_m, hi_m);
    w.union_lo = lo_p < lo_m ? lo_p : lo_m;
    w.union_hi = hi_p > hi_m ? hi_p : hi_m;
    Rat nbig = cauchy_root_bound(ns);
    if (nbig < w.union_hi + 1) nbig = w.union_hi + 1;
    w.norm_total_roots = sturm_count_open(ns, Rat(-nbig), nbig);
    w.norm_inside_union = sturm_count_open(ns, w.union_lo, w.union_hi) +
                          sturm_count_open(ns, Rat(-w.union_hi), Rat(-w.union_lo));
    w.verified = w.verified && (w.norm_total_roots == w.norm_inside_union);
    return w;
}

}  // namespace cdx

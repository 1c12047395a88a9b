#pragma once

// Intervals with exact rational endpoints and per-end openness flags.

#include "cdx/ints.hpp"

#include <ostream>
#include <sstream>
#include <stdexcept>

namespace cdx {

struct Interval {
    Rat lo, hi;
    bool lo_open = true, hi_open = true;

    Interval(Rat lo_, Rat hi_, bool lo_open_ = true, bool hi_open_ = true)
        : lo(std::move(lo_)), hi(std::move(hi_)), lo_open(lo_open_), hi_open(hi_open_) {
        if (!(lo < hi)) throw std::invalid_argument("Interval: requires lo < hi");
    }
    static Interval open(Rat lo, Rat hi) { return Interval(std::move(lo), std::move(hi), true, true); }
    static Interval closed(Rat lo, Rat hi) { return Interval(std::move(lo), std::move(hi), false, false); }

    bool contains(const Rat& x) const {
        if (x < lo || x > hi) return false;
        if (x == lo && lo_open) return false;
        if (x == hi && hi_open) return false;
        return true;
    }

    std::string str() const {
        std::ostringstream os;
        os << (lo_open ? "(" : "[") << lo.get_str() << ", " << hi.get_str()
           << (hi_open ? ")" : "]");
        return os.str();
    }
    friend std::ostream& operator<<(std::ostream& os, const Interval& iv) { return os << iv.str(); }
};

}  // namespace cdx

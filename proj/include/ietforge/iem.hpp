#pragma once

#include "ietforge/errors.hpp"
#include "ietforge/perm.hpp"
#include "ietforge/scalar.hpp"

#include <optional>
#include <set>
#include <utility>
#include <vector>

namespace ietforge {

// Interval exchange map: alphabet, permutation pair and positive lengths.
// The translation offsets p (departure) and q (arrival) are cached at
// construction; the map sends x in [p_l, p_l + len_l) to x - p_l + q_l.
template <ScalarBackend S> class Iem {
public:
    Iem(Alphabet alphabet, PermPair perms, std::vector<S> lengths)
        : alphabet_(std::move(alphabet)), perms_(std::move(perms)), lengths_(std::move(lengths)) {
        int d = alphabet_.size();
        if (perms_.size() != d || static_cast<int>(lengths_.size()) != d)
            throw std::invalid_argument("alphabet, permutations and lengths must agree in size");
        for (const S& len : lengths_)
            if (require_known(compare(len, S{}), "length sign undecidable") != Ordering::GT)
                throw std::invalid_argument("interval lengths must be positive");
        p_.resize(static_cast<size_t>(d));
        q_.resize(static_cast<size_t>(d));
        S acc{};
        for (int pos = 0; pos < d; ++pos) {
            int l = perms_.top_letter_at(pos);
            p_[static_cast<size_t>(l)] = acc;
            acc = acc + lengths_[static_cast<size_t>(l)];
        }
        total_ = acc;
        acc = S{};
        for (int pos = 0; pos < d; ++pos) {
            int l = perms_.bottom_letter_at(pos);
            q_[static_cast<size_t>(l)] = acc;
            acc = acc + lengths_[static_cast<size_t>(l)];
        }
    }

    const Alphabet& alphabet() const { return alphabet_; }
    const PermPair& perms() const { return perms_; }
    int size() const { return alphabet_.size(); }
    const std::vector<S>& lengths() const { return lengths_; }
    const S& length(int letter) const { return lengths_.at(static_cast<size_t>(letter)); }
    const S& total() const { return total_; }
    const S& p(int letter) const { return p_.at(static_cast<size_t>(letter)); }
    const S& q(int letter) const { return q_.at(static_cast<size_t>(letter)); }
    std::pair<std::vector<S>, std::vector<S>> offsets() const { return {p_, q_}; }

    bool is_admissible() const { return perms_.admissible(); }

    // letter whose interval [p_l, p_l + len_l) contains x
    int locate(const S& x) const {
        if (require_known(compare(x, S{}), "domain membership undecidable") == Ordering::LT ||
            require_known(compare(x, total_), "domain membership undecidable") != Ordering::LT)
            throw OutOfDomainError("point outside [0, total)");
        int d = size();
        for (int pos = d - 1; pos >= 0; --pos) {
            int l = perms_.top_letter_at(pos);
            if (require_known(compare(x, p(l)), "interval membership undecidable") !=
                Ordering::LT)
                return l;
        }
        throw std::logic_error("interval location failed");
    }

    S apply(const S& x) const {
        int l = locate(x);
        return x - p(l) + q(l);
    }

    S apply_inverse(const S& y) const {
        if (require_known(compare(y, S{}), "domain membership undecidable") == Ordering::LT ||
            require_known(compare(y, total_), "domain membership undecidable") != Ordering::LT)
            throw OutOfDomainError("point outside [0, total)");
        int d = size();
        for (int pos = d - 1; pos >= 0; --pos) {
            int l = perms_.bottom_letter_at(pos);
            if (require_known(compare(y, q(l)), "interval membership undecidable") !=
                Ordering::LT)
                return y - q(l) + p(l);
        }
        throw std::logic_error("interval location failed");
    }

    S apply_n(const S& x, const Integer& n) const {
        S y = x;
        if (n >= 0) {
            for (Integer i = 0; i < n; ++i) y = apply(y);
        } else {
            for (Integer i = 0; i > n; --i) y = apply_inverse(y);
        }
        return y;
    }

    // the inverse exchange swaps the roles of p and q
    Iem inverse() const {
        return Iem(alphabet_, PermPair(perms_.bottom_order(), perms_.top_order()), lengths_);
    }

    Iem scaled(const S& factor) const {
        std::vector<S> scaled_lengths;
        scaled_lengths.reserve(lengths_.size());
        for (const S& len : lengths_) scaled_lengths.push_back(len * factor);
        return Iem(alphabet_, perms_, std::move(scaled_lengths));
    }

    Iem normalized() const {
        return scaled(ScalarTraits<S>::from_int(1) / total_);
    }

    // midpoint of the letter's interval
    S interval_midpoint(int letter) const {
        S half = length(letter) / ScalarTraits<S>::from_int(2);
        return p(letter) + half;
    }

private:
    Alphabet alphabet_;
    PermPair perms_;
    std::vector<S> lengths_;
    std::vector<S> p_, q_;
    S total_;
};

// Same exchange as maps of the interval: equal interval count, equal lengths
// in top order, and the same bottom-versus-top arrangement. Letter names are
// ignored.
template <ScalarBackend S> bool same_map(const Iem<S>& a, const Iem<S>& b) {
    int d = a.size();
    if (b.size() != d) return false;
    for (int pos = 0; pos < d; ++pos) {
        int la = a.perms().top_letter_at(pos);
        int lb = b.perms().top_letter_at(pos);
        if (a.perms().bottom_rank(la) != b.perms().bottom_rank(lb)) return false;
        if (require_known(compare(a.length(la), b.length(lb)), "length comparison undecidable") !=
            Ordering::EQ)
            return false;
    }
    return true;
}

// Sorted distinct critical points in [0, total], endpoints included.
template <ScalarBackend S> struct CriticalSet {
    std::vector<S> points;

    long size() const { return static_cast<long>(points.size()); }

    bool contains(const S& x) const {
        for (const S& p : points)
            if (require_known(compare(p, x), "membership undecidable") == Ordering::EQ) return true;
        return false;
    }

    S min_gap() const {
        if (points.size() < 2) throw std::logic_error("gap of a set with fewer than two points");
        std::optional<S> best;
        for (size_t i = 1; i < points.size(); ++i) {
            S gap = points[i] - points[i - 1];
            if (!best || definitely_less(gap, *best)) best = gap;
        }
        return *best;
    }
};

// Incrementally refined discontinuity set of the powers of a map: at depth n
// it holds {0, total} together with the pullbacks T^{-i} of the interior
// discontinuities for i < n. The minimal gap can only shrink, so it is
// maintained on the fly.
template <ScalarBackend S> class DiscontinuityRefiner {
public:
    explicit DiscontinuityRefiner(Iem<S> map) : map_(std::move(map)), depth_(1) {
        points_.insert(S{});
        points_.insert(map_.total());
        min_gap_ = map_.total();
        for (int pos = 1; pos < map_.size(); ++pos) {
            int l = map_.perms().top_letter_at(pos);
            insert(map_.p(l));
            frontier_.push_back(map_.p(l));
        }
    }

    long depth() const { return depth_; }
    long size() const { return static_cast<long>(points_.size()); }
    const S& min_gap() const { return min_gap_; }

    // advance to depth + 1 by pulling the frontier back once
    void refine() {
        for (S& x : frontier_) {
            x = map_.apply_inverse(x);
            insert(x);
        }
        ++depth_;
    }

    void refine_to(long depth) {
        while (depth_ < depth) refine();
    }

    CriticalSet<S> snapshot() const {
        return CriticalSet<S>{std::vector<S>(points_.begin(), points_.end())};
    }

    // minimal gap between interior discontinuities only (endpoint convention
    // switch); needs at least two interior points
    S interior_min_gap() const {
        if (points_.size() < 4)
            throw std::domain_error("fewer than two interior discontinuities");
        std::optional<S> best;
        auto it = std::next(points_.begin());
        auto last = std::prev(points_.end(), 2);
        for (; it != last; ++it) {
            S gap = *std::next(it) - *it;
            if (!best || definitely_less(gap, *best)) best = gap;
        }
        return *best;
    }

private:
    void insert(const S& x) {
        auto [it, fresh] = points_.insert(x);
        if (!fresh) return;
        if (it != points_.begin()) {
            S left = *it - *std::prev(it);
            if (definitely_less(left, min_gap_)) min_gap_ = left;
        }
        if (std::next(it) != points_.end()) {
            S right = *std::next(it) - *it;
            if (definitely_less(right, min_gap_)) min_gap_ = right;
        }
    }

    Iem<S> map_;
    std::set<S, ExactLess<S>> points_;
    std::vector<S> frontier_;
    S min_gap_;
    long depth_;
};

// {0, total} together with the discontinuity points of the n-th power
template <ScalarBackend S> CriticalSet<S> discontinuity_set(const Iem<S>& map, long n) {
    if (n < 1) throw std::invalid_argument("power must be >= 1");
    DiscontinuityRefiner<S> refiner(map);
    refiner.refine_to(n);
    return refiner.snapshot();
}

// Shortest maximal continuity interval of T^n. With endpoints excluded, the
// minimum runs over gaps between interior discontinuities instead.
template <ScalarBackend S>
S delta(const Iem<S>& map, long n, bool include_endpoints = true) {
    if (n < 1) throw std::invalid_argument("power must be >= 1");
    DiscontinuityRefiner<S> refiner(map);
    refiner.refine_to(n);
    return include_endpoints ? refiner.min_gap() : refiner.interior_min_gap();
}

// First-return map of T to [0, cut) found by pushing subintervals forward
// until they land back, splitting at the discontinuities they cross.
template <ScalarBackend S> struct InducedMap {
    Iem<S> map;
    std::vector<Integer> return_times; // per letter of map
};

template <ScalarBackend S>
InducedMap<S> induced_map(const Iem<S>& map, const S& cut, long step_budget = 1000000) {
    if (require_known(compare(cut, S{}), "cut sign undecidable") != Ordering::GT ||
        require_known(compare(cut, map.total()), "cut position undecidable") == Ordering::GT)
        throw std::invalid_argument("cut must lie in (0, total]");

    struct Segment {
        S dom_lo, dom_hi; // inside [0, cut)
        S img_lo;         // T^time of dom_lo; the image is an interval of equal size
        Integer time;
    };

    std::vector<Segment> work{{S{}, cut, S{}, Integer(0)}};
    std::vector<Segment> done;
    long applications = 0;
    while (!work.empty()) {
        Segment seg = std::move(work.back());
        work.pop_back();
        S size = seg.dom_hi - seg.dom_lo;
        S img_hi = seg.img_lo + size;
        if (seg.time > 0) {
            Ordering against_cut = require_known(compare(img_hi, cut), "return undecidable");
            if (against_cut != Ordering::GT) {
                done.push_back(std::move(seg));
                continue;
            }
            if (require_known(compare(seg.img_lo, cut), "return undecidable") == Ordering::LT) {
                // image straddles the cut: split the domain accordingly
                S mid = seg.dom_lo + (cut - seg.img_lo);
                work.push_back({seg.dom_lo, mid, seg.img_lo, seg.time});
                work.push_back({mid, seg.dom_hi, cut, seg.time});
                continue;
            }
        }
        if (++applications > step_budget)
            throw StepBudgetExceededError("first-return search exceeded its step budget");
        // apply the map: intersect the image with every continuity interval
        for (int pos = 0; pos < map.size(); ++pos) {
            int l = map.perms().top_letter_at(pos);
            const S& ilo = map.p(l);
            S ihi = map.p(l) + map.length(l);
            S lo = require_known(compare(seg.img_lo, ilo), "split undecidable") == Ordering::GT
                       ? seg.img_lo
                       : ilo;
            S hi = require_known(compare(img_hi, ihi), "split undecidable") == Ordering::LT
                       ? img_hi
                       : ihi;
            if (require_known(compare(lo, hi), "split undecidable") != Ordering::LT) continue;
            S d_lo = seg.dom_lo + (lo - seg.img_lo);
            S d_hi = seg.dom_lo + (hi - seg.img_lo);
            work.push_back({std::move(d_lo), std::move(d_hi), lo - map.p(l) + map.q(l),
                            seg.time + 1});
        }
    }

    std::sort(done.begin(), done.end(), [](const Segment& a, const Segment& b) {
        return definitely_less(a.dom_lo, b.dom_lo);
    });
    if (done.size() < 2)
        throw std::domain_error("induced map degenerated to a single interval");

    // name each piece after the letter whose interval contains its domain,
    // disambiguating repeats in top order
    std::vector<std::string> names;
    std::vector<int> repeats(static_cast<size_t>(map.size()), 0);
    for (const Segment& seg : done) {
        int l = map.locate(seg.dom_lo);
        int r = ++repeats[static_cast<size_t>(l)];
        names.push_back(r == 1 ? map.alphabet().name(l)
                               : map.alphabet().name(l) + "." + std::to_string(r));
    }

    int nd = static_cast<int>(done.size());
    std::vector<int> top(static_cast<size_t>(nd));
    for (int i = 0; i < nd; ++i) top[static_cast<size_t>(i)] = i;
    std::vector<int> bottom = top;
    std::sort(bottom.begin(), bottom.end(), [&done](int a, int b) {
        return definitely_less(done[static_cast<size_t>(a)].img_lo,
                               done[static_cast<size_t>(b)].img_lo);
    });
    std::vector<S> lengths;
    std::vector<Integer> times;
    lengths.reserve(static_cast<size_t>(nd));
    for (const Segment& seg : done) {
        lengths.push_back(seg.dom_hi - seg.dom_lo);
        times.push_back(seg.time);
    }
    return InducedMap<S>{Iem<S>(Alphabet(std::move(names)), PermPair(std::move(top), std::move(bottom)),
                                std::move(lengths)),
                         std::move(times)};
}

// Running minimum of n * |T^n(x) - x| for 1 <= n <= horizon; the smallest
// minimizer wins ties.
template <ScalarBackend S> struct RecurrenceMin {
    S value;
    long argmin;
};

template <ScalarBackend S>
RecurrenceMin<S> recurrence_min(const Iem<S>& map, const S& x, long horizon) {
    if (horizon < 1) throw std::invalid_argument("horizon must be >= 1");
    S y = x;
    std::optional<S> best;
    long argmin = 0;
    for (long n = 1; n <= horizon; ++n) {
        y = map.apply(y);
        S value = abs(y - x) * Integer(n);
        if (!best || definitely_less(value, *best)) {
            best = value;
            argmin = n;
        }
    }
    return {*best, argmin};
}

} // namespace ietforge

#pragma once

#include <cstddef>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

namespace ietforge {

// Ordered set of distinct interval labels. Letters are referred to by index
// throughout; the alphabet only supplies names for parsing and reports.
class Alphabet {
public:
    Alphabet() = default;
    explicit Alphabet(std::vector<std::string> names);

    static Alphabet latin(int d);                    // A, B, C, ...
    static Alphabet from_letters(std::string_view s); // one letter per char

    int size() const { return static_cast<int>(names_.size()); }
    const std::string& name(int letter) const { return names_.at(static_cast<size_t>(letter)); }
    int index(std::string_view name) const; // -1 when absent
    const std::vector<std::string>& names() const { return names_; }

    friend bool operator==(const Alphabet&, const Alphabet&) = default;

private:
    std::vector<std::string> names_;
};

// The pair of bijections (top, bottom) from letters onto positions. Stored
// as order arrays (position -> letter) together with their inverses.
class PermPair {
public:
    PermPair() = default;
    PermPair(std::vector<int> top_order, std::vector<int> bottom_order);

    static PermPair from_rows(const Alphabet& alphabet, std::string_view top_row,
                              std::string_view bottom_row);

    int size() const { return static_cast<int>(top_order_.size()); }
    const std::vector<int>& top_order() const { return top_order_; }
    const std::vector<int>& bottom_order() const { return bottom_order_; }
    int top_letter_at(int pos) const { return top_order_.at(static_cast<size_t>(pos)); }
    int bottom_letter_at(int pos) const { return bottom_order_.at(static_cast<size_t>(pos)); }
    // 0-based position of a letter
    int top_rank(int letter) const { return top_rank_.at(static_cast<size_t>(letter)); }
    int bottom_rank(int letter) const { return bottom_rank_.at(static_cast<size_t>(letter)); }
    int last_top_letter() const { return top_order_.back(); }
    int last_bottom_letter() const { return bottom_order_.back(); }

    // no common invariant prefix: top^{-1}{1..k} != bottom^{-1}{1..k} for k < d
    bool admissible() const;

    std::string row_string(const Alphabet& alphabet, bool top) const;

    friend bool operator==(const PermPair& a, const PermPair& b) {
        return a.top_order_ == b.top_order_ && a.bottom_order_ == b.bottom_order_;
    }

private:
    std::vector<int> top_order_, bottom_order_;
    std::vector<int> top_rank_, bottom_rank_;
};

struct PermPairHash {
    size_t operator()(const PermPair& p) const {
        size_t h = 0xcbf29ce484222325ULL;
        auto mix = [&h](int v) {
            h ^= static_cast<size_t>(v) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
        };
        for (int v : p.top_order()) mix(v);
        mix(-1);
        for (int v : p.bottom_order()) mix(v);
        return h;
    }
};

} // namespace ietforge

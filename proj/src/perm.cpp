#include "ietforge/perm.hpp"

#include <algorithm>
#include <stdexcept>

namespace ietforge {

Alphabet::Alphabet(std::vector<std::string> names) : names_(std::move(names)) {
    if (names_.size() < 2) throw std::invalid_argument("alphabet needs at least two letters");
    for (size_t i = 0; i < names_.size(); ++i) {
        if (names_[i].empty()) throw std::invalid_argument("empty letter name");
        for (size_t j = i + 1; j < names_.size(); ++j)
            if (names_[i] == names_[j])
                throw std::invalid_argument("duplicate letter name: " + names_[i]);
    }
}

Alphabet Alphabet::latin(int d) {
    if (d < 2 || d > 26) throw std::invalid_argument("latin alphabet supports 2..26 letters");
    std::vector<std::string> names;
    names.reserve(static_cast<size_t>(d));
    for (int i = 0; i < d; ++i) names.emplace_back(1, static_cast<char>('A' + i));
    return Alphabet(std::move(names));
}

Alphabet Alphabet::from_letters(std::string_view s) {
    std::vector<std::string> names;
    names.reserve(s.size());
    for (char c : s) names.emplace_back(1, c);
    return Alphabet(std::move(names));
}

int Alphabet::index(std::string_view name) const {
    for (size_t i = 0; i < names_.size(); ++i)
        if (names_[i] == name) return static_cast<int>(i);
    return -1;
}

namespace {

std::vector<int> inverse_of(const std::vector<int>& order) {
    std::vector<int> rank(order.size(), -1);
    for (size_t pos = 0; pos < order.size(); ++pos) {
        int letter = order[pos];
        if (letter < 0 || letter >= static_cast<int>(order.size()) ||
            rank[static_cast<size_t>(letter)] != -1)
            throw std::invalid_argument("permutation row is not a bijection");
        rank[static_cast<size_t>(letter)] = static_cast<int>(pos);
    }
    return rank;
}

} // namespace

PermPair::PermPair(std::vector<int> top_order, std::vector<int> bottom_order)
    : top_order_(std::move(top_order)), bottom_order_(std::move(bottom_order)) {
    if (top_order_.size() != bottom_order_.size() || top_order_.size() < 2)
        throw std::invalid_argument("permutation rows must have equal size >= 2");
    top_rank_ = inverse_of(top_order_);
    bottom_rank_ = inverse_of(bottom_order_);
}

PermPair PermPair::from_rows(const Alphabet& alphabet, std::string_view top_row,
                             std::string_view bottom_row) {
    auto parse_row = [&alphabet](std::string_view row) {
        std::vector<int> order;
        order.reserve(row.size());
        for (char c : row) {
            int idx = alphabet.index(std::string_view(&c, 1));
            if (idx < 0)
                throw std::invalid_argument(std::string("unknown letter '") + c + "' in row");
            order.push_back(idx);
        }
        if (order.size() != static_cast<size_t>(alphabet.size()))
            throw std::invalid_argument("permutation row length does not match alphabet");
        return order;
    };
    return PermPair(parse_row(top_row), parse_row(bottom_row));
}

bool PermPair::admissible() const {
    int d = size();
    std::vector<bool> in_top(static_cast<size_t>(d), false), in_bottom(static_cast<size_t>(d), false);
    // size of the symmetric difference of the two prefix sets
    int diff = 0;
    for (int k = 0; k < d - 1; ++k) {
        int t = top_order_[static_cast<size_t>(k)];
        int b = bottom_order_[static_cast<size_t>(k)];
        if (t == b) {
            in_top[static_cast<size_t>(t)] = in_bottom[static_cast<size_t>(t)] = true;
        } else {
            diff += in_bottom[static_cast<size_t>(t)] ? -1 : 1;
            in_top[static_cast<size_t>(t)] = true;
            diff += in_top[static_cast<size_t>(b)] ? -1 : 1;
            in_bottom[static_cast<size_t>(b)] = true;
        }
        if (diff == 0) return false;
    }
    return true;
}

std::string PermPair::row_string(const Alphabet& alphabet, bool top) const {
    const auto& order = top ? top_order_ : bottom_order_;
    std::string out;
    for (size_t i = 0; i < order.size(); ++i) {
        if (i > 0 && alphabet.name(order[i - 1]).size() > 1) out += ' ';
        out += alphabet.name(order[i]);
    }
    return out;
}

} // namespace ietforge

#pragma once

#include "ietforge/integer.hpp"
#include "ietforge/perm.hpp"

#include <span>
#include <string>
#include <vector>

namespace ietforge {

enum class ArrowKind { Top, Bottom };

constexpr const char* to_string(ArrowKind k) { return k == ArrowKind::Top ? "T" : "B"; }

// One induction move between permutation pairs. Both endpoints are stored so
// that paths validate their own composability.
struct Arrow {
    PermPair source;
    PermPair target;
    ArrowKind kind;
    int winner;
    int loser;
};

// Composable chain of arrows.
class Path {
public:
    Path() = default;

    void push(Arrow arrow);
    long size() const { return static_cast<long>(arrows_.size()); }
    bool empty() const { return arrows_.empty(); }
    const Arrow& at(long i) const { return arrows_.at(static_cast<size_t>(i)); }
    const std::vector<Arrow>& arrows() const { return arrows_; }
    const PermPair& end_perms() const;

    Path prefix(long n) const;
    friend Path operator+(const Path& a, const Path& b);

    std::string winner_word(const Alphabet& alphabet) const;

private:
    std::vector<Arrow> arrows_;
};

// Nonnegative integer matrix indexed by letters; products of the elementary
// induction matrices, so determinant 1.
class CocycleMatrix {
public:
    explicit CocycleMatrix(int dim);
    static CocycleMatrix identity(int dim);
    // I + E_{loser,winner}
    static CocycleMatrix arrow_matrix(int winner, int loser, int dim);

    int dim() const { return dim_; }
    const Integer& at(int row, int col) const {
        return a_[static_cast<size_t>(row) * static_cast<size_t>(dim_) + static_cast<size_t>(col)];
    }
    Integer& at(int row, int col) {
        return a_[static_cast<size_t>(row) * static_cast<size_t>(dim_) + static_cast<size_t>(col)];
    }

    // in-place update to (I + E_{loser,winner}) * M, one row addition
    void left_mul_arrow(int winner, int loser);

    friend CocycleMatrix operator*(const CocycleMatrix& a, const CocycleMatrix& b);
    friend bool operator==(const CocycleMatrix& a, const CocycleMatrix& b) {
        return a.dim_ == b.dim_ && a.a_ == b.a_;
    }

    Integer norm() const; // sum of absolute entries
    std::vector<Integer> row_sums() const;
    Integer determinant() const; // exact, Bareiss elimination
    bool strictly_positive() const;
    bool is_identity() const;

private:
    int dim_;
    std::vector<Integer> a_;
};

// One Rauzy move on a permutation pair. Requires admissibility; the result
// is admissible again.
std::pair<PermPair, Arrow> rauzy_move(const PermPair& perms, ArrowKind kind);

CocycleMatrix arrow_matrix(const Arrow& arrow, int dim);

// B_{gamma_n} ... B_{gamma_1} over arrows m..n-1; empty range gives identity
CocycleMatrix path_matrix(const Path& path, long m, long n);
CocycleMatrix path_matrix(const Path& path);

// Closure of a start pair under both moves, with two labelled out-arrows per
// vertex.
struct RauzyDiagram {
    struct Edge {
        int from;
        int to;
        ArrowKind kind;
        int winner;
        int loser;
    };

    std::vector<PermPair> vertices;
    std::vector<Edge> edges; // per vertex: Top edge then Bottom edge

    int vertex_index(const PermPair& p) const;
    std::string to_dot(const Alphabet& alphabet) const;
};

RauzyDiagram build_diagram(const PermPair& start);

} // namespace ietforge

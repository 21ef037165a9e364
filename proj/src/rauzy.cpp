#include "ietforge/rauzy.hpp"

#include <queue>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

namespace ietforge {

void Path::push(Arrow arrow) {
    if (!arrows_.empty() && !(arrows_.back().target == arrow.source))
        throw std::invalid_argument("arrow does not compose with path end");
    arrows_.push_back(std::move(arrow));
}

const PermPair& Path::end_perms() const {
    if (arrows_.empty()) throw std::logic_error("empty path has no end");
    return arrows_.back().target;
}

Path Path::prefix(long n) const {
    if (n < 0 || n > size()) throw std::out_of_range("path prefix length");
    Path p;
    p.arrows_.assign(arrows_.begin(), arrows_.begin() + n);
    return p;
}

Path operator+(const Path& a, const Path& b) {
    Path p = a;
    for (const Arrow& arrow : b.arrows_) p.push(arrow);
    return p;
}

std::string Path::winner_word(const Alphabet& alphabet) const {
    std::string w;
    for (const Arrow& a : arrows_) w += alphabet.name(a.winner);
    return w;
}

CocycleMatrix::CocycleMatrix(int dim) : dim_(dim) {
    if (dim < 1) throw std::invalid_argument("matrix dimension must be positive");
    a_.assign(static_cast<size_t>(dim) * static_cast<size_t>(dim), Integer(0));
}

CocycleMatrix CocycleMatrix::identity(int dim) {
    CocycleMatrix m(dim);
    for (int i = 0; i < dim; ++i) m.at(i, i) = 1;
    return m;
}

CocycleMatrix CocycleMatrix::arrow_matrix(int winner, int loser, int dim) {
    if (winner == loser) throw std::invalid_argument("winner equals loser");
    if (winner < 0 || winner >= dim || loser < 0 || loser >= dim)
        throw std::invalid_argument("letter outside alphabet");
    CocycleMatrix m = identity(dim);
    m.at(loser, winner) = 1;
    return m;
}

void CocycleMatrix::left_mul_arrow(int winner, int loser) {
    for (int j = 0; j < dim_; ++j) at(loser, j) += at(winner, j);
}

CocycleMatrix operator*(const CocycleMatrix& a, const CocycleMatrix& b) {
    if (a.dim_ != b.dim_) throw std::invalid_argument("matrix dimension mismatch");
    CocycleMatrix out(a.dim_);
    for (int i = 0; i < a.dim_; ++i)
        for (int k = 0; k < a.dim_; ++k) {
            const Integer& aik = a.at(i, k);
            if (aik == 0) continue;
            for (int j = 0; j < a.dim_; ++j) out.at(i, j) += aik * b.at(k, j);
        }
    return out;
}

Integer CocycleMatrix::norm() const {
    Integer s = 0;
    for (const Integer& v : a_) s += ::abs(v);
    return s;
}

std::vector<Integer> CocycleMatrix::row_sums() const {
    std::vector<Integer> s(static_cast<size_t>(dim_), Integer(0));
    for (int i = 0; i < dim_; ++i)
        for (int j = 0; j < dim_; ++j) s[static_cast<size_t>(i)] += at(i, j);
    return s;
}

Integer CocycleMatrix::determinant() const {
    // fraction-free Bareiss elimination
    CocycleMatrix w = *this;
    Integer prev = 1;
    int sign = 1;
    for (int k = 0; k < dim_ - 1; ++k) {
        if (w.at(k, k) == 0) {
            int pivot = -1;
            for (int i = k + 1; i < dim_; ++i)
                if (w.at(i, k) != 0) {
                    pivot = i;
                    break;
                }
            if (pivot < 0) return 0;
            for (int j = 0; j < dim_; ++j) std::swap(w.at(k, j), w.at(pivot, j));
            sign = -sign;
        }
        for (int i = k + 1; i < dim_; ++i)
            for (int j = k + 1; j < dim_; ++j) {
                Integer t = w.at(i, j) * w.at(k, k) - w.at(i, k) * w.at(k, j);
                mpz_divexact(t.get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
                w.at(i, j) = t;
            }
        prev = w.at(k, k);
    }
    return sign > 0 ? w.at(dim_ - 1, dim_ - 1) : Integer(-w.at(dim_ - 1, dim_ - 1));
}

bool CocycleMatrix::strictly_positive() const {
    for (const Integer& v : a_)
        if (v <= 0) return false;
    return true;
}

bool CocycleMatrix::is_identity() const {
    for (int i = 0; i < dim_; ++i)
        for (int j = 0; j < dim_; ++j)
            if (at(i, j) != (i == j ? 1 : 0)) return false;
    return true;
}

std::pair<PermPair, Arrow> rauzy_move(const PermPair& perms, ArrowKind kind) {
    if (!perms.admissible()) throw std::invalid_argument("permutation pair is not admissible");
    int winner, loser;
    std::vector<int> top = perms.top_order();
    std::vector<int> bottom = perms.bottom_order();
    if (kind == ArrowKind::Top) {
        winner = perms.last_top_letter();
        loser = perms.last_bottom_letter();
        // remove the loser from the end of the bottom row and reinsert it
        // right after the winner
        bottom.pop_back();
        auto pos = bottom.begin() + perms.bottom_rank(winner) + 1;
        bottom.insert(pos, loser);
    } else {
        winner = perms.last_bottom_letter();
        loser = perms.last_top_letter();
        top.pop_back();
        auto pos = top.begin() + perms.top_rank(winner) + 1;
        top.insert(pos, loser);
    }
    PermPair next(std::move(top), std::move(bottom));
    Arrow arrow{perms, next, kind, winner, loser};
    return {std::move(next), std::move(arrow)};
}

CocycleMatrix arrow_matrix(const Arrow& arrow, int dim) {
    return CocycleMatrix::arrow_matrix(arrow.winner, arrow.loser, dim);
}

CocycleMatrix path_matrix(const Path& path, long m, long n) {
    if (m < 0 || n < m || n > path.size()) throw std::out_of_range("path matrix range");
    int dim = path.empty() ? 0 : path.at(0).source.size();
    if (path.empty()) throw std::invalid_argument("path matrix of empty path needs a dimension");
    CocycleMatrix out = CocycleMatrix::identity(dim);
    for (long i = m; i < n; ++i) out.left_mul_arrow(path.at(i).winner, path.at(i).loser);
    return out;
}

CocycleMatrix path_matrix(const Path& path) { return path_matrix(path, 0, path.size()); }

int RauzyDiagram::vertex_index(const PermPair& p) const {
    for (size_t i = 0; i < vertices.size(); ++i)
        if (vertices[i] == p) return static_cast<int>(i);
    return -1;
}

RauzyDiagram build_diagram(const PermPair& start) {
    if (!start.admissible()) throw std::invalid_argument("start pair is not admissible");
    RauzyDiagram diagram;
    std::unordered_map<PermPair, int, PermPairHash> index;
    std::queue<int> frontier;
    diagram.vertices.push_back(start);
    index.emplace(start, 0);
    frontier.push(0);
    while (!frontier.empty()) {
        int v = frontier.front();
        frontier.pop();
        for (ArrowKind kind : {ArrowKind::Top, ArrowKind::Bottom}) {
            auto [next, arrow] = rauzy_move(diagram.vertices[static_cast<size_t>(v)], kind);
            auto [it, fresh] = index.emplace(next, static_cast<int>(diagram.vertices.size()));
            if (fresh) {
                diagram.vertices.push_back(next);
                frontier.push(it->second);
            }
            diagram.edges.push_back({v, it->second, kind, arrow.winner, arrow.loser});
        }
    }
    return diagram;
}

std::string RauzyDiagram::to_dot(const Alphabet& alphabet) const {
    std::ostringstream os;
    os << "digraph rauzy {\n";
    for (size_t i = 0; i < vertices.size(); ++i) {
        os << "  v" << i << " [label=\"" << vertices[i].row_string(alphabet, true) << "\\n"
           << vertices[i].row_string(alphabet, false) << "\"];\n";
    }
    for (const Edge& e : edges) {
        os << "  v" << e.from << " -> v" << e.to << " [label=\"" << to_string(e.kind) << ":"
           << alphabet.name(e.winner) << "/" << alphabet.name(e.loser) << "\"];\n";
    }
    os << "}\n";
    return os.str();
}

} // namespace ietforge

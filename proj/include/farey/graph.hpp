#pragma once

// Dense vertex-labelled regular graphs. Construction validates the
// structural invariants once (symmetric, loop-free, constant valency), so
// downstream checks can rely on them.

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace farey {

// Dense adjacency is quadratic in the vertex count; keep levels modest.
inline constexpr int kGraphCap = 60;

class RegularGraph {
public:
    RegularGraph(std::vector<std::string> labels, std::vector<std::uint8_t> adjacency)
        : labels_(std::move(labels)), adj_(std::move(adjacency)) {
        n_ = static_cast<int>(labels_.size());
        if (adj_.size() != static_cast<std::size_t>(n_) * n_)
            throw std::invalid_argument("RegularGraph: adjacency size mismatch");
        degree_ = 0;
        for (int i = 0; i < n_; ++i) {
            if (at(i, i)) throw std::invalid_argument("RegularGraph: loop on the diagonal");
            int row = 0;
            for (int j = 0; j < n_; ++j) {
                if (at(i, j) != at(j, i)) throw std::invalid_argument("RegularGraph: adjacency not symmetric");
                row += at(i, j) ? 1 : 0;
            }
            if (i == 0) degree_ = row;
            else if (row != degree_) throw std::invalid_argument("RegularGraph: valency is not constant");
        }
    }

    int vertex_count() const { return n_; }
    int degree() const { return degree_; }
    bool adjacent(int i, int j) const { return at(i, j) != 0; }
    const std::vector<std::string>& labels() const { return labels_; }
    const std::string& label(int i) const { return labels_.at(i); }

    std::vector<std::vector<int>> adjacency_lists() const {
        std::vector<std::vector<int>> lists(n_);
        for (int i = 0; i < n_; ++i) {
            lists[i].reserve(degree_);
            for (int j = 0; j < n_; ++j)
                if (at(i, j)) lists[i].push_back(j);
        }
        return lists;
    }

    // Walk counts of length two, row-major.
    std::vector<long long> adjacency_squared() const {
        std::vector<long long> sq(static_cast<std::size_t>(n_) * n_, 0);
        for (int i = 0; i < n_; ++i)
            for (int k = 0; k < n_; ++k) {
                if (!at(i, k)) continue;
                for (int j = 0; j < n_; ++j)
                    if (at(k, j)) ++sq[static_cast<std::size_t>(i) * n_ + j];
            }
        return sq;
    }

private:
    std::uint8_t at(int i, int j) const { return adj_[static_cast<std::size_t>(i) * n_ + j]; }

    int n_ = 0;
    int degree_ = 0;
    std::vector<std::string> labels_;
    std::vector<std::uint8_t> adj_;
};

namespace detail {

// BFS eccentricity of `start`; -1 when some vertex is unreachable.
inline int eccentricity(const std::vector<std::vector<int>>& lists, int start) {
    std::vector<int> dist(lists.size(), -1);
    std::vector<int> queue{start};
    dist[start] = 0;
    int far = 0;
    for (std::size_t head = 0; head < queue.size(); ++head) {
        int v = queue[head];
        for (int w : lists[v])
            if (dist[w] < 0) {
                dist[w] = dist[v] + 1;
                far = dist[w];
                queue.push_back(w);
            }
    }
    if (queue.size() != lists.size()) return -1;
    return far;
}

}  // namespace detail

inline bool is_connected(const RegularGraph& g) {
    if (g.vertex_count() == 0) return true;
    return detail::eccentricity(g.adjacency_lists(), 0) >= 0;
}

inline int diameter(const RegularGraph& g) {
    if (g.vertex_count() == 0) throw std::invalid_argument("diameter: empty graph");
    auto lists = g.adjacency_lists();
    int best = 0;
    for (int v = 0; v < g.vertex_count(); ++v) {
        int ecc = detail::eccentricity(lists, v);
        if (ecc < 0) throw std::runtime_error("diameter: graph is disconnected");
        if (ecc > best) best = ecc;
    }
    return best;
}

// One line per vertex: "<label>: <neighbour labels space-separated>".
inline std::string adjacency_list_text(const RegularGraph& g) {
    std::string out;
    for (int i = 0; i < g.vertex_count(); ++i) {
        out += g.label(i);
        out += ':';
        for (int j = 0; j < g.vertex_count(); ++j)
            if (g.adjacent(i, j)) {
                out += ' ';
                out += g.label(j);
            }
        out += '\n';
    }
    return out;
}

}  // namespace farey

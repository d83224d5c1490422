#pragma once

// Independent brute-force oracles. None of these call into the code paths
// they are used to check: they work on plain std::vector data and their own
// enumeration loops.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <limits>
#include <map>
#include <numeric>
#include <queue>
#include <string>
#include <vector>

namespace qgx::oracle {

using Ints = std::vector<int>;
using Grid = std::vector<std::vector<int>>;

inline std::size_t hamming(const Ints& a, const Ints& b) {
    std::size_t d = 0;
    for (std::size_t i = 0; i < a.size(); ++i) d += a[i] != b[i];
    return d;
}

/// Calls `visit` with every permutation of {0..n-1} (Heap's algorithm).
template <class Visit>
void for_each_permutation(std::size_t n, Visit&& visit) {
    std::vector<std::size_t> p(n);
    std::iota(p.begin(), p.end(), std::size_t{0});
    std::vector<std::size_t> c(n, 0);
    visit(p);
    std::size_t i = 1;
    while (i < n) {
        if (c[i] < i) {
            if (i % 2 == 0)
                std::swap(p[0], p[i]);
            else
                std::swap(p[c[i]], p[i]);
            visit(p);
            ++c[i];
            i = 1;
        } else {
            c[i] = 0;
            ++i;
        }
    }
}

/// BFS shortest path in the transposition graph.
inline std::size_t swap_distance_bfs(const Ints& from, const Ints& to) {
    std::map<Ints, std::size_t> dist{{from, 0}};
    std::queue<Ints> q;
    q.push(from);
    while (!q.empty()) {
        Ints s = q.front();
        q.pop();
        if (s == to) return dist[s];
        for (std::size_t i = 0; i < s.size(); ++i)
            for (std::size_t j = i + 1; j < s.size(); ++j) {
                Ints t = s;
                std::swap(t[i], t[j]);
                if (dist.emplace(t, dist[s] + 1).second) q.push(t);
            }
    }
    return std::numeric_limits<std::size_t>::max();
}

/// BFS distances from `from` to every permutation reachable by transpositions.
inline std::map<Ints, std::size_t> swap_distances_from(const Ints& from) {
    std::map<Ints, std::size_t> dist{{from, 0}};
    std::queue<Ints> q;
    q.push(from);
    while (!q.empty()) {
        Ints s = q.front();
        q.pop();
        for (std::size_t i = 0; i < s.size(); ++i)
            for (std::size_t j = i + 1; j < s.size(); ++j) {
                Ints t = s;
                std::swap(t[i], t[j]);
                if (dist.emplace(t, dist[s] + 1).second) q.push(t);
            }
    }
    return dist;
}

/// Exhaustive minimum-cost assignment total.
inline double assignment_min(const std::vector<std::vector<double>>& c) {
    double best = std::numeric_limits<double>::infinity();
    for_each_permutation(c.size(), [&](const std::vector<std::size_t>& p) {
        double s = 0;
        for (std::size_t i = 0; i < c.size(); ++i) s += c[i][p[i]];
        best = std::min(best, s);
    });
    return c.empty() ? 0.0 : best;
}

/// min over label permutations σ of H(a, σ(b)); labels 1..k.
inline std::size_t labeling_independent(const Ints& a, const Ints& b, int k) {
    std::size_t best = std::numeric_limits<std::size_t>::max();
    for_each_permutation(static_cast<std::size_t>(k), [&](const std::vector<std::size_t>& s) {
        std::size_t d = 0;
        for (std::size_t i = 0; i < a.size(); ++i) d += a[i] != static_cast<int>(s[static_cast<std::size_t>(b[i] - 1)]) + 1;
        best = std::min(best, d);
    });
    return best;
}

/// min over coordinate rearrangements of the squared Euclidean distance.
inline double rearranged_sq_distance(const std::vector<double>& x, const std::vector<double>& y) {
    double best = std::numeric_limits<double>::infinity();
    for_each_permutation(x.size(), [&](const std::vector<std::size_t>& p) {
        double s = 0;
        for (std::size_t i = 0; i < x.size(); ++i) s += (x[i] - y[p[i]]) * (x[i] - y[p[i]]);
        best = std::min(best, s);
    });
    return best;
}

/// min over coordinate rearrangements of the Hamming distance.
inline std::size_t rearranged_hamming(const Ints& x, const Ints& y) {
    std::size_t best = std::numeric_limits<std::size_t>::max();
    for_each_permutation(x.size(), [&](const std::vector<std::size_t>& p) {
        std::size_t d = 0;
        for (std::size_t i = 0; i < x.size(); ++i) d += x[i] != y[p[i]];
        best = std::min(best, d);
    });
    return best;
}

/// min over vertex relabelings of the cellwise Hamming distance.
inline std::size_t graph_distance(const Grid& a, const Grid& b) {
    const auto n = a.size();
    std::size_t best = std::numeric_limits<std::size_t>::max();
    for_each_permutation(n, [&](const std::vector<std::size_t>& p) {
        std::size_t d = 0;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) d += a[i][j] != b[p[i]][p[j]];
        best = std::min(best, d);
    });
    return best;
}

/// Rotation by k (0..n-1) with the last k entries moved to the front.
inline Ints rotate_right(const Ints& v, std::size_t k) {
    Ints out(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) out[(i + k) % v.size()] = v[i];
    return out;
}

/// Memoized recursive Levenshtein distance.
class EditDistance {
public:
    EditDistance(std::string s, std::string t) : s_(std::move(s)), t_(std::move(t)) {}
    std::size_t operator()() { return go(0, 0); }

private:
    std::size_t go(std::size_t i, std::size_t j) {
        if (i == s_.size()) return t_.size() - j;
        if (j == t_.size()) return s_.size() - i;
        auto key = std::make_pair(i, j);
        if (auto it = memo_.find(key); it != memo_.end()) return it->second;
        std::size_t r = go(i + 1, j + 1) + (s_[i] != t_[j]);
        r = std::min({r, go(i + 1, j) + 1, go(i, j + 1) + 1});
        return memo_[key] = r;
    }
    std::string s_, t_;
    std::map<std::pair<std::size_t, std::size_t>, std::size_t> memo_;
};

inline std::size_t edit_distance(const std::string& s, const std::string& t) { return EditDistance(s, t)(); }

} // namespace qgx::oracle

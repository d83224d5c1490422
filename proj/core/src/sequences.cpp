#include "qgx/sequences.hpp"

#include <algorithm>
#include <vector>

#include "qgx/errors.hpp"
#include "qgx/metric.hpp"

namespace qgx {

Sequence::Sequence(std::string chars) : chars_(std::move(chars)) {
    if (chars_.find(kGap) != std::string::npos) throw InputError("sequence must not contain the gap symbol '-'");
}

std::size_t Alignment::mismatches() const {
    if (left.size() != right.size()) throw DimensionError("alignment rows differ in length");
    std::size_t d = 0;
    for (std::size_t i = 0; i < left.size(); ++i) d += left[i] != right[i];
    return d;
}

Sequence unstretch(const StretchedSequence& s) {
    std::string out;
    out.reserve(s.size());
    for (char c : s.str())
        if (c != kGap) out.push_back(c);
    return Sequence(std::move(out));
}

std::size_t edit_distance(const Sequence& s, const Sequence& t) {
    const std::string& a = s.size() >= t.size() ? s.str() : t.str();
    const std::string& b = s.size() >= t.size() ? t.str() : s.str();
    std::vector<std::size_t> prev(b.size() + 1), cur(b.size() + 1);
    for (std::size_t j = 0; j <= b.size(); ++j) prev[j] = j;
    for (std::size_t i = 1; i <= a.size(); ++i) {
        cur[0] = i;
        for (std::size_t j = 1; j <= b.size(); ++j)
            cur[j] = std::min({prev[j - 1] + (a[i - 1] != b[j - 1]), prev[j] + 1, cur[j - 1] + 1});
        std::swap(prev, cur);
    }
    return prev[b.size()];
}

Alignment optimal_align(const Sequence& s, const Sequence& t) {
    const auto n = s.size(), m = t.size();
    const auto w = m + 1;
    std::vector<std::size_t> dp((n + 1) * w);
    auto at = [&](std::size_t i, std::size_t j) -> std::size_t& { return dp[i * w + j]; };
    for (std::size_t i = 0; i <= n; ++i) at(i, 0) = i;
    for (std::size_t j = 0; j <= m; ++j) at(0, j) = j;
    for (std::size_t i = 1; i <= n; ++i)
        for (std::size_t j = 1; j <= m; ++j)
            at(i, j) = std::min({at(i - 1, j - 1) + (s[i - 1] != t[j - 1]), at(i - 1, j) + 1, at(i, j - 1) + 1});

    std::string left, right;
    std::size_t i = n, j = m;
    while (i > 0 || j > 0) {
        const auto here = at(i, j);
        if (i > 0 && j > 0 && s[i - 1] == t[j - 1] && here == at(i - 1, j - 1)) {
            left.push_back(s[--i]);
            right.push_back(t[--j]);
        } else if (i > 0 && j > 0 && here == at(i - 1, j - 1) + 1) {
            left.push_back(s[--i]);
            right.push_back(t[--j]);
        } else if (i > 0 && here == at(i - 1, j) + 1) {
            left.push_back(s[--i]);
            right.push_back(kGap);
        } else {
            left.push_back(kGap);
            right.push_back(t[--j]);
        }
    }
    std::reverse(left.begin(), left.end());
    std::reverse(right.begin(), right.end());
    return {StretchedSequence(std::move(left)), StretchedSequence(std::move(right))};
}

Sequence recombine_alignment(const Alignment& a, const Mask& mask) {
    const auto& l = a.left.str();
    const auto& r = a.right.str();
    const auto mixed = mask_select<char>(l, r, mask);
    return unstretch(StretchedSequence(std::string(mixed.begin(), mixed.end())));
}

Sequence homologous_crossover(const Sequence& s, const Sequence& t, Rng& rng) {
    const auto alignment = optimal_align(s, t);
    return recombine_alignment(alignment, uniform_mask(alignment.length(), rng));
}

Sequence naive_sequence_crossover(const Sequence& s, const Sequence& t, Rng& rng) {
    const auto len = std::max(s.size(), t.size());
    auto padded = [len](const Sequence& q) {
        std::string out = q.str();
        out.resize(len, kGap);
        return StretchedSequence(std::move(out));
    };
    return recombine_alignment({padded(s), padded(t)}, uniform_mask(len, rng));
}

} // namespace qgx

#pragma once

// Variable-length sequences, their stretched (gapped) genotypes, unit-cost
// edit distance, optimal alignment and homologous crossover.
//
// Stretching is an equivalence on gapped strings but not the orbit relation
// of an isometry group, so nothing here is a GroupAction: normalization is
// alignment and projection is gap removal.

#include <cstddef>
#include <string>
#include <string_view>

#include "qgx/rng.hpp"
#include "qgx/types.hpp"

namespace qgx {

inline constexpr char kGap = '-';

/// A gap-free string.
class Sequence {
public:
    Sequence() = default;
    /// Rejects strings containing the gap symbol.
    explicit Sequence(std::string chars);

    std::size_t size() const noexcept { return chars_.size(); }
    bool empty() const noexcept { return chars_.empty(); }
    const std::string& str() const noexcept { return chars_; }
    char operator[](std::size_t i) const { return chars_[i]; }

    friend bool operator==(const Sequence&, const Sequence&) = default;
    friend auto operator<=>(const Sequence&, const Sequence&) = default;

private:
    std::string chars_;
};

/// A string over the alphabet plus the gap symbol.
class StretchedSequence {
public:
    StretchedSequence() = default;
    explicit StretchedSequence(std::string chars) : chars_(std::move(chars)) {}

    std::size_t size() const noexcept { return chars_.size(); }
    const std::string& str() const noexcept { return chars_; }
    char operator[](std::size_t i) const { return chars_[i]; }

    friend bool operator==(const StretchedSequence&, const StretchedSequence&) = default;

private:
    std::string chars_;
};

/// Two stretched sequences of equal length without double-gap columns.
struct Alignment {
    StretchedSequence left;
    StretchedSequence right;

    std::size_t length() const noexcept { return left.size(); }
    /// Number of columns where the two rows differ.
    std::size_t mismatches() const;

    friend bool operator==(const Alignment&, const Alignment&) = default;
};

inline std::string to_string(const Sequence& s) { return s.str(); }

Sequence unstretch(const StretchedSequence& s);

/// Unit-cost Levenshtein distance, O(|s|·|t|) time, O(min) memory.
std::size_t edit_distance(const Sequence& s, const Sequence& t);

/// Minimum-mismatch alignment. The backtrace runs from the end and prefers
/// match, then substitution, then deletion (gap in the right row), then
/// insertion (gap in the left row).
Alignment optimal_align(const Sequence& s, const Sequence& t);

/// Column-wise recombination of an alignment, followed by gap removal.
Sequence recombine_alignment(const Alignment& a, const Mask& mask);

/// Align, uniform mask crossover over columns, unstretch.
Sequence homologous_crossover(const Sequence& s, const Sequence& t, Rng& rng);

/// Crossover without alignment: the shorter parent is padded with trailing
/// gaps, then recombined column-wise.
Sequence naive_sequence_crossover(const Sequence& s, const Sequence& t, Rng& rng);

} // namespace qgx

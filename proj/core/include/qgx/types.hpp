#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace qgx {

/// Fixed-length vector over the alphabet {1..k}.
class SymbolVector {
public:
    SymbolVector() = default;
    SymbolVector(std::vector<int> symbols, int alphabet);

    std::size_t size() const noexcept { return symbols_.size(); }
    int alphabet() const noexcept { return alphabet_; }
    int operator[](std::size_t i) const { return symbols_[i]; }
    std::span<const int> values() const noexcept { return symbols_; }

    /// Replaces position `i`; the new symbol must lie in {1..k}.
    void set(std::size_t i, int symbol);

    friend bool operator==(const SymbolVector&, const SymbolVector&) = default;
    friend auto operator<=>(const SymbolVector& a, const SymbolVector& b) {
        return a.symbols_ <=> b.symbols_;
    }

private:
    std::vector<int> symbols_;
    int alphabet_ = 1;
};

/// Fixed-length vector of finite reals.
class RealVector {
public:
    RealVector() = default;
    explicit RealVector(std::vector<double> coords);

    std::size_t size() const noexcept { return coords_.size(); }
    double operator[](std::size_t i) const { return coords_[i]; }
    std::span<const double> values() const noexcept { return coords_; }
    void set(std::size_t i, double value);

    friend bool operator==(const RealVector&, const RealVector&) = default;
    friend auto operator<=>(const RealVector& a, const RealVector& b) {
        return a.coords_ <=> b.coords_;
    }

private:
    std::vector<double> coords_;
};

/// Bijection on {1..n}, stored in one-line notation (1-based images).
///
/// Doubles as a group element (relabeling, coordinate shuffle, vertex
/// relabeling) and as a genotype (tours).
class Permutation {
public:
    Permutation() = default;
    explicit Permutation(std::vector<int> images);

    static Permutation identity(std::size_t n);

    std::size_t size() const noexcept { return images_.size(); }
    /// Image of the 1-based point `i`.
    int operator()(int i) const { return images_[static_cast<std::size_t>(i - 1)]; }
    /// 0-based positional access to the one-line notation.
    int operator[](std::size_t i) const { return images_[i]; }
    std::span<const int> values() const noexcept { return images_; }

    Permutation inverse() const;
    /// Composition `(*this)∘other`, i.e. apply `other` first.
    Permutation after(const Permutation& other) const;
    /// Exchanges the entries at 0-based positions `i` and `j`.
    void swap_positions(std::size_t i, std::size_t j);

    friend bool operator==(const Permutation&, const Permutation&) = default;
    friend auto operator<=>(const Permutation& a, const Permutation& b) {
        return a.images_ <=> b.images_;
    }

private:
    std::vector<int> images_;
};

/// Which parent a mask position inherits from.
enum class Parent : std::uint8_t { first, second };

/// Positionwise donor selection for mask-based crossovers.
class Mask {
public:
    Mask() = default;
    explicit Mask(std::vector<Parent> bits) : bits_(std::move(bits)) {}

    static Mask all(std::size_t n, Parent p) { return Mask(std::vector<Parent>(n, p)); }

    std::size_t size() const noexcept { return bits_.size(); }
    Parent operator[](std::size_t i) const { return bits_[i]; }

private:
    std::vector<Parent> bits_;
};

std::string to_string(const SymbolVector& v);
std::string to_string(const RealVector& v);
std::string to_string(const Permutation& p);

} // namespace qgx

#include "qgx/types.hpp"

#include <cmath>
#include <cstdio>
#include <numbers>
#include <sstream>

#include "qgx/errors.hpp"
#include "qgx/rng.hpp"

namespace qgx {

SymbolVector::SymbolVector(std::vector<int> symbols, int alphabet)
    : symbols_(std::move(symbols)), alphabet_(alphabet) {
    if (alphabet_ < 1) throw InputError("alphabet size must be >= 1");
    if (symbols_.empty()) throw InputError("symbol vector must be non-empty");
    for (int s : symbols_)
        if (s < 1 || s > alphabet_)
            throw InputError("symbol " + std::to_string(s) + " outside {1.." + std::to_string(alphabet_) + "}");
}

void SymbolVector::set(std::size_t i, int symbol) {
    if (symbol < 1 || symbol > alphabet_) throw InputError("symbol outside alphabet");
    symbols_.at(i) = symbol;
}

RealVector::RealVector(std::vector<double> coords) : coords_(std::move(coords)) {
    if (coords_.empty()) throw InputError("real vector must be non-empty");
    for (double c : coords_)
        if (!std::isfinite(c)) throw InputError("real vector entries must be finite");
}

void RealVector::set(std::size_t i, double value) {
    if (!std::isfinite(value)) throw InputError("real vector entries must be finite");
    coords_.at(i) = value;
}

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
    const auto n = images_.size();
    std::vector<bool> seen(n, false);
    for (int v : images_) {
        if (v < 1 || static_cast<std::size_t>(v) > n || seen[static_cast<std::size_t>(v - 1)])
            throw InputError("not a permutation of {1.." + std::to_string(n) + "}");
        seen[static_cast<std::size_t>(v - 1)] = true;
    }
}

Permutation Permutation::identity(std::size_t n) {
    std::vector<int> v(n);
    for (std::size_t i = 0; i < n; ++i) v[i] = static_cast<int>(i + 1);
    return Permutation(std::move(v));
}

Permutation Permutation::inverse() const {
    std::vector<int> inv(images_.size());
    for (std::size_t i = 0; i < images_.size(); ++i)
        inv[static_cast<std::size_t>(images_[i] - 1)] = static_cast<int>(i + 1);
    return Permutation(std::move(inv));
}

Permutation Permutation::after(const Permutation& other) const {
    if (other.size() != size()) throw DimensionError("permutation sizes differ");
    std::vector<int> out(size());
    for (std::size_t i = 0; i < size(); ++i) out[i] = (*this)(other[i]);
    return Permutation(std::move(out));
}

void Permutation::swap_positions(std::size_t i, std::size_t j) {
    std::swap(images_.at(i), images_.at(j));
}

namespace {

template <class Range>
std::string join_ints(const Range& r) {
    std::ostringstream os;
    bool first = true;
    for (auto v : r) {
        if (!first) os << ' ';
        os << v;
        first = false;
    }
    return os.str();
}

} // namespace

std::string to_string(const SymbolVector& v) { return join_ints(v.values()); }
std::string to_string(const Permutation& p) { return join_ints(p.values()); }

std::string to_string(const RealVector& v) {
    std::string out;
    char buf[32];
    for (std::size_t i = 0; i < v.size(); ++i) {
        std::snprintf(buf, sizeof buf, "%.10g", v[i]);
        if (i) out += ' ';
        out += buf;
    }
    return out;
}

double standard_normal(Rng& rng) {
    double u1 = unit_real(rng);
    while (u1 <= 0.0) u1 = unit_real(rng);
    const double u2 = unit_real(rng);
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
}

} // namespace qgx

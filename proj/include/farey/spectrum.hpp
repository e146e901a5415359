#pragma once

// Exact spectra: multisets of surd eigenvalues with integer multiplicities,
// plus the pointwise-product and union combinators used by the closed
// forms.

#include "farey/surd.hpp"

#include <cstdio>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace farey {

class Spectrum {
public:
    using Map = std::map<Surd, long long, SurdLess>;

    Spectrum() = default;

    void add(const Surd& value, long long multiplicity) {
        if (multiplicity < 1) throw std::invalid_argument("Spectrum::add: multiplicity must be positive");
        entries_[value] += multiplicity;
    }

    const Map& entries() const { return entries_; }
    std::size_t distinct_count() const { return entries_.size(); }

    long long total_multiplicity() const {
        long long total = 0;
        for (const auto& [value, mult] : entries_) total += mult;
        return total;
    }

    long long multiplicity_of(const Surd& value) const {
        auto it = entries_.find(value);
        return it == entries_.end() ? 0 : it->second;
    }

    Surd largest() const {
        if (entries_.empty()) throw std::logic_error("Spectrum::largest: empty spectrum");
        return entries_.rbegin()->first;
    }

    // Second largest distinct |eigenvalue|.
    Surd second_largest_modulus() const {
        std::map<Surd, int, SurdLess> moduli;
        for (const auto& [value, mult] : entries_) moduli[surd_abs(value)] = 1;
        if (moduli.size() < 2)
            throw std::logic_error("Spectrum::second_largest_modulus: fewer than two distinct moduli");
        auto it = moduli.rbegin();
        ++it;
        return it->first;
    }

    // Sum of eigenvalues with multiplicity, exactly: the coefficient sums
    // grouped by radicand must all vanish.
    bool eigenvalue_sum_is_zero() const {
        std::map<long long, long long> by_radicand;
        for (const auto& [value, mult] : entries_) by_radicand[value.s] += value.z * mult;
        for (const auto& [s, coeff] : by_radicand)
            if (coeff != 0) return false;
        return true;
    }

    // Does every entry of `sub` occur here with at least its multiplicity?
    bool contains_at_least(const Spectrum& sub) const {
        for (const auto& [value, mult] : sub.entries_)
            if (multiplicity_of(value) < mult) return false;
        return true;
    }

private:
    Map entries_;
};

// k * sp, entry by entry. k = 0 would collapse distinct entries.
inline Spectrum spectrum_scale(long long k, const Spectrum& sp) {
    if (k == 0) throw std::invalid_argument("spectrum_scale: factor must be nonzero");
    Spectrum out;
    for (const auto& [value, mult] : sp.entries()) out.add(make_surd(k * value.z, value.s), mult);
    return out;
}

// All pairwise products, multiplicities multiplying.
inline Spectrum spectrum_product(const Spectrum& x, const Spectrum& y) {
    Spectrum out;
    for (const auto& [xv, xm] : x.entries())
        for (const auto& [yv, ym] : y.entries()) out.add(surd_multiply(xv, yv), xm * ym);
    return out;
}

// Multiset union, multiplicities adding.
inline Spectrum spectrum_union(const Spectrum& x, const Spectrum& y) {
    Spectrum out = x;
    for (const auto& [value, mult] : y.entries()) out.add(value, mult);
    return out;
}

// 12 significant digits, the serialization precision for `value` fields.
inline std::string format_significant(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

struct SpectrumRecord {
    long long z = 0;
    long long s = 1;
    std::string value;
    long long multiplicity = 0;
};

// Records sorted ascending by value, ready for JSON or CSV emission.
inline std::vector<SpectrumRecord> spectrum_records(const Spectrum& sp) {
    std::vector<SpectrumRecord> records;
    records.reserve(sp.distinct_count());
    for (const auto& [value, mult] : sp.entries())
        records.push_back({value.z, value.s, format_significant(surd_value(value)), mult});
    return records;
}

}  // namespace farey

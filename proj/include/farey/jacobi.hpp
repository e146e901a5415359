#pragma once

// Numeric eigendecomposition by cyclic Jacobi rotations, the floating-point
// oracle the exact closed forms are checked against. The two sides share no
// code path: this header never looks at a Surd until compare time.

#include "farey/graph.hpp"
#include "farey/spectrum.hpp"
#include "farey/verdict.hpp"

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace farey {

// Eigenvalue clusters narrower than this merge into one entry.
inline constexpr double kClusterWidth = 1e-6;

// Eigenvalues of a symmetric matrix (row-major, n x n), ascending, by
// cyclic Jacobi sweeps with the classic thresholding schedule: early sweeps
// skip rotations below 0.2 sm / n^2, later sweeps zero entries that are
// negligible against both diagonal neighbours. Without the thresholds the
// final sweeps churn inside large eigenvalue clusters. Sweeps run until the
// off-diagonal Frobenius norm falls below `tol`; exceeding the sweep budget
// is an error, never a silent partial result.
inline std::vector<double> symmetric_eigenvalues(std::vector<double> a, int n,
                                                 double tol = 1e-9, int max_sweeps = 100) {
    if (n < 0 || a.size() != static_cast<std::size_t>(n) * n)
        throw std::invalid_argument("symmetric_eigenvalues: matrix must be n x n");
    auto at = [&](int i, int j) -> double& { return a[static_cast<std::size_t>(i) * n + j]; };
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (at(i, j) != at(j, i))
                throw std::invalid_argument("symmetric_eigenvalues: matrix must be symmetric");

    auto off_norm = [&] {
        double sum = 0;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) sum += at(i, j) * at(i, j);
        return std::sqrt(2 * sum);
    };

    bool converged = false;
    for (int sweep = 1; sweep <= max_sweeps && !(converged = off_norm() < tol); ++sweep) {
        double sm = 0;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) sm += std::abs(at(i, j));
        const double thresh = sweep < 4 ? 0.2 * sm / (static_cast<double>(n) * n) : 0.0;
        for (int p = 0; p < n - 1; ++p)
            for (int q = p + 1; q < n; ++q) {
                double apq = at(p, q);
                double guard = 100 * std::abs(apq);
                if (sweep > 4 && std::abs(at(p, p)) + guard == std::abs(at(p, p)) &&
                    std::abs(at(q, q)) + guard == std::abs(at(q, q))) {
                    at(p, q) = at(q, p) = 0;
                    continue;
                }
                if (apq == 0 || std::abs(apq) <= thresh) continue;
                double h = at(q, q) - at(p, p), t;
                if (std::abs(h) + guard == std::abs(h)) {
                    t = apq / h;
                } else {
                    double theta = 0.5 * h / apq;
                    t = 1 / (std::abs(theta) + std::sqrt(1 + theta * theta));
                    if (theta < 0) t = -t;
                }
                double c = 1 / std::sqrt(1 + t * t), s = t * c, rho = s / (1 + c);
                at(p, p) -= t * apq;
                at(q, q) += t * apq;
                at(p, q) = at(q, p) = 0;
                for (int k = 0; k < n; ++k) {
                    if (k == p || k == q) continue;
                    double akp = at(k, p), akq = at(k, q);
                    at(k, p) = at(p, k) = akp - s * (akq + akp * rho);
                    at(k, q) = at(q, k) = akq + s * (akp - akq * rho);
                }
            }
    }
    if (!converged && off_norm() >= tol)
        throw std::runtime_error("symmetric_eigenvalues: Jacobi sweeps did not converge");

    std::vector<double> eigen(n);
    for (int i = 0; i < n; ++i) eigen[i] = at(i, i);
    std::sort(eigen.begin(), eigen.end());
    return eigen;
}

struct NumericEntry {
    double value = 0;
    long long multiplicity = 0;
};

struct NumericSpectrum {
    std::vector<NumericEntry> entries;  // ascending by value

    long long total_multiplicity() const {
        long long total = 0;
        for (const NumericEntry& e : entries) total += e.multiplicity;
        return total;
    }
};

// Group sorted eigenvalues into clusters separated by more than `width`;
// each cluster reports its mean.
inline NumericSpectrum cluster_eigenvalues(const std::vector<double>& sorted, double width = kClusterWidth) {
    NumericSpectrum sp;
    std::size_t i = 0;
    while (i < sorted.size()) {
        std::size_t j = i + 1;
        double sum = sorted[i];
        while (j < sorted.size() && sorted[j] - sorted[j - 1] <= width) sum += sorted[j++];
        sp.entries.push_back({sum / static_cast<double>(j - i), static_cast<long long>(j - i)});
        i = j;
    }
    return sp;
}

inline NumericSpectrum numeric_spectrum(const RegularGraph& g, double tol = 1e-9) {
    const int n = g.vertex_count();
    std::vector<double> a(static_cast<std::size_t>(n) * n, 0.0);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (g.adjacent(i, j)) a[static_cast<std::size_t>(i) * n + j] = 1.0;
    return cluster_eigenvalues(symmetric_eigenvalues(std::move(a), n, tol));
}

// Entrywise match: same distinct entries in order, multiplicities equal
// exactly, values within `tol`.
inline Verdict compare_spectra(const Spectrum& exact, const NumericSpectrum& numeric, double tol = 1e-8) {
    if (exact.distinct_count() != numeric.entries.size())
        return Verdict::fail("entry count mismatch: exact has " + std::to_string(exact.distinct_count()) +
                             " distinct values, numeric has " + std::to_string(numeric.entries.size()));
    std::size_t i = 0;
    for (const auto& [value, mult] : exact.entries()) {
        const NumericEntry& got = numeric.entries[i];
        if (mult != got.multiplicity)
            return Verdict::fail("multiplicity mismatch at " + surd_to_string(value) + ": exact " +
                                 std::to_string(mult) + ", numeric " + std::to_string(got.multiplicity));
        double err = std::abs(surd_value(value) - got.value);
        if (err > tol)
            return Verdict::fail("value mismatch at " + surd_to_string(value) + ": |error| = " +
                                 format_significant(err));
        ++i;
    }
    return Verdict::ok("matched " + std::to_string(exact.distinct_count()) + " entries");
}

}  // namespace farey

#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <vector>

#include "tdis/error.hpp"

namespace tdis {

struct eig_result {
    std::vector<double> values;  // descending
    std::vector<double> vectors; // row-major: vectors[k*n + i] = i-th component of pair k
};

/* Cyclic Jacobi eigendecomposition of a symmetric matrix (row-major n x n).
 * Sweeps rotate every off-diagonal pair until the largest off-diagonal entry
 * drops below tol. */
inline eig_result jacobi_eigh(std::vector<double> a, std::size_t n, double tol = 1e-12,
                              int max_sweeps = 100)
{
    if (n == 0 || a.size() != n * n)
        throw std::invalid_argument("matrix size mismatch");
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (std::abs(a[i * n + j] - a[j * n + i]) > 1e-9)
                throw std::invalid_argument("matrix not symmetric");

    std::vector<double> v(n * n, 0.0);
    for (std::size_t i = 0; i < n; ++i)
        v[i * n + i] = 1.0;

    auto max_off = [&] {
        double m = 0.0;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j)
                m = std::max(m, std::abs(a[i * n + j]));
        return m;
    };

    int sweep = 0;
    while (max_off() > tol) {
        if (sweep++ >= max_sweeps)
            throw numeric_error("jacobi: sweep budget exhausted, off-diagonal " +
                                std::to_string(max_off()));
        for (std::size_t p = 0; p < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) {
                const double apq = a[p * n + q];
                if (std::abs(apq) <= tol * 1e-3)
                    continue;
                const double app = a[p * n + p];
                const double aqq = a[q * n + q];
                const double theta = (aqq - app) / (2.0 * apq);
                const double t = (theta >= 0.0 ? 1.0 : -1.0) /
                                 (std::abs(theta) + std::sqrt(theta * theta + 1.0));
                const double c = 1.0 / std::sqrt(t * t + 1.0);
                const double s = t * c;
                for (std::size_t k = 0; k < n; ++k) {
                    const double akp = a[k * n + p];
                    const double akq = a[k * n + q];
                    a[k * n + p] = c * akp - s * akq;
                    a[k * n + q] = s * akp + c * akq;
                }
                for (std::size_t k = 0; k < n; ++k) {
                    const double apk = a[p * n + k];
                    const double aqk = a[q * n + k];
                    a[p * n + k] = c * apk - s * aqk;
                    a[q * n + k] = s * apk + c * aqk;
                }
                for (std::size_t k = 0; k < n; ++k) {
                    const double vkp = v[k * n + p];
                    const double vkq = v[k * n + q];
                    v[k * n + p] = c * vkp - s * vkq;
                    v[k * n + q] = s * vkp + c * vkq;
                }
            }
        }
    }

    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) {
        const double ex = a[x * n + x];
        const double ey = a[y * n + y];
        return ex != ey ? ex > ey : x < y;
    });

    eig_result r;
    r.values.resize(n);
    r.vectors.resize(n * n);
    for (std::size_t k = 0; k < n; ++k) {
        const std::size_t col = order[k];
        r.values[k] = a[col * n + col];
        for (std::size_t i = 0; i < n; ++i)
            r.vectors[k * n + i] = v[i * n + col];
    }
    return r;
}

struct embedding_result {
    std::size_t n_points = 0;
    std::size_t dim = 0;
    std::vector<double> coords; // row-major n_points x dim
    std::vector<double> eigenvalues;
    double stress = 0.0; // rms residual between input and embedded distances
    bool clamped_negative = false;

    double at(std::size_t i, std::size_t d) const { return coords[i * dim + d]; }
};

/* Classical (Torgerson) multidimensional scaling: double-center -D^2/2,
 * eigendecompose, scale the top eigenvectors by sqrt(eigenvalue). Negative
 * eigenvalues in the embedding dimensions are clamped to zero and flagged. */
inline embedding_result classical_mds(const std::vector<double>& d, std::size_t n,
                                      std::size_t dim)
{
    if (n == 0 || d.size() != n * n)
        throw std::invalid_argument("matrix size mismatch");
    if (n < dim + 1)
        throw std::invalid_argument("need at least dim + 1 points");
    for (std::size_t i = 0; i < n; ++i) {
        if (d[i * n + i] != 0.0)
            throw std::invalid_argument("dissimilarity diagonal must be zero");
        for (std::size_t j = 0; j < n; ++j) {
            if (d[i * n + j] < 0.0)
                throw std::invalid_argument("dissimilarities must be non-negative");
            if (std::abs(d[i * n + j] - d[j * n + i]) > 1e-9)
                throw std::invalid_argument("dissimilarity matrix not symmetric");
        }
    }

    // b = -1/2 * Jc * (D squared entrywise) * Jc, via row/column/grand means
    std::vector<double> sq(n * n);
    for (std::size_t i = 0; i < n * n; ++i)
        sq[i] = d[i] * d[i];
    std::vector<double> row_mean(n, 0.0);
    double grand = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j)
            row_mean[i] += sq[i * n + j];
        row_mean[i] /= static_cast<double>(n);
        grand += row_mean[i];
    }
    grand /= static_cast<double>(n);
    std::vector<double> b(n * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            b[i * n + j] = -0.5 * (sq[i * n + j] - row_mean[i] - row_mean[j] + grand);

    const auto eig = jacobi_eigh(std::move(b), n);

    embedding_result r;
    r.n_points = n;
    r.dim = dim;
    r.eigenvalues = eig.values;
    r.coords.assign(n * dim, 0.0);
    for (std::size_t k = 0; k < dim; ++k) {
        const double lambda = eig.values[k];
        if (lambda < 0.0)
            r.clamped_negative = true;
        const double scale = std::sqrt(std::max(lambda, 0.0));
        for (std::size_t i = 0; i < n; ++i)
            r.coords[i * dim + k] = scale * eig.vectors[k * n + i];
    }

    double ss = 0.0;
    std::size_t n_pairs = 0;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            double dist2 = 0.0;
            for (std::size_t k = 0; k < dim; ++k) {
                const double diff = r.coords[i * dim + k] - r.coords[j * dim + k];
                dist2 += diff * diff;
            }
            const double residual = d[i * n + j] - std::sqrt(dist2);
            ss += residual * residual;
            ++n_pairs;
        }
    }
    r.stress = n_pairs ? std::sqrt(ss / static_cast<double>(n_pairs)) : 0.0;
    return r;
}

} // namespace tdis

#include "patchclust/synth.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "patchclust/rng.hpp"

namespace patchclust {

namespace {

constexpr double kPi = 3.141592653589793238462643383279502884;

// Interior path shared by the interval generators: tolerates empty intervals
// and zero intensity, both of which simply produce no points.
std::vector<double> poisson_interval(double lambda, double lo, double hi, std::uint64_t seed) {
    std::vector<double> out;
    if (lambda <= 0.0 || lo >= hi) return out;
    Xoshiro256 rng(seed);
    double x = lo + rng.exponential(lambda);
    while (x < hi) {
        out.push_back(x);
        x += rng.exponential(lambda);
    }
    return out;
}

}  // namespace

void TwoClusterModel::validate() const {
    if (!(0.0 <= x1 && x1 <= x2 && x2 <= 1.0))
        throw std::invalid_argument("two-cluster model requires 0 <= x1 <= x2 <= 1");
    if (lambda1 < 0.0 || lambda2 < 0.0 || lambda3 < 0.0)
        throw std::invalid_argument("two-cluster model intensities must be >= 0");
    if (!(lambda2 < std::min(lambda1, lambda3)))
        throw std::invalid_argument(
            "two-cluster model requires lambda2 < min(lambda1, lambda3)");
}

std::vector<double> gen_poisson_uniform(double lambda, double lo, double hi,
                                        std::uint64_t seed) {
    if (!(lambda > 0.0)) throw std::invalid_argument("intensity must be positive");
    if (!(lo < hi)) throw std::invalid_argument("interval requires lo < hi");
    return poisson_interval(lambda, lo, hi, seed);
}

std::vector<double> gen_uniform_fixed(std::size_t count, double lo, double hi,
                                      std::uint64_t seed) {
    if (!(lo < hi)) throw std::invalid_argument("interval requires lo < hi");
    std::vector<double> out;
    out.reserve(count);
    Xoshiro256 rng(seed);
    for (std::size_t i = 0; i < count; ++i) out.push_back(rng.uniform(lo, hi));
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<double> gen_normal(std::size_t count, double mu, double sigma, std::uint64_t seed) {
    if (!(sigma > 0.0)) throw std::invalid_argument("sigma must be positive");
    std::vector<double> out;
    out.reserve(count);
    Xoshiro256 rng(seed);
    for (std::size_t i = 0; i < count; ++i) out.push_back(rng.normal(mu, sigma));
    return out;
}

std::vector<double> gen_two_cluster_model(const TwoClusterModel& model, std::uint64_t seed) {
    model.validate();
    std::vector<double> out = poisson_interval(model.lambda1, 0.0, model.x1, derive_seed(seed, 0));
    std::vector<double> mid = poisson_interval(model.lambda2, model.x1, model.x2, derive_seed(seed, 1));
    std::vector<double> right = poisson_interval(model.lambda3, model.x2, 1.0, derive_seed(seed, 2));
    out.insert(out.end(), mid.begin(), mid.end());
    out.insert(out.end(), right.begin(), right.end());
    // The three pieces are each ascending on abutting intervals.
    return out;
}

Dataset gen_shapes(std::size_t count, std::uint64_t seed) {
    if (count < 2 || count % 2 != 0)
        throw std::invalid_argument("shape count must be even and >= 2");

    struct Row {
        double features[5];
        long long label;
    };
    std::vector<Row> rows;
    rows.reserve(count);

    Xoshiro256 rng(seed);
    const std::size_t half = count / 2;
    for (std::size_t i = 0; i < half; ++i) {
        const double g = 1.0 + rng.uniform01();
        // p/gamma and circularity reduce to class constants; store them
        // exactly so the feature identities hold without rounding residue
        rows.push_back({{g, 2.0 * kPi * g, kPi * g * g, 2.0 * kPi, 1.0}, 0});
    }
    for (std::size_t i = 0; i < half; ++i) {
        const double g = 1.0 + rng.uniform01();
        rows.push_back({{g, 4.0 * g, g * g, 4.0, kPi / 4.0}, 1});
    }
    rng.shuffle(rows);

    std::vector<double> values;
    values.reserve(count * 5);
    std::vector<long long> labels;
    labels.reserve(count);
    for (const auto& row : rows) {
        values.insert(values.end(), row.features, row.features + 5);
        labels.push_back(row.label);
    }
    return Dataset({"gamma", "perimeter", "area", "rel_perimeter", "circularity"},
                   std::move(values), std::move(labels));
}

Elongated2D gen_elongated_2d(std::size_t count, double gap, std::uint64_t seed) {
    if (count < 2) throw std::invalid_argument("elongated-2d requires count >= 2");
    if (!(gap > 0.0)) throw std::invalid_argument("gap must be positive");
    if (gap >= 1.0) throw std::invalid_argument("gap must be smaller than 1");

    Elongated2D out;
    out.gap_lo = 0.5 - gap / 2.0;
    out.gap_hi = 0.5 + gap / 2.0;

    struct Row {
        double f1, f2;
        long long label;
    };
    std::vector<Row> rows;
    rows.reserve(count);

    Xoshiro256 rng(seed);
    const std::size_t left = count / 2;
    for (std::size_t i = 0; i < count; ++i) {
        const bool in_left = i < left;
        const double lo = in_left ? 0.0 : out.gap_hi;
        const double hi = in_left ? out.gap_lo : 1.0;
        rows.push_back({rng.uniform(lo, hi), rng.uniform01(), in_left ? 0LL : 1LL});
    }
    rng.shuffle(rows);

    std::vector<double> values;
    values.reserve(count * 2);
    std::vector<long long> labels;
    labels.reserve(count);
    for (const auto& row : rows) {
        values.push_back(row.f1);
        values.push_back(row.f2);
        labels.push_back(row.label);
    }
    out.data = Dataset({"f1", "f2"}, std::move(values), std::move(labels));
    return out;
}

}  // namespace patchclust

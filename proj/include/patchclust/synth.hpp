#pragma once

#include <cstdint>
#include <vector>

#include "patchclust/dataset.hpp"

namespace patchclust {

// Two dense intervals separated by a sparser interstice: intensities
// lambda1, lambda2, lambda3 over [0, x1), [x1, x2), [x2, 1).
struct TwoClusterModel {
    double x1 = 0.4;
    double x2 = 0.6;
    double lambda1 = 140.0;
    double lambda2 = 20.0;
    double lambda3 = 120.0;

    // Throws std::invalid_argument when the boundaries or intensities are
    // inconsistent (x1 > x2, out of [0,1], negative intensity, or a middle
    // intensity at least as dense as the flanks).
    void validate() const;
};

// Homogeneous Poisson point process on [lo, hi): successive gaps are i.i.d.
// Exponential(lambda) starting from lo + Exp(lambda). Output is strictly
// increasing with expected count lambda * (hi - lo).
std::vector<double> gen_poisson_uniform(double lambda, double lo, double hi, std::uint64_t seed);

// Fixed-count alternative: exactly count i.i.d. Uniform[lo, hi) draws,
// sorted ascending. Same marginal geometry as the Poisson process
// conditioned on its count; handy when experiments need a pinned N.
std::vector<double> gen_uniform_fixed(std::size_t count, double lo, double hi,
                                      std::uint64_t seed);

// count i.i.d. Normal(mu, sigma) samples.
std::vector<double> gen_normal(std::size_t count, double mu, double sigma, std::uint64_t seed);

// Union of three independent Poisson-uniform processes on the model's
// intervals; output sorted ascending.
std::vector<double> gen_two_cluster_model(const TwoClusterModel& model, std::uint64_t seed);

// count/2 circles (label 0) and count/2 squares (label 1) with scale gamma
// uniform in [1, 2). Feature columns, in order: gamma, perimeter, area,
// relative perimeter p/gamma, circularity 4*pi*a/p^2. Rows shuffled by seed.
// count must be even and >= 2.
Dataset gen_shapes(std::size_t count, std::uint64_t seed);

// Two vertically elongated uniform bands in [0,1]^2 separated along the
// first feature by an empty band of width `gap` centered at 0.5, with the
// ground-truth gap interval recorded for scoring.
struct Elongated2D {
    Dataset data;
    double gap_lo = 0.0;
    double gap_hi = 0.0;
};

Elongated2D gen_elongated_2d(std::size_t count, double gap, std::uint64_t seed);

}  // namespace patchclust

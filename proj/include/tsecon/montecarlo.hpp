#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "tsecon/johansen.hpp"
#include "tsecon/unit_root.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace tsecon::mc {

using Rng = std::mt19937_64;

/// Seed of replication `rep`, a splitmix64 mix of (base, rep). Results keyed by
/// replication index do not depend on how replications are scheduled.
std::uint64_t replication_seed(std::uint64_t base, std::uint64_t rep);

/// out[i] = f(i, rng_i) for i < reps, serially.
template <class F>
auto replicate_serial(int reps, std::uint64_t seed, F&& f) {
    using R = decltype(f(0, std::declval<Rng&>()));
    std::vector<R> out(static_cast<std::size_t>(reps));
    for (int i = 0; i < reps; ++i) {
        Rng rng(replication_seed(seed, static_cast<std::uint64_t>(i)));
        out[static_cast<std::size_t>(i)] = f(i, rng);
    }
    return out;
}

/// Same result as replicate_serial, replications spread over OpenMP threads.
/// f must be safe to call concurrently.
template <class F>
auto replicate(int reps, std::uint64_t seed, F&& f) {
    using R = decltype(f(0, std::declval<Rng&>()));
    std::vector<R> out(static_cast<std::size_t>(reps));
#pragma omp parallel for schedule(dynamic, 16)
    for (int i = 0; i < reps; ++i) {
        Rng rng(replication_seed(seed, static_cast<std::uint64_t>(i)));
        out[static_cast<std::size_t>(i)] = f(i, rng);
    }
    return out;
}

int max_threads();

/// q-quantile of the draws (linear interpolation between order statistics).
double empirical_quantile(std::vector<double> draws, double q);

// ---------------------------------------------------------------------------
// Dickey-Fuller null distribution
// ---------------------------------------------------------------------------

/// Dickey-Fuller t-ratios from driftless Gaussian random walks of T + 1 points,
/// so each regression has T observations. Computed from closed-form moments,
/// not through adf_test.
std::vector<double> df_tau_draws(DetCase det_case, int T, int reps, std::uint64_t seed);
std::vector<double> df_tau_draws_serial(DetCase det_case, int T, int reps, std::uint64_t seed);

// ---------------------------------------------------------------------------
// Johansen null distribution
// ---------------------------------------------------------------------------

struct JohansenDraws {
    std::vector<double> trace;
    std::vector<double> max_eigen;
};

/// Trace and max-eigenvalue statistics for r = 0 on `dim` independent random
/// walks of T + 1 points with k_var = 1. Under the unrestricted constant the
/// first walk carries a unit drift, matching the trending-data limit.
JohansenDraws johansen_null_draws(JohansenCase det_case, int dim, int T, int reps, std::uint64_t seed);
JohansenDraws johansen_null_draws_serial(JohansenCase det_case, int dim, int T, int reps, std::uint64_t seed);

}  // namespace tsecon::mc

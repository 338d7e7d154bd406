#pragma once

#include <string>
#include <vector>

#include "tsecon/core_data.hpp"
#include "tsecon/linalg.hpp"
#include "tsecon/montecarlo.hpp"

namespace tsecon::mc {

TimeSeries white_noise(const std::string& name, int n, Rng& rng, double sd = 1.0);
TimeSeries random_walk(const std::string& name, int n, Rng& rng, double drift = 0.0);
TimeSeries ar1(const std::string& name, int n, double phi, Rng& rng);

/// dY_t = c + alpha beta' Y_{t-1} + sum_j gamma[j] dY_{t-j} + L e_t, e_t ~ N(0, I).
struct VecmProcess {
    Vector intercept;
    Matrix alpha;
    Matrix beta;
    std::vector<Matrix> gamma;
    /// Lower-triangular noise factor; identity when empty.
    Matrix noise_factor;
};

/// n observations after `burn_in` discarded ones, starting at year 1.
Dataset simulate_vecm(const VecmProcess& process, int n, Rng& rng, int burn_in = 100);

/// Y_t = c + sum_j a[j] Y_{t-j} + e_t, e_t ~ N(0, I).
Dataset simulate_var(const Vector& intercept, const std::vector<Matrix>& a, int n, Rng& rng, int burn_in = 100);

}  // namespace tsecon::mc

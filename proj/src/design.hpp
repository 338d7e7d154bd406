#pragma once

#include "tsecon/core_data.hpp"
#include "tsecon/johansen.hpp"
#include "tsecon/linalg.hpp"

namespace tsecon::detail {

/// Regression blocks of the error-correction form, one row per t = k_var..n-1:
///   dY    : dY_t                               (T x k)
///   level : Y_{t-1} [, 1 | t]                  (T x k or k+1)
///   short : [1,] dY_{t-1}, ..., dY_{t-k_var+1}  (T x q), intercept first when free
struct EcmDesign {
    Matrix dY;
    Matrix level;
    Matrix short_run;
    bool free_intercept = false;
    int lag_diffs = 0;
};

EcmDesign build_ecm_design(const Dataset& ds, int k_var, JohansenCase det_case);

}  // namespace tsecon::detail

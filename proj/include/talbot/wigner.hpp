// Ground-truth Wigner distribution functions: the numerical WDF of a sampled
// state and the two closed forms for infinitely periodic input. Momentum is
// expressed as nu = p*d/(2*pi); map values are nu-densities, i.e.
// W(x, nu) = 2*pi * W(x, p = 2*pi*nu), so a normalized state integrates to 1
// over (x, nu).

#pragma once

#include <string>
#include <vector>

#include "talbot/grid.hpp"
#include "talbot/optics.hpp"

namespace talbot {

struct WignerMap {
    Grid1D x_grid;
    Grid1D nu_grid;
    Matrix values;  // values.at(i_nu, i_x)
    std::string source;
};

struct DeltaPeak {
    int n = 0;        // x = n/2
    int m = 0;        // nu = m/2
    int sign = 1;     // (-1)^(n*m)
    double weight = 0.5;
};

// Correlation-then-Fourier evaluation of the WDF of `psi` sampled on `grid`.
// `max_offset` limits the correlation half-width along x' (<= 0 means use
// everything the grid provides). Preconditions: psi normalized to
// sum|psi|^2*dx = 1 and negligible at the grid boundary unless a finite
// max_offset keeps the correlation window inside the data.
WignerMap wdf_numerical(const std::vector<cdouble>& psi, const Grid1D& grid,
                        const Grid1D& nu_grid, double max_offset = 0.0);

// Exact WDF of the infinite rectangular-wave state: delta lines at
// half-integer nu with x-profiles sum_{n+n'=m} A_n A_{n'} e^{i 2 pi (n-n') x}.
// Rows are stored as line densities per unit nu-mass ("line-density" in
// `source`); nu rows cover m = -2*n_max .. 2*n_max.
WignerMap wdf_infinite_exact(double f0, int n_max, const Grid1D& x_grid);

// Checkerboard of delta peaks for the delta-comb state, n in
// [n_min, n_max] x m in [m_min, m_max].
std::vector<DeltaPeak> wdf_delta_comb(int n_min, int n_max, int m_min, int m_max);

}  // namespace talbot

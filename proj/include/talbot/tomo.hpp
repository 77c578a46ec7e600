// Propagation-distance <-> rotation-angle mapping, sinogram assembly,
// filtered back-projection and negativity metrics.

#pragma once

#include <string>
#include <vector>

#include "talbot/carpet.hpp"
#include "talbot/grid.hpp"
#include "talbot/wigner.hpp"

namespace talbot {

struct Sinogram {
    Grid1D x_grid;
    std::vector<double> angles;  // strictly increasing, in [0, pi)
    Matrix rows;                 // rows.at(i_theta, ix), each integrates to 1
    bool symmetric_extension_used = false;
};

struct ReconstructionConfig {
    double r_c = 30.0;  // ramp-filter cutoff, units 1/d
    Grid1D x_grid{-3.0, 3.0, 0.05};
    Grid1D nu_grid{-1.0, 1.0, 0.025};

    void validate() const;
};

struct NegativityReport {
    double min_value = 0.0;
    double min_x = 0.0;
    double min_nu = 0.0;
    double max_value = 0.0;
    double negative_volume = 0.0;  // integral of max(0, -W)
    double peak_contrast = 0.0;    // |min| / max
};

struct SinogramConfig {
    Grid1D x_grid;  // marginal axis; defaults to the carpet grid when empty
    bool symmetric_extension = false;
    bool use_carpet_grid = true;
};

// theta = arctan(z * lambda / (2*pi)); strictly increasing, < pi/2.
double theta_of_z(double z, double wavelength);

// Exact inverse; rejects theta >= pi/2 (infinite distance).
double z_of_theta(double theta, double wavelength);

// Rescale a measured slice at distance z into the rotated marginal
// P_theta(x) = (1/s) P(x/s), s = cos(theta), resampled onto out_grid and
// re-normalized.
std::vector<double> marginal_from_slice(const std::vector<double>& slice,
                                        const Grid1D& slice_grid, double z,
                                        double wavelength, const Grid1D& out_grid);

Sinogram build_sinogram(const Carpet& carpet, double wavelength,
                        const SinogramConfig& config);

// Band-limited ramp-filter kernel: integral of |r| e^{irx} over [-r_c, r_c].
double fbp_kernel(double x, double r_c);

// Filtered back-projection onto (x, nu); trapezoidal quadrature in x' and in
// theta over the actual angle spacing. Output is the nu-density map
// (includes the 1/(4 pi^2) inverse-Radon normalization and the 2*pi
// p -> nu Jacobian).
WignerMap reconstruct(const Sinogram& sinogram, const ReconstructionConfig& config);

NegativityReport negativity_report(const WignerMap& map);

}  // namespace talbot

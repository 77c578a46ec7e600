// Near-field diffraction intensity ("quantum carpet") behind the grating,
// for coherent, partially coherent, finite-grating and visibility-degraded
// illumination.

#pragma once

#include <string>
#include <vector>

#include "talbot/grid.hpp"
#include "talbot/optics.hpp"

namespace talbot {

// P(x, z) on a rectangular grid; every z-slice integrates to 1 over the
// x window (plain sum * dx).
struct Carpet {
    Grid1D x_grid;
    std::vector<double> z_values;
    Matrix density;  // density.at(iz, ix)
    std::string provenance;
};

struct ScenarioSpec {
    GratingSpec grating;
    BeamSpec beam;
    Grid1D x_grid;
    std::vector<double> z_values;
    int n_max = 256;              // spectral truncation |n| <= n_max
    int quadrature_per_slit = 32; // minimum samples per slit opening
    int n_alpha = 65;             // incidence-angle samples (odd)

    void validate() const;
};

// Coherent plane-wave illumination of the infinite grating (truncated
// spectral sum).
Carpet carpet_infinite(const ScenarioSpec& spec);

// 2*N_s+1 slits, Fresnel integral of t'_c over each opening.
Carpet carpet_finite(const ScenarioSpec& spec);

// Gaussian-weighted intensity average over incident angles in
// [-alpha_max/2, alpha_max/2], sigma = 0.1*alpha_max.
Carpet incoherent_average(const ScenarioSpec& spec);

// I_min + (1 - I_min) * P/max(P) per slice, I_min = (1-V)/(1+V), then
// re-normalized. V = 1 is the identity.
Carpet apply_visibility(const Carpet& carpet, double visibility);

// (max - min)/(max + min) over the central period [-1/2, 1/2].
double fringe_visibility(const std::vector<double>& slice, const Grid1D& grid);

// Detector pixel binning: block-average onto a grid coarsened by `factor`.
Carpet downsample(const Carpet& carpet, int factor);

// sum(slice)*dx == 1 normalization, in place. Throws on non-positive mass.
void normalize_slice(std::vector<double>& slice, double dx);
void normalize_slice(double* slice, std::size_t n, double dx);

}  // namespace talbot

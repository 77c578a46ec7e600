// Grating, beam and particle-wall interaction specifications, plus the
// single-slit transmission machinery. Internal unit system: the grating
// period d is the unit length, hbar = 1, momenta are reported as
// nu = p*d/(2*pi) (grating-order units).

#pragma once

#include <complex>
#include <optional>
#include <vector>

#include "talbot/grid.hpp"

namespace talbot {

using cdouble = std::complex<double>;

namespace phys {
// CODATA 2018 values, SI.
inline constexpr double hbar = 1.054571817e-34;      // J s
inline constexpr double planck_h = 6.62607015e-34;   // J s
inline constexpr double amu = 1.66053906660e-27;     // kg
inline constexpr double mev_nm3 = 1.602176634e-22 * 1e-27;  // J m^3 per meV nm^3
}  // namespace phys

// Particle-wall dispersion interaction V(r) = -C3 / r^3 acting over the
// grating thickness. All fields are physical (SI); `period` is the physical
// grating period used to convert the phase strength into period units.
struct VdwSpec {
    double c3 = 0.0;         // J m^3
    double mass = 0.0;       // kg
    double p_z = 0.0;        // kg m/s, longitudinal momentum
    double thickness = 0.0;  // m, wall length along z
    double period = 0.0;     // m, physical grating period

    void validate() const;

    // m*b*C3/(hbar*p_z) expressed in units of d^3.
    double phase_strength() const;
};

struct GratingSpec {
    double open_fraction = 0.3;
    // Empty: infinitely periodic grating. Engaged with N_s: 2*N_s+1 slits
    // centred on x = 0.
    std::optional<int> finite_slits;
    std::optional<VdwSpec> vdw;

    void validate() const;

    // Open region is clipped this close to each wall when a vdW phase is
    // present (the phase diverges at the wall).
    double wall_clip() const { return vdw ? 1e-3 * open_fraction : 0.0; }
};

struct BeamSpec {
    double wavelength = 1e-5;  // de Broglie wavelength, units of d
    double alpha_max = 0.0;    // total incident-angle range, rad
    double visibility = 1.0;

    void validate() const;
};

// A_n = f0 * sinc(n*pi*f0), with the n = 0 limit handled exactly.
double fourier_coefficient(int n, double f0);

// Unit-modulus phase factor exp(i*dphi) accumulated while passing the slit
// at distances r_left, r_right (> 0, units of d) from the two walls.
cdouble vdw_phase(double r_left, double r_right, const VdwSpec& spec);

// Samples of the single-slit transmission t'_c(x) = t_c(x) * phi(x) over one
// period; grid must cover [-1/2, 1/2].
std::vector<cdouble> transmission_profile(const GratingSpec& grating, const Grid1D& grid);

// z_T = 2 d^2 / lambda (= 2/lambda in internal units).
double talbot_distance(const BeamSpec& beam);

// Spectral amplitudes A_n, n = -n_max..n_max, of the periodic transmission.
// Analytic for a bare slit; numerical quadrature when a vdW phase is present.
std::vector<cdouble> spectral_amplitudes(const GratingSpec& grating, int n_max);

}  // namespace talbot

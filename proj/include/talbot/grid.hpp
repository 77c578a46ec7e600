// Uniform sample grids and a small dense matrix used across the library.

#pragma once

#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <vector>

namespace talbot {

// Uniform 1-D grid: x_j = x_min + j*dx for j = 0 .. n()-1.
// All lengths are in units of the grating period d.
struct Grid1D {
    double x_min = 0.0;
    double x_max = 0.0;
    double dx = 1.0;

    Grid1D() = default;
    Grid1D(double lo, double hi, double step) : x_min(lo), x_max(hi), dx(step) {
        if (!(dx > 0.0)) throw std::invalid_argument("Grid1D: dx must be > 0");
        if (!(x_max > x_min)) throw std::invalid_argument("Grid1D: x_max must exceed x_min");
    }

    std::size_t n() const {
        // Tolerant count so that spans that are an exact multiple of dx
        // include both endpoints despite rounding.
        return static_cast<std::size_t>(std::floor((x_max - x_min) / dx * (1.0 + 1e-12) + 1e-9)) + 1;
    }

    double x(std::size_t j) const { return x_min + static_cast<double>(j) * dx; }

    std::vector<double> points() const {
        std::vector<double> p(n());
        for (std::size_t j = 0; j < p.size(); ++j) p[j] = x(j);
        return p;
    }

    // Index of the sample nearest to xx (clamped to the grid).
    std::size_t nearest(double xx) const {
        double t = (xx - x_min) / dx;
        if (t <= 0.0) return 0;
        std::size_t j = static_cast<std::size_t>(std::llround(t));
        return j >= n() ? n() - 1 : j;
    }
};

// Row-major dense matrix of doubles.
struct Matrix {
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::vector<double> data;

    Matrix() = default;
    Matrix(std::size_t r, std::size_t c, double fill = 0.0) : rows(r), cols(c), data(r * c, fill) {}

    double& at(std::size_t r, std::size_t c) { return data[r * cols + c]; }
    double at(std::size_t r, std::size_t c) const { return data[r * cols + c]; }
    double* row(std::size_t r) { return data.data() + r * cols; }
    const double* row(std::size_t r) const { return data.data() + r * cols; }
};

// Linear interpolation of uniformly sampled values; returns 0 outside the grid.
double interp_linear(const Grid1D& g, const std::vector<double>& values, double x);

}  // namespace talbot

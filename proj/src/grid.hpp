#pragma once

#include <complex>
#include <memory>
#include <span>
#include <vector>

#include "errors.hpp"

namespace dbsim {

using Complex = std::complex<double>;

enum class Boundary {
    HardWallSine,    // sine basis, field vanishes at both endpoints
    PeriodicFourier  // plane-wave basis, x_max identified with x_min
};

// Uniform 1D lattice. Immutable; copies share the node array.
class Grid {
public:
    Grid() = default;
    Grid(int n_points, double x_min, double x_max, Boundary boundary);

    int n() const { return data_->n; }
    double x_min() const { return data_->x_min; }
    double x_max() const { return data_->x_max; }
    double spacing() const { return data_->spacing; }
    Boundary boundary() const { return data_->boundary; }
    double length() const { return data_->x_max - data_->x_min; }

    std::span<const double> nodes() const { return data_->nodes; }
    double node(int i) const { return data_->nodes[i]; }

    bool compatible(const Grid& other) const {
        return data_ == other.data_ ||
               (data_->n == other.data_->n && data_->x_min == other.data_->x_min &&
                data_->x_max == other.data_->x_max && data_->boundary == other.data_->boundary);
    }

    // Wavenumbers of the spectral basis. HardWallSine: k_m = m*pi/L for
    // m = 1..n-2 (interior sine modes). Periodic: FFT ordering.
    std::vector<double> wavenumbers() const;

private:
    struct Data {
        int n = 0;
        double x_min = 0, x_max = 0, spacing = 0;
        Boundary boundary = Boundary::HardWallSine;
        std::vector<double> nodes;
    };
    std::shared_ptr<const Data> data_;
};

Grid make_grid(int n_points, double x_min, double x_max, Boundary boundary);

// Complex-valued field sampled on a grid. Value semantics.
class ComplexField {
public:
    ComplexField() = default;
    explicit ComplexField(const Grid& grid)
        : grid_(grid), values_(static_cast<size_t>(grid.n()), Complex{0.0, 0.0}) {}
    ComplexField(const Grid& grid, std::vector<Complex> values);

    const Grid& grid() const { return grid_; }
    int n() const { return grid_.n(); }

    std::span<const Complex> values() const { return values_; }
    std::span<Complex> values() { return values_; }
    Complex operator[](size_t i) const { return values_[i]; }
    Complex& operator[](size_t i) { return values_[i]; }

private:
    Grid grid_;
    std::vector<Complex> values_;
};

// Quadrature: trapezoid on hard-wall grids, rectangle on periodic ones.
Complex inner_product(const ComplexField& f, const ComplexField& g);
double norm_squared(const ComplexField& f);
double quadrature(const Grid& grid, std::span<const double> integrand);

// -1/2 d^2/dx^2 via the spectral basis matching the boundary condition.
ComplexField apply_kinetic(const ComplexField& field);

// d/dx via the spectral basis.
ComplexField spectral_derivative(const ComplexField& field);

// In-place kinetic evolution factor: multiplies each spectral coefficient by
// exp(-i*dt*k^2/2). One Strang drift substep of the split-step integrator.
void kinetic_evolve(ComplexField& field, double dt);

}  // namespace dbsim

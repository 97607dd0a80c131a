#ifndef PRANDTL_FIELD_HPP
#define PRANDTL_FIELD_HPP

#include <complex>
#include <iosfwd>
#include <string>
#include <vector>

#include "prandtl/grid.hpp"

namespace prandtl {

using cplx = std::complex<double>;

// Tangential Fourier coefficients on the normal grid. Layout:
// c[(mode*ncomp + comp)*Ny + j], y innermost so per-mode tridiagonal solves
// run on contiguous memory. `real_field` asserts Hermitian symmetry in the
// tangential modes: coeff(-k) = conj(coeff(k)).
struct SpectralField {
    GridPtr g;
    int ncomp = 1;
    bool real_field = true;
    std::vector<cplx> c;

    SpectralField() = default;
    explicit SpectralField(GridPtr grid, bool real = true)
        : SpectralField(std::move(grid), -1, real) {}
    SpectralField(GridPtr grid, int ncomponents, bool real = true)
        : g(std::move(grid)), ncomp(ncomponents < 0 ? g->components() : ncomponents),
          real_field(real),
          c(g->num_modes() * static_cast<std::size_t>(ncomp) *
            static_cast<std::size_t>(g->Ny)) {}

    std::size_t idx(std::size_t mode, int comp, int j) const {
        return (mode * static_cast<std::size_t>(ncomp) + static_cast<std::size_t>(comp)) *
                   static_cast<std::size_t>(g->Ny) +
               static_cast<std::size_t>(j);
    }
    cplx& at(std::size_t mode, int comp, int j) { return c[idx(mode, comp, j)]; }
    const cplx& at(std::size_t mode, int comp, int j) const { return c[idx(mode, comp, j)]; }

    SpectralField& operator+=(const SpectralField& o);
    SpectralField& operator-=(const SpectralField& o);
    SpectralField& operator*=(double a);
    SpectralField& operator*=(cplx a);

    // Max |coeff(-k) - conj(coeff(k))| over matched pairs.
    double hermitian_defect() const;
    // Zeroes the skew part so the defect becomes exactly 0.
    void enforce_hermitian();

    double max_abs() const;
    bool finite() const;
};

SpectralField operator+(SpectralField a, const SpectralField& b);
SpectralField operator-(SpectralField a, const SpectralField& b);
SpectralField operator*(double a, SpectralField f);

// y-independent counterpart (the outflow state U, pressure gradients, F-bar).
// Layout: c[mode*ncomp + comp].
struct TangentialField {
    GridPtr g;
    int ncomp = 1;
    bool real_field = true;
    std::vector<cplx> c;

    TangentialField() = default;
    explicit TangentialField(GridPtr grid, bool real = true)
        : g(std::move(grid)), ncomp(g->components()), real_field(real),
          c(g->num_modes() * static_cast<std::size_t>(ncomp)) {}

    std::size_t idx(std::size_t mode, int comp) const {
        return mode * static_cast<std::size_t>(ncomp) + static_cast<std::size_t>(comp);
    }
    cplx& at(std::size_t mode, int comp) { return c[idx(mode, comp)]; }
    const cplx& at(std::size_t mode, int comp) const { return c[idx(mode, comp)]; }

    TangentialField& operator+=(const TangentialField& o);
    TangentialField& operator-=(const TangentialField& o);
    TangentialField& operator*=(double a);

    double hermitian_defect() const;
    void enforce_hermitian();
};

TangentialField operator+(TangentialField a, const TangentialField& b);
TangentialField operator-(TangentialField a, const TangentialField& b);
TangentialField operator*(double a, TangentialField f);

// Real-space samples, same flattening as mode indices: point p has coordinates
// x1 = Lx*p1/Nx (d=2: p = p1; d=3: p = p2*Nx + p1), values[(p*ncomp+comp)*Ny + j].
struct RealSamples {
    GridPtr g;
    int ncomp = 1;
    std::vector<double> v;

    RealSamples() = default;
    explicit RealSamples(GridPtr grid, int ncomponents = -1)
        : g(std::move(grid)), ncomp(ncomponents < 0 ? g->components() : ncomponents),
          v(g->num_modes() * static_cast<std::size_t>(ncomp) *
            static_cast<std::size_t>(g->Ny)) {}

    std::size_t idx(std::size_t p, int comp, int j) const {
        return (p * static_cast<std::size_t>(ncomp) + static_cast<std::size_t>(comp)) *
                   static_cast<std::size_t>(g->Ny) +
               static_cast<std::size_t>(j);
    }
    double& at(std::size_t p, int comp, int j) { return v[idx(p, comp, j)]; }
    double at(std::size_t p, int comp, int j) const { return v[idx(p, comp, j)]; }
};

// Discrete Fourier pair. Round trip is the identity to ~1e-15 relative.
SpectralField to_spectral(const RealSamples& values);
RealSamples from_spectral(const SpectralField& f);

// Tangential-only transforms for TangentialField (values indexed [p*ncomp+comp]).
TangentialField to_spectral_tangential(const GridPtr& g, const std::vector<double>& values,
                                       int ncomp);
std::vector<double> from_spectral_tangential(const TangentialField& f);

// Flat binary container (little-endian doubles) and CSV for small grids.
void save_field(const SpectralField& f, const std::string& path);
SpectralField load_field(const std::string& path);
void write_field_csv(const SpectralField& f, std::ostream& os);

} // namespace prandtl

#endif

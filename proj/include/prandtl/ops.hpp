#ifndef PRANDTL_OPS_HPP
#define PRANDTL_OPS_HPP

#include "prandtl/field.hpp"

namespace prandtl {

enum class FracKind {
    abs_grad,     // |grad_x|^a
    bracket_grad, // <grad_x>^a = (1+|grad_x|^2)^{a/2}
    inv_bracket,  // <grad_x>^{-a}, used by the product-estimate suites
};

// (i*k)^order per tangential direction; `dir` selects the direction (0 or 1).
SpectralField tangential_derivative(const SpectralField& f, int order, int dir = 0);
TangentialField tangential_derivative(const TangentialField& f, int order, int dir = 0);

// div_x u = sum_c d_{x_c} u_c; scalar output (ncomp of the result is 1 only
// for d=2; for d=3 the scalar is replicated into component 0 of a 1-slot
// helper field, so it is returned as a dedicated struct-free SpectralField
// with ncomp forced to 1 via the scalar_field helper below).
SpectralField divergence_x(const SpectralField& u);

// Mode k scaled by |k|^a, <k>^a or <k>^{-a}. Requires a in [0,1].
SpectralField fractional_multiplier(const SpectralField& f, double a, FracKind kind);
TangentialField fractional_multiplier(const TangentialField& f, double a, FracKind kind);

// Mode k scaled by exp(sigma*|k|^{1/p}), p = 1 analytic, p = 2 Gevrey.
// sigma may be negative. Throws std::domain_error when
// |sigma|*max|k|^{1/p} > 700 (exp overflow guard - radius too large for grid).
SpectralField radius_multiplier(const SpectralField& f, double sigma, int p);
TangentialField radius_multiplier(const TangentialField& f, double sigma, int p);

// Second-order finite differences on the y nodes, one-sided at both ends.
SpectralField normal_derivative(const SpectralField& f, int order);

// Z^j f = y^j d_y^j f; the j-th derivative is the j-fold first-derivative
// stencil, exact on polynomials of degree <= 2 at every node.
SpectralField conormal_Z(const SpectralField& f, int j);

// d_y^{-1} f = cumulative trapezoid from y = 0; result vanishes at y = 0.
SpectralField antiderivative_y(const SpectralField& f);

// R_n: zeroes every mode with |k_phys| > n. Idempotent.
SpectralField regularize_Rn(const SpectralField& f, double n);

// 2/3-rule guard: zeroes modes with |k_int| > Nx/3 (per direction).
SpectralField dealias(const SpectralField& f);
TangentialField dealias(const TangentialField& f);
bool is_dealiased(const SpectralField& f);

// Pointwise multiply in real space, then dealias. Both inputs are dealiased
// first, which keeps the circular convolution alias-free in the retained band.
SpectralField pointwise_product(const SpectralField& a, const SpectralField& b);

// Scalar field with one component on the same grid (for divergences etc.).
SpectralField scalar_field(const GridPtr& g);

// Multiply every component of f by a scalar-valued field s (in spectral form),
// pseudo-spectrally with dealiasing.
SpectralField scalar_times(const SpectralField& s, const SpectralField& f);

// Multiply by a y-profile (diagonal in modes).
SpectralField yprofile_times(const std::vector<double>& profile, const SpectralField& f);

// Embed a tangential field as a y-constant spectral field.
SpectralField extend_in_y(const TangentialField& U);

} // namespace prandtl

#endif

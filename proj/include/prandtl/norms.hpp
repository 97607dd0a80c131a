#ifndef PRANDTL_NORMS_HPP
#define PRANDTL_NORMS_HPP

#include <vector>

#include "prandtl/field.hpp"

namespace prandtl {

enum class WeightKind {
    gaussian,   // e^{gamma*y^2}
    polynomial, // <y>^gamma = (1+y)^gamma
};

// Parameter bundle selecting a norm: regularity s, weight strength gamma,
// tangential radius sigma, weight family, Gevrey index p (1 = analytic
// e^{sigma|k|}, 2 = Gevrey-2 e^{sigma*sqrt|k|}).
struct NormSpec {
    int s = 4;
    double gamma = 0.25;
    double sigma = 0.0;
    WeightKind weight = WeightKind::gaussian;
    int gevrey_p = 1;

    void validate() const; // gamma > 0, sigma >= 0, s >= 0
};

// ||u||^2 = sum_{|k|+j<=s} ||W(y) Z^j dx^k u||^2_{L2}, Parseval in x,
// trapezoid in y. Throws std::domain_error when the Gaussian weight would
// overflow (2*gamma*Ly^2 > 700).
double hs_conormal_norm(const SpectralField& f, const NormSpec& spec);

// ||u||^2_{X^s} = ||u||^2_{H^s} + ||d_y u||^2_{H^{s-1}}.
double xs_norm(const SpectralField& f, const NormSpec& spec);

// sum over |k| <= s1, j <= s2 only.
double anisotropic_norm(const SpectralField& f, int s1, int s2, double gamma,
                        WeightKind weight = WeightKind::gaussian);

// xs_norm of e^{sigma|k|}u (p=1). Polynomial-weight + p=2 gives the Gevrey
// family of the global experiment.
double analytic_sobolev_norm(const SpectralField& f, const NormSpec& spec);
double gevrey_norm(const SpectralField& f, const NormSpec& spec);

// Tangential Sobolev norm with radius: Lx^{d-1} sum <k>^{2s} e^{2 sigma |k|}|U_k|^2.
double hx_norm(const TangentialField& U, int s, double sigma, int gevrey_p = 1);

// Extra y weight: sum_{l<=1} sum_{|k|+j+l<=s} ||y W(y) Z^j dx^k dy^l u||^2.
double tilde_norm(const SpectralField& f, const NormSpec& spec);

// Plain L2 over the slab, Parseval in x and trapezoid in y.
double l2_norm(const SpectralField& f);
double l2_norm(const TangentialField& U);

// Parabolic energy bookkeeping: running sup of ||w_sigma||^2_{X^s_gamma} and
// the left-endpoint time integral of the dissipation rate.
struct EnergyTrace {
    std::vector<double> times;
    std::vector<double> sup_sq;
    std::vector<double> diss_integral;
    double last_rate = 0.0;

    bool empty() const { return times.empty(); }
    double energy_sq() const {
        return empty() ? 0.0 : sup_sq.back() + diss_integral.back();
    }
    double energy() const;
};

// One sample: f_sigma_now must already carry the radius multiplier; the spec
// supplies (s, gamma(t), weight). Throws std::invalid_argument when t does not
// increase. Returns the updated trace.
EnergyTrace parabolic_energy_update(EnergyTrace trace, double t, const SpectralField& f_sigma_now,
                                    const NormSpec& spec);

// Raw-value variant when the three norms are already known:
// sup candidate ||f||^2 and dissipation rate |||grad|^{1/2}f||^2 + ||dy f||^2.
EnergyTrace parabolic_energy_update_raw(EnergyTrace trace, double t, double norm_sq, double rate);

void write_energy_csv(const EnergyTrace& tr, std::ostream& os);

} // namespace prandtl

#endif

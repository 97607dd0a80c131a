#include "prandtl/norms.hpp"

#include <cmath>
#include <ostream>
#include <stdexcept>

#include "prandtl/ops.hpp"

namespace prandtl {

void NormSpec::validate() const {
    if (gamma <= 0.0) throw std::invalid_argument("NormSpec: gamma must be positive");
    if (sigma < 0.0) throw std::invalid_argument("NormSpec: sigma must be nonnegative");
    if (s < 0) throw std::invalid_argument("NormSpec: s must be nonnegative");
    if (gevrey_p != 1 && gevrey_p != 2) throw std::invalid_argument("NormSpec: p must be 1 or 2");
}

namespace {

std::vector<double> trapezoid_weights(const Grid& g) {
    std::vector<double> qw(static_cast<std::size_t>(g.Ny), 0.0);
    for (int j = 0; j + 1 < g.Ny; ++j) {
        const double h = g.y[static_cast<std::size_t>(j + 1)] - g.y[static_cast<std::size_t>(j)];
        qw[static_cast<std::size_t>(j)] += 0.5 * h;
        qw[static_cast<std::size_t>(j + 1)] += 0.5 * h;
    }
    return qw;
}

std::vector<double> squared_weight(const Grid& g, double gamma, WeightKind wk) {
    if (wk == WeightKind::gaussian && 2.0 * gamma * g.Ly * g.Ly > 700.0)
        throw std::domain_error("norms: Gaussian weight exp(gamma*y^2) overflows on this grid; "
                                "reduce gamma or Ly");
    std::vector<double> w(static_cast<std::size_t>(g.Ny));
    for (int j = 0; j < g.Ny; ++j) {
        const double y = g.y[static_cast<std::size_t>(j)];
        w[static_cast<std::size_t>(j)] =
            wk == WeightKind::gaussian ? std::exp(2.0 * gamma * y * y)
                                       : std::pow(1.0 + y, 2.0 * gamma);
    }
    return w;
}

// Term selection: either the triangular families (s >= 0) with l <= (include_dy?1:0)
// and |k|+j+l <= s, or the anisotropic rectangle |k| <= s1, j <= s2, l = 0.
struct TermSet {
    int s = -1;
    int s1 = -1;
    int s2 = -1;
    bool include_dy = false;
    bool extra_y = false;
};

// Sum over tangential multi-indices with |k| <= budget of prod_i kphys_i^{2 k_i}.
double tangential_factor_sum(const Grid& g, std::size_t m, int budget) {
    double kv[2];
    g.kphys(m, kv);
    const double a = kv[0] * kv[0];
    if (g.d == 2) {
        double sum = 0.0, pw = 1.0;
        for (int k = 0; k <= budget; ++k) {
            sum += pw;
            pw *= a;
        }
        return sum;
    }
    const double b = kv[1] * kv[1];
    double sum = 0.0;
    double pa = 1.0;
    for (int k1 = 0; k1 <= budget; ++k1) {
        double pb = 1.0;
        for (int k2 = 0; k1 + k2 <= budget; ++k2) {
            sum += pa * pb;
            pb *= b;
        }
        pa *= a;
    }
    return sum;
}

double conormal_core(const SpectralField& f, double gamma, WeightKind wk, const TermSet& ts) {
    const Grid& g = *f.g;
    const bool aniso = ts.s1 >= 0;
    const int max_l = ts.include_dy ? 1 : 0;
    const std::vector<double> qw = trapezoid_weights(g);
    const std::vector<double> wsq = squared_weight(g, gamma, wk);
    const std::size_t nm = g.num_modes();
    const int Ny = g.Ny;
    const double area = std::pow(g.Lx, g.d - 1);

    std::vector<double> mode_sum(nm);
    double total = 0.0;
    for (int l = 0; l <= max_l; ++l) {
        SpectralField cur = l == 0 ? f : normal_derivative(f, 1);
        const int max_j = aniso ? ts.s2 : ts.s - l;
        for (int j = 0; j <= max_j; ++j) {
            if (j > 0) cur = normal_derivative(cur, 1);
            for (std::size_t m = 0; m < nm; ++m) {
                double acc = 0.0;
                for (int comp = 0; comp < f.ncomp; ++comp) {
                    for (int jy = 0; jy < Ny; ++jy) {
                        const double yv = g.y[static_cast<std::size_t>(jy)];
                        double fac = wsq[static_cast<std::size_t>(jy)] *
                                     qw[static_cast<std::size_t>(jy)];
                        for (int r = 0; r < j; ++r) fac *= yv * yv;
                        if (ts.extra_y) fac *= yv * yv;
                        acc += fac * std::norm(cur.at(m, comp, jy));
                    }
                }
                mode_sum[m] = acc;
            }
            const int budget = aniso ? ts.s1 : ts.s - l - j;
            for (std::size_t m = 0; m < nm; ++m)
                total += tangential_factor_sum(g, m, budget) * mode_sum[m];
        }
    }
    return area * total;
}

} // namespace

double hs_conormal_norm(const SpectralField& f, const NormSpec& spec) {
    spec.validate();
    TermSet ts;
    ts.s = spec.s;
    return std::sqrt(conormal_core(f, spec.gamma, spec.weight, ts));
}

double xs_norm(const SpectralField& f, const NormSpec& spec) {
    spec.validate();
    if (spec.s < 1) throw std::invalid_argument("xs_norm: s must be >= 1");
    TermSet ts;
    ts.s = spec.s;
    ts.include_dy = true;
    return std::sqrt(conormal_core(f, spec.gamma, spec.weight, ts));
}

double anisotropic_norm(const SpectralField& f, int s1, int s2, double gamma, WeightKind weight) {
    if (s1 < 0 || s2 < 0) throw std::invalid_argument("anisotropic_norm: s1, s2 must be >= 0");
    if (gamma <= 0.0) throw std::invalid_argument("anisotropic_norm: gamma must be positive");
    TermSet ts;
    ts.s1 = s1;
    ts.s2 = s2;
    return std::sqrt(conormal_core(f, gamma, weight, ts));
}

double analytic_sobolev_norm(const SpectralField& f, const NormSpec& spec) {
    spec.validate();
    if (spec.sigma == 0.0) return xs_norm(f, spec);
    return xs_norm(radius_multiplier(f, spec.sigma, 1), spec);
}

double gevrey_norm(const SpectralField& f, const NormSpec& spec) {
    spec.validate();
    NormSpec gs = spec;
    gs.weight = WeightKind::polynomial;
    gs.gevrey_p = 2;
    if (spec.sigma == 0.0) return xs_norm(f, gs);
    return xs_norm(radius_multiplier(f, spec.sigma, 2), gs);
}

double hx_norm(const TangentialField& U, int s, double sigma, int gevrey_p) {
    if (s < 0) throw std::invalid_argument("hx_norm: s must be >= 0");
    const Grid& g = *U.g;
    if (sigma != 0.0) {
        // reuse the multiplier guard
        const double reach = std::abs(sigma) * std::pow(g.max_kabs(), 1.0 / gevrey_p);
        if (reach > 700.0) throw std::domain_error("hx_norm: radius too large for grid");
    }
    const double area = std::pow(g.Lx, g.d - 1);
    double total = 0.0;
    const std::size_t nm = g.num_modes();
    for (std::size_t m = 0; m < nm; ++m) {
        const double kmod = g.kabs(m);
        const double bracket = std::pow(1.0 + kmod * kmod, s);
        const double radius = std::exp(2.0 * sigma * std::pow(kmod, 1.0 / gevrey_p));
        for (int comp = 0; comp < U.ncomp; ++comp)
            total += bracket * radius * std::norm(U.at(m, comp));
    }
    return std::sqrt(area * total);
}

double tilde_norm(const SpectralField& f, const NormSpec& spec) {
    spec.validate();
    TermSet ts;
    ts.s = spec.s;
    ts.include_dy = true;
    ts.extra_y = true;
    return std::sqrt(conormal_core(f, spec.gamma, spec.weight, ts));
}

double l2_norm(const SpectralField& f) {
    const Grid& g = *f.g;
    const std::vector<double> qw = trapezoid_weights(g);
    const double area = std::pow(g.Lx, g.d - 1);
    double total = 0.0;
    const std::size_t nm = g.num_modes();
    for (std::size_t m = 0; m < nm; ++m)
        for (int comp = 0; comp < f.ncomp; ++comp)
            for (int j = 0; j < g.Ny; ++j)
                total += qw[static_cast<std::size_t>(j)] * std::norm(f.at(m, comp, j));
    return std::sqrt(area * total);
}

double l2_norm(const TangentialField& U) {
    const double area = std::pow(U.g->Lx, U.g->d - 1);
    double total = 0.0;
    for (const auto& z : U.c) total += std::norm(z);
    return std::sqrt(area * total);
}

double EnergyTrace::energy() const { return std::sqrt(energy_sq()); }

EnergyTrace parabolic_energy_update_raw(EnergyTrace trace, double t, double norm_sq, double rate) {
    if (!trace.empty() && t <= trace.times.back())
        throw std::invalid_argument("parabolic_energy_update: time must increase");
    if (trace.empty()) {
        trace.times.push_back(t);
        trace.sup_sq.push_back(norm_sq);
        trace.diss_integral.push_back(0.0);
    } else {
        const double dt = t - trace.times.back();
        trace.diss_integral.push_back(trace.diss_integral.back() + dt * trace.last_rate);
        trace.sup_sq.push_back(std::max(trace.sup_sq.back(), norm_sq));
        trace.times.push_back(t);
    }
    trace.last_rate = rate;
    return trace;
}

EnergyTrace parabolic_energy_update(EnergyTrace trace, double t, const SpectralField& f_sigma_now,
                                    const NormSpec& spec) {
    const double nsq = [&] {
        const double v = spec.weight == WeightKind::polynomial ? xs_norm(f_sigma_now, spec)
                                                               : xs_norm(f_sigma_now, spec);
        return v * v;
    }();
    const SpectralField half = fractional_multiplier(f_sigma_now, 0.5, FracKind::abs_grad);
    const SpectralField dyf = normal_derivative(f_sigma_now, 1);
    const double r1 = xs_norm(half, spec);
    const double r2 = xs_norm(dyf, spec);
    return parabolic_energy_update_raw(std::move(trace), t, nsq, r1 * r1 + r2 * r2);
}

void write_energy_csv(const EnergyTrace& tr, std::ostream& os) {
    os << "t,sup_sq,dissipation_integral,energy\n";
    os.precision(17);
    for (std::size_t i = 0; i < tr.times.size(); ++i) {
        const double e = std::sqrt(tr.sup_sq[i] + tr.diss_integral[i]);
        os << tr.times[i] << "," << tr.sup_sq[i] << "," << tr.diss_integral[i] << "," << e << "\n";
    }
}

} // namespace prandtl

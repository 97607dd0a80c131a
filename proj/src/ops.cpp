#include "prandtl/ops.hpp"

#include <cmath>
#include <cstdint>
#include <map>
#include <mutex>
#include <stdexcept>

namespace prandtl {

namespace {

// Fornberg (1988) finite-difference weights for derivative order m at x0
// over the given nodes. Exact on polynomials of degree <= nodes-1.
std::vector<double> fd_weights(double x0, const std::vector<double>& x, int m) {
    const int n = static_cast<int>(x.size()) - 1;
    std::vector<std::vector<double>> c(static_cast<std::size_t>(n + 1),
                                       std::vector<double>(static_cast<std::size_t>(m + 1), 0.0));
    double c1 = 1.0;
    double c4 = x[0] - x0;
    c[0][0] = 1.0;
    for (int i = 1; i <= n; ++i) {
        const int mn = std::min(i, m);
        double c2 = 1.0;
        const double c5 = c4;
        c4 = x[static_cast<std::size_t>(i)] - x0;
        for (int j = 0; j < i; ++j) {
            const double c3 = x[static_cast<std::size_t>(i)] - x[static_cast<std::size_t>(j)];
            c2 *= c3;
            if (j == i - 1) {
                for (int k = mn; k >= 1; --k)
                    c[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)] =
                        c1 *
                        (k * c[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(k - 1)] -
                         c5 * c[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(k)]) /
                        c2;
                c[static_cast<std::size_t>(i)][0] =
                    -c1 * c5 * c[static_cast<std::size_t>(i - 1)][0] / c2;
            }
            for (int k = mn; k >= 1; --k)
                c[static_cast<std::size_t>(j)][static_cast<std::size_t>(k)] =
                    (c4 * c[static_cast<std::size_t>(j)][static_cast<std::size_t>(k)] -
                     k * c[static_cast<std::size_t>(j)][static_cast<std::size_t>(k - 1)]) /
                    c3;
            c[static_cast<std::size_t>(j)][0] =
                c4 * c[static_cast<std::size_t>(j)][0] / c3;
        }
        c1 = c2;
    }
    std::vector<double> w(static_cast<std::size_t>(n + 1));
    for (int i = 0; i <= n; ++i)
        w[static_cast<std::size_t>(i)] = c[static_cast<std::size_t>(i)][static_cast<std::size_t>(m)];
    return w;
}

// Banded stencil table for a normal-direction derivative: for each row j,
// `first[j]` is the leftmost node and `w[j]` the weights.
struct Stencils {
    std::vector<int> first;
    std::vector<std::vector<double>> w;
};

// order 1: 3-point everywhere. order 2: 3-point interior, 4-point one-sided
// at the two boundary rows so both stay second-order accurate.
Stencils build_stencils(const Grid& g, int order) {
    const int Ny = g.Ny;
    Stencils s;
    s.first.resize(static_cast<std::size_t>(Ny));
    s.w.resize(static_cast<std::size_t>(Ny));
    const int half = 1;
    for (int j = 0; j < Ny; ++j) {
        int width = 3;
        int first = j - half;
        if (order == 2 && (j == 0 || j == Ny - 1)) width = 4;
        if (first < 0) first = 0;
        if (first + width > Ny) first = Ny - width;
        std::vector<double> nodes(static_cast<std::size_t>(width));
        for (int i = 0; i < width; ++i)
            nodes[static_cast<std::size_t>(i)] = g.y[static_cast<std::size_t>(first + i)];
        s.first[static_cast<std::size_t>(j)] = first;
        s.w[static_cast<std::size_t>(j)] = fd_weights(g.y[static_cast<std::size_t>(j)], nodes, order);
    }
    return s;
}

std::mutex stencil_mutex;

std::uint64_t fnv_hash(const void* data, std::size_t n) {
    const auto* p = static_cast<const unsigned char*>(data);
    std::uint64_t h = 1469598103934665603ull;
    for (std::size_t i = 0; i < n; ++i) {
        h ^= p[i];
        h *= 1099511628211ull;
    }
    return h;
}

struct StencilEntry {
    std::vector<double> y;
    Stencils s;
};

// Keyed by the node vector itself, so grids with identical nodes share tables.
const Stencils& cached_stencils(const Grid& g, int order) {
    static std::multimap<std::pair<std::uint64_t, int>, StencilEntry> cache;
    std::lock_guard<std::mutex> lock(stencil_mutex);
    const auto key = std::make_pair(fnv_hash(g.y.data(), g.y.size() * sizeof(double)), order);
    auto range = cache.equal_range(key);
    for (auto it = range.first; it != range.second; ++it)
        if (it->second.y == g.y) return it->second.s;
    auto it = cache.emplace(key, StencilEntry{g.y, build_stencils(g, order)});
    return it->second.s;
}

void apply_stencils_line(const Stencils& s, const cplx* in, cplx* out, int Ny) {
    for (int j = 0; j < Ny; ++j) {
        const auto& w = s.w[static_cast<std::size_t>(j)];
        const int first = s.first[static_cast<std::size_t>(j)];
        cplx acc = 0.0;
        for (std::size_t i = 0; i < w.size(); ++i) acc += w[i] * in[first + static_cast<int>(i)];
        out[j] = acc;
    }
}

} // namespace

SpectralField tangential_derivative(const SpectralField& f, int order, int dir) {
    if (order < 0) throw std::invalid_argument("tangential_derivative: order must be >= 0");
    SpectralField out = f;
    const std::size_t nm = f.g->num_modes();
    const std::size_t line =
        static_cast<std::size_t>(f.ncomp) * static_cast<std::size_t>(f.g->Ny);
    for (std::size_t m = 0; m < nm; ++m) {
        double kv[2];
        f.g->kphys(m, kv);
        cplx factor = 1.0;
        for (int r = 0; r < order; ++r) factor *= cplx(0.0, kv[dir]);
        for (std::size_t i = 0; i < line; ++i) out.c[m * line + i] *= factor;
    }
    return out;
}

TangentialField tangential_derivative(const TangentialField& f, int order, int dir) {
    if (order < 0) throw std::invalid_argument("tangential_derivative: order must be >= 0");
    TangentialField out = f;
    const std::size_t nm = f.g->num_modes();
    for (std::size_t m = 0; m < nm; ++m) {
        double kv[2];
        f.g->kphys(m, kv);
        cplx factor = 1.0;
        for (int r = 0; r < order; ++r) factor *= cplx(0.0, kv[dir]);
        for (int comp = 0; comp < f.ncomp; ++comp) out.at(m, comp) *= factor;
    }
    return out;
}

SpectralField divergence_x(const SpectralField& u) {
    SpectralField div(u.g, 1, u.real_field);
    const std::size_t nm = u.g->num_modes();
    const int Ny = u.g->Ny;
    for (std::size_t m = 0; m < nm; ++m) {
        double kv[2];
        u.g->kphys(m, kv);
        for (int j = 0; j < Ny; ++j) {
            cplx acc = 0.0;
            for (int comp = 0; comp < u.ncomp; ++comp)
                acc += cplx(0.0, kv[comp]) * u.at(m, comp, j);
            div.at(m, 0, j) = acc;
        }
    }
    return div;
}

namespace {

double frac_factor(double kmod, double a, FracKind kind) {
    switch (kind) {
    case FracKind::abs_grad: return std::pow(kmod, a);
    case FracKind::bracket_grad: return std::pow(1.0 + kmod * kmod, 0.5 * a);
    case FracKind::inv_bracket: return std::pow(1.0 + kmod * kmod, -0.5 * a);
    }
    return 1.0;
}

} // namespace

SpectralField fractional_multiplier(const SpectralField& f, double a, FracKind kind) {
    if (a < 0.0 || a > 1.0)
        throw std::invalid_argument("fractional_multiplier: a must lie in [0,1]");
    SpectralField out = f;
    const std::size_t nm = f.g->num_modes();
    const std::size_t line =
        static_cast<std::size_t>(f.ncomp) * static_cast<std::size_t>(f.g->Ny);
    for (std::size_t m = 0; m < nm; ++m) {
        const double factor = frac_factor(f.g->kabs(m), a, kind);
        for (std::size_t i = 0; i < line; ++i) out.c[m * line + i] *= factor;
    }
    return out;
}

TangentialField fractional_multiplier(const TangentialField& f, double a, FracKind kind) {
    if (a < 0.0 || a > 1.0)
        throw std::invalid_argument("fractional_multiplier: a must lie in [0,1]");
    TangentialField out = f;
    const std::size_t nm = f.g->num_modes();
    for (std::size_t m = 0; m < nm; ++m) {
        const double factor = frac_factor(f.g->kabs(m), a, kind);
        for (int comp = 0; comp < f.ncomp; ++comp) out.at(m, comp) *= factor;
    }
    return out;
}

namespace {

void radius_guard(const Grid& g, double sigma, int p) {
    if (p != 1 && p != 2) throw std::invalid_argument("radius_multiplier: p must be 1 or 2");
    const double reach = std::abs(sigma) * std::pow(g.max_kabs(), 1.0 / p);
    if (reach > 700.0)
        throw std::domain_error("radius_multiplier: sigma*|k_max|^{1/p} > 700, "
                                "radius too large for this grid");
}

} // namespace

SpectralField radius_multiplier(const SpectralField& f, double sigma, int p) {
    radius_guard(*f.g, sigma, p);
    SpectralField out = f;
    const std::size_t nm = f.g->num_modes();
    const std::size_t line =
        static_cast<std::size_t>(f.ncomp) * static_cast<std::size_t>(f.g->Ny);
    for (std::size_t m = 0; m < nm; ++m) {
        const double factor = std::exp(sigma * std::pow(f.g->kabs(m), 1.0 / p));
        for (std::size_t i = 0; i < line; ++i) out.c[m * line + i] *= factor;
    }
    return out;
}

TangentialField radius_multiplier(const TangentialField& f, double sigma, int p) {
    radius_guard(*f.g, sigma, p);
    TangentialField out = f;
    const std::size_t nm = f.g->num_modes();
    for (std::size_t m = 0; m < nm; ++m) {
        const double factor = std::exp(sigma * std::pow(f.g->kabs(m), 1.0 / p));
        for (int comp = 0; comp < f.ncomp; ++comp) out.at(m, comp) *= factor;
    }
    return out;
}

SpectralField normal_derivative(const SpectralField& f, int order) {
    if (order != 1 && order != 2)
        throw std::invalid_argument("normal_derivative: order must be 1 or 2");
    if (f.g->Ny < order + 2) throw std::invalid_argument("normal_derivative: Ny too small");
    const Stencils& s = cached_stencils(*f.g, order);
    SpectralField out(f.g, f.ncomp, f.real_field);
    const std::size_t lines = f.g->num_modes() * static_cast<std::size_t>(f.ncomp);
    const int Ny = f.g->Ny;
    for (std::size_t l = 0; l < lines; ++l)
        apply_stencils_line(s, f.c.data() + l * static_cast<std::size_t>(Ny),
                            out.c.data() + l * static_cast<std::size_t>(Ny), Ny);
    return out;
}

SpectralField conormal_Z(const SpectralField& f, int j) {
    if (j < 0) throw std::invalid_argument("conormal_Z: j must be >= 0");
    if (j == 0) return f;
    SpectralField out = f;
    for (int r = 0; r < j; ++r) out = normal_derivative(out, 1);
    const int Ny = f.g->Ny;
    std::vector<double> yj(static_cast<std::size_t>(Ny));
    for (int jj = 0; jj < Ny; ++jj)
        yj[static_cast<std::size_t>(jj)] = std::pow(f.g->y[static_cast<std::size_t>(jj)], j);
    return yprofile_times(yj, out);
}

SpectralField antiderivative_y(const SpectralField& f) {
    SpectralField out(f.g, f.ncomp, f.real_field);
    const std::size_t lines = f.g->num_modes() * static_cast<std::size_t>(f.ncomp);
    const int Ny = f.g->Ny;
    const auto& y = f.g->y;
    for (std::size_t l = 0; l < lines; ++l) {
        const cplx* in = f.c.data() + l * static_cast<std::size_t>(Ny);
        cplx* acc = out.c.data() + l * static_cast<std::size_t>(Ny);
        acc[0] = 0.0;
        for (int jj = 1; jj < Ny; ++jj)
            acc[jj] = acc[jj - 1] + 0.5 * (y[static_cast<std::size_t>(jj)] -
                                           y[static_cast<std::size_t>(jj - 1)]) *
                                        (in[jj] + in[jj - 1]);
    }
    return out;
}

SpectralField regularize_Rn(const SpectralField& f, double n) {
    SpectralField out = f;
    const std::size_t nm = f.g->num_modes();
    const std::size_t line =
        static_cast<std::size_t>(f.ncomp) * static_cast<std::size_t>(f.g->Ny);
    for (std::size_t m = 0; m < nm; ++m)
        if (f.g->kabs(m) > n)
            for (std::size_t i = 0; i < line; ++i) out.c[m * line + i] = 0.0;
    return out;
}

namespace {

bool mode_survives_dealias(const Grid& g, std::size_t m) {
    int ki[2];
    g.mode_ints(m, ki);
    const int cut = g.Nx / 3;
    if (std::abs(ki[0]) > cut) return false;
    if (g.d == 3 && std::abs(ki[1]) > cut) return false;
    return true;
}

} // namespace

SpectralField dealias(const SpectralField& f) {
    SpectralField out = f;
    const std::size_t nm = f.g->num_modes();
    const std::size_t line =
        static_cast<std::size_t>(f.ncomp) * static_cast<std::size_t>(f.g->Ny);
    for (std::size_t m = 0; m < nm; ++m)
        if (!mode_survives_dealias(*f.g, m))
            for (std::size_t i = 0; i < line; ++i) out.c[m * line + i] = 0.0;
    return out;
}

TangentialField dealias(const TangentialField& f) {
    TangentialField out = f;
    const std::size_t nm = f.g->num_modes();
    for (std::size_t m = 0; m < nm; ++m)
        if (!mode_survives_dealias(*f.g, m))
            for (int comp = 0; comp < f.ncomp; ++comp) out.at(m, comp) = 0.0;
    return out;
}

bool is_dealiased(const SpectralField& f) {
    const std::size_t nm = f.g->num_modes();
    const std::size_t line =
        static_cast<std::size_t>(f.ncomp) * static_cast<std::size_t>(f.g->Ny);
    for (std::size_t m = 0; m < nm; ++m)
        if (!mode_survives_dealias(*f.g, m))
            for (std::size_t i = 0; i < line; ++i)
                if (f.c[m * line + i] != 0.0) return false;
    return true;
}

SpectralField pointwise_product(const SpectralField& a, const SpectralField& b) {
    if (a.g != b.g || a.ncomp != b.ncomp)
        throw std::invalid_argument("pointwise_product: shape mismatch");
    const RealSamples ra = from_spectral(dealias(a));
    const RealSamples rb = from_spectral(dealias(b));
    RealSamples prod(a.g, a.ncomp);
    for (std::size_t i = 0; i < ra.v.size(); ++i) prod.v[i] = ra.v[i] * rb.v[i];
    return dealias(to_spectral(prod));
}

SpectralField scalar_field(const GridPtr& g) { return SpectralField(g, 1, true); }

SpectralField scalar_times(const SpectralField& s, const SpectralField& f) {
    if (s.ncomp != 1) throw std::invalid_argument("scalar_times: s must have one component");
    const RealSamples rs = from_spectral(dealias(s));
    const RealSamples rf = from_spectral(dealias(f));
    RealSamples prod(f.g, f.ncomp);
    const std::size_t np = f.g->num_modes();
    for (std::size_t p = 0; p < np; ++p)
        for (int comp = 0; comp < f.ncomp; ++comp)
            for (int j = 0; j < f.g->Ny; ++j)
                prod.at(p, comp, j) = rs.at(p, 0, j) * rf.at(p, comp, j);
    return dealias(to_spectral(prod));
}

SpectralField yprofile_times(const std::vector<double>& profile, const SpectralField& f) {
    if (profile.size() != static_cast<std::size_t>(f.g->Ny))
        throw std::invalid_argument("yprofile_times: profile length != Ny");
    SpectralField out = f;
    const std::size_t lines = f.g->num_modes() * static_cast<std::size_t>(f.ncomp);
    const int Ny = f.g->Ny;
    for (std::size_t l = 0; l < lines; ++l)
        for (int j = 0; j < Ny; ++j)
            out.c[l * static_cast<std::size_t>(Ny) + static_cast<std::size_t>(j)] *=
                profile[static_cast<std::size_t>(j)];
    return out;
}

SpectralField extend_in_y(const TangentialField& U) {
    SpectralField out(U.g, U.ncomp, U.real_field);
    const std::size_t nm = U.g->num_modes();
    for (std::size_t m = 0; m < nm; ++m)
        for (int comp = 0; comp < U.ncomp; ++comp)
            for (int j = 0; j < U.g->Ny; ++j) out.at(m, comp, j) = U.at(m, comp);
    return out;
}

} // namespace prandtl

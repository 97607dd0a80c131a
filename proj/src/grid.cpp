#include "prandtl/grid.hpp"

#include <cmath>
#include <stdexcept>

namespace prandtl {

void Grid::kphys(std::size_t m, double kv[2]) const {
    int ki[2];
    mode_ints(m, ki);
    const double unit = 2.0 * M_PI / Lx;
    kv[0] = unit * ki[0];
    kv[1] = d == 3 ? unit * ki[1] : 0.0;
}

double Grid::kabs(std::size_t m) const {
    double kv[2];
    kphys(m, kv);
    return std::sqrt(kv[0] * kv[0] + kv[1] * kv[1]);
}

double Grid::max_kabs() const {
    const double unit = 2.0 * M_PI / Lx;
    const double kmax = unit * (Nx / 2);
    return d == 2 ? kmax : std::sqrt(2.0) * kmax;
}

std::size_t Grid::mode_index(int k1, int k2) const {
    const int i1 = k1 >= 0 ? k1 : k1 + Nx;
    if (d == 2) return static_cast<std::size_t>(i1);
    const int i2 = k2 >= 0 ? k2 : k2 + Nx;
    return static_cast<std::size_t>(i2) * static_cast<std::size_t>(Nx) +
           static_cast<std::size_t>(i1);
}

std::size_t Grid::conj_index(std::size_t m) const {
    int ki[2];
    mode_ints(m, ki);
    if (ki[0] == -Nx / 2 || (d == 3 && ki[1] == -Nx / 2)) return num_modes();
    return mode_index(-ki[0], -ki[1]);
}

bool Grid::uniform_y() const {
    const double h0 = y[1] - y[0];
    for (std::size_t j = 2; j < y.size(); ++j)
        if (std::abs((y[j] - y[j - 1]) - h0) > 1e-12 * Ly) return false;
    return true;
}

double Grid::min_dy() const {
    double h = Ly;
    for (std::size_t j = 1; j < y.size(); ++j) h = std::min(h, y[j] - y[j - 1]);
    return h;
}

void Grid::validate() const {
    if (d != 2 && d != 3) throw std::invalid_argument("Grid: d must be 2 or 3");
    if (Nx < 8 || (Nx & (Nx - 1)) != 0)
        throw std::invalid_argument("Grid: Nx must be a power of two >= 8");
    if (Ny < 16) throw std::invalid_argument("Grid: Ny must be >= 16");
    if (Lx <= 0.0 || Ly <= 0.0) throw std::invalid_argument("Grid: Lx, Ly must be positive");
    if (static_cast<int>(y.size()) != Ny) throw std::invalid_argument("Grid: y size != Ny");
    if (y.front() != 0.0) throw std::invalid_argument("Grid: y[0] must be 0");
    if (std::abs(y.back() - Ly) > 1e-12 * Ly)
        throw std::invalid_argument("Grid: y must end at Ly");
    for (int j = 1; j < Ny; ++j)
        if (!(y[j] > y[j - 1])) throw std::invalid_argument("Grid: y must be strictly increasing");
}

GridPtr Grid::make_uniform(int d, int Nx, double Lx, int Ny, double Ly) {
    auto g = std::make_shared<Grid>();
    g->d = d;
    g->Nx = Nx;
    g->Lx = Lx;
    g->Ny = Ny;
    g->Ly = Ly;
    g->y.resize(Ny);
    for (int j = 0; j < Ny; ++j) g->y[j] = Ly * static_cast<double>(j) / (Ny - 1);
    g->y[Ny - 1] = Ly;
    g->validate();
    return g;
}

GridPtr Grid::make_tanh_stretched(int d, int Nx, double Lx, int Ny, double Ly, double alpha) {
    auto g = std::make_shared<Grid>();
    g->d = d;
    g->Nx = Nx;
    g->Lx = Lx;
    g->Ny = Ny;
    g->Ly = Ly;
    g->y.resize(Ny);
    const double ta = std::tanh(alpha);
    for (int j = 0; j < Ny; ++j) {
        const double s = static_cast<double>(j) / (Ny - 1);
        g->y[j] = Ly * (1.0 - std::tanh(alpha * (1.0 - s)) / ta);
    }
    g->y[0] = 0.0;
    g->y[Ny - 1] = Ly;
    g->validate();
    return g;
}

double Grid::default_Ly(double gamma0) {
    // exp(-gamma0*Ly^2/3) < 1e-12  <=>  Ly > sqrt(3*12*ln(10)/gamma0)
    const double ly = std::sqrt(3.0 * 12.0 * std::log(10.0) / gamma0);
    return std::ceil(ly * 2.0) / 2.0;
}

} // namespace prandtl

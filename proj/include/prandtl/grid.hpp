#ifndef PRANDTL_GRID_HPP
#define PRANDTL_GRID_HPP

#include <cstddef>
#include <memory>
#include <vector>

namespace prandtl {

// Discrete domain: tangential torus [0,Lx)^{d-1} resolved by Nx Fourier modes
// per direction, normal interval [0,Ly] resolved by Ny nodes with y[0] = 0.
// d = 2 carries one scalar tangential velocity component, d = 3 two.
struct Grid {
    int d = 2;
    int Nx = 32;
    double Lx = 6.283185307179586476925287; // 2*pi
    int Ny = 128;
    double Ly = 12.0;
    std::vector<double> y;

    int tangential_dims() const { return d - 1; }
    int components() const { return d == 2 ? 1 : 2; }
    std::size_t num_modes() const {
        return d == 2 ? static_cast<std::size_t>(Nx)
                      : static_cast<std::size_t>(Nx) * static_cast<std::size_t>(Nx);
    }

    // FFT-order index -> signed integer mode.
    int mode_int(int i) const { return i <= Nx / 2 - 1 ? i : i - Nx; }

    // Signed integer modes of flattened mode index m, per tangential direction.
    void mode_ints(std::size_t m, int k[2]) const {
        if (d == 2) {
            k[0] = mode_int(static_cast<int>(m));
            k[1] = 0;
        } else {
            k[0] = mode_int(static_cast<int>(m % static_cast<std::size_t>(Nx)));
            k[1] = mode_int(static_cast<int>(m / static_cast<std::size_t>(Nx)));
        }
    }

    // Physical wavevector components (2*pi*k/Lx) and Euclidean modulus.
    void kphys(std::size_t m, double kv[2]) const;
    double kabs(std::size_t m) const;

    double max_kabs() const;

    // Flattened index of the mode with signed integers (k1,k2); k2 ignored for d=2.
    std::size_t mode_index(int k1, int k2 = 0) const;
    // Index of the conjugate mode -k, or num_modes() if -k is not representable
    // (the unmatched -Nx/2 column).
    std::size_t conj_index(std::size_t m) const;

    bool uniform_y() const;
    double min_dy() const;

    // Throws std::invalid_argument when an invariant fails:
    // Nx >= 8 power of two, Ny >= 16, y strictly increasing, y0 = 0, y.back() = Ly.
    void validate() const;

    static std::shared_ptr<const Grid> make_uniform(int d, int Nx, double Lx, int Ny, double Ly);
    // Nodes concentrated near y = 0: y(s) = Ly*(1 - tanh(a*(1-s))/tanh(a)), s in [0,1].
    static std::shared_ptr<const Grid> make_tanh_stretched(int d, int Nx, double Lx, int Ny,
                                                           double Ly, double alpha);
    // Smallest Ly with exp(-gamma0*Ly^2/3) < 1e-12, rounded up to 0.5.
    static double default_Ly(double gamma0);
};

using GridPtr = std::shared_ptr<const Grid>;

} // namespace prandtl

#endif

#include "prandtl/field.hpp"

#include <bit>
#include <cmath>
#include <cstdint>
#include <cstring>
#include <fstream>
#include <ostream>
#include <stdexcept>

#include "prandtl/fft.hpp"

namespace prandtl {

namespace {

void check_same_shape(std::size_t a, std::size_t b, const char* what) {
    if (a != b) throw std::invalid_argument(std::string("shape mismatch in ") + what);
}

} // namespace

SpectralField& SpectralField::operator+=(const SpectralField& o) {
    check_same_shape(c.size(), o.c.size(), "SpectralField +=");
    for (std::size_t i = 0; i < c.size(); ++i) c[i] += o.c[i];
    return *this;
}

SpectralField& SpectralField::operator-=(const SpectralField& o) {
    check_same_shape(c.size(), o.c.size(), "SpectralField -=");
    for (std::size_t i = 0; i < c.size(); ++i) c[i] -= o.c[i];
    return *this;
}

SpectralField& SpectralField::operator*=(double a) {
    for (auto& z : c) z *= a;
    return *this;
}

SpectralField& SpectralField::operator*=(cplx a) {
    for (auto& z : c) z *= a;
    real_field = false;
    return *this;
}

double SpectralField::hermitian_defect() const {
    double worst = 0.0;
    const std::size_t nm = g->num_modes();
    for (std::size_t m = 0; m < nm; ++m) {
        const std::size_t mc = g->conj_index(m);
        if (mc >= nm || mc < m) continue;
        for (int comp = 0; comp < ncomp; ++comp)
            for (int j = 0; j < g->Ny; ++j)
                worst = std::max(worst, std::abs(at(mc, comp, j) - std::conj(at(m, comp, j))));
    }
    return worst;
}

void SpectralField::enforce_hermitian() {
    const std::size_t nm = g->num_modes();
    for (std::size_t m = 0; m < nm; ++m) {
        const std::size_t mc = g->conj_index(m);
        if (mc >= nm) { // unmatched -Nx/2 column: must be real to be symmetric
            for (int comp = 0; comp < ncomp; ++comp)
                for (int j = 0; j < g->Ny; ++j) at(m, comp, j) = at(m, comp, j).real();
            continue;
        }
        if (mc < m) continue;
        for (int comp = 0; comp < ncomp; ++comp)
            for (int j = 0; j < g->Ny; ++j) {
                const cplx avg = 0.5 * (at(m, comp, j) + std::conj(at(mc, comp, j)));
                at(m, comp, j) = avg;
                at(mc, comp, j) = std::conj(avg);
            }
    }
    real_field = true;
}

double SpectralField::max_abs() const {
    double worst = 0.0;
    for (const auto& z : c) worst = std::max(worst, std::abs(z));
    return worst;
}

bool SpectralField::finite() const {
    for (const auto& z : c)
        if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) return false;
    return true;
}

SpectralField operator+(SpectralField a, const SpectralField& b) { return a += b; }
SpectralField operator-(SpectralField a, const SpectralField& b) { return a -= b; }
SpectralField operator*(double a, SpectralField f) { return f *= a; }

TangentialField& TangentialField::operator+=(const TangentialField& o) {
    check_same_shape(c.size(), o.c.size(), "TangentialField +=");
    for (std::size_t i = 0; i < c.size(); ++i) c[i] += o.c[i];
    return *this;
}

TangentialField& TangentialField::operator-=(const TangentialField& o) {
    check_same_shape(c.size(), o.c.size(), "TangentialField -=");
    for (std::size_t i = 0; i < c.size(); ++i) c[i] -= o.c[i];
    return *this;
}

TangentialField& TangentialField::operator*=(double a) {
    for (auto& z : c) z *= a;
    return *this;
}

double TangentialField::hermitian_defect() const {
    double worst = 0.0;
    const std::size_t nm = g->num_modes();
    for (std::size_t m = 0; m < nm; ++m) {
        const std::size_t mc = g->conj_index(m);
        if (mc >= nm || mc < m) continue;
        for (int comp = 0; comp < ncomp; ++comp)
            worst = std::max(worst, std::abs(at(mc, comp) - std::conj(at(m, comp))));
    }
    return worst;
}

void TangentialField::enforce_hermitian() {
    const std::size_t nm = g->num_modes();
    for (std::size_t m = 0; m < nm; ++m) {
        const std::size_t mc = g->conj_index(m);
        if (mc >= nm) {
            for (int comp = 0; comp < ncomp; ++comp) at(m, comp) = at(m, comp).real();
            continue;
        }
        if (mc < m) continue;
        for (int comp = 0; comp < ncomp; ++comp) {
            const cplx avg = 0.5 * (at(m, comp) + std::conj(at(mc, comp)));
            at(m, comp) = avg;
            at(mc, comp) = std::conj(avg);
        }
    }
    real_field = true;
}

TangentialField operator+(TangentialField a, const TangentialField& b) { return a += b; }
TangentialField operator-(TangentialField a, const TangentialField& b) { return a -= b; }
TangentialField operator*(double a, TangentialField f) { return f *= a; }

namespace {

// Transforms every (comp, y) line of a mode-major complex buffer along the
// tangential directions in place.
void transform_lines(const Grid& g, int ncomp, std::vector<cplx>& data, bool forward) {
    const std::size_t line = static_cast<std::size_t>(ncomp) * static_cast<std::size_t>(g.Ny);
    const int n = g.Nx;
    if (g.d == 2) {
        for (std::size_t off = 0; off < line; ++off)
            fft_strided(data.data() + off, n, line, forward);
    } else {
        // first direction (stride = line), then second (stride = Nx*line)
        for (int i2 = 0; i2 < n; ++i2)
            for (std::size_t off = 0; off < line; ++off)
                fft_strided(data.data() + static_cast<std::size_t>(i2) * n * line + off, n, line,
                            forward);
        for (int i1 = 0; i1 < n; ++i1)
            for (std::size_t off = 0; off < line; ++off)
                fft_strided(data.data() + static_cast<std::size_t>(i1) * line + off, n,
                            static_cast<std::size_t>(n) * line, forward);
    }
}

} // namespace

SpectralField to_spectral(const RealSamples& values) {
    SpectralField f(values.g, values.ncomp);
    if (values.v.size() != f.c.size())
        throw std::invalid_argument("to_spectral: sample shape does not match grid");
    for (std::size_t i = 0; i < values.v.size(); ++i) f.c[i] = values.v[i];
    transform_lines(*f.g, f.ncomp, f.c, true);
    return f;
}

RealSamples from_spectral(const SpectralField& f) {
    std::vector<cplx> work(f.c);
    transform_lines(*f.g, f.ncomp, work, false);
    RealSamples out(f.g, f.ncomp);
    for (std::size_t i = 0; i < work.size(); ++i) out.v[i] = work[i].real();
    return out;
}

TangentialField to_spectral_tangential(const GridPtr& g, const std::vector<double>& values,
                                       int ncomp) {
    TangentialField f(g);
    if (ncomp != f.ncomp || values.size() != f.c.size())
        throw std::invalid_argument("to_spectral_tangential: sample shape does not match grid");
    for (std::size_t i = 0; i < values.size(); ++i) f.c[i] = values[i];
    const std::size_t line = static_cast<std::size_t>(ncomp);
    const int n = g->Nx;
    if (g->d == 2) {
        for (std::size_t off = 0; off < line; ++off) fft_strided(f.c.data() + off, n, line, true);
    } else {
        for (int i2 = 0; i2 < n; ++i2)
            for (std::size_t off = 0; off < line; ++off)
                fft_strided(f.c.data() + static_cast<std::size_t>(i2) * n * line + off, n, line,
                            true);
        for (int i1 = 0; i1 < n; ++i1)
            for (std::size_t off = 0; off < line; ++off)
                fft_strided(f.c.data() + static_cast<std::size_t>(i1) * line + off, n,
                            static_cast<std::size_t>(n) * line, true);
    }
    return f;
}

std::vector<double> from_spectral_tangential(const TangentialField& f) {
    std::vector<cplx> work(f.c);
    const std::size_t line = static_cast<std::size_t>(f.ncomp);
    const int n = f.g->Nx;
    if (f.g->d == 2) {
        for (std::size_t off = 0; off < line; ++off) fft_strided(work.data() + off, n, line, false);
    } else {
        for (int i2 = 0; i2 < n; ++i2)
            for (std::size_t off = 0; off < line; ++off)
                fft_strided(work.data() + static_cast<std::size_t>(i2) * n * line + off, n, line,
                            false);
        for (int i1 = 0; i1 < n; ++i1)
            for (std::size_t off = 0; off < line; ++off)
                fft_strided(work.data() + static_cast<std::size_t>(i1) * line + off, n,
                            static_cast<std::size_t>(n) * line, false);
    }
    std::vector<double> out(work.size());
    for (std::size_t i = 0; i < work.size(); ++i) out[i] = work[i].real();
    return out;
}

namespace {

constexpr std::uint32_t kFieldMagic = 0x50424C46u; // "PBLF"
constexpr std::uint32_t kFieldVersion = 1;

template <typename T>
void put(std::ostream& os, const T& v) {
    os.write(reinterpret_cast<const char*>(&v), sizeof(T));
}

template <typename T>
T get(std::istream& is) {
    T v{};
    is.read(reinterpret_cast<char*>(&v), sizeof(T));
    return v;
}

} // namespace

void save_field(const SpectralField& f, const std::string& path) {
    static_assert(std::endian::native == std::endian::little,
                  "field container assumes a little-endian host");
    std::ofstream os(path, std::ios::binary);
    if (!os) throw std::runtime_error("save_field: cannot open " + path);
    put(os, kFieldMagic);
    put(os, kFieldVersion);
    put(os, static_cast<std::uint32_t>(f.g->d));
    put(os, static_cast<std::uint32_t>(f.g->Nx));
    put(os, static_cast<std::uint32_t>(f.g->Ny));
    put(os, static_cast<std::uint32_t>(f.ncomp));
    put(os, f.g->Lx);
    put(os, f.g->Ly);
    os.write(reinterpret_cast<const char*>(f.g->y.data()),
             static_cast<std::streamsize>(f.g->y.size() * sizeof(double)));
    os.write(reinterpret_cast<const char*>(f.c.data()),
             static_cast<std::streamsize>(f.c.size() * sizeof(cplx)));
    if (!os) throw std::runtime_error("save_field: write failed for " + path);
}

SpectralField load_field(const std::string& path) {
    std::ifstream is(path, std::ios::binary);
    if (!is) throw std::runtime_error("load_field: cannot open " + path);
    if (get<std::uint32_t>(is) != kFieldMagic) throw std::runtime_error("load_field: bad magic");
    if (get<std::uint32_t>(is) != kFieldVersion)
        throw std::runtime_error("load_field: unsupported version");
    auto g = std::make_shared<Grid>();
    g->d = static_cast<int>(get<std::uint32_t>(is));
    g->Nx = static_cast<int>(get<std::uint32_t>(is));
    g->Ny = static_cast<int>(get<std::uint32_t>(is));
    const int ncomp = static_cast<int>(get<std::uint32_t>(is));
    g->Lx = get<double>(is);
    g->Ly = get<double>(is);
    g->y.resize(static_cast<std::size_t>(g->Ny));
    is.read(reinterpret_cast<char*>(g->y.data()),
            static_cast<std::streamsize>(g->y.size() * sizeof(double)));
    g->validate();
    if (ncomp != g->components()) throw std::runtime_error("load_field: component count mismatch");
    SpectralField f(g);
    is.read(reinterpret_cast<char*>(f.c.data()),
            static_cast<std::streamsize>(f.c.size() * sizeof(cplx)));
    if (!is) throw std::runtime_error("load_field: truncated file " + path);
    return f;
}

void write_field_csv(const SpectralField& f, std::ostream& os) {
    const RealSamples samples = from_spectral(f);
    const std::size_t np = f.g->num_modes();
    os << "y";
    for (std::size_t p = 0; p < np; ++p)
        for (int comp = 0; comp < f.ncomp; ++comp) os << ",p" << p << "c" << comp;
    os << "\n";
    os.precision(17);
    for (int j = 0; j < f.g->Ny; ++j) {
        os << f.g->y[static_cast<std::size_t>(j)];
        for (std::size_t p = 0; p < np; ++p)
            for (int comp = 0; comp < f.ncomp; ++comp) os << "," << samples.at(p, comp, j);
        os << "\n";
    }
}

} // namespace prandtl

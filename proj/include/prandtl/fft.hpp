#ifndef PRANDTL_FFT_HPP
#define PRANDTL_FFT_HPP

#include <complex>
#include <cstddef>

namespace prandtl {

// In-place complex DFT of length n on strided data, backed by FFTW.
// forward uses the e^{-ikx} kernel and divides by n, so coefficients are the
// Fourier coefficients of the trigonometric interpolant; backward uses
// e^{+ikx} with no scaling. Plans are cached per length and shared; execution
// runs on per-thread scratch, so concurrent calls are safe.
void fft_strided(std::complex<double>* data, int n, std::size_t stride, bool forward);

} // namespace prandtl

#endif

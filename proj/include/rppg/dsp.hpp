#ifndef RPPG_DSP_HPP
#define RPPG_DSP_HPP

#include <complex>
#include <cstddef>
#include <vector>

#include "rppg/signal.hpp"

namespace rppg {

double mean(const std::vector<double>& x);
// Population convention (divide by N), as stated in reports.
double stddev(const std::vector<double>& x);

// Remove the least-squares line a + b*i.
std::vector<double> detrend(const std::vector<double>& x);

// (x - mean) / population std. Throws ConstantSignal when std is below
// 1e-12 of the data scale.
std::vector<double> zscore(const std::vector<double>& x);
// Same, but a constant input maps to all zeros instead of throwing.
std::vector<double> zscore_or_zero(const std::vector<double>& x);

// Hann window; periodic=true gives the overlap-add (COLA) variant.
std::vector<double> hann_window(std::size_t n, bool periodic = false);

std::size_t next_pow2(std::size_t n);

// In-place iterative radix-2 FFT; a.size() must be a power of two.
void fft_radix2(std::vector<std::complex<double>>& a, bool inverse = false);

// |FFT| of x zero-padded to nfft (power of two, >= x.size()), bins 0..nfft/2.
std::vector<double> magnitude_spectrum(const std::vector<double>& x, std::size_t nfft);

// IIR transfer-function coefficients, a[0] normalized to 1.
struct FilterCoeffs {
    std::vector<double> b;
    std::vector<double> a;
};

// Butterworth bandpass via analog prototype -> lp2bp -> bilinear transform.
// `order` is the prototype order; the resulting filter has 2*order poles.
FilterCoeffs butter_bandpass(int order, double fs, double lo_hz, double hi_hz);

// Direct-form II transposed filter with optional initial conditions.
std::vector<double> lfilter(const FilterCoeffs& f, const std::vector<double>& x,
                            const std::vector<double>* zi = nullptr);

// Steady-state initial conditions for a step input of height 1.
std::vector<double> lfilter_zi(const FilterCoeffs& f);

// Zero-phase forward-backward filtering with odd edge extension of
// 3*max(len(a), len(b)) samples at each end.
std::vector<double> filtfilt(const FilterCoeffs& f, const std::vector<double>& x);

// 2nd-order Butterworth applied forward-backward. Throws InvalidBand when
// the band is not inside (0, fs/2), SignalTooShort when x cannot carry the
// edge extension.
std::vector<double> bandpass(const std::vector<double>& x, double fs, double lo_hz, double hi_hz);
std::vector<double> bandpass(const std::vector<double>& x, double fs, const Band& band);

// Dominant in-band spectral component of a (detrended, Hann-windowed,
// zero-padded) signal. peak_ratio is peak power over total AC power and is
// used for component selection.
struct SpectralPeak {
    double freq_hz = 0.0;
    double magnitude = 0.0;
    double peak_ratio = 0.0;
};
SpectralPeak dominant_frequency(const std::vector<double>& x, double fs, const Band& band,
                                std::size_t min_nfft = 0);

}  // namespace rppg

#endif

#include "rppg/dsp.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <numbers>

namespace rppg {

namespace {

constexpr double kPi = std::numbers::pi;

// Polynomial with the given complex roots; imaginary residue from conjugate
// pairs is dropped at the end.
std::vector<double> poly_from_roots(const std::vector<std::complex<double>>& roots) {
    std::vector<std::complex<double>> c{1.0};
    for (const auto& r : roots) {
        std::vector<std::complex<double>> next(c.size() + 1, 0.0);
        for (std::size_t i = 0; i < c.size(); ++i) {
            next[i] += c[i];
            next[i + 1] -= c[i] * r;
        }
        c = std::move(next);
    }
    std::vector<double> out(c.size());
    for (std::size_t i = 0; i < c.size(); ++i) out[i] = c[i].real();
    return out;
}

}  // namespace

double mean(const std::vector<double>& x) {
    if (x.empty()) return 0.0;
    double s = 0.0;
    for (double v : x) s += v;
    return s / static_cast<double>(x.size());
}

double stddev(const std::vector<double>& x) {
    if (x.empty()) return 0.0;
    const double m = mean(x);
    double s = 0.0;
    for (double v : x) s += (v - m) * (v - m);
    return std::sqrt(s / static_cast<double>(x.size()));
}

std::vector<double> detrend(const std::vector<double>& x) {
    const std::size_t n = x.size();
    if (n < 2) return std::vector<double>(n, 0.0);
    // Least-squares line over index i = 0..n-1.
    const double nm = static_cast<double>(n);
    const double sx = nm * (nm - 1.0) / 2.0;
    const double sxx = nm * (nm - 1.0) * (2.0 * nm - 1.0) / 6.0;
    double sy = 0.0, sxy = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        sy += x[i];
        sxy += static_cast<double>(i) * x[i];
    }
    const double denom = nm * sxx - sx * sx;
    const double slope = denom != 0.0 ? (nm * sxy - sx * sy) / denom : 0.0;
    const double intercept = (sy - slope * sx) / nm;
    std::vector<double> out(n);
    for (std::size_t i = 0; i < n; ++i) out[i] = x[i] - (intercept + slope * static_cast<double>(i));
    return out;
}

std::vector<double> zscore(const std::vector<double>& x) {
    if (x.size() < 2) throw SignalTooShort("zscore: need at least 2 samples");
    const double m = mean(x);
    const double sd = stddev(x);
    double scale = 0.0;
    for (double v : x) scale = std::max(scale, std::abs(v));
    if (sd <= 1e-12 * std::max(scale, 1e-30))
        throw ConstantSignal("zscore: signal is constant");
    std::vector<double> out(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) out[i] = (x[i] - m) / sd;
    return out;
}

std::vector<double> zscore_or_zero(const std::vector<double>& x) {
    const double sd = stddev(x);
    double scale = 0.0;
    for (double v : x) scale = std::max(scale, std::abs(v));
    if (sd <= 1e-12 * std::max(scale, 1e-30)) return std::vector<double>(x.size(), 0.0);
    const double m = mean(x);
    std::vector<double> out(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) out[i] = (x[i] - m) / sd;
    return out;
}

std::vector<double> hann_window(std::size_t n, bool periodic) {
    std::vector<double> w(n, 1.0);
    if (n < 2) return w;
    const double denom = periodic ? static_cast<double>(n) : static_cast<double>(n - 1);
    for (std::size_t i = 0; i < n; ++i)
        w[i] = 0.5 * (1.0 - std::cos(2.0 * kPi * static_cast<double>(i) / denom));
    return w;
}

std::size_t next_pow2(std::size_t n) {
    std::size_t p = 1;
    while (p < n) p <<= 1;
    return p;
}

void fft_radix2(std::vector<std::complex<double>>& a, bool inverse) {
    const std::size_t n = a.size();
    if (n == 0 || (n & (n - 1)) != 0)
        throw Error("fft_radix2: size must be a power of two");
    // Bit-reversal permutation.
    for (std::size_t i = 1, j = 0; i < n; ++i) {
        std::size_t bit = n >> 1;
        for (; j & bit; bit >>= 1) j ^= bit;
        j ^= bit;
        if (i < j) std::swap(a[i], a[j]);
    }
    for (std::size_t len = 2; len <= n; len <<= 1) {
        const double ang = 2.0 * kPi / static_cast<double>(len) * (inverse ? 1.0 : -1.0);
        const std::complex<double> wlen(std::cos(ang), std::sin(ang));
        for (std::size_t i = 0; i < n; i += len) {
            std::complex<double> w(1.0, 0.0);
            for (std::size_t k = 0; k < len / 2; ++k) {
                const auto u = a[i + k];
                const auto v = a[i + k + len / 2] * w;
                a[i + k] = u + v;
                a[i + k + len / 2] = u - v;
                w *= wlen;
            }
        }
    }
    if (inverse) {
        for (auto& v : a) v /= static_cast<double>(n);
    }
}

std::vector<double> magnitude_spectrum(const std::vector<double>& x, std::size_t nfft) {
    nfft = next_pow2(std::max(nfft, x.size()));
    std::vector<std::complex<double>> buf(nfft, 0.0);
    for (std::size_t i = 0; i < x.size(); ++i) buf[i] = x[i];
    fft_radix2(buf);
    std::vector<double> mag(nfft / 2 + 1);
    for (std::size_t i = 0; i < mag.size(); ++i) mag[i] = std::abs(buf[i]);
    return mag;
}

FilterCoeffs butter_bandpass(int order, double fs, double lo_hz, double hi_hz) {
    if (!(lo_hz > 0.0 && lo_hz < hi_hz && hi_hz < fs / 2.0))
        throw InvalidBand("butter_bandpass: need 0 < lo < hi < fs/2");
    if (order < 1) throw InvalidBand("butter_bandpass: order must be >= 1");

    // Analog Butterworth prototype poles on the unit circle, left half plane.
    std::vector<std::complex<double>> proto;
    for (int k = 1; k <= order; ++k) {
        const double theta = kPi * (2.0 * k + order - 1.0) / (2.0 * order);
        proto.emplace_back(std::cos(theta), std::sin(theta));
    }

    // Pre-warped band edges for the bilinear transform.
    const double fs2 = 2.0 * fs;
    const double w_lo = fs2 * std::tan(kPi * lo_hz / fs);
    const double w_hi = fs2 * std::tan(kPi * hi_hz / fs);
    const double bw = w_hi - w_lo;
    const double w0 = std::sqrt(w_lo * w_hi);

    // Lowpass-to-bandpass: each prototype pole splits into a conjugate pair;
    // `order` zeros appear at s = 0.
    std::vector<std::complex<double>> poles_s;
    for (const auto& p : proto) {
        const std::complex<double> half = p * (bw / 2.0);
        const std::complex<double> disc = std::sqrt(half * half - w0 * w0);
        poles_s.push_back(half + disc);
        poles_s.push_back(half - disc);
    }
    const double gain_s = std::pow(bw, order);

    // Bilinear transform to the z-domain.
    std::vector<std::complex<double>> poles_z, zeros_z;
    std::complex<double> num(1.0, 0.0), den(1.0, 0.0);
    for (const auto& p : poles_s) {
        poles_z.push_back((fs2 + p) / (fs2 - p));
        den *= (fs2 - p);
    }
    for (int i = 0; i < order; ++i) {
        zeros_z.push_back(1.0);   // analog zeros at s = 0
        num *= fs2;
        zeros_z.push_back(-1.0);  // degree balancing at Nyquist
    }
    const double gain_z = gain_s * (num / den).real();

    FilterCoeffs f;
    f.b = poly_from_roots(zeros_z);
    for (auto& c : f.b) c *= gain_z;
    f.a = poly_from_roots(poles_z);
    return f;
}

std::vector<double> lfilter(const FilterCoeffs& f, const std::vector<double>& x,
                            const std::vector<double>* zi) {
    const std::size_t ntaps = std::max(f.b.size(), f.a.size());
    std::vector<double> b = f.b, a = f.a;
    b.resize(ntaps, 0.0);
    a.resize(ntaps, 0.0);
    std::vector<double> z(ntaps - 1, 0.0);
    if (zi) {
        if (zi->size() != ntaps - 1) throw Error("lfilter: bad zi length");
        z = *zi;
    }
    std::vector<double> y(x.size());
    for (std::size_t n = 0; n < x.size(); ++n) {
        const double xn = x[n];
        const double yn = b[0] * xn + z[0];
        for (std::size_t i = 1; i < ntaps - 1; ++i)
            z[i - 1] = b[i] * xn + z[i] - a[i] * yn;
        z[ntaps - 2] = b[ntaps - 1] * xn - a[ntaps - 1] * yn;
        y[n] = yn;
    }
    return y;
}

std::vector<double> lfilter_zi(const FilterCoeffs& f) {
    const std::size_t ntaps = std::max(f.b.size(), f.a.size());
    std::vector<double> b = f.b, a = f.a;
    b.resize(ntaps, 0.0);
    a.resize(ntaps, 0.0);
    const int n = static_cast<int>(ntaps) - 1;
    // Solve (I - A^T) zi = B with A the companion matrix of a.
    Eigen::MatrixXd m = Eigen::MatrixXd::Identity(n, n);
    for (int i = 0; i < n; ++i) m(i, 0) += a[static_cast<std::size_t>(i) + 1];
    for (int i = 0; i + 1 < n; ++i) m(i, i + 1) -= 1.0;
    Eigen::VectorXd rhs(n);
    for (int i = 0; i < n; ++i) rhs(i) = b[static_cast<std::size_t>(i) + 1] - a[static_cast<std::size_t>(i) + 1] * b[0];
    Eigen::VectorXd zi = m.colPivHouseholderQr().solve(rhs);
    return std::vector<double>(zi.data(), zi.data() + n);
}

std::vector<double> filtfilt(const FilterCoeffs& f, const std::vector<double>& x) {
    const std::size_t ntaps = std::max(f.b.size(), f.a.size());
    const std::size_t padlen = 3 * ntaps;
    if (x.size() <= padlen)
        throw SignalTooShort("filtfilt: signal shorter than edge extension");

    // Odd extension at both ends.
    std::vector<double> ext;
    ext.reserve(x.size() + 2 * padlen);
    for (std::size_t i = padlen; i >= 1; --i) ext.push_back(2.0 * x.front() - x[i]);
    ext.insert(ext.end(), x.begin(), x.end());
    for (std::size_t i = 0; i < padlen; ++i) ext.push_back(2.0 * x.back() - x[x.size() - 2 - i]);

    const std::vector<double> zi = lfilter_zi(f);
    auto scaled = [&zi](double v) {
        std::vector<double> z = zi;
        for (auto& q : z) q *= v;
        return z;
    };

    std::vector<double> z0 = scaled(ext.front());
    std::vector<double> fwd = lfilter(f, ext, &z0);
    std::reverse(fwd.begin(), fwd.end());
    std::vector<double> z1 = scaled(fwd.front());
    std::vector<double> bwd = lfilter(f, fwd, &z1);
    std::reverse(bwd.begin(), bwd.end());

    return std::vector<double>(bwd.begin() + static_cast<std::ptrdiff_t>(padlen),
                               bwd.end() - static_cast<std::ptrdiff_t>(padlen));
}

std::vector<double> bandpass(const std::vector<double>& x, double fs, double lo_hz, double hi_hz) {
    const FilterCoeffs f = butter_bandpass(2, fs, lo_hz, hi_hz);
    return filtfilt(f, x);
}

std::vector<double> bandpass(const std::vector<double>& x, double fs, const Band& band) {
    return bandpass(x, fs, band.lo_hz, band.hi_hz);
}

SpectralPeak dominant_frequency(const std::vector<double>& x, double fs, const Band& band,
                                std::size_t min_nfft) {
    if (x.size() < 2) throw SignalTooShort("dominant_frequency: need at least 2 samples");
    if (!(band.lo_hz >= 0.0 && band.lo_hz < band.hi_hz && band.hi_hz <= fs / 2.0))
        throw EmptyBand("dominant_frequency: band outside (0, fs/2)");

    std::vector<double> y = detrend(x);
    const std::vector<double> w = hann_window(y.size());
    for (std::size_t i = 0; i < y.size(); ++i) y[i] *= w[i];

    const std::size_t nfft = next_pow2(std::max(min_nfft, y.size()));
    const std::vector<double> mag = magnitude_spectrum(y, nfft);
    const double df = fs / static_cast<double>(nfft);

    std::size_t lo_bin = static_cast<std::size_t>(std::ceil(band.lo_hz / df));
    std::size_t hi_bin = static_cast<std::size_t>(std::floor(band.hi_hz / df));
    hi_bin = std::min(hi_bin, mag.size() - 1);
    if (lo_bin > hi_bin) throw EmptyBand("dominant_frequency: no FFT bin inside band");

    std::size_t best = lo_bin;
    for (std::size_t i = lo_bin; i <= hi_bin; ++i) {
        if (mag[i] > mag[best]) best = i;
    }
    double total = 0.0;
    for (std::size_t i = 1; i < mag.size(); ++i) total += mag[i] * mag[i];

    SpectralPeak peak;
    peak.freq_hz = static_cast<double>(best) * df;
    peak.magnitude = mag[best];
    peak.peak_ratio = total > 0.0 ? (mag[best] * mag[best]) / total : 0.0;
    return peak;
}

}  // namespace rppg

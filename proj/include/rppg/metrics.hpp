#ifndef RPPG_METRICS_HPP
#define RPPG_METRICS_HPP

#include <optional>
#include <utility>
#include <vector>

#include "rppg/signal.hpp"

namespace rppg {

double pearson(const std::vector<double>& pred, const std::vector<double>& truth);
double rmse(const std::vector<double>& pred, const std::vector<double>& truth);
double mae(const std::vector<double>& pred, const std::vector<double>& truth);
// Fraction, not percent; reports multiply by 100.
double mape(const std::vector<double>& pred, const std::vector<double>& truth);

// Spectral signal-to-noise ratio in dB: in-template energy (fundamental and
// second harmonic, +-template_halfwidth_bpm) against the rest of the band.
struct SnrOptions {
    double band_lo_bpm = 40.0;
    double band_hi_bpm = 240.0;
    double template_halfwidth_bpm = 6.0;
};
double snr(const BvpSignal& bvp, double true_hr_bpm, const SnrOptions& opt = {});

struct BlandAltman {
    double bias = 0.0;
    double loa_lo = 0.0;
    double loa_hi = 0.0;
    std::vector<std::pair<double, double>> pairs;  // (mean, diff)
};
BlandAltman bland_altman(const std::vector<double>& pred, const std::vector<double>& truth);

struct MetricSet {
    std::optional<double> mae_bpm;
    std::optional<double> rmse_bpm;
    std::optional<double> mape_pct;
    std::optional<double> pearson_r;
    std::optional<double> snr_db;
    int n_windows = 0;
};

}  // namespace rppg

#endif

#include "rppg/metrics.hpp"

#include <algorithm>
#include <cmath>

#include "rppg/dsp.hpp"

namespace rppg {

namespace {

void require_same_length(const std::vector<double>& a, const std::vector<double>& b,
                         std::size_t min_len, const char* who) {
    if (a.size() != b.size()) throw LengthMismatch(std::string(who) + ": lengths differ");
    if (a.size() < min_len) throw LengthMismatch(std::string(who) + ": too few samples");
}

}  // namespace

double pearson(const std::vector<double>& pred, const std::vector<double>& truth) {
    require_same_length(pred, truth, 2, "pearson");
    const double mp = mean(pred), mt = mean(truth);
    double spt = 0.0, spp = 0.0, stt = 0.0;
    for (std::size_t i = 0; i < pred.size(); ++i) {
        const double dp = pred[i] - mp;
        const double dt = truth[i] - mt;
        spt += dp * dt;
        spp += dp * dp;
        stt += dt * dt;
    }
    if (spp <= 0.0 || stt <= 0.0) throw ConstantInput("pearson: constant input");
    return spt / std::sqrt(spp * stt);
}

double rmse(const std::vector<double>& pred, const std::vector<double>& truth) {
    require_same_length(pred, truth, 1, "rmse");
    double s = 0.0;
    for (std::size_t i = 0; i < pred.size(); ++i) {
        const double d = pred[i] - truth[i];
        s += d * d;
    }
    return std::sqrt(s / static_cast<double>(pred.size()));
}

double mae(const std::vector<double>& pred, const std::vector<double>& truth) {
    require_same_length(pred, truth, 1, "mae");
    double s = 0.0;
    for (std::size_t i = 0; i < pred.size(); ++i) s += std::abs(pred[i] - truth[i]);
    return s / static_cast<double>(pred.size());
}

double mape(const std::vector<double>& pred, const std::vector<double>& truth) {
    require_same_length(pred, truth, 1, "mape");
    double s = 0.0;
    for (std::size_t i = 0; i < pred.size(); ++i) {
        if (truth[i] == 0.0) throw ZeroTruth("mape: ground-truth value is zero");
        s += std::abs((pred[i] - truth[i]) / truth[i]);
    }
    return s / static_cast<double>(pred.size());
}

double snr(const BvpSignal& bvp, double true_hr_bpm, const SnrOptions& opt) {
    if (true_hr_bpm < opt.band_lo_bpm || true_hr_bpm > opt.band_hi_bpm)
        throw HrOutOfBand("snr: true HR outside evaluation band");
    const double fs = bvp.fs();
    if (bvp.duration_s() < 5.0) throw SignalTooShort("snr: need at least 5 s of signal");

    std::vector<double> y = detrend(bvp.samples());
    const std::vector<double> w = hann_window(y.size());
    for (std::size_t i = 0; i < y.size(); ++i) y[i] *= w[i];
    const std::size_t nfft = next_pow2(std::max<std::size_t>(y.size(),
                                                             static_cast<std::size_t>(60.0 * fs)));
    const std::vector<double> mag = magnitude_spectrum(y, nfft);
    const double df_bpm = 60.0 * fs / static_cast<double>(nfft);

    double in_band = 0.0, out_band = 0.0;
    for (std::size_t i = 1; i < mag.size(); ++i) {
        const double f_bpm = static_cast<double>(i) * df_bpm;
        if (f_bpm < opt.band_lo_bpm || f_bpm > opt.band_hi_bpm) continue;
        const bool in_template =
            std::abs(f_bpm - true_hr_bpm) <= opt.template_halfwidth_bpm ||
            std::abs(f_bpm - 2.0 * true_hr_bpm) <= opt.template_halfwidth_bpm;
        const double power = mag[i] * mag[i];
        (in_template ? in_band : out_band) += power;
    }
    if (out_band <= 0.0) out_band = 1e-30;
    if (in_band <= 0.0) in_band = 1e-30;
    return 10.0 * std::log10(in_band / out_band);
}

BlandAltman bland_altman(const std::vector<double>& pred, const std::vector<double>& truth) {
    require_same_length(pred, truth, 2, "bland_altman");
    BlandAltman ba;
    std::vector<double> diffs(pred.size());
    ba.pairs.reserve(pred.size());
    for (std::size_t i = 0; i < pred.size(); ++i) {
        diffs[i] = pred[i] - truth[i];
        ba.pairs.emplace_back((pred[i] + truth[i]) / 2.0, diffs[i]);
    }
    ba.bias = mean(diffs);
    const double sd = stddev(diffs);
    ba.loa_lo = ba.bias - 1.96 * sd;
    ba.loa_hi = ba.bias + 1.96 * sd;
    return ba;
}

}  // namespace rppg

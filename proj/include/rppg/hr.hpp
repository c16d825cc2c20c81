#ifndef RPPG_HR_HPP
#define RPPG_HR_HPP

#include <cstddef>
#include <string>
#include <vector>

#include "rppg/signal.hpp"

namespace rppg {

enum class HrMethod { Fft, Peak };

struct HrEntry {
    double window_start_s = 0.0;
    double window_len_s = 0.0;
    double hr_bpm = 0.0;
};

// Per-window heart-rate estimates. Windows that yielded no estimate (too few
// peaks) are absent rather than fabricated; pair entries by window start.
struct HrSeries {
    std::vector<HrEntry> entries;
    HrMethod method = HrMethod::Fft;
    std::string source_tag;
};

// Per window: detrend, Hann, zero-pad to >= 60*fs samples, take the argmax
// of the magnitude spectrum inside the band.
HrSeries hr_fft(const BvpSignal& signal, double window_len_s, const Band& band = {});

// Per window: local maxima with minimum spacing fs/band.hi and prominence
// >= 0.3 * window std; HR = 60 / mean inter-beat interval.
HrSeries hr_peaks(const BvpSignal& signal, double window_len_s, const Band& band = {});

HrSeries estimate_hr(const BvpSignal& signal, double window_len_s, const Band& band, HrMethod method);

// Local maxima indices after enforcing prominence and minimum distance,
// exposed for direct testing.
std::vector<std::size_t> find_peaks(const std::vector<double>& x, double min_distance_samples,
                                    double min_prominence);

struct DiscrepancyRow {
    double window_start_s = 0.0;
    double window_len_s = 0.0;
    double hr_label = 0.0;
    double hr_fft = 0.0;
    bool has_peak = false;
    double hr_peak = 0.0;
    double d_label_fft = 0.0;
    double d_label_peak = 0.0;
    double d_fft_peak = 0.0;
};

struct DiscrepancyReport {
    std::vector<DiscrepancyRow> rows;
    double mean_label_fft = 0.0;
    double max_label_fft = 0.0;
    double mean_label_peak = 0.0;
    double max_label_peak = 0.0;
    double mean_fft_peak = 0.0;
    double max_fft_peak = 0.0;
};

// Compare the dataset-provided HR label against HR derived from the PPG
// label by both routes, over windows of window_len_s on a shared clock.
DiscrepancyReport label_discrepancy(const BvpSignal& ppg_label, const HrSeries& hr_label,
                                    double window_len_s = 10.0, const Band& band = {});

// Mean of hr_label entries overlapping [start, start+len), time-weighted.
// Returns false when nothing overlaps.
bool window_label_hr(const HrSeries& hr_label, double start_s, double len_s, double* out_bpm);

}  // namespace rppg

#endif

#ifndef RPPG_SIGNAL_HPP
#define RPPG_SIGNAL_HPP

#include <array>
#include <cstddef>
#include <string>
#include <vector>

#include "rppg/errors.hpp"

namespace rppg {

// Frequency band in Hz. Default covers ~40-180 bpm.
struct Band {
    double lo_hz = 0.66;
    double hi_hz = 3.0;
};

// Per-frame spatial-mean RGB time series, channel planar.
class RgbTrace {
public:
    RgbTrace() = default;
    RgbTrace(std::array<std::vector<double>, 3> channels, double fs_hz,
             std::string subject = {}, double t0_s = 0.0, bool normalized = false);

    std::size_t size() const { return channels_[0].size(); }
    double fs() const { return fs_; }
    double t0() const { return t0_; }
    bool normalized() const { return normalized_; }
    const std::string& subject_id() const { return subject_id_; }
    double duration_s() const { return static_cast<double>(size()) / fs_; }

    const std::vector<double>& channel(int c) const { return channels_[static_cast<std::size_t>(c)]; }
    const std::vector<double>& r() const { return channels_[0]; }
    const std::vector<double>& g() const { return channels_[1]; }
    const std::vector<double>& b() const { return channels_[2]; }

private:
    std::array<std::vector<double>, 3> channels_;
    double fs_ = 0.0;
    double t0_ = 0.0;
    std::string subject_id_;
    bool normalized_ = false;
};

// Rectangle in pixel coordinates, origin top-left.
struct Rect {
    int x = 0;
    int y = 0;
    int w = 0;
    int h = 0;
    bool empty() const { return w <= 0 || h <= 0; }
};

// Decoded RoI pixel tensor sequence. Storage is frame-major with planar
// channels inside each frame: [frame][channel][row][col], matching the raw
// on-disk format.
class FrameSequence {
public:
    FrameSequence() = default;
    FrameSequence(std::vector<double> data, std::size_t count, int height, int width,
                  double fs_hz, Rect roi, std::string subject = {});

    std::size_t count() const { return count_; }
    int height() const { return height_; }
    int width() const { return width_; }
    double fs() const { return fs_; }
    const Rect& roi() const { return roi_; }
    const std::string& subject_id() const { return subject_id_; }
    const std::vector<double>& data() const { return data_; }

    double at(std::size_t frame, int channel, int row, int col) const {
        return data_[((frame * 3 + static_cast<std::size_t>(channel)) * height_ + row) * width_ + col];
    }

private:
    std::vector<double> data_;
    std::size_t count_ = 0;
    int height_ = 0;
    int width_ = 0;
    double fs_ = 0.0;
    Rect roi_;
    std::string subject_id_;
};

// Extracted 1-D pulse waveform.
class BvpSignal {
public:
    BvpSignal() = default;
    BvpSignal(std::vector<double> samples, double fs_hz, std::string method_tag = {});

    std::size_t size() const { return samples_.size(); }
    double fs() const { return fs_; }
    const std::string& method_tag() const { return method_tag_; }
    const std::vector<double>& samples() const { return samples_; }
    double duration_s() const { return static_cast<double>(size()) / fs_; }

private:
    std::vector<double> samples_;
    double fs_ = 0.0;
    std::string method_tag_;
};

enum class ChannelSpace { Rgb, Yuv };

// Spatial-temporal map: per channel an (n_blocks x n_frames) matrix whose
// rows are min-max normalized block-mean traces.
struct StMap {
    std::array<std::vector<double>, 3> cells;  // channel-major, row-major blocks x frames
    int grid_rows = 0;
    int grid_cols = 0;
    std::size_t n_frames = 0;
    double fs = 0.0;
    ChannelSpace channel_space = ChannelSpace::Rgb;

    int n_blocks() const { return grid_rows * grid_cols; }
    double at(int channel, int block, std::size_t frame) const {
        return cells[static_cast<std::size_t>(channel)][static_cast<std::size_t>(block) * n_frames + frame];
    }
};

}  // namespace rppg

#endif

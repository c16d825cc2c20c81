#ifndef RPPG_PREPROCESS_HPP
#define RPPG_PREPROCESS_HPP

#include <array>

#include "rppg/signal.hpp"

namespace rppg {

// Normalized frame difference per channel, each channel then scaled by its
// own standard deviation. Output channels are one sample shorter than the
// input trace.
struct DiffNormalized {
    std::array<BvpSignal, 3> channels;
};
DiffNormalized diff_normalize(const RgbTrace& trace);

// Per-frame mean of each channel over the RoI.
RgbTrace spatial_mean(const FrameSequence& frames);

// Block-mean traces over a grid subdivision of the RoI, each row min-max
// normalized to [0, 1]. Remainder pixels beyond the divisible grid are
// truncated. A constant row normalizes to 0.5.
StMap make_stmap(const FrameSequence& frames, int grid_rows, int grid_cols,
                 ChannelSpace space = ChannelSpace::Rgb);

}  // namespace rppg

#endif

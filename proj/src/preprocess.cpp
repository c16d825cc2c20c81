#include "rppg/preprocess.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include "rppg/color.hpp"
#include "rppg/dsp.hpp"

namespace rppg {

DiffNormalized diff_normalize(const RgbTrace& trace) {
    const std::size_t n = trace.size();
    if (n < 2) throw TraceTooShort("diff_normalize: need at least 2 samples");

    DiffNormalized out;
    for (int c = 0; c < 3; ++c) {
        const auto& x = trace.channel(c);
        std::vector<double> d(n - 1);
        for (std::size_t t = 0; t + 1 < n; ++t) {
            double denom = x[t + 1] + x[t];
            if (denom == 0.0) denom = 1e-6;
            d[t] = (x[t + 1] - x[t]) / denom;
            if (!std::isfinite(d[t])) throw NonFiniteInput("diff_normalize: non-finite result");
        }
        const double sd = stddev(d);
        if (sd > 1e-30) {
            for (auto& v : d) v /= sd;
        }
        out.channels[static_cast<std::size_t>(c)] =
            BvpSignal(std::move(d), trace.fs(), "diffnorm");
    }
    return out;
}

RgbTrace spatial_mean(const FrameSequence& frames) {
    const Rect roi = frames.roi();
    if (roi.empty()) throw EmptyRoi("spatial_mean: empty RoI");
    const double npx = static_cast<double>(roi.w) * static_cast<double>(roi.h);

    std::array<std::vector<double>, 3> ch;
    for (auto& c : ch) c.resize(frames.count());
    for (std::size_t t = 0; t < frames.count(); ++t) {
        for (int c = 0; c < 3; ++c) {
            double acc = 0.0;
            for (int y = roi.y; y < roi.y + roi.h; ++y)
                for (int x = roi.x; x < roi.x + roi.w; ++x) acc += frames.at(t, c, y, x);
            ch[static_cast<std::size_t>(c)][t] = acc / npx;
        }
    }
    return RgbTrace(std::move(ch), frames.fs(), frames.subject_id());
}

StMap make_stmap(const FrameSequence& frames, int grid_rows, int grid_cols, ChannelSpace space) {
    const Rect roi = frames.roi();
    if (roi.empty()) throw EmptyRoi("make_stmap: empty RoI");
    if (grid_rows < 1 || grid_cols < 1) throw GridLargerThanRoi("make_stmap: grid dims must be >= 1");
    const int bh = roi.h / grid_rows;
    const int bw = roi.w / grid_cols;
    if (bh < 1 || bw < 1) throw GridLargerThanRoi("make_stmap: grid larger than RoI");

    const std::size_t nf = frames.count();
    const int nb = grid_rows * grid_cols;
    StMap map;
    map.grid_rows = grid_rows;
    map.grid_cols = grid_cols;
    map.n_frames = nf;
    map.fs = frames.fs();
    map.channel_space = space;
    for (auto& c : map.cells) c.assign(static_cast<std::size_t>(nb) * nf, 0.0);

    const double npx = static_cast<double>(bh) * static_cast<double>(bw);
    for (std::size_t t = 0; t < nf; ++t) {
        for (int by = 0; by < grid_rows; ++by) {
            for (int bx = 0; bx < grid_cols; ++bx) {
                std::array<double, 3> acc{0.0, 0.0, 0.0};
                const int y0 = roi.y + by * bh;
                const int x0 = roi.x + bx * bw;
                for (int y = y0; y < y0 + bh; ++y)
                    for (int x = x0; x < x0 + bw; ++x)
                        for (int c = 0; c < 3; ++c) acc[static_cast<std::size_t>(c)] += frames.at(t, c, y, x);
                for (auto& a : acc) a /= npx;
                // BT.601 is linear, so block means convert directly.
                if (space == ChannelSpace::Yuv) acc = rgb_to_yuv_bt601(acc);
                const std::size_t block = static_cast<std::size_t>(by * grid_cols + bx);
                for (int c = 0; c < 3; ++c)
                    map.cells[static_cast<std::size_t>(c)][block * nf + t] = acc[static_cast<std::size_t>(c)];
            }
        }
    }

    // Per-row min-max normalization; a constant row maps to 0.5.
    for (auto& plane : map.cells) {
        for (int b = 0; b < nb; ++b) {
            double lo = plane[static_cast<std::size_t>(b) * nf];
            double hi = lo;
            for (std::size_t t = 0; t < nf; ++t) {
                const double v = plane[static_cast<std::size_t>(b) * nf + t];
                lo = std::min(lo, v);
                hi = std::max(hi, v);
            }
            const double span = hi - lo;
            for (std::size_t t = 0; t < nf; ++t) {
                auto& v = plane[static_cast<std::size_t>(b) * nf + t];
                v = span > 1e-12 * std::max(std::abs(hi), 1.0) ? (v - lo) / span : 0.5;
            }
        }
    }
    return map;
}

}  // namespace rppg

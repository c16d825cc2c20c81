#include "rppg/signal.hpp"

#include <cmath>
#include <utility>

namespace rppg {

namespace {

bool all_finite(const std::vector<double>& v) {
    for (double x : v) {
        if (!std::isfinite(x)) return false;
    }
    return true;
}

}  // namespace

RgbTrace::RgbTrace(std::array<std::vector<double>, 3> channels, double fs_hz,
                   std::string subject, double t0_s, bool normalized)
    : channels_(std::move(channels)),
      fs_(fs_hz),
      t0_(t0_s),
      subject_id_(std::move(subject)),
      normalized_(normalized) {
    if (fs_ <= 0.0) throw InvalidSpec("RgbTrace: sampling frequency must be positive");
    if (channels_[0].size() != channels_[1].size() || channels_[0].size() != channels_[2].size())
        throw LengthMismatch("RgbTrace: channel lengths differ");
    if (channels_[0].size() < 2) throw TraceTooShort("RgbTrace: need at least 2 samples");
    for (const auto& c : channels_) {
        if (!all_finite(c)) throw NonFiniteInput("RgbTrace: non-finite channel value");
    }
    if (normalized_) {
        for (const auto& c : channels_) {
            for (double x : c) {
                if (x < 0.0 || x > 1.0)
                    throw Error("RgbTrace: normalized trace value outside [0, 1]");
            }
        }
    }
}

FrameSequence::FrameSequence(std::vector<double> data, std::size_t count, int height, int width,
                             double fs_hz, Rect roi, std::string subject)
    : data_(std::move(data)),
      count_(count),
      height_(height),
      width_(width),
      fs_(fs_hz),
      roi_(roi),
      subject_id_(std::move(subject)) {
    if (fs_ <= 0.0) throw InvalidSpec("FrameSequence: sampling frequency must be positive");
    if (height_ <= 0 || width_ <= 0) throw InvalidSpec("FrameSequence: empty frame geometry");
    if (data_.size() != count_ * 3u * static_cast<std::size_t>(height_) * static_cast<std::size_t>(width_))
        throw LengthMismatch("FrameSequence: data size does not match count*3*h*w");
    if (roi_.empty()) throw EmptyRoi("FrameSequence: empty RoI");
    if (roi_.x < 0 || roi_.y < 0 || roi_.x + roi_.w > width_ || roi_.y + roi_.h > height_)
        throw InvalidSpec("FrameSequence: RoI outside frame bounds");
    if (!all_finite(data_)) throw NonFiniteInput("FrameSequence: non-finite pixel value");
}

BvpSignal::BvpSignal(std::vector<double> samples, double fs_hz, std::string method_tag)
    : samples_(std::move(samples)), fs_(fs_hz), method_tag_(std::move(method_tag)) {
    if (fs_ <= 0.0) throw InvalidSpec("BvpSignal: sampling frequency must be positive");
    if (!all_finite(samples_)) throw NonFiniteInput("BvpSignal: non-finite sample");
}

}  // namespace rppg

#ifndef RPPG_ERRORS_HPP
#define RPPG_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace rppg {

// Base class for every error the toolkit raises on purpose.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Signal construction / preprocessing
struct TraceTooShort : Error { using Error::Error; };
struct NonFiniteInput : Error { using Error::Error; };
struct ConstantSignal : Error { using Error::Error; };
struct InvalidBand : Error { using Error::Error; };
struct SignalTooShort : Error { using Error::Error; };
struct EmptyRoi : Error { using Error::Error; };
struct GridLargerThanRoi : Error { using Error::Error; };

// Pulse-extraction methods
struct RankDeficient : Error { using Error::Error; };
struct WindowLongerThanTrace : Error { using Error::Error; };
struct SingularGram : Error { using Error::Error; };
struct DegenerateEigenstructure : Error { using Error::Error; };
struct IncompatibleInput : Error { using Error::Error; };
struct RequiresPixelData : IncompatibleInput { using IncompatibleInput::IncompatibleInput; };

// Heart-rate estimation
struct WindowTooShort : Error { using Error::Error; };
struct EmptyBand : Error { using Error::Error; };
struct TooFewPeaks : Error { using Error::Error; };
struct NoOverlap : Error { using Error::Error; };

// Metrics
struct LengthMismatch : Error { using Error::Error; };
struct ConstantInput : Error { using Error::Error; };
struct ZeroTruth : Error { using Error::Error; };
struct HrOutOfBand : Error { using Error::Error; };
struct DegenerateColor : Error { using Error::Error; };

// Synthetic generator / dataset ingestion
struct InvalidSpec : Error { using Error::Error; };
struct IoFailure : Error { using Error::Error; };
struct MalformedFile : Error { using Error::Error; };
struct MissingLabel : Error { using Error::Error; };
struct ClockMismatch : Error { using Error::Error; };
struct EmptyDataset : Error { using Error::Error; };

// Benchmark harness
struct ConfigInvalid : Error { using Error::Error; };

}  // namespace rppg

#endif

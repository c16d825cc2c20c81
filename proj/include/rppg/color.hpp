#ifndef RPPG_COLOR_HPP
#define RPPG_COLOR_HPP

#include <array>

namespace rppg {

// BT.601 analog YUV from RGB on whatever linear scale the input uses.
std::array<double, 3> rgb_to_yuv_bt601(const std::array<double, 3>& rgb);

// sRGB (components in [0, 1]) to CIELAB under D65.
std::array<double, 3> srgb_to_lab(const std::array<double, 3>& rgb);

double srgb_to_linear(double c);

}  // namespace rppg

#endif

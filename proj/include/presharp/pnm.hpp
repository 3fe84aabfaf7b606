#pragma once

#include <cstdint>
#include <string>

#include "presharp/image.hpp"

namespace presharp {

/// Loads a binary netpbm file: P5 (grayscale) or P6 (RGB), maxval 255.
/// Byte v maps to v/255. Malformed header -> FormatError, short payload ->
/// TruncationError, unreadable path -> IoError.
Image load_pgm_ppm(const std::string& path);

/// Writes P5 for 1-channel images, P6 for 3-channel. Pixels are quantized
/// with round-half-away-from-zero on v*255, so load(save(x)) reproduces the
/// 8-bit quantization of x exactly.
void save_pgm_ppm(const Image& image, const std::string& path);

/// The quantization used at the file boundary.
std::uint8_t quantize_u8(float v);

} // namespace presharp

#pragma once

#include <string>

#include "presharp/image.hpp"

namespace presharp {

/// Loads an IDX image/label file pair (big-endian, magic 0x00000803 for
/// images and 0x00000801 for labels; the MNIST container format). Pixels are
/// scaled to [0,1]. The two files must agree on the item count and every
/// label must be < class_count.
LabeledSet load_idx(const std::string& images_path,
                    const std::string& labels_path,
                    int class_count = 10);

/// Writes a LabeledSet as an IDX pair. Images must share one H×W shape and
/// are quantized to bytes with the same rounding as the netpbm writer.
void save_idx(const LabeledSet& set,
              const std::string& images_path,
              const std::string& labels_path);

} // namespace presharp

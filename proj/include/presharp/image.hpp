#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "presharp/errors.hpp"

namespace presharp {

/// H×W×C float raster, row-major and channel-interleaved. Pixel values live
/// in [0,1] for anything that represents a displayable image; intermediate
/// texture maps (convolution outputs) may leave that range.
class Image {
public:
    Image() = default;

    /// Zero-filled image.
    Image(int height, int width, int channels);

    /// Takes ownership of `data` (length must be exactly H*W*C, all finite).
    Image(int height, int width, int channels, std::vector<float> data);

    int height() const { return height_; }
    int width() const { return width_; }
    int channels() const { return channels_; }
    std::size_t size() const { return data_.size(); }

    float at(int y, int x, int c) const {
        return data_[(static_cast<std::size_t>(y) * width_ + x) * channels_ + c];
    }
    float& at(int y, int x, int c) {
        return data_[(static_cast<std::size_t>(y) * width_ + x) * channels_ + c];
    }

    const std::vector<float>& data() const { return data_; }
    std::vector<float>& data() { return data_; }

    bool same_shape(const Image& other) const {
        return height_ == other.height_ && width_ == other.width_ &&
               channels_ == other.channels_;
    }

    /// True iff every pixel is inside [0,1].
    bool in_unit_range() const;

private:
    int height_ = 0;
    int width_ = 0;
    int channels_ = 0;
    std::vector<float> data_;
};

enum class Metric { LInf, RMSE };

/// Cap on how far a robustified image may drift from its original.
struct PerceptualBudget {
    Metric metric = Metric::LInf;
    float epsilon_r = 0.0f; // must be >= 0
};

/// Images plus 0-based class labels.
struct LabeledSet {
    std::vector<Image> images;
    std::vector<int> labels;
    int class_count = 0;

    std::size_t size() const { return images.size(); }
    /// Throws ConsistencyError if counts differ or a label is out of range.
    void validate() const;
};

/// Clips every pixel into [0,1]. Idempotent. NaN pixels raise DomainError.
Image clamp01(const Image& image);

/// LInf = max |a-b|, RMSE = sqrt(mean (a-b)^2). Shapes must match.
float perceptual_distance(const Image& a, const Image& b, Metric metric);

const char* metric_name(Metric metric);
Metric metric_from_name(const std::string& name);

} // namespace presharp

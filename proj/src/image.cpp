#include "presharp/image.hpp"

#include <algorithm>
#include <cmath>

namespace presharp {

namespace {

void check_dims(int height, int width, int channels) {
    if (height <= 0 || width <= 0)
        throw ArgumentError("image dimensions must be positive");
    if (channels != 1 && channels != 3)
        throw ArgumentError("channel count must be 1 or 3");
}

} // namespace

Image::Image(int height, int width, int channels)
    : height_(height), width_(width), channels_(channels) {
    check_dims(height, width, channels);
    data_.assign(static_cast<std::size_t>(height) * width * channels, 0.0f);
}

Image::Image(int height, int width, int channels, std::vector<float> data)
    : height_(height), width_(width), channels_(channels), data_(std::move(data)) {
    check_dims(height, width, channels);
    const std::size_t expected =
        static_cast<std::size_t>(height) * width * channels;
    if (data_.size() != expected)
        throw ShapeError("pixel buffer length does not match H*W*C");
    for (float v : data_)
        if (!std::isfinite(v))
            throw DomainError("non-finite pixel value");
}

bool Image::in_unit_range() const {
    for (float v : data_)
        if (v < 0.0f || v > 1.0f) return false;
    return true;
}

void LabeledSet::validate() const {
    if (images.size() != labels.size())
        throw ConsistencyError("image count does not match label count");
    if (class_count <= 0)
        throw ArgumentError("class_count must be positive");
    for (int label : labels)
        if (label < 0 || label >= class_count)
            throw ConsistencyError("label outside [0, class_count)");
}

Image clamp01(const Image& image) {
    std::vector<float> out(image.size());
    const auto& src = image.data();
    for (std::size_t i = 0; i < src.size(); ++i) {
        float v = src[i];
        if (std::isnan(v)) throw DomainError("NaN pixel in clamp01");
        out[i] = std::clamp(v, 0.0f, 1.0f);
    }
    return Image(image.height(), image.width(), image.channels(), std::move(out));
}

float perceptual_distance(const Image& a, const Image& b, Metric metric) {
    if (!a.same_shape(b))
        throw ShapeError("perceptual_distance: shape mismatch");
    const auto& da = a.data();
    const auto& db = b.data();
    if (metric == Metric::LInf) {
        float worst = 0.0f;
        for (std::size_t i = 0; i < da.size(); ++i)
            worst = std::max(worst, std::fabs(da[i] - db[i]));
        return worst;
    }
    double acc = 0.0;
    for (std::size_t i = 0; i < da.size(); ++i) {
        const double d = static_cast<double>(da[i]) - static_cast<double>(db[i]);
        acc += d * d;
    }
    return static_cast<float>(std::sqrt(acc / static_cast<double>(da.size())));
}

const char* metric_name(Metric metric) {
    return metric == Metric::LInf ? "linf" : "rmse";
}

Metric metric_from_name(const std::string& name) {
    if (name == "linf" || name == "LInf") return Metric::LInf;
    if (name == "rmse" || name == "RMSE") return Metric::RMSE;
    throw ArgumentError("unknown perceptual metric: " + name);
}

} // namespace presharp

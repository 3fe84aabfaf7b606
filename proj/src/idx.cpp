#include "presharp/idx.hpp"

#include <cstdint>
#include <fstream>

#include "presharp/pnm.hpp"

namespace presharp {

namespace {

constexpr std::uint32_t kImagesMagic = 0x00000803u;
constexpr std::uint32_t kLabelsMagic = 0x00000801u;

std::uint32_t read_u32be(std::istream& in, const std::string& path) {
    std::uint8_t b[4];
    in.read(reinterpret_cast<char*>(b), 4);
    if (in.gcount() != 4) throw TruncationError(path + ": truncated header");
    return (static_cast<std::uint32_t>(b[0]) << 24) |
           (static_cast<std::uint32_t>(b[1]) << 16) |
           (static_cast<std::uint32_t>(b[2]) << 8) |
           static_cast<std::uint32_t>(b[3]);
}

void write_u32be(std::ostream& out, std::uint32_t v) {
    const std::uint8_t b[4] = {static_cast<std::uint8_t>(v >> 24),
                               static_cast<std::uint8_t>(v >> 16),
                               static_cast<std::uint8_t>(v >> 8),
                               static_cast<std::uint8_t>(v)};
    out.write(reinterpret_cast<const char*>(b), 4);
}

} // namespace

LabeledSet load_idx(const std::string& images_path,
                    const std::string& labels_path,
                    int class_count) {
    if (class_count <= 0) throw ArgumentError("class_count must be positive");

    std::ifstream imgs(images_path, std::ios::binary);
    if (!imgs) throw IoError(images_path + ": cannot open for reading");
    if (read_u32be(imgs, images_path) != kImagesMagic)
        throw FormatError(images_path + ": bad IDX image magic");
    const std::uint32_t count = read_u32be(imgs, images_path);
    const std::uint32_t rows = read_u32be(imgs, images_path);
    const std::uint32_t cols = read_u32be(imgs, images_path);
    if (count > 0 && (rows == 0 || cols == 0))
        throw FormatError(images_path + ": zero image dimensions");

    std::ifstream labs(labels_path, std::ios::binary);
    if (!labs) throw IoError(labels_path + ": cannot open for reading");
    if (read_u32be(labs, labels_path) != kLabelsMagic)
        throw FormatError(labels_path + ": bad IDX label magic");
    const std::uint32_t label_count = read_u32be(labs, labels_path);
    if (label_count != count)
        throw ConsistencyError(images_path + ": image count " +
                               std::to_string(count) + " != label count " +
                               std::to_string(label_count));

    LabeledSet set;
    set.class_count = class_count;
    set.images.reserve(count);
    set.labels.reserve(count);

    const std::size_t pixels = static_cast<std::size_t>(rows) * cols;
    std::vector<std::uint8_t> raw(pixels);
    for (std::uint32_t i = 0; i < count; ++i) {
        imgs.read(reinterpret_cast<char*>(raw.data()),
                  static_cast<std::streamsize>(pixels));
        if (static_cast<std::size_t>(imgs.gcount()) != pixels)
            throw TruncationError(images_path + ": truncated pixel data");
        std::vector<float> data(pixels);
        for (std::size_t p = 0; p < pixels; ++p)
            data[p] = static_cast<float>(raw[p]) / 255.0f;
        set.images.emplace_back(static_cast<int>(rows), static_cast<int>(cols),
                                1, std::move(data));

        std::uint8_t label = 0;
        labs.read(reinterpret_cast<char*>(&label), 1);
        if (labs.gcount() != 1)
            throw TruncationError(labels_path + ": truncated label data");
        if (label >= class_count)
            throw ConsistencyError(labels_path + ": label " +
                                   std::to_string(int(label)) +
                                   " >= class_count " +
                                   std::to_string(class_count));
        set.labels.push_back(label);
    }
    return set;
}

void save_idx(const LabeledSet& set,
              const std::string& images_path,
              const std::string& labels_path) {
    set.validate();
    int rows = 0, cols = 0;
    if (!set.images.empty()) {
        rows = set.images.front().height();
        cols = set.images.front().width();
        for (const Image& img : set.images) {
            if (img.channels() != 1)
                throw ArgumentError("IDX containers hold grayscale images only");
            if (img.height() != rows || img.width() != cols)
                throw ShapeError("IDX containers hold one image shape only");
        }
    }

    std::ofstream imgs(images_path, std::ios::binary);
    if (!imgs) throw IoError(images_path + ": cannot open for writing");
    write_u32be(imgs, kImagesMagic);
    write_u32be(imgs, static_cast<std::uint32_t>(set.images.size()));
    write_u32be(imgs, static_cast<std::uint32_t>(rows));
    write_u32be(imgs, static_cast<std::uint32_t>(cols));
    std::vector<std::uint8_t> raw;
    for (const Image& img : set.images) {
        raw.resize(img.size());
        for (std::size_t i = 0; i < img.size(); ++i)
            raw[i] = quantize_u8(img.data()[i]);
        imgs.write(reinterpret_cast<const char*>(raw.data()),
                   static_cast<std::streamsize>(raw.size()));
    }
    if (!imgs) throw IoError(images_path + ": write failed");

    std::ofstream labs(labels_path, std::ios::binary);
    if (!labs) throw IoError(labels_path + ": cannot open for writing");
    write_u32be(labs, kLabelsMagic);
    write_u32be(labs, static_cast<std::uint32_t>(set.labels.size()));
    for (int label : set.labels) {
        const std::uint8_t b = static_cast<std::uint8_t>(label);
        labs.write(reinterpret_cast<const char*>(&b), 1);
    }
    if (!labs) throw IoError(labels_path + ": write failed");
}

} // namespace presharp

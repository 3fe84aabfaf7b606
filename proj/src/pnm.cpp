#include "presharp/pnm.hpp"

#include <cmath>
#include <fstream>

namespace presharp {

namespace {

// Skips whitespace and '#' comment lines between header tokens.
int next_header_int(std::istream& in, const std::string& path) {
    for (;;) {
        int c = in.peek();
        if (c == EOF) throw FormatError(path + ": unexpected end of header");
        if (c == '#') {
            std::string line;
            std::getline(in, line);
            continue;
        }
        if (std::isspace(c)) {
            in.get();
            continue;
        }
        break;
    }
    int value = 0;
    if (!(in >> value)) throw FormatError(path + ": malformed header field");
    return value;
}

} // namespace

std::uint8_t quantize_u8(float v) {
    const long q = std::lround(static_cast<double>(v) * 255.0);
    return static_cast<std::uint8_t>(std::min(255L, std::max(0L, q)));
}

Image load_pgm_ppm(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError(path + ": cannot open for reading");

    char m0 = 0, m1 = 0;
    in.get(m0);
    in.get(m1);
    if (!in || m0 != 'P' || (m1 != '5' && m1 != '6'))
        throw FormatError(path + ": not a binary P5/P6 netpbm file");
    const int channels = (m1 == '5') ? 1 : 3;

    const int width = next_header_int(in, path);
    const int height = next_header_int(in, path);
    const int maxval = next_header_int(in, path);
    if (width <= 0 || height <= 0)
        throw FormatError(path + ": non-positive dimensions");
    if (maxval != 255)
        throw FormatError(path + ": unsupported maxval (expected 255)");

    // Exactly one whitespace byte separates header and payload.
    int sep = in.get();
    if (sep == EOF || !std::isspace(sep))
        throw FormatError(path + ": missing header/payload separator");

    const std::size_t count =
        static_cast<std::size_t>(width) * height * channels;
    std::vector<std::uint8_t> raw(count);
    in.read(reinterpret_cast<char*>(raw.data()),
            static_cast<std::streamsize>(count));
    if (static_cast<std::size_t>(in.gcount()) != count)
        throw TruncationError(path + ": pixel payload shorter than header promises");

    std::vector<float> data(count);
    for (std::size_t i = 0; i < count; ++i)
        data[i] = static_cast<float>(raw[i]) / 255.0f;
    return Image(height, width, channels, std::move(data));
}

void save_pgm_ppm(const Image& image, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError(path + ": cannot open for writing");

    out << (image.channels() == 1 ? "P5" : "P6") << '\n'
        << image.width() << ' ' << image.height() << '\n'
        << 255 << '\n';

    std::vector<std::uint8_t> raw(image.size());
    const auto& data = image.data();
    for (std::size_t i = 0; i < data.size(); ++i)
        raw[i] = quantize_u8(data[i]);
    out.write(reinterpret_cast<const char*>(raw.data()),
              static_cast<std::streamsize>(raw.size()));
    if (!out) throw IoError(path + ": write failed");
}

} // namespace presharp

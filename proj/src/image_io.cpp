#include "pfa/image_io.hpp"

#include <bit>
#include <cmath>
#include <cstdint>
#include <cstring>
#include <fstream>
#include <limits>

namespace pfa {

namespace {

// PGM header tokens are separated by whitespace; '#' starts a comment that
// runs to end of line.
int next_pnm_int(std::istream& in) {
    int c = in.get();
    while (c != EOF) {
        if (c == '#') {
            while (c != EOF && c != '\n') c = in.get();
        } else if (std::isspace(c)) {
            c = in.get();
        } else {
            break;
        }
    }
    if (c == EOF || !std::isdigit(c)) throw FormatError("malformed PNM header");
    long v = 0;
    while (c != EOF && std::isdigit(c)) {
        v = v * 10 + (c - '0');
        if (v > std::numeric_limits<int>::max()) throw FormatError("PNM header value overflow");
        c = in.get();
    }
    if (c != EOF) in.unget();
    return static_cast<int>(v);
}

float swap_float_bytes(float f) {
    uint32_t u;
    std::memcpy(&u, &f, 4);
    u = __builtin_bswap32(u);
    std::memcpy(&f, &u, 4);
    return f;
}

constexpr bool host_little_endian = std::endian::native == std::endian::little;

} // namespace

PlanarImage read_pgm(const std::string& path, int* maxval_out) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open " + path);

    char magic[2] = {0, 0};
    in.read(magic, 2);
    if (!in || magic[0] != 'P' || magic[1] != '5')
        throw UnsupportedFormat("expected binary P5 PGM: " + path);

    const int width = next_pnm_int(in);
    const int height = next_pnm_int(in);
    const int maxval = next_pnm_int(in);
    if (width <= 0 || height <= 0 || maxval <= 0 || maxval > 65535)
        throw FormatError("bad PGM dimensions/maxval in " + path);
    in.get(); // single whitespace byte before the payload

    const int bytes_per_sample = maxval > 255 ? 2 : 1;
    const size_t n = static_cast<size_t>(width) * height;
    std::vector<unsigned char> raw(n * bytes_per_sample);
    in.read(reinterpret_cast<char*>(raw.data()), static_cast<std::streamsize>(raw.size()));
    if (static_cast<size_t>(in.gcount()) != raw.size())
        throw FormatError("truncated PGM payload in " + path);

    PlanarImage img(height, width, 1);
    const double scale = 1.0 / maxval;
    if (bytes_per_sample == 1) {
        for (size_t i = 0; i < n; ++i) img.data()[i] = raw[i] * scale;
    } else {
        for (size_t i = 0; i < n; ++i) {
            const unsigned v = (static_cast<unsigned>(raw[2 * i]) << 8) | raw[2 * i + 1];
            img.data()[i] = v * scale;
        }
    }
    if (maxval_out) *maxval_out = maxval;
    return img;
}

void write_pgm(const PlanarImage& image, const std::string& path, int maxval) {
    if (image.channels() != 1) throw ChannelMismatch("PGM is single-channel");
    if (maxval <= 0 || maxval > 65535) throw DomainError("PGM maxval out of range");

    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw IoError("cannot open " + path + " for writing");
    out << "P5\n" << image.width() << " " << image.height() << "\n" << maxval << "\n";

    const size_t n = image.size();
    auto quantize = [&](double v) {
        long q = std::lround(v * maxval);
        if (q < 0) q = 0;
        if (q > maxval) q = maxval;
        return q;
    };
    if (maxval > 255) {
        std::vector<unsigned char> raw(n * 2);
        for (size_t i = 0; i < n; ++i) {
            const long q = quantize(image.data()[i]);
            raw[2 * i] = static_cast<unsigned char>((q >> 8) & 0xFF);
            raw[2 * i + 1] = static_cast<unsigned char>(q & 0xFF);
        }
        out.write(reinterpret_cast<const char*>(raw.data()), static_cast<std::streamsize>(raw.size()));
    } else {
        std::vector<unsigned char> raw(n);
        for (size_t i = 0; i < n; ++i) raw[i] = static_cast<unsigned char>(quantize(image.data()[i]));
        out.write(reinterpret_cast<const char*>(raw.data()), static_cast<std::streamsize>(raw.size()));
    }
    if (!out) throw IoError("short write to " + path);
}

PlanarImage read_pfm(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open " + path);

    char magic[2] = {0, 0};
    in.read(magic, 2);
    int channels = 0;
    if (magic[0] == 'P' && magic[1] == 'f') channels = 1;
    else if (magic[0] == 'P' && magic[1] == 'F') channels = 3;
    else throw UnsupportedFormat("bad PFM magic in " + path);

    int width = 0, height = 0;
    double scale = 0.0;
    if (!(in >> width >> height >> scale)) throw FormatError("malformed PFM header in " + path);
    if (width <= 0 || height <= 0 || scale == 0.0)
        throw FormatError("bad PFM dimensions/scale in " + path);
    in.get(); // single whitespace after scale

    const bool payload_little = scale < 0.0;
    const size_t n = static_cast<size_t>(width) * height * channels;
    std::vector<float> raw(n);
    in.read(reinterpret_cast<char*>(raw.data()), static_cast<std::streamsize>(n * 4));
    if (static_cast<size_t>(in.gcount()) != n * 4)
        throw FormatError("truncated PFM payload in " + path);

    if (payload_little != host_little_endian)
        for (float& f : raw) f = swap_float_bytes(f);

    // rows are bottom-to-top on disk
    PlanarImage img(height, width, channels);
    for (int r = 0; r < height; ++r) {
        const float* src = raw.data() + static_cast<size_t>(height - 1 - r) * width * channels;
        for (int i = 0; i < width * channels; ++i) {
            const float v = src[i];
            if (std::isnan(v)) throw FormatError("NaN in PFM payload of " + path);
            img.data()[static_cast<size_t>(r) * width * channels + i] = v;
        }
    }
    return img;
}

void write_pfm(const PlanarImage& image, const std::string& path) {
    if (image.channels() != 1 && image.channels() != 3)
        throw ChannelMismatch("PFM holds 1 or 3 channels, got " + std::to_string(image.channels()));

    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw IoError("cannot open " + path + " for writing");
    out << (image.channels() == 1 ? "Pf" : "PF") << "\n"
        << image.width() << " " << image.height() << "\n"
        << "-1.0" << "\n";

    const int row_elems = image.width() * image.channels();
    std::vector<float> row(row_elems);
    for (int r = image.height() - 1; r >= 0; --r) {
        const double* src = image.data().data() + static_cast<size_t>(r) * row_elems;
        for (int i = 0; i < row_elems; ++i) {
            if (std::isnan(src[i])) throw DomainError("refusing to write NaN sample");
            row[i] = static_cast<float>(src[i]);
            if (!host_little_endian) row[i] = swap_float_bytes(row[i]);
        }
        out.write(reinterpret_cast<const char*>(row.data()), static_cast<std::streamsize>(row_elems) * 4);
    }
    if (!out) throw IoError("short write to " + path);
}

PlanarImage read_image(const std::string& path) {
    if (path.size() >= 4) {
        const std::string ext = path.substr(path.size() - 4);
        if (ext == ".pgm") return read_pgm(path);
        if (ext == ".pfm") return read_pfm(path);
    }
    throw UnsupportedFormat("unknown image extension: " + path);
}

} // namespace pfa

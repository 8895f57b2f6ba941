#ifndef PFA_IMAGE_HPP
#define PFA_IMAGE_HPP

#include <cstddef>
#include <vector>

#include "pfa/errors.hpp"

namespace pfa {

/// Row-major, top-left origin, channel-interleaved float raster.
/// Index order is (row, column, channel) everywhere in this library;
/// formats with other conventions are converted at the I/O boundary.
class PlanarImage {
public:
    PlanarImage() = default;
    PlanarImage(int height, int width, int channels, double fill = 0.0)
        : height_(height), width_(width), channels_(channels),
          data_(static_cast<size_t>(height) * width * channels, fill) {
        if (height < 0 || width < 0 || channels < 0)
            throw DimensionMismatch("negative image dimension");
    }
    PlanarImage(int height, int width, int channels, std::vector<double> data)
        : height_(height), width_(width), channels_(channels), data_(std::move(data)) {
        if (data_.size() != static_cast<size_t>(height) * width * channels)
            throw DimensionMismatch("data length does not match height*width*channels");
    }

    int height() const { return height_; }
    int width() const { return width_; }
    int channels() const { return channels_; }
    size_t size() const { return data_.size(); }
    bool empty() const { return data_.empty(); }

    double& at(int r, int c, int ch = 0) {
        return data_[(static_cast<size_t>(r) * width_ + c) * channels_ + ch];
    }
    double at(int r, int c, int ch = 0) const {
        return data_[(static_cast<size_t>(r) * width_ + c) * channels_ + ch];
    }

    std::vector<double>& data() { return data_; }
    const std::vector<double>& data() const { return data_; }

    bool same_shape(const PlanarImage& o) const {
        return height_ == o.height_ && width_ == o.width_ && channels_ == o.channels_;
    }

private:
    int height_ = 0;
    int width_ = 0;
    int channels_ = 0;
    std::vector<double> data_;
};

/// 3-channel raster holding (S0, S1, S2) per pixel.
using StokesImage = PlanarImage;

/// The fixed 2x2 micro-polarizer layout. Filter angle in degrees as a
/// function of pixel parity:
///
///     90  45
///    135   0
struct PFAPattern {
    static constexpr double angle_at(int row_parity, int col_parity) {
        constexpr double grid[2][2] = {{90.0, 45.0}, {135.0, 0.0}};
        return grid[row_parity & 1][col_parity & 1];
    }
};

/// Single-channel raster sampled through the PFA. Dimensions are even so
/// the image covers whole macro-pixels.
struct MosaicedImage {
    PlanarImage image;

    MosaicedImage() = default;
    explicit MosaicedImage(PlanarImage img) : image(std::move(img)) {
        if (image.channels() != 1)
            throw ChannelMismatch("mosaiced image must be single-channel");
        if (image.height() % 2 != 0 || image.width() % 2 != 0)
            throw DimensionMismatch("mosaiced image dimensions must be even");
    }

    int height() const { return image.height(); }
    int width() const { return image.width(); }
};

} // namespace pfa

#endif

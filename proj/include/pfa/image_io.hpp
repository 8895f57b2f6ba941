#ifndef PFA_IMAGE_IO_HPP
#define PFA_IMAGE_IO_HPP

#include <string>

#include "pfa/image.hpp"

namespace pfa {

/// Binary PGM (P5), 8- or 16-bit, big-endian sample order. Values are
/// scaled into [0,1] by the header maxval; pass maxval_out to recover the
/// original quantization for a byte-identical re-write.
PlanarImage read_pgm(const std::string& path, int* maxval_out = nullptr);

/// Quantizes to round(v * maxval). maxval > 255 selects 16-bit samples.
void write_pgm(const PlanarImage& image, const std::string& path, int maxval = 255);

/// PFM, "Pf" (1 channel) or "PF" (3 channels). A negative scale marks
/// little-endian payload; rows are stored bottom-to-top and flipped to this
/// library's top-down convention on read. The scale magnitude is not
/// applied to samples, so float32 payloads round-trip bit-exactly.
PlanarImage read_pfm(const std::string& path);

/// Writes scale -1.0 (little-endian). Only 1- or 3-channel images are
/// representable; anything else throws ChannelMismatch.
void write_pfm(const PlanarImage& image, const std::string& path);

/// Dispatch on extension: .pgm / .pfm.
PlanarImage read_image(const std::string& path);

} // namespace pfa

#endif

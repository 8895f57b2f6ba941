#ifndef PFA_WEIGHTS_IO_HPP
#define PFA_WEIGHTS_IO_HPP

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace pfa {

/// One named float32 array. rank 0 (no dims) is a scalar holding one value.
struct WeightEntry {
    std::vector<uint32_t> dims;
    std::vector<float> data;

    size_t expected_count() const {
        size_t n = 1;
        for (uint32_t d : dims) n *= d;
        return n;
    }
};

/// Sorted by name, which is also the on-disk entry order.
using NamedWeights = std::map<std::string, WeightEntry>;

/// "PFADN001" container. Per entry: u16 name length, UTF-8 name, u8 rank,
/// rank x u32 dims, row-major float32 payload. All integers little-endian.
/// Entries are written in lexicographic name order and the loader rejects
/// files that violate it (which also catches duplicates).
void save_weights(const NamedWeights& weights, const std::string& path);
NamedWeights load_weights(const std::string& path);

} // namespace pfa

#endif

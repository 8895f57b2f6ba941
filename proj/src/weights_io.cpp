#include "pfa/weights_io.hpp"

#include <bit>
#include <cstring>
#include <fstream>
#include <limits>

#include "pfa/errors.hpp"

namespace pfa {

namespace {

constexpr char kMagic[8] = {'P', 'F', 'A', 'D', 'N', '0', '0', '1'};
constexpr bool host_le = std::endian::native == std::endian::little;

template <typename T>
void put_le(std::ostream& out, T v) {
    unsigned char buf[sizeof(T)];
    for (size_t i = 0; i < sizeof(T); ++i) buf[i] = static_cast<unsigned char>((v >> (8 * i)) & 0xFF);
    out.write(reinterpret_cast<const char*>(buf), sizeof(T));
}

template <typename T>
bool get_le(std::istream& in, T& v) {
    unsigned char buf[sizeof(T)];
    in.read(reinterpret_cast<char*>(buf), sizeof(T));
    if (static_cast<size_t>(in.gcount()) != sizeof(T)) return false;
    v = 0;
    for (size_t i = 0; i < sizeof(T); ++i) v |= static_cast<T>(buf[i]) << (8 * i);
    return true;
}

} // namespace

void save_weights(const NamedWeights& weights, const std::string& path) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw IoError("cannot open " + path + " for writing");
    out.write(kMagic, 8);

    // std::map iteration is already lexicographic
    for (const auto& [name, entry] : weights) {
        if (name.empty() || name.size() > std::numeric_limits<uint16_t>::max())
            throw DomainError("weight entry name length out of range: '" + name + "'");
        if (entry.dims.size() > 255) throw DomainError("weight entry rank > 255");
        if (entry.data.size() != entry.expected_count())
            throw DimensionMismatch("payload of '" + name + "' does not match dims");

        put_le<uint16_t>(out, static_cast<uint16_t>(name.size()));
        out.write(name.data(), static_cast<std::streamsize>(name.size()));
        out.put(static_cast<char>(entry.dims.size()));
        for (uint32_t d : entry.dims) put_le<uint32_t>(out, d);

        if (host_le) {
            out.write(reinterpret_cast<const char*>(entry.data.data()),
                      static_cast<std::streamsize>(entry.data.size() * 4));
        } else {
            for (float f : entry.data) {
                uint32_t u;
                std::memcpy(&u, &f, 4);
                put_le<uint32_t>(out, u);
            }
        }
    }
    if (!out) throw IoError("short write to " + path);
}

NamedWeights load_weights(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open " + path);

    char magic[8];
    in.read(magic, 8);
    if (in.gcount() != 8 || std::memcmp(magic, kMagic, 8) != 0)
        throw UnsupportedFormat("not a PFADN001 container: " + path);

    NamedWeights weights;
    std::string prev_name;
    for (;;) {
        uint16_t name_len;
        if (!get_le<uint16_t>(in, name_len)) {
            if (in.gcount() == 0) break; // clean EOF between entries
            throw TrailingBytes("trailing bytes at end of " + path);
        }
        std::string name(name_len, '\0');
        in.read(name.data(), name_len);
        if (static_cast<size_t>(in.gcount()) != name_len)
            throw FormatError("truncated entry name in " + path);

        if (!weights.empty()) {
            if (name == prev_name) throw FormatError("duplicate entry '" + name + "' in " + path);
            if (name < prev_name) throw FormatError("entries not sorted at '" + name + "' in " + path);
        }
        prev_name = name;

        int rank = in.get();
        if (rank == EOF) throw FormatError("truncated entry rank in " + path);

        WeightEntry entry;
        entry.dims.resize(static_cast<size_t>(rank));
        for (uint32_t& d : entry.dims)
            if (!get_le<uint32_t>(in, d)) throw FormatError("truncated dims in " + path);

        const size_t count = entry.expected_count();
        entry.data.resize(count);
        in.read(reinterpret_cast<char*>(entry.data.data()), static_cast<std::streamsize>(count * 4));
        if (static_cast<size_t>(in.gcount()) != count * 4)
            throw FormatError("payload size mismatch for '" + name + "' in " + path);
        if (!host_le) {
            for (float& f : entry.data) {
                uint32_t u;
                std::memcpy(&u, &f, 4);
                u = __builtin_bswap32(u);
                std::memcpy(&f, &u, 4);
            }
        }
        weights.emplace(std::move(name), std::move(entry));
    }
    return weights;
}

} // namespace pfa

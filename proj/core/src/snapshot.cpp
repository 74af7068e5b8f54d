#include "apriori/snapshot.hpp"

#include <cstdint>
#include <cstring>
#include <fstream>
#include <stdexcept>

namespace apriori {

namespace {
constexpr char kMagic[8] = {'A', 'P', 'R', 'S', 'N', 'P', '0', '1'};
}

void save_snapshot(const SpectralField& f, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open for writing: " + path);
    out.write(kMagic, sizeof(kMagic));
    std::int32_t header[4] = {static_cast<std::int32_t>(f.grid().dims()),
                              static_cast<std::int32_t>(f.grid().n()),
                              static_cast<std::int32_t>(f.components()),
                              static_cast<std::int32_t>(f.zero_mean() ? 1 : 0)};
    out.write(reinterpret_cast<const char*>(header), sizeof(header));
    for (int c = 0; c < f.components(); ++c) {
        const auto& fc = f.coef(c);
        out.write(reinterpret_cast<const char*>(fc.data()),
                  static_cast<std::streamsize>(fc.size() * sizeof(fc[0])));
    }
    if (!out) throw std::runtime_error("write failed: " + path);
}

SpectralField load_snapshot(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open: " + path);
    char magic[8];
    in.read(magic, sizeof(magic));
    if (!in || std::memcmp(magic, kMagic, sizeof(kMagic)) != 0)
        throw std::runtime_error("not a snapshot file: " + path);
    std::int32_t header[4];
    in.read(reinterpret_cast<char*>(header), sizeof(header));
    if (!in) throw std::runtime_error("truncated snapshot header: " + path);
    Grid grid(header[0], header[1]);
    SpectralField f(grid, header[2]);
    for (int c = 0; c < f.components(); ++c) {
        auto& fc = f.coef(c);
        in.read(reinterpret_cast<char*>(fc.data()),
                static_cast<std::streamsize>(fc.size() * sizeof(fc[0])));
        if (!in) throw std::runtime_error("truncated snapshot data: " + path);
    }
    if (header[3]) f.make_zero_mean();
    f.refresh_zero_mean_flag();
    return f;
}

}  // namespace apriori

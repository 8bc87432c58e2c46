#include "wradon/grid.hpp"

#include <bit>
#include <cmath>
#include <cstdint>
#include <cstring>
#include <fstream>
#include <iomanip>
#include <nlohmann/json.hpp>

#include "wradon/errors.hpp"

namespace wradon {

void GridGeometry::validate() const {
    if (!(spacing > 0.0) || !std::isfinite(spacing)) throw InvalidArgument("grid: spacing must be > 0");
    for (int d : dims)
        if (d < 2) throw InvalidArgument("grid: every dimension must be >= 2");
}

GridGeometry GridGeometry::covering(const Box3& box, double h) {
    if (!(h > 0.0)) throw InvalidArgument("grid: spacing must be > 0");
    GridGeometry g;
    g.origin = box.lo;
    g.spacing = h;
    for (int a = 0; a < 3; ++a) {
        const double len = box.hi[a] - box.lo[a];
        g.dims[a] = std::max(2, static_cast<int>(std::ceil(len / h - 1e-9)) + 1);
    }
    return g;
}

bool ScalarGrid3::all_finite() const {
    for (double v : values)
        if (!std::isfinite(v)) return false;
    return true;
}

namespace {

std::filesystem::path with_suffix(const std::filesystem::path& base, const char* ext) {
    return std::filesystem::path(base.string() + ext);
}

}  // namespace

void write_grid(const ScalarGrid3& grid, const std::filesystem::path& base) {
    const auto& g = grid.geometry;
    nlohmann::ordered_json header;
    header["origin"] = {g.origin.x, g.origin.y, g.origin.z};
    header["spacing"] = g.spacing;
    header["dims"] = {g.dims[0], g.dims[1], g.dims[2]};
    header["index_order"] = "z-fastest";
    header["dtype"] = "float64-le";
    header["payload"] = with_suffix(base, ".bin").filename().string();
    {
        std::ofstream out(with_suffix(base, ".json"));
        if (!out) throw InvalidArgument("cannot write grid header " + with_suffix(base, ".json").string());
        out << header.dump(2) << '\n';
    }
    std::ofstream bin(with_suffix(base, ".bin"), std::ios::binary);
    if (!bin) throw InvalidArgument("cannot write grid payload " + with_suffix(base, ".bin").string());
    if constexpr (std::endian::native == std::endian::little) {
        bin.write(reinterpret_cast<const char*>(grid.values.data()),
                  static_cast<std::streamsize>(grid.values.size() * sizeof(double)));
    } else {
        for (double v : grid.values) {
            auto bits = std::bit_cast<std::uint64_t>(v);
            char bytes[8];
            for (int b = 0; b < 8; ++b) bytes[b] = static_cast<char>((bits >> (8 * b)) & 0xff);
            bin.write(bytes, 8);
        }
    }
}

ScalarGrid3 read_grid(const std::filesystem::path& base) {
    std::ifstream in(with_suffix(base, ".json"));
    if (!in) throw InvalidArgument("cannot read grid header " + with_suffix(base, ".json").string());
    nlohmann::json header;
    try {
        in >> header;
    } catch (const nlohmann::json::exception& e) {
        throw InvalidArgument(std::string("malformed grid header: ") + e.what());
    }
    if (header.value("index_order", "") != "z-fastest" || header.value("dtype", "") != "float64-le")
        throw InvalidArgument("grid header: unsupported index_order or dtype");
    GridGeometry g;
    const auto o = header.at("origin");
    g.origin = {o.at(0).get<double>(), o.at(1).get<double>(), o.at(2).get<double>()};
    g.spacing = header.at("spacing").get<double>();
    const auto d = header.at("dims");
    g.dims = {d.at(0).get<int>(), d.at(1).get<int>(), d.at(2).get<int>()};
    g.validate();

    ScalarGrid3 grid(g);
    std::ifstream bin(with_suffix(base, ".bin"), std::ios::binary | std::ios::ate);
    if (!bin) throw InvalidArgument("cannot read grid payload " + with_suffix(base, ".bin").string());
    const auto bytes = static_cast<std::size_t>(bin.tellg());
    if (bytes != g.size() * sizeof(double)) throw InvalidArgument("grid payload length does not match header dims");
    bin.seekg(0);
    std::vector<char> raw(bytes);
    bin.read(raw.data(), static_cast<std::streamsize>(bytes));
    for (std::size_t i = 0; i < g.size(); ++i) {
        std::uint64_t bits = 0;
        for (int b = 0; b < 8; ++b) bits |= static_cast<std::uint64_t>(static_cast<unsigned char>(raw[8 * i + b])) << (8 * b);
        grid.values[i] = std::bit_cast<double>(bits);
    }
    return grid;
}

void write_grid_csv(const ScalarGrid3& grid, const std::filesystem::path& path) {
    std::ofstream out(path);
    if (!out) throw InvalidArgument("cannot write " + path.string());
    out << std::setprecision(17);
    out << "i,j,k,x,y,z,value\n";
    const auto& g = grid.geometry;
    for (int i = 0; i < g.dims[0]; ++i)
        for (int j = 0; j < g.dims[1]; ++j)
            for (int k = 0; k < g.dims[2]; ++k) {
                const Vec3 p = g.node(i, j, k);
                out << i << ',' << j << ',' << k << ',' << p.x << ',' << p.y << ',' << p.z << ',' << grid.at(i, j, k)
                    << '\n';
            }
}

}  // namespace wradon

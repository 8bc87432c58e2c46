#include "wradon/point_cloud.hpp"

#include <fstream>
#include <iomanip>
#include <sstream>
#include <string>

#include "wradon/errors.hpp"

namespace wradon {

void write_point_cloud_csv(const BoundaryPointCloud& cloud, const std::filesystem::path& path) {
    std::ofstream out(path);
    if (!out) throw InvalidArgument("cannot open " + path.string() + " for writing");
    out << "x,y,z,jump_estimate\n" << std::setprecision(17);
    for (std::size_t i = 0; i < cloud.size(); ++i) {
        const Vec3& p = cloud.points[i];
        out << p.x << ',' << p.y << ',' << p.z << ',' << cloud.jump_estimates[i] << '\n';
    }
    if (!out) throw InvalidArgument("write failed: " + path.string());
}

BoundaryPointCloud read_point_cloud_csv(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw InvalidArgument("cannot open " + path.string());
    std::string line;
    if (!std::getline(in, line) || line.rfind("x,y,z,jump_estimate", 0) != 0)
        throw InvalidArgument(path.string() + ": expected header x,y,z,jump_estimate");
    BoundaryPointCloud cloud;
    std::size_t lineno = 1;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty()) continue;
        std::istringstream ss(line);
        double v[4];
        char sep = 0;
        bool ok = static_cast<bool>(ss >> v[0]);
        for (int c = 1; c < 4 && ok; ++c) ok = (ss >> sep) && sep == ',' && (ss >> v[c]);
        if (!ok) throw InvalidArgument(path.string() + ":" + std::to_string(lineno) + ": malformed row");
        cloud.points.push_back({v[0], v[1], v[2]});
        cloud.jump_estimates.push_back(v[3]);
    }
    return cloud;
}

}  // namespace wradon

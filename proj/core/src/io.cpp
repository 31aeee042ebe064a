#include "nlgs/io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <vector>

namespace nlgs {

std::string format_double(double v) {
    char buf[32];
    auto res = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, res.ptr);
}

void write_profile_csv(std::ostream& os, const Profile& u, bool with_header) {
    if (with_header) os << "# t,value\n";
    for (int j = 0; j < u.size(); ++j)
        os << format_double(u.grid.node(j)) << ',' << format_double(u.values[j]) << '\n';
}

void write_profile_csv(const std::string& path, const Profile& u, bool with_header) {
    std::ofstream os(path);
    if (!os) throw std::runtime_error("cannot open for writing: " + path);
    write_profile_csv(os, u, with_header);
}

Profile read_profile_csv(std::istream& is) {
    std::vector<double> t, v;
    std::string line;
    while (std::getline(is, line)) {
        if (line.empty() || line[0] == '#') continue;
        const auto comma = line.find(',');
        if (comma == std::string::npos) throw std::runtime_error("profile CSV: missing comma");
        t.push_back(std::stod(line.substr(0, comma)));
        v.push_back(std::stod(line.substr(comma + 1)));
    }
    if (t.size() < 2) throw std::runtime_error("profile CSV: need at least two rows");
    const int n = static_cast<int>(t.size());
    const double h = t[1] - t[0];
    const double L = -t[0];
    GridSpec grid(L, n);
    if (std::abs(grid.spacing() - h) > 1e-9 * std::abs(h))
        throw std::runtime_error("profile CSV: nodes are not a uniform symmetric grid");
    return Profile(grid, std::move(v));
}

Profile read_profile_csv_file(const std::string& path) {
    std::ifstream is(path);
    if (!is) throw std::runtime_error("cannot open: " + path);
    return read_profile_csv(is);
}

nlohmann::ordered_json profile_to_json(const Profile& u) {
    nlohmann::ordered_json j;
    j["grid"] = {{"L", u.grid.half_width}, {"N", u.grid.num_points}};
    j["values"] = u.values;
    return j;
}

Profile profile_from_json(const nlohmann::json& j) {
    GridSpec grid(j.at("grid").at("L").get<double>(), j.at("grid").at("N").get<int>());
    return Profile(grid, j.at("values").get<std::vector<double>>());
}

}  // namespace nlgs

#ifndef NLGS_IO_HPP
#define NLGS_IO_HPP

#include <iosfwd>
#include <string>

#include <json.hpp>

#include "nlgs/grid.hpp"

namespace nlgs {

// CSV: two columns "t,value", '.' decimal separator, full round-trip
// precision. No header row unless with_header is set, in which case the
// first line is "# t,value".
void write_profile_csv(std::ostream& os, const Profile& u, bool with_header = false);
void write_profile_csv(const std::string& path, const Profile& u, bool with_header = false);
Profile read_profile_csv(std::istream& is);
Profile read_profile_csv_file(const std::string& path);

// JSON record {"grid": {"L": ..., "N": ...}, "values": [...]}
nlohmann::ordered_json profile_to_json(const Profile& u);
Profile profile_from_json(const nlohmann::json& j);

std::string format_double(double v);  // shortest round-trip decimal form

}  // namespace nlgs

#endif

#include "pretop/io.hpp"

#include <fstream>
#include <sstream>

namespace pretop {

namespace {

Json parse_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw input_error("cannot open '" + path + "'");
    try {
        return Json::parse(in);
    } catch (const nlohmann::json::parse_error& e) {
        throw input_error("parse error in '" + path + "': " + e.what());
    }
}

} // namespace

ClosureSpace space_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("points") || !j.contains("closure"))
        throw input_error("space file must be an object with 'points' and 'closure'");
    std::vector<std::string> names;
    for (const auto& p : j.at("points")) names.push_back(p.get<std::string>());
    if (names.size() > static_cast<size_t>(kMaxPoints))
        throw resource_error("space file has more than " +
                             std::to_string(kMaxPoints) + " points");
    auto index = [&names](const std::string& n) -> int {
        for (size_t i = 0; i < names.size(); ++i)
            if (names[i] == n) return static_cast<int>(i);
        throw input_error("closure list mentions unknown point '" + n + "'");
    };
    std::vector<PointMask> closures(names.size(), 0);
    const Json& cl = j.at("closure");
    for (size_t i = 0; i < names.size(); ++i) {
        if (!cl.contains(names[i]))
            throw input_error("missing closure list for point '" + names[i] + "'");
        PointMask m = 0;
        for (const auto& q : cl.at(names[i]))
            m |= PointMask{1} << index(q.get<std::string>());
        if (!((m >> i) & 1u))
            throw input_error("closure of '" + names[i] +
                              "' does not contain the point itself");
        closures[i] = m;
    }
    for (const auto& [key, value] : cl.items()) {
        (void)value;
        index(key); // reject closure entries for unknown points
    }
    return ClosureSpace(std::move(names), std::move(closures));
}

Json space_to_json(const ClosureSpace& space) {
    Json j;
    j["points"] = space.point_names();
    Json cl = Json::object();
    for (int x = 0; x < space.size(); ++x)
        cl[space.name_of(x)] = mask_to_names(space.point_closure(x), space);
    j["closure"] = cl;
    return j;
}

ClosureSpace load_space(const std::string& path) {
    return space_from_json(parse_file(path));
}

void save_space(const ClosureSpace& space, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw input_error("cannot write '" + path + "'");
    out << space_to_json(space).dump(2) << "\n";
}

Cover cover_from_json(const Json& j, const ClosureSpace& space) {
    if (!j.is_object() || !j.contains("parts"))
        throw input_error("cover file must be an object with 'parts'");
    Cover cover{space, {}};
    for (const auto& part : j.at("parts")) {
        PointMask m = 0;
        for (const auto& p : part) m |= PointMask{1} << space.index_of(p.get<std::string>());
        cover.parts.push_back(m);
    }
    return cover;
}

Json cover_to_json(const Cover& cover) {
    Json parts = Json::array();
    for (PointMask part : cover.parts) parts.push_back(mask_to_names(part, cover.space));
    return Json{{"parts", parts}};
}

Cover load_cover(const std::string& path, const ClosureSpace& space) {
    return cover_from_json(parse_file(path), space);
}

SpaceMap map_from_json(const Json& j, const ClosureSpace& source,
                       const ClosureSpace& target) {
    if (!j.is_object() || !j.contains("assignment"))
        throw input_error("map file must be an object with 'assignment'");
    const Json& a = j.at("assignment");
    std::vector<int> assignment;
    for (int x = 0; x < source.size(); ++x) {
        if (!a.contains(source.name_of(x)))
            throw input_error("map assignment missing source point '" +
                              source.name_of(x) + "'");
        assignment.push_back(target.index_of(a.at(source.name_of(x)).get<std::string>()));
    }
    return SpaceMap(source, target, std::move(assignment));
}

Json map_to_json(const SpaceMap& map) {
    Json a = Json::object();
    for (int x = 0; x < map.source.size(); ++x)
        a[map.source.name_of(x)] = map.target.name_of(map(x));
    return Json{{"assignment", a}};
}

SpaceMap load_map(const std::string& path, const ClosureSpace& source,
                  const ClosureSpace& target) {
    return map_from_json(parse_file(path), source, target);
}

PointMask parse_point_list(const std::string& list, const ClosureSpace& space) {
    PointMask m = 0;
    std::stringstream ss(list);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) continue;
        m |= PointMask{1} << space.index_of(item);
    }
    return m;
}

std::vector<std::string> mask_to_names(PointMask mask, const ClosureSpace& space) {
    std::vector<std::string> out;
    for (int p : mask_to_points(mask)) out.push_back(space.name_of(p));
    return out;
}

} // namespace pretop

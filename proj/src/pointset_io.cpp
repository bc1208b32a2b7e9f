#include "ratset/pointset_io.hpp"

#include <json.hpp>

#include <fstream>

namespace ratset {

using nlohmann::json;

PointSet read_point_set(std::istream& in) {
    json j;
    try {
        in >> j;
    } catch (const json::parse_error& e) {
        throw std::invalid_argument(std::string("point set: invalid JSON: ") +
                                    e.what());
    }
    if (!j.is_object() || !j.contains("dim") || !j.contains("points"))
        throw std::invalid_argument(
            "point set: expected an object with \"dim\" and \"points\"");
    if (!j["dim"].is_number_integer() || j["dim"].get<long>() < 1)
        throw std::invalid_argument("point set: \"dim\" must be a positive integer");
    const auto dim = j["dim"].get<std::size_t>();

    PointSet::Meta meta;
    if (j.contains("meta")) {
        if (!j["meta"].is_object())
            throw std::invalid_argument("point set: \"meta\" must be an object");
        for (const auto& [key, value] : j["meta"].items()) {
            if (!value.is_string())
                throw std::invalid_argument("point set: meta value for \"" + key +
                                            "\" must be a string");
            meta[key] = value.get<std::string>();
        }
    }

    if (!j["points"].is_array())
        throw std::invalid_argument("point set: \"points\" must be an array");
    std::vector<QPoint> points;
    points.reserve(j["points"].size());
    for (std::size_t row = 0; row < j["points"].size(); ++row) {
        const json& jrow = j["points"][row];
        if (!jrow.is_array() || jrow.size() != dim)
            throw std::invalid_argument("point set: row " + std::to_string(row) +
                                        " must be an array of " +
                                        std::to_string(dim) + " rational strings");
        std::vector<Rat> coords;
        coords.reserve(dim);
        for (std::size_t col = 0; col < dim; ++col) {
            const json& cell = jrow[col];
            if (!cell.is_string())
                throw std::invalid_argument(
                    "point set: row " + std::to_string(row) + ", column " +
                    std::to_string(col) + ": rationals must be strings");
            try {
                coords.push_back(Rat::parse(cell.get<std::string>()));
            } catch (const std::invalid_argument& e) {
                throw std::invalid_argument("point set: row " +
                                            std::to_string(row) + ", column " +
                                            std::to_string(col) + ": " + e.what());
            }
        }
        points.push_back(QPoint(std::move(coords)));
    }
    return PointSet(dim, std::move(points), std::move(meta));
}

PointSet read_point_set_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open '" + path + "' for reading");
    return read_point_set(in);
}

std::string point_set_to_json(const PointSet& s) {
    json j;
    j["dim"] = s.dim();
    json meta = json::object();
    for (const auto& [key, value] : s.meta()) meta[key] = value;
    j["meta"] = std::move(meta);
    json rows = json::array();
    for (const QPoint& p : s) {
        json row = json::array();
        for (const Rat& c : p.coords()) row.push_back(c.to_string());
        rows.push_back(std::move(row));
    }
    j["points"] = std::move(rows);
    return j.dump(1) + "\n";
}

void write_point_set(const PointSet& s, std::ostream& out) {
    out << point_set_to_json(s);
}

void write_point_set_file(const PointSet& s, const std::string& path) {
    std::ofstream out(path, std::ios::trunc);
    if (!out) throw std::invalid_argument("cannot open '" + path + "' for writing");
    write_point_set(s, out);
}

}  // namespace ratset

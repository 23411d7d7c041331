#include "tropifacet/instance.hpp"

#include <json.hpp>

#include "tropifacet/series_text.hpp"

namespace tropifacet {

namespace {

using nlohmann::ordered_json;

std::string coords_path(const char* field, size_t r, size_t i) {
    return std::string(field) + "[" + std::to_string(r) + "][" + std::to_string(i) + "]";
}

Rat rational_field(const ordered_json& v, const std::string& path) {
    try {
        if (v.is_string()) return parse_rational(v.get<std::string>());
        if (v.is_number_integer()) return Rat(v.get<long long>());
    } catch (const ValidationError& e) {
        throw ValidationError(path + ": " + e.what());
    }
    throw ValidationError(path + ": expected a rational string or integer");
}

}  // namespace

PolytopeRat InstanceFile::polytope() const {
    std::vector<PointRat> pts;
    pts.reserve(generators.size());
    for (const auto& row : generators) pts.push_back(PointRat(row));
    return PolytopeRat(std::move(pts));
}

InstanceFile parse_instance(const std::string& json_text) {
    ordered_json doc;
    try {
        doc = ordered_json::parse(json_text);
    } catch (const nlohmann::json::exception& e) {
        throw ValidationError(std::string("invalid JSON: ") + e.what());
    }
    if (!doc.is_object()) throw ValidationError("instance must be a JSON object");
    if (doc.contains("schema") && (!doc["schema"].is_number_integer() || doc["schema"] != 1))
        throw ValidationError("schema: only version 1 is supported");

    InstanceFile inst;
    if (!doc.contains("dimension") || !doc["dimension"].is_number_integer())
        throw ValidationError("dimension: expected an integer");
    inst.dimension = doc["dimension"].get<int>();
    if (inst.dimension < 2) throw ValidationError("dimension: must be at least 2");

    if (!doc.contains("generators") || !doc["generators"].is_array() || doc["generators"].empty())
        throw ValidationError("generators: expected a non-empty array");
    for (size_t r = 0; r < doc["generators"].size(); ++r) {
        const auto& row = doc["generators"][r];
        if (!row.is_array() || row.size() != static_cast<size_t>(inst.dimension))
            throw ValidationError("generators[" + std::to_string(r) + "]: expected " +
                                  std::to_string(inst.dimension) + " coordinates");
        std::vector<Rat> coords;
        coords.reserve(row.size());
        for (size_t i = 0; i < row.size(); ++i)
            coords.push_back(rational_field(row[i], coords_path("generators", r, i)));
        inst.generators.push_back(std::move(coords));
    }

    if (doc.contains("lift")) {
        const auto& lift = doc["lift"];
        if (!lift.is_array() || lift.size() != inst.generators.size())
            throw ValidationError("lift: expected one series row per generator");
        std::vector<SeriesVector<Rat>> rows;
        for (size_t r = 0; r < lift.size(); ++r) {
            const auto& row = lift[r];
            if (!row.is_array() || row.size() != static_cast<size_t>(inst.dimension))
                throw ValidationError("lift[" + std::to_string(r) + "]: expected " +
                                      std::to_string(inst.dimension) + " series");
            SeriesVector<Rat> series;
            for (size_t i = 0; i < row.size(); ++i) {
                if (!row[i].is_string())
                    throw ValidationError(coords_path("lift", r, i) + ": expected a series string");
                try {
                    series.push_back(parse_series<Rat>(row[i].get<std::string>()));
                } catch (const ValidationError& e) {
                    throw ValidationError(coords_path("lift", r, i) + ": " + e.what());
                }
            }
            rows.push_back(std::move(series));
        }
        inst.lift = std::move(rows);
    }

    if (doc.contains("seed")) {
        if (!doc["seed"].is_number_unsigned() && !doc["seed"].is_number_integer())
            throw ValidationError("seed: expected a non-negative integer");
        const auto s = doc["seed"].get<long long>();
        if (s < 0) throw ValidationError("seed: expected a non-negative integer");
        inst.seed = static_cast<std::uint64_t>(s);
    }

    inst.polytope();  // surfaces dimension/distinctness problems now
    return inst;
}

std::string serialize_instance(const InstanceFile& inst) {
    ordered_json doc;
    doc["schema"] = 1;
    doc["dimension"] = inst.dimension;
    doc["generators"] = ordered_json::array();
    for (const auto& row : inst.generators) {
        ordered_json r = ordered_json::array();
        for (const auto& c : row) r.push_back(to_string(c));
        doc["generators"].push_back(std::move(r));
    }
    if (inst.lift) {
        doc["lift"] = ordered_json::array();
        for (const auto& row : *inst.lift) {
            ordered_json r = ordered_json::array();
            for (const auto& s : row) r.push_back(render_series(s));
            doc["lift"].push_back(std::move(r));
        }
    }
    if (inst.seed) doc["seed"] = *inst.seed;
    return doc.dump(2) + "\n";
}

}  // namespace tropifacet

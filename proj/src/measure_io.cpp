#include "ctrans/measure_io.hpp"

#include <fstream>

#include "ctrans/parser.hpp"

namespace ctrans {

namespace {

json complex_to_json(Complex c) { return json::array({c.real(), c.imag()}); }

Complex complex_from_json(const json& j, const char* what) {
    if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number())
        throw SchemaError(std::string(what) + " must be a [re, im] number pair");
    return Complex{j[0].get<double>(), j[1].get<double>()};
}

double number_from_json(const json& j, const char* what) {
    if (!j.is_number()) throw SchemaError(std::string(what) + " must be a number");
    return j.get<double>();
}

std::string string_from_json(const json& j, const char* what) {
    if (!j.is_string()) throw SchemaError(std::string(what) + " must be a string");
    return j.get<std::string>();
}

const json& field(const json& j, const char* name) {
    auto it = j.find(name);
    if (it == j.end()) throw SchemaError(std::string("missing field '") + name + "'");
    return *it;
}

json component_to_json(const MeasureComponent& c) {
    json out;
    if (const auto* a = std::get_if<Atom>(&c)) {
        out["kind"] = "atom";
        out["location"] = complex_to_json(a->location);
        out["mass"] = complex_to_json(a->mass);
    } else if (const auto* cd = std::get_if<CircleDensity>(&c)) {
        out["kind"] = "circle_density";
        out["center"] = complex_to_json(cd->circle.center);
        out["radius"] = cd->circle.radius;
        out["orientation"] = cd->circle.orientation == Orientation::ccw ? "ccw" : "cw";
        out["density"] = cd->density.str();
        out["differential"] = cd->differential == Differential::dt ? "dt" : "dw";
    } else {
        const auto* sd = std::get_if<SegmentDensity>(&c);
        out["kind"] = "segment_density";
        out["a"] = complex_to_json(sd->segment.a);
        out["b"] = complex_to_json(sd->segment.b);
        out["density"] = sd->density.str();
    }
    return out;
}

MeasureComponent component_from_json(const json& j) {
    if (!j.is_object()) throw SchemaError("component must be an object");
    const std::string kind = string_from_json(field(j, "kind"), "kind");
    if (kind == "atom") {
        return Atom{complex_from_json(field(j, "location"), "location"),
                    complex_from_json(field(j, "mass"), "mass")};
    }
    if (kind == "circle_density") {
        const Complex center = complex_from_json(field(j, "center"), "center");
        const double radius = number_from_json(field(j, "radius"), "radius");
        const std::string orient = string_from_json(field(j, "orientation"), "orientation");
        if (orient != "ccw" && orient != "cw")
            throw SchemaError("orientation must be \"ccw\" or \"cw\"");
        const std::string diff = string_from_json(field(j, "differential"), "differential");
        if (diff != "dt" && diff != "dw")
            throw SchemaError("differential must be \"dt\" or \"dw\"");
        if (!(radius > 0.0)) throw SchemaError("radius must be positive");
        return CircleDensity{
            Circle{center, radius, orient == "ccw" ? Orientation::ccw : Orientation::cw},
            parse_density(string_from_json(field(j, "density"), "density")),
            diff == "dt" ? Differential::dt : Differential::dw};
    }
    if (kind == "segment_density") {
        const Complex a = complex_from_json(field(j, "a"), "a");
        const Complex b = complex_from_json(field(j, "b"), "b");
        if (a == b) throw SchemaError("segment endpoints must differ");
        return SegmentDensity{Segment{a, b},
                              parse_density(string_from_json(field(j, "density"), "density"))};
    }
    throw SchemaError("unknown component kind '" + kind + "'");
}

} // namespace

json measure_to_json(const MeasureSpec& m) {
    json out;
    out["name"] = m.name;
    out["components"] = json::array();
    for (const MeasureComponent& c : m.components)
        out["components"].push_back(component_to_json(c));
    out["requires"] = m.requirements();
    return out;
}

MeasureSpec measure_from_json(const json& doc) {
    if (!doc.is_object()) throw SchemaError("measure document must be an object");
    MeasureSpec m;
    m.name = string_from_json(field(doc, "name"), "name");
    if (m.name.empty()) throw SchemaError("name must be non-empty");
    const json& comps = field(doc, "components");
    if (!comps.is_array()) throw SchemaError("components must be an array");
    for (const json& c : comps) m.components.push_back(component_from_json(c));
    if (auto it = doc.find("requires"); it != doc.end()) {
        if (!it->is_array()) throw SchemaError("requires must be an array of names");
        // The field is advisory; actual requirements are recomputed from the
        // densities. Validate the declared list for typos all the same.
        const auto actual = m.requirements();
        for (const json& r : *it) {
            const std::string name = string_from_json(r, "requires entry");
            if (std::find(actual.begin(), actual.end(), name) == actual.end())
                throw SchemaError("declared requirement '" + name +
                                  "' is not referenced by any density");
        }
    }
    validate(m);
    return m;
}

namespace {
void collect_bundle(const MeasureSpec& m,
                    std::vector<std::shared_ptr<const MeasureSpec>>& deps) {
    std::vector<std::shared_ptr<const MeasureSpec>> direct;
    for (const MeasureComponent& c : m.components) {
        if (const auto* cd = std::get_if<CircleDensity>(&c)) cd->density.collect_measures(direct);
        else if (const auto* sd = std::get_if<SegmentDensity>(&c))
            sd->density.collect_measures(direct);
    }
    for (const auto& d : direct) {
        if (std::find(deps.begin(), deps.end(), d) != deps.end()) continue;
        collect_bundle(*d, deps); // dependencies of the dependency come first
        deps.push_back(d);
    }
}
} // namespace

json bundle_to_json(const MeasureSpec& main) {
    std::vector<std::shared_ptr<const MeasureSpec>> deps;
    collect_bundle(main, deps);
    if (deps.empty()) return measure_to_json(main);
    json arr = json::array();
    for (const auto& d : deps) arr.push_back(measure_to_json(*d));
    arr.push_back(measure_to_json(main));
    return arr;
}

LoadedBundle bundle_from_json(const json& doc) {
    std::vector<MeasureSpec> specs;
    if (doc.is_array()) {
        if (doc.empty()) throw SchemaError("empty measure bundle");
        for (const json& d : doc) specs.push_back(measure_from_json(d));
    } else {
        specs.push_back(measure_from_json(doc));
    }
    const std::string main_name = specs.back().name;
    LoadedBundle out;
    out.registry.add_all(std::move(specs));
    out.main = out.registry.require(main_name);
    return out;
}

json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open '" + path + "'");
    try {
        return json::parse(in);
    } catch (const json::exception& e) {
        throw SchemaError("JSON parse error in '" + path + "': " + e.what());
    }
}

void write_json_file(const json& doc, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw Error("cannot open '" + path + "' for writing");
    out << doc.dump(2) << '\n';
}

} // namespace ctrans

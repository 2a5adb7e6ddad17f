#include "ctrans/field_io.hpp"

#include <charconv>
#include <fstream>
#include <limits>
#include <ostream>

#include "ctrans/hardy.hpp"

namespace ctrans {

namespace {

double parse_field_double(std::string_view tok, const char* what) {
    double v = 0.0;
    const char* begin = tok.data();
    const char* end = tok.data() + tok.size();
    auto res = std::from_chars(begin, end, v);
    if (res.ec != std::errc{} || res.ptr != end)
        throw Error(std::string("malformed CSV ") + what + " value '" + std::string(tok) + "'");
    return v;
}

} // namespace

void write_field_csv(const TransformField& field, std::ostream& out) {
    out << "re_z,im_z,re_val,im_val,reliable\n";
    for (std::size_t i = 0; i < field.size(); ++i) {
        out << format_double(field.grid[i].real()) << ',' << format_double(field.grid[i].imag())
            << ',' << format_double(field.values[i].real()) << ','
            << format_double(field.values[i].imag()) << ',' << (field.reliable[i] ? 1 : 0)
            << '\n';
    }
}

void write_field_csv(const TransformField& field, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw Error("cannot open '" + path + "' for writing");
    write_field_csv(field, out);
}

TransformField read_field_csv(std::istream& in) {
    TransformField field;
    std::string line;
    if (!std::getline(in, line)) throw Error("empty CSV input");
    if (line != "re_z,im_z,re_val,im_val,reliable")
        throw Error("unexpected CSV header '" + line + "'");
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::string_view rest(line);
        double cols[4];
        for (int c = 0; c < 4; ++c) {
            const auto comma = rest.find(',');
            if (comma == std::string_view::npos) throw Error("short CSV row '" + line + "'");
            cols[c] = parse_field_double(rest.substr(0, comma), "field");
            rest.remove_prefix(comma + 1);
        }
        if (rest != "0" && rest != "1") throw Error("reliable flag must be 0 or 1");
        field.grid.emplace_back(cols[0], cols[1]);
        field.values.emplace_back(cols[2], cols[3]);
        field.reliable.push_back(rest == "1");
    }
    return field;
}

TransformField read_field_csv_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open '" + path + "'");
    return read_field_csv(in);
}

json field_to_json(const TransformField& field) {
    json out;
    out["points"] = json::array();
    for (std::size_t i = 0; i < field.size(); ++i) {
        out["points"].push_back({{"re_z", field.grid[i].real()},
                                 {"im_z", field.grid[i].imag()},
                                 {"re_val", field.values[i].real()},
                                 {"im_val", field.values[i].imag()},
                                 {"reliable", static_cast<bool>(field.reliable[i])}});
    }
    return out;
}

TransformField field_from_json(const json& doc) {
    TransformField field;
    if (!doc.is_object() || !doc.contains("points") || !doc["points"].is_array())
        throw SchemaError("field document must hold a 'points' array");
    // NaN values (unreliable points) serialize as JSON null.
    auto num = [](const json& v) {
        return v.is_null() ? std::numeric_limits<double>::quiet_NaN() : v.get<double>();
    };
    for (const json& p : doc["points"]) {
        field.grid.emplace_back(num(p.at("re_z")), num(p.at("im_z")));
        field.values.emplace_back(num(p.at("re_val")), num(p.at("im_val")));
        field.reliable.push_back(p.at("reliable").get<bool>());
    }
    return field;
}

json h1_report_to_json(const H1Report& rep) {
    json out;
    out["converged"] = rep.converged;
    out["eps"] = rep.eps_used;
    out["values"] = rep.values;
    if (rep.converged) {
        out["raw"] = rep.raw;
        out["normalized"] = rep.normalized;
        out["tail_eps"] = rep.tail_eps;
    }
    if (rep.node_cap_hit) out["node_cap_hit"] = true;
    return out;
}

json report_to_json(const VerificationReport& rep) {
    json out;
    out["scenario"] = rep.scenario;
    out["region"] = rep.region;
    out["max_error"] = rep.max_error;
    out["max_error_at"] = {rep.max_error_at.real(), rep.max_error_at.imag()};
    out["samples"] = rep.samples;
    out["reliable_samples"] = rep.reliable_samples;
    out["tolerance"] = rep.tolerance;
    out["pass"] = rep.pass;
    out["inconclusive"] = rep.inconclusive;
    return out;
}

} // namespace ctrans

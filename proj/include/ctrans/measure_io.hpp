#ifndef CTRANS_MEASURE_IO_HPP
#define CTRANS_MEASURE_IO_HPP

#include <json.hpp>

#include "ctrans/measure.hpp"

namespace ctrans {

using json = nlohmann::json;

// One measure-spec document:
//   {"name": ..., "components": [...], "requires": [names]}
// components:
//   {"kind":"atom","location":[re,im],"mass":[re,im]}
//   {"kind":"circle_density","center":[re,im],"radius":r,
//    "orientation":"ccw"|"cw","density":"expr","differential":"dt"|"dw"}
//   {"kind":"segment_density","a":[re,im],"b":[re,im],"density":"expr"}
// The schema file ships in docs/measure_spec.schema.json.
json measure_to_json(const MeasureSpec& m);

// Parses one document into an unlinked spec; throws SchemaError / ParseError.
MeasureSpec measure_from_json(const json& doc);

// Dependency-ordered array: every measure reachable from `main` through
// cauchy_of references, dependencies first, `main` last. A bundle with no
// dependencies is emitted as the bare document.
json bundle_to_json(const MeasureSpec& main);

struct LoadedBundle {
    MeasureRegistry registry;
    std::shared_ptr<const MeasureSpec> main; // the last document in the bundle
};

// Accepts a single document or an array of documents in any reference order.
LoadedBundle bundle_from_json(const json& doc);

json read_json_file(const std::string& path);
void write_json_file(const json& doc, const std::string& path);

} // namespace ctrans

#endif

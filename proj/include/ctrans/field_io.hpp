#ifndef CTRANS_FIELD_IO_HPP
#define CTRANS_FIELD_IO_HPP

#include <iosfwd>

#include "ctrans/measure_io.hpp"
#include "ctrans/transform.hpp"
#include "ctrans/verify.hpp"

namespace ctrans {

// Column layout is fixed: re_z,im_z,re_val,im_val,reliable.
void write_field_csv(const TransformField& field, std::ostream& out);
void write_field_csv(const TransformField& field, const std::string& path);
TransformField read_field_csv(std::istream& in);
TransformField read_field_csv_file(const std::string& path);

json field_to_json(const TransformField& field);
TransformField field_from_json(const json& doc);

json report_to_json(const VerificationReport& rep);

// A divergent norm emits no number: raw/normalized appear only when
// converged.
struct H1Report;
json h1_report_to_json(const H1Report& rep);

} // namespace ctrans

#endif

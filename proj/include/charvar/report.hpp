#pragma once

#include <string>
#include <vector>

#include "json.hpp"

#include "charvar/fox.hpp"
#include "charvar/pipelines.hpp"

namespace charvar {

using ojson = nlohmann::ordered_json;

inline constexpr const char* kReportSchema = "charvar-report/1";

ojson matrix_json(const IntMat& m);
ojson matrix_json(const RatMat& m);
ojson rats_json(const std::vector<Rat>& v);
ojson ints_json(const std::vector<Int>& v);
ojson bools_json(const std::vector<std::vector<bool>>& m);
ojson presentation_json(const Presentation& p);
ojson h1_json(const H1Report& r);
ojson avoidance_json(const AvoidanceCertificate& cert,
                     const std::vector<std::string>& gen_names);

ojson group_report_json(const Presentation& p, const AbelianizationData& ab);
ojson cover_json(const CoverReport& r);
ojson theorem1_json(const Theorem1Report& r);
ojson descent_json(const DescentReport& r);
ojson h1_report_json(const H1Report& r, const std::string& group_file);

std::string cover_markdown(const CoverReport& r);
std::string theorem1_markdown(const Theorem1Report& r);
std::string descent_markdown(const DescentReport& r);

// Generator name -> matrix of rational strings.
ojson rep_json(const Representation& r);
Representation rep_from_json(const ojson& j, const Presentation& group);

}  // namespace charvar

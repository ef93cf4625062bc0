// JSON and text renderings of pipeline results for the command-line tool.

#ifndef CASEWISE_TOOLS_REPORT_HPP
#define CASEWISE_TOOLS_REPORT_HPP

#include <string>
#include <vector>

#include <json.hpp>

#include "casewise/baselines.hpp"
#include "casewise/postulates.hpp"

namespace casewise::report {

using nlohmann::ordered_json;

ordered_json config(const GenConfig& cfg);
ordered_json node(const Saf& saf, std::size_t i);
ordered_json extension(const Saf& saf, const Extension& e);
ordered_json postulate(const PostulateReport& r);
ordered_json rule(const DefeasibleRule& r);
ordered_json ddl_extension(const DdlExtension& e);

std::string node_text(const Saf& saf, std::size_t i);
std::string extension_text(const Saf& saf, const Extension& e);
std::string postulate_text(const PostulateReport& r);
std::string ddl_extension_text(const DdlExtension& e);

}  // namespace casewise::report

#endif  // CASEWISE_TOOLS_REPORT_HPP

#ifndef POLYMUX_REPORT_HPP
#define POLYMUX_REPORT_HPP

#include <string>
#include <vector>

#include "json.hpp"

#include "polymux/exact.hpp"
#include "polymux/lattice.hpp"

namespace polymux {

using Json = nlohmann::json;

/**
 * Report documents are the CLI's only output format. Conventions:
 * input parameters stay native JSON integers; every computed count is a
 * decimal string (the values outgrow 64 bits); keys are emitted sorted,
 * so a document is byte-identical across runs.
 */

/// Exact values rendered as decimal strings.
Json json_integer(const Integer& x);
Json json_counts(const std::vector<Integer>& v);

/// Flag map keyed by dimension set, e.g. {"": "1", "0": "7", "0,2": "50"}.
Json json_flag_map(const FlagVector& fv);

Json json_check(const std::string& name, bool pass, const std::string& detail = "");

/**
 * Assembles {command, parameters, results, checks, status} with
 * status = "ok" iff every entry of checks has "pass": true.
 */
Json report_document(const std::string& command, Json parameters, Json results,
                     std::vector<Json> checks);

/// True iff the document's status field says "ok".
bool report_ok(const Json& doc);

/// "json": pretty-printed; "csv": one "path,value" line per scalar, keys dotted.
std::string render_report(const Json& doc, const std::string& format);

}  // namespace polymux

#endif

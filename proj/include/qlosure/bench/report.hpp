/* qlosure: dependence-driven qubit mapping and SWAP routing
 * Copyright (C) 2026
 *
 * Permission is hereby granted, free of charge, to any person
 * obtaining a copy of this software and associated documentation
 * files (the "Software"), to deal in the Software without
 * restriction, including without limitation the rights to use,
 * copy, modify, merge, publish, distribute, sublicense, and/or sell
 * copies of the Software, and to permit persons to whom the
 * Software is furnished to do so, subject to the following
 * conditions:
 *
 * The above copyright notice and this permission notice shall be
 * included in all copies or substantial portions of the Software.
 *
 * THE SOFTWARE IS PROVIDED "AS IS", WITHOUT WARRANTY OF ANY KIND,
 * EXPRESS OR IMPLIED, INCLUDING BUT NOT LIMITED TO THE WARRANTIES
 * OF MERCHANTABILITY, FITNESS FOR A PARTICULAR PURPOSE AND
 * NONINFRINGEMENT. IN NO EVENT SHALL THE AUTHORS OR COPYRIGHT
 * HOLDERS BE LIABLE FOR ANY CLAIM, DAMAGES OR OTHER LIABILITY,
 * WHETHER IN AN ACTION OF CONTRACT, TORT OR OTHERWISE, ARISING
 * FROM, OUT OF OR IN CONNECTION WITH THE SOFTWARE OR THE USE OR
 * OTHER DEALINGS IN THE SOFTWARE.
 */

/*!
  \file report.hpp
  \brief Per-run reports and RFC 4180 CSV helpers

  Reports come in two flavors: the JSON rows written by the sweep commands
  exclude wall-clock timings so that identical inputs produce byte-identical
  files, and an opt-in timing dump carries the per-phase durations.
*/

#pragma once

#include <cstdint>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

namespace qlosure
{

inline constexpr int report_schema_version = 1;

struct phase_ms
{
  double parse = 0.0;
  double lift = 0.0;
  double depgraph = 0.0;
  double closure = 0.0;
  double route = 0.0;
  double verify = 0.0;
};

struct run_report
{
  std::string circuit;
  std::string backend;
  std::string variant;
  uint64_t seed = 0;
  int32_t passes = 0;             //!< forward-backward initialization passes (0 = identity start)
  std::string status = "ok";      //!< ok | timeout | error: <message>
  bool verified = false;
  int64_t qops = 0;
  int64_t swaps = -1;
  int64_t depth_pre = -1;
  int64_t depth_post = -1;
  int64_t reference_depth = -1;   //!< known optimum when available, otherwise depth_pre
  double depth_factor = 0.0;
  std::string swap_depth_model = "unit";
  phase_ms elapsed_ms;

  bool usable() const { return status == "ok" && verified; }
};

inline nlohmann::json report_row_json( run_report const& r, bool include_timings )
{
  nlohmann::json j;
  j["circuit"] = r.circuit;
  j["backend"] = r.backend;
  j["variant"] = r.variant;
  j["seed"] = r.seed;
  j["passes"] = r.passes;
  j["status"] = r.status;
  j["verified"] = r.verified;
  j["qops"] = r.qops;
  j["swaps"] = r.swaps;
  j["depth_pre"] = r.depth_pre;
  j["depth_post"] = r.depth_post;
  j["reference_depth"] = r.reference_depth;
  j["depth_factor"] = r.depth_factor;
  j["swap_depth_model"] = r.swap_depth_model;
  if ( include_timings )
  {
    j["elapsed_ms"] = { { "parse", r.elapsed_ms.parse },   { "lift", r.elapsed_ms.lift },
                        { "depgraph", r.elapsed_ms.depgraph }, { "closure", r.elapsed_ms.closure },
                        { "route", r.elapsed_ms.route },   { "verify", r.elapsed_ms.verify } };
  }
  return j;
}

inline nlohmann::json reports_json( std::vector<run_report> const& rows, bool include_timings = false )
{
  nlohmann::json j;
  j["schema_version"] = report_schema_version;
  auto& arr = j["rows"] = nlohmann::json::array();
  for ( run_report const& r : rows )
    arr.push_back( report_row_json( r, include_timings ) );
  return j;
}

namespace csv
{

inline std::string escape( std::string const& field )
{
  if ( field.find_first_of( ",\"\r\n" ) == std::string::npos )
    return field;
  std::string out = "\"";
  for ( char c : field )
  {
    if ( c == '"' )
      out += '"';
    out += c;
  }
  out += '"';
  return out;
}

inline std::string line( std::vector<std::string> const& fields )
{
  std::string out;
  for ( size_t i = 0; i < fields.size(); ++i )
    out += ( i ? "," : "" ) + escape( fields[i] );
  out += "\r\n";
  return out;
}

inline std::string num( double v )
{
  std::ostringstream ss;
  ss.setf( std::ios::fixed );
  ss.precision( 6 );
  ss << v;
  return ss.str();
}

} // namespace csv

} // namespace qlosure

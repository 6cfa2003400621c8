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
  \file test_cli.cpp
  \brief Harness aggregation units plus subprocess tests of the CLI

  The subprocess tests need the built binary; its path comes from the
  QLOSURE_BIN environment variable that ctest sets.
*/

#include <qlosure/bench/harness.hpp>
#include <qlosure/bench/report.hpp>
#include <qlosure/qasm/writer.hpp>

#include "support/random_gen.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

using namespace qlosure;
namespace fs = std::filesystem;

namespace
{

std::string read_file( fs::path const& p )
{
  std::ifstream in( p, std::ios::binary );
  REQUIRE( in.good() );
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string bin_path()
{
  char const* bin = std::getenv( "QLOSURE_BIN" );
  return bin ? bin : "";
}

int run_cli( std::string const& args )
{
  std::string cmd = bin_path() + " " + args + " >/dev/null 2>/dev/null";
  int const rc = std::system( cmd.c_str() );
  return WEXITSTATUS( rc );
}

fs::path fresh_dir( std::string const& tag )
{
  fs::path dir = fs::temp_directory_path() / ( "qlosure_test_" + tag + "_" + std::to_string( ::getpid() ) );
  fs::remove_all( dir );
  fs::create_directories( dir );
  return dir;
}

} // namespace

TEST_CASE( "csv escaping follows rfc 4180" )
{
  CHECK( csv::escape( "plain" ) == "plain" );
  CHECK( csv::escape( "with,comma" ) == "\"with,comma\"" );
  CHECK( csv::escape( "with\"quote" ) == "\"with\"\"quote\"" );
  CHECK( csv::line( { "a", "b" } ) == "a,b\r\n" );
}

TEST_CASE( "summary buckets by pre-mapping depth" )
{
  CHECK( depth_bucket( 500 ) == "medium" );
  CHECK( depth_bucket( 600 ) == "large" );
  CHECK( depth_bucket( 550 ) == "other" );
  CHECK( depth_bucket( 3 ) == "medium" );
}

TEST_CASE( "sweep rows aggregate only verified runs" )
{
  std::vector<run_report> rows( 3 );
  rows[0].variant = "full";
  rows[0].status = "ok";
  rows[0].verified = true;
  rows[0].swaps = 10;
  rows[0].depth_pre = 100;
  rows[0].depth_post = 200;
  rows[0].depth_factor = 2.0;
  rows[1] = rows[0];
  rows[1].swaps = 20;
  rows[2] = rows[0];
  rows[2].status = "timeout";
  rows[2].verified = false;
  rows[2].swaps = 999999;

  std::string csv_text = summary_csv( rows, "line:4" );
  CHECK( csv_text.find( "medium,full,2,15.000000" ) != std::string::npos );
}

TEST_CASE( "sweep runs every variant on every circuit and is order-stable" )
{
  std::mt19937_64 rng( 51 );
  std::vector<bench_case> cases;
  for ( int i = 0; i < 3; ++i )
  {
    bench_case bc;
    bc.circ = testgen::random_two_qubit_circuit( rng, 6, 40 );
    bc.name = "c" + std::to_string( i );
    cases.push_back( std::move( bc ) );
  }
  coupling_graph g = gen_line( 6 );
  std::vector<variant_spec> variants = { { "full", score_variant::full, 0 },
                                         { "distance_only", score_variant::distance_only, 0 } };
  router_config cfg;
  cfg.seed = 3;

  auto serial = run_sweep( cases, g, "line:6", variants, cfg, 1 );
  auto parallel = run_sweep( cases, g, "line:6", variants, cfg, 4 );
  REQUIRE( serial.size() == 6 );
  REQUIRE( parallel.size() == 6 );
  for ( size_t i = 0; i < serial.size(); ++i )
  {
    CHECK( serial[i].circuit == parallel[i].circuit );
    CHECK( serial[i].variant == parallel[i].variant );
    CHECK( serial[i].swaps == parallel[i].swaps );
    CHECK( serial[i].depth_post == parallel[i].depth_post );
    CHECK( serial[i].verified );
  }
}

TEST_CASE( "report json schema is pinned" )
{
  run_report r;
  r.circuit = "c0";
  r.backend = "line:4";
  r.variant = "full";
  nlohmann::json j = reports_json( { r } );
  CHECK( j["schema_version"] == 1 );
  REQUIRE( j["rows"].size() == 1 );
  // golden key set of one row (timings intentionally absent by default)
  std::vector<std::string> keys;
  for ( auto it = j["rows"][0].begin(); it != j["rows"][0].end(); ++it )
    keys.push_back( it.key() );
  std::vector<std::string> const expected = { "backend",     "circuit",         "depth_factor", "depth_post",
                                              "depth_pre",   "passes",          "qops",         "reference_depth",
                                              "seed",        "status",          "swap_depth_model", "swaps",
                                              "variant",     "verified" };
  CHECK( keys == expected );

  nlohmann::json t = report_row_json( r, true );
  CHECK( t.contains( "elapsed_ms" ) );
}

TEST_CASE( "cli routes a compliant circuit with zero swaps", "[cli]" )
{
  if ( bin_path().empty() )
  {
    SKIP( "QLOSURE_BIN not set" );
  }
  fs::path dir = fresh_dir( "route0" );
  std::ofstream( dir / "ok.qasm" ) << "OPENQASM 2.0;\ninclude \"qelib1.inc\";\nqreg q[3];\ncx q[0],q[1];\ncx q[1],q[2];\n";
  int rc = run_cli( "route --input " + ( dir / "ok.qasm" ).string() + " --coupling line:3 --out " +
                    ( dir / "routed.qasm" ).string() + " --report " + ( dir / "report.json" ).string() );
  CHECK( rc == 0 );
  nlohmann::json report = nlohmann::json::parse( read_file( dir / "report.json" ) );
  CHECK( report["swaps"] == 0 );
  CHECK( report["verified"] == true );
  std::string routed = read_file( dir / "routed.qasm" );
  CHECK( routed.find( "initial_layout" ) != std::string::npos );
  fs::remove_all( dir );
}

TEST_CASE( "cli routes the worked trace end to end", "[cli]" )
{
  if ( bin_path().empty() )
  {
    SKIP( "QLOSURE_BIN not set" );
  }
  fs::path dir = fresh_dir( "route1" );
  std::ofstream( dir / "trace.qasm" )
      << "OPENQASM 2.0;\ninclude \"qelib1.inc\";\nqreg q[8];\ncx q[0],q[1];\ncx q[1],q[3];\ncx q[2],q[5];\ncx q[3],q[7];\n";
  int rc = run_cli( "route --input " + ( dir / "trace.qasm" ).string() + " --coupling line:8 --seed 7 --report " +
                    ( dir / "report.json" ).string() );
  CHECK( rc == 0 );
  nlohmann::json report = nlohmann::json::parse( read_file( dir / "report.json" ) );
  CHECK( report["verified"] == true );
  fs::remove_all( dir );
}

TEST_CASE( "cli exit codes: usage and run failures", "[cli]" )
{
  if ( bin_path().empty() )
  {
    SKIP( "QLOSURE_BIN not set" );
  }
  CHECK( run_cli( "route --no-such-flag" ) == 2 );
  CHECK( run_cli( "definitely-not-a-subcommand" ) == 2 );

  fs::path dir = fresh_dir( "badqasm" );
  std::ofstream( dir / "bad.qasm" ) << "OPENQASM 2.0;\nqreg q[2];\nccx q[0],q[1],q[1];\n";
  CHECK( run_cli( "route --input " + ( dir / "bad.qasm" ).string() + " --coupling line:2" ) == 1 );
  fs::remove_all( dir );
}

TEST_CASE( "generate then bench: deterministic byte-identical outputs", "[cli]" )
{
  if ( bin_path().empty() )
  {
    SKIP( "QLOSURE_BIN not set" );
  }
  fs::path suite = fresh_dir( "suite" );
  int rc = run_cli( "generate --graph grid8:3x3 --depths 12,24 --per-depth 2 --seed 5 --out-dir " + suite.string() );
  REQUIRE( rc == 0 );
  REQUIRE( fs::exists( suite / "manifest.json" ) );
  size_t qasm_files = 0;
  for ( auto const& e : fs::directory_iterator( suite ) )
    qasm_files += e.path().extension() == ".qasm";
  CHECK( qasm_files == 4 );

  // regenerating with the same seed is byte-identical
  fs::path suite2 = fresh_dir( "suite2" );
  run_cli( "generate --graph grid8:3x3 --depths 12,24 --per-depth 2 --seed 5 --out-dir " + suite2.string() );
  CHECK( read_file( suite / "manifest.json" ) == read_file( suite2 / "manifest.json" ) );

  fs::path out_a = fresh_dir( "bench_a" );
  fs::path out_b = fresh_dir( "bench_b" );
  std::string const bench_args = " --backend grid8:3x3 --variants full,distance_only --seed 11 --suite ";
  REQUIRE( run_cli( "bench" + bench_args + suite.string() + " --out-dir " + out_a.string() ) == 0 );
  REQUIRE( run_cli( "bench" + bench_args + suite.string() + " --out-dir " + out_b.string() ) == 0 );
  CHECK( read_file( out_a / "reports.json" ) == read_file( out_b / "reports.json" ) );
  CHECK( read_file( out_a / "summary.csv" ) == read_file( out_b / "summary.csv" ) );
  CHECK( read_file( out_a / "ratios.csv" ) == read_file( out_b / "ratios.csv" ) );

  // header golden lines pin the csv schema
  CHECK( read_file( out_a / "summary.csv" ).rfind( "schema_version,backend,bucket,variant,circuits,mean_swaps,mean_depth_post,mean_depth_factor\r\n", 0 ) == 0 );
  CHECK( read_file( out_a / "ratios.csv" ).rfind( "schema_version,backend,bucket,variant_num,variant_den,swap_ratio,depth_ratio\r\n", 0 ) == 0 );

  // --per-depth 0 emits a manifest and nothing else
  fs::path empty_suite = fresh_dir( "suite_empty" );
  REQUIRE( run_cli( "generate --graph grid8:3x3 --depths 12 --per-depth 0 --out-dir " + empty_suite.string() ) == 0 );
  CHECK( fs::exists( empty_suite / "manifest.json" ) );
  fs::path out_empty = fresh_dir( "bench_empty" );
  REQUIRE( run_cli( "bench" + bench_args + ( empty_suite / "manifest.json" ).string() + " --out-dir " + out_empty.string() ) == 0 );
  std::string const empty_summary = read_file( out_empty / "summary.csv" );
  CHECK( empty_summary.find( "\r\n" ) == empty_summary.size() - 2 ); // header only

  for ( auto const& d : { suite, suite2, out_a, out_b, empty_suite, out_empty } )
    fs::remove_all( d );
}

TEST_CASE( "ablation runs the four variants", "[cli]" )
{
  if ( bin_path().empty() )
  {
    SKIP( "QLOSURE_BIN not set" );
  }
  fs::path suite = fresh_dir( "abl_suite" );
  REQUIRE( run_cli( "generate --graph grid8:3x3 --depths 16 --per-depth 1 --seed 3 --out-dir " + suite.string() ) == 0 );
  fs::path out = fresh_dir( "abl_out" );
  REQUIRE( run_cli( "ablate --suite " + suite.string() + " --backend grid8:3x3 --seed 2 --out-dir " + out.string() ) == 0 );
  std::string const table = read_file( out / "ablation.csv" );
  CHECK( table.find( "distance_only" ) != std::string::npos );
  CHECK( table.find( "layer_adjusted" ) != std::string::npos );
  CHECK( table.find( "dependency_weighted" ) != std::string::npos );
  CHECK( table.find( "bidirectional" ) != std::string::npos );

  // subsets are honored
  fs::path out2 = fresh_dir( "abl_out2" );
  REQUIRE( run_cli( "ablate --suite " + suite.string() + " --backend grid8:3x3 --variants distance_only,dependency_weighted --out-dir " + out2.string() ) == 0 );
  std::string const table2 = read_file( out2 / "ablation.csv" );
  CHECK( table2.find( "bidirectional" ) == std::string::npos );

  for ( auto const& d : { suite, out, out2 } )
    fs::remove_all( d );
}

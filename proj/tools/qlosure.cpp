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
  \file qlosure.cpp
  \brief Command-line interface: route, bench, ablate, generate

  Exit codes: 0 on success, 1 on run failures (parse, validation or
  verification errors), 2 on usage errors.  Failures print a
  machine-readable JSON object on stderr.
*/

#include <qlosure/qlosure.hpp>

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <chrono>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

namespace fs = std::filesystem;
using nlohmann::json;

namespace
{

constexpr int exit_ok = 0;
constexpr int exit_run_failure = 1;
constexpr int exit_usage = 2;

void print_error( std::string const& kind, std::string const& message )
{
  json j;
  j["error"] = { { "kind", kind }, { "message", message } };
  std::cerr << j.dump() << "\n";
}

void write_file( fs::path const& path, std::string const& content )
{
  if ( path.has_parent_path() )
    fs::create_directories( path.parent_path() );
  std::ofstream out( path, std::ios::binary );
  if ( !out )
    throw std::runtime_error( "cannot write file: " + path.string() );
  out << content;
}

qlosure::score_variant parse_variant( std::string const& name )
{
  if ( name == "distance_only" )
    return qlosure::score_variant::distance_only;
  if ( name == "layer_adjusted" )
    return qlosure::score_variant::layer_adjusted;
  if ( name == "dependency_weighted" )
    return qlosure::score_variant::dependency_weighted;
  if ( name == "full" )
    return qlosure::score_variant::full;
  throw CLI::ValidationError( "variant", "unknown variant '" + name + "'" );
}

qlosure::swap_depth_model parse_depth_model( std::string const& name )
{
  if ( name == "unit" )
    return qlosure::swap_depth_model::unit;
  if ( name == "three_cx" )
    return qlosure::swap_depth_model::three_cx;
  throw CLI::ValidationError( "swap-depth-model", "unknown model '" + name + "'" );
}

std::string layout_comment( qlosure::route_result const& rr, std::string const& backend )
{
  auto vec_str = []( std::vector<int32_t> const& v ) {
    std::string s = "[";
    for ( size_t i = 0; i < v.size(); ++i )
      s += ( i ? "," : "" ) + std::to_string( v[i] );
    return s + "]";
  };
  std::ostringstream ss;
  ss << "backend: " << backend << "\n";
  ss << "initial_layout: " << vec_str( rr.initial_map.log_to_phys() ) << "\n";
  ss << "final_layout: " << vec_str( rr.final_map.log_to_phys() ) << "\n";
  ss << "swaps: " << rr.swap_count;
  return ss.str();
}

/*! Loads a suite: either a directory of .qasm files (with an optional
 * manifest.json carrying known optimal depths) or a manifest path whose
 * sibling .qasm files hold the circuits. */
std::vector<qlosure::bench_case> load_suite( std::string const& suite )
{
  fs::path path( suite );
  fs::path dir;
  fs::path manifest;
  if ( fs::is_directory( path ) )
  {
    dir = path;
    if ( fs::exists( dir / "manifest.json" ) )
      manifest = dir / "manifest.json";
  }
  else if ( path.extension() == ".json" )
  {
    manifest = path;
    dir = path.parent_path();
  }
  else
  {
    throw std::runtime_error( "suite must be a directory or a manifest.json: " + suite );
  }

  std::map<std::string, int64_t> reference;
  if ( !manifest.empty() )
  {
    std::ifstream in( manifest );
    json j = json::parse( in );
    for ( auto const& row : j.at( "circuits" ) )
      reference[row.at( "name" ).get<std::string>()] = row.at( "optimal_depth" ).get<int64_t>();
  }

  std::vector<fs::path> files;
  for ( auto const& entry : fs::directory_iterator( dir ) )
  {
    if ( entry.path().extension() == ".qasm" )
      files.push_back( entry.path() );
  }
  std::sort( files.begin(), files.end() );

  std::vector<qlosure::bench_case> cases;
  for ( fs::path const& f : files )
  {
    qlosure::bench_case bc;
    bc.circ = qlosure::parse_qasm_file( f.string() );
    bc.name = f.stem().string();
    bc.circ.name = bc.name;
    if ( auto it = reference.find( bc.name ); it != reference.end() )
      bc.reference_depth = it->second;
    cases.push_back( std::move( bc ) );
  }
  if ( cases.empty() && manifest.empty() )
    throw std::runtime_error( "suite contains no .qasm files: " + suite );
  return cases;
}

struct common_route_options
{
  uint64_t seed = 0;
  std::string variant = "full";
  int32_t window_constant = 0;
  double decay_increment = 0.001;
  int32_t stall_limit = 0;
  std::string swap_depth_model = "unit";
  bool omega_smoothing = false;
  bool decay_by_physical = false;
  bool window_affinity_filter = false;
  double timeout_sec = 1800.0;

  void attach( CLI::App* app )
  {
    app->add_option( "--seed", seed, "Seed for random tie-breaking" );
    app->add_option( "--variant", variant, "Score variant: distance_only, layer_adjusted, dependency_weighted, full" );
    app->add_option( "--window-constant", window_constant, "Look-ahead constant c (0 = max degree + 1)" );
    app->add_option( "--decay-increment", decay_increment, "Decay added per swap" );
    app->add_option( "--stall-limit", stall_limit, "Swaps without execution before forced routing (0 = 3*qubits)" );
    app->add_option( "--swap-depth-model", swap_depth_model, "Depth weight of a swap: unit or three_cx" );
    app->add_flag( "--omega-smoothing", omega_smoothing, "Score with weight+1 to avoid the all-zero degeneracy" );
    app->add_flag( "--decay-by-physical", decay_by_physical, "Index decay by physical slot instead of logical qubit" );
    app->add_flag( "--window-affinity-filter", window_affinity_filter, "Restrict the window to gates touching front-layer qubits" );
    app->add_option( "--timeout-sec", timeout_sec, "Per-circuit routing time limit in seconds (0 = none)" );
  }

  qlosure::router_config config() const
  {
    qlosure::router_config cfg;
    cfg.seed = seed;
    cfg.variant = parse_variant( variant );
    cfg.window_constant = window_constant;
    cfg.decay_increment = decay_increment;
    cfg.stall_limit = stall_limit;
    cfg.depth_model = parse_depth_model( swap_depth_model );
    cfg.omega_smoothing = omega_smoothing;
    cfg.decay_by_physical = decay_by_physical;
    cfg.window_affinity_filter = window_affinity_filter;
    cfg.timeout_sec = timeout_sec;
    return cfg;
  }
};

int cmd_route( std::string const& input, std::string const& coupling, common_route_options const& opts,
               int32_t passes, std::string const& out_qasm, std::string const& out_report,
               std::string const& macros_json, std::string const& dot_file, std::string const& distances_csv )
{
  using clock = std::chrono::steady_clock;
  auto ms_since = []( clock::time_point t ) {
    return std::chrono::duration<double, std::milli>( clock::now() - t ).count();
  };

  qlosure::coupling_graph graph = qlosure::resolve_backend( coupling );

  auto t = clock::now();
  qlosure::bench_case bc;
  bc.circ = qlosure::parse_qasm_file( input );
  bc.name = bc.circ.name;
  double const parse_ms = ms_since( t );

  if ( !macros_json.empty() )
    write_file( macros_json, qlosure::macros_to_json( qlosure::lift( bc.circ ) ).dump( 2 ) + "\n" );
  if ( !dot_file.empty() )
  {
    qlosure::dep_graph dg = qlosure::build_dep_graph( bc.circ );
    qlosure::transitive_weights( dg );
    write_file( dot_file, qlosure::to_dot( dg ) );
  }
  if ( !distances_csv.empty() )
  {
    std::ostringstream ss;
    qlosure::distance_matrix::apsp( graph ).dump_csv( ss );
    write_file( distances_csv, ss.str() );
  }

  qlosure::route_result rr;
  qlosure::run_report report = qlosure::run_single( bc, graph, coupling, opts.config(), passes, &rr );
  report.elapsed_ms.parse = parse_ms;

  if ( report.status != "ok" || !report.verified )
  {
    if ( report.status == "ok" )
    {
      qlosure::verification_report vr = qlosure::verify_routed( bc.circ, rr.routed, rr.initial_map, graph );
      print_error( "verification", qlosure::to_json( vr ).dump() );
    }
    else
    {
      print_error( report.status == "timeout" ? "timeout" : "route", report.status );
    }
    return exit_run_failure;
  }

  if ( !out_qasm.empty() )
    write_file( out_qasm, qlosure::emit_qasm( rr.routed, layout_comment( rr, coupling ) ) );
  if ( !out_report.empty() )
  {
    json j = qlosure::report_row_json( report, /*include_timings=*/true );
    j["verification"] = qlosure::to_json( qlosure::verification_report{} ); // verified above: ok, no violations
    write_file( out_report, j.dump( 2 ) + "\n" );
  }
  std::cout << "routed " << bc.name << ": swaps=" << report.swaps << " depth=" << report.depth_post
            << " (pre " << report.depth_pre << "), verified\n";
  return exit_ok;
}

int cmd_bench( std::string const& suite, std::string const& backend, std::vector<std::string> const& variant_names,
               common_route_options const& opts, int32_t passes, int32_t jobs, std::string const& out_dir,
               std::string const& timings_file )
{
  qlosure::coupling_graph graph = qlosure::resolve_backend( backend );
  std::vector<qlosure::bench_case> cases = load_suite( suite );

  std::vector<qlosure::variant_spec> variants;
  for ( std::string const& name : variant_names )
    variants.push_back( { name, parse_variant( name ), passes } );

  auto rows = qlosure::run_sweep( cases, graph, backend, variants, opts.config(), jobs );

  fs::path dir( out_dir );
  write_file( dir / "reports.json", qlosure::reports_json( rows ).dump( 2 ) + "\n" );
  write_file( dir / "summary.csv", qlosure::summary_csv( rows, backend ) );
  write_file( dir / "ratios.csv", qlosure::ratios_csv( rows, backend ) );
  if ( !timings_file.empty() )
    write_file( timings_file, qlosure::timings_csv( rows ) );

  int64_t failures = std::count_if( rows.begin(), rows.end(),
                                    []( qlosure::run_report const& r ) { return !r.usable(); } );
  std::cout << "bench: " << rows.size() << " runs, " << failures << " failures, reports in " << out_dir << "\n";
  return failures == 0 ? exit_ok : exit_run_failure;
}

int cmd_ablate( std::string const& suite, std::string const& backend, common_route_options const& opts,
                int32_t passes, int32_t jobs, std::string const& out_dir, std::string const& timings_file,
                std::vector<std::string> const& only )
{
  qlosure::coupling_graph graph = qlosure::resolve_backend( backend );
  std::vector<qlosure::bench_case> cases = load_suite( suite );

  std::vector<qlosure::variant_spec> variants = {
      { "distance_only", qlosure::score_variant::distance_only, 0 },
      { "layer_adjusted", qlosure::score_variant::layer_adjusted, 0 },
      { "dependency_weighted", qlosure::score_variant::dependency_weighted, 0 },
      { "bidirectional", qlosure::score_variant::full, passes > 0 ? passes : 1 },
  };
  if ( !only.empty() )
  {
    std::erase_if( variants, [&]( qlosure::variant_spec const& v ) {
      return std::find( only.begin(), only.end(), v.label ) == only.end();
    } );
    if ( variants.empty() )
      throw std::runtime_error( "no known variants selected" );
  }

  auto rows = qlosure::run_sweep( cases, graph, backend, variants, opts.config(), jobs );

  fs::path dir( out_dir );
  write_file( dir / "reports.json", qlosure::reports_json( rows ).dump( 2 ) + "\n" );
  write_file( dir / "ablation.csv", qlosure::ablation_csv( rows, backend ) );
  if ( !timings_file.empty() )
    write_file( timings_file, qlosure::timings_csv( rows ) );

  int64_t failures = std::count_if( rows.begin(), rows.end(),
                                    []( qlosure::run_report const& r ) { return !r.usable(); } );
  std::cout << "ablate: " << rows.size() << " runs, " << failures << " failures, reports in " << out_dir << "\n";
  return failures == 0 ? exit_ok : exit_run_failure;
}

int cmd_generate( std::string const& graph_spec, std::vector<int32_t> const& depths, int32_t per_depth,
                  uint64_t seed, double p1q, double p2q, std::string const& out_dir )
{
  qlosure::coupling_graph graph = qlosure::resolve_backend( graph_spec );
  auto suite = qlosure::make_suite( graph, depths, per_depth, seed, p1q, p2q );

  fs::path dir( out_dir );
  for ( auto const& entry : suite )
  {
    std::string header = "optimal_depth: " + std::to_string( entry.bench.optimal_depth ) +
                         "\nseed: " + std::to_string( entry.seed );
    write_file( dir / ( entry.name + ".qasm" ), qlosure::emit_qasm( entry.bench.scrambled, header ) );
  }
  write_file( dir / "manifest.json", qlosure::suite_manifest( graph, suite, seed, p1q, p2q ).dump( 2 ) + "\n" );
  std::cout << "generated " << suite.size() << " circuit(s) in " << out_dir << "\n";
  return exit_ok;
}

} // namespace

int main( int argc, char** argv )
{
  CLI::App app{ "qubit mapping and SWAP routing with transitive-dependence weights" };
  app.require_subcommand( 1 );

  // route
  auto* route_cmd = app.add_subcommand( "route", "Route one QASM circuit onto a backend" );
  std::string input, coupling, out_qasm, out_report, macros_json, dot_file, distances_csv;
  int32_t passes = 0;
  common_route_options route_opts;
  route_cmd->add_option( "--input", input, "Input OpenQASM 2.0 file" )->required();
  route_cmd->add_option( "--coupling", coupling, "Backend: line:N, grid8:RxC, sherbrooke, ankaa, sherbrooke2x, or a JSON file" )->required();
  route_cmd->add_option( "--passes", passes, "Forward-backward passes for the initial mapping (0 = identity)" );
  route_cmd->add_option( "--out", out_qasm, "Routed QASM output path" );
  route_cmd->add_option( "--report", out_report, "Run report JSON output path" );
  route_cmd->add_option( "--macros-json", macros_json, "Dump the lifted macro-gates as JSON" );
  route_cmd->add_option( "--dot", dot_file, "Dump the dependence DAG as Graphviz" );
  route_cmd->add_option( "--distances-csv", distances_csv, "Dump the device distance matrix as CSV" );
  route_opts.attach( route_cmd );

  // bench
  auto* bench_cmd = app.add_subcommand( "bench", "Run a benchmark sweep and write summary tables" );
  std::string suite, backend, out_dir = "bench_out", timings_file;
  std::vector<std::string> variant_names{ "full" };
  int32_t jobs = 1, bench_passes = 0;
  common_route_options bench_opts;
  bench_cmd->add_option( "--suite", suite, "Directory of .qasm files or a manifest.json" )->required();
  bench_cmd->add_option( "--backend", backend, "Backend specifier" )->required();
  bench_cmd->add_option( "--variants", variant_names, "Score variants to run" )->delimiter( ',' );
  bench_cmd->add_option( "--passes", bench_passes, "Forward-backward passes for every variant" );
  bench_cmd->add_option( "--jobs", jobs, "Parallel routing workers" );
  bench_cmd->add_option( "--out-dir", out_dir, "Output directory" );
  bench_cmd->add_option( "--timings", timings_file, "Write per-phase timings CSV (non-deterministic) to this path" );
  bench_opts.attach( bench_cmd );

  // ablate
  auto* ablate_cmd = app.add_subcommand( "ablate", "Compare the score variants against the distance-only baseline" );
  std::string ab_suite, ab_backend, ab_out_dir = "ablation_out", ab_timings;
  std::vector<std::string> ab_only;
  int32_t ab_jobs = 1, ab_passes = 1;
  common_route_options ablate_opts;
  ablate_cmd->add_option( "--suite", ab_suite, "Directory of .qasm files or a manifest.json" )->required();
  ablate_cmd->add_option( "--backend", ab_backend, "Backend specifier" )->required();
  ablate_cmd->add_option( "--passes", ab_passes, "Passes for the bidirectional variant" );
  ablate_cmd->add_option( "--jobs", ab_jobs, "Parallel routing workers" );
  ablate_cmd->add_option( "--out-dir", ab_out_dir, "Output directory" );
  ablate_cmd->add_option( "--variants", ab_only, "Subset of variants to run" )->delimiter( ',' );
  ablate_cmd->add_option( "--timings", ab_timings, "Write per-phase timings CSV to this path" );
  ablate_opts.attach( ablate_cmd );

  // generate
  auto* gen_cmd = app.add_subcommand( "generate", "Generate a benchmark suite with known optimal depth" );
  std::string gen_graph, gen_out_dir = "suite_out";
  std::vector<int32_t> gen_depths;
  int32_t gen_per_depth = 10;
  uint64_t gen_seed = 0;
  double gen_p1q = 0.479, gen_p2q = 0.271;
  gen_cmd->add_option( "--graph", gen_graph, "Generating backend specifier" )->required();
  gen_cmd->add_option( "--depths", gen_depths, "Target depths" )->delimiter( ',' )->required();
  gen_cmd->add_option( "--per-depth", gen_per_depth, "Circuits per depth" );
  gen_cmd->add_option( "--seed", gen_seed, "Suite seed" );
  gen_cmd->add_option( "--p1q", gen_p1q, "One-qubit fill density" );
  gen_cmd->add_option( "--p2q", gen_p2q, "Two-qubit matching density" );
  gen_cmd->add_option( "--out-dir", gen_out_dir, "Output directory" );

  try
  {
    app.parse( argc, argv );
  }
  catch ( CLI::CallForHelp const& e )
  {
    return app.exit( e );
  }
  catch ( CLI::ParseError const& e )
  {
    std::cerr << e.what() << "\n";
    std::cerr << "run with --help for usage\n";
    return exit_usage;
  }

  try
  {
    if ( route_cmd->parsed() )
      return cmd_route( input, coupling, route_opts, passes, out_qasm, out_report, macros_json, dot_file,
                        distances_csv );
    if ( bench_cmd->parsed() )
      return cmd_bench( suite, backend, variant_names, bench_opts, bench_passes, jobs, out_dir, timings_file );
    if ( ablate_cmd->parsed() )
      return cmd_ablate( ab_suite, ab_backend, ablate_opts, ab_passes, ab_jobs, ab_out_dir, ab_timings, ab_only );
    if ( gen_cmd->parsed() )
      return cmd_generate( gen_graph, gen_depths, gen_per_depth, gen_seed, gen_p1q, gen_p2q, gen_out_dir );
  }
  catch ( qlosure::parse_error const& e )
  {
    print_error( "parse", e.what() );
    return exit_run_failure;
  }
  catch ( CLI::ValidationError const& e )
  {
    std::cerr << e.what() << "\n";
    return exit_usage;
  }
  catch ( std::exception const& e )
  {
    print_error( "run", e.what() );
    return exit_run_failure;
  }
  return exit_usage;
}

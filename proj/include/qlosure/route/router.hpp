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
  \file router.hpp
  \brief The routing loop: schedule ready gates, insert best-scoring SWAPs

  Starting from an initial logical-to-physical assignment, the loop
  alternates two moves until all gates are scheduled: execute every front
  gate whose operands are adjacent on the device, or insert the SWAP that
  minimizes the layered cost function over the look-ahead window.  A stall
  fallback routes the oldest front gate along a shortest path if too many
  SWAPs pass without an execution, so the loop terminates on every
  connected device.
*/

#pragma once

#include "../circuit.hpp"
#include "../dep/depgraph.hpp"
#include "../dep/lookahead.hpp"
#include "../topology/coupling_graph.hpp"
#include "../topology/distance_matrix.hpp"
#include "../verify/metrics.hpp"
#include "mapping.hpp"
#include "score.hpp"

#include <chrono>
#include <cstdint>
#include <optional>
#include <random>
#include <set>
#include <stdexcept>
#include <vector>

namespace qlosure
{

struct router_config
{
  /*! \brief Look-ahead constant c in k = c * n_f; 0 selects twice
   * (max degree + 1), which must exceed the device's maximum degree. */
  int32_t window_constant = 0;
  /*! \brief Decay added to a qubit each time it is swapped. */
  double decay_increment = 0.001;
  /*! \brief Seed for random tie-breaking. */
  uint64_t seed = 0;
  score_variant variant = score_variant::full;
  /*! \brief Score with w + 1 instead of w.  On by default: gates with no
   * dependents otherwise vanish from the cost and strand the tail of a
   * circuit in random walks. */
  bool omega_smoothing = true;
  /*! \brief Consecutive swaps without an execution before the forced-path
   * fallback fires; 0 selects 8.  Generous budgets measurably hurt both
   * swap count and depth: once the cost surface has no descent direction,
   * more wandering does not find one. */
  int32_t stall_limit = 0;
  swap_depth_model depth_model = swap_depth_model::unit;
  /*! \brief Index the decay by physical slot instead of logical qubit. */
  bool decay_by_physical = false;
  /*! \brief Restrict the look-ahead window to gates touching front-layer
   * physical qubits instead of the plain topological prefix. */
  bool window_affinity_filter = false;
  /*! \brief Cooperative wall-clock limit in seconds; 0 disables. */
  double timeout_sec = 0.0;
};

class route_timeout_error : public std::runtime_error
{
public:
  explicit route_timeout_error( double seconds )
      : std::runtime_error( "routing exceeded the time limit of " + std::to_string( seconds ) + " s" )
  {
  }
};

struct route_phase_times
{
  double depgraph_ms = 0.0;
  double closure_ms = 0.0;
  double route_ms = 0.0;
};

struct route_result
{
  circuit routed;            //!< original gates on physical operands plus inserted swaps
  mapping initial_map;
  mapping final_map;
  int64_t swap_count = 0;    //!< inserted routing swaps
  int64_t depth = 0;         //!< routed depth under the configured swap model
  route_phase_times times;
};

/*! \brief Minimum-score candidate with seeded random tie-breaking. */
inline std::pair<int32_t, int32_t> select_swap( std::vector<std::pair<int32_t, int32_t>> const& candidates,
                                                score_state const& st, std::mt19937_64& rng )
{
  double best = m_score( candidates.front(), st );
  std::vector<size_t> ties{ 0 };
  for ( size_t i = 1; i < candidates.size(); ++i )
  {
    double const score = m_score( candidates[i], st );
    if ( score < best )
    {
      best = score;
      ties.assign( 1, i );
    }
    else if ( score == best )
    {
      ties.push_back( i );
    }
  }
  size_t const pick = ties.size() == 1 ? ties[0] : ties[rng() % ties.size()];
  return candidates[pick];
}

/*! \brief Routes a circuit onto a coupling graph.
 *
 * Requires the circuit to fit the device (|logical| <= |physical|).  The
 * returned circuit carries every original gate on physical operands, in an
 * order consistent with the original dependence order, with routing swaps
 * interleaved.  Single-qubit gates and measures are emitted as soon as
 * their per-qubit predecessors are; they never trigger swaps.
 */
inline route_result route( circuit const& c, coupling_graph const& graph, router_config const& cfg = {},
                           std::optional<mapping> initial = std::nullopt )
{
  using clock = std::chrono::steady_clock;
  auto const to_ms = []( clock::duration d ) {
    return std::chrono::duration<double, std::milli>( d ).count();
  };

  validate( c );
  if ( c.num_qubits > graph.num_qubits() )
    throw std::invalid_argument( "route: circuit needs " + std::to_string( c.num_qubits ) +
                                 " qubits but the device has " + std::to_string( graph.num_qubits() ) );
  int32_t const c_window = cfg.window_constant > 0 ? cfg.window_constant : 2 * ( graph.max_degree() + 1 );
  if ( cfg.variant != score_variant::distance_only && c_window <= graph.max_degree() )
    throw std::invalid_argument( "route: window constant must exceed the device's maximum degree" );
  int32_t const stall_limit = cfg.stall_limit > 0 ? cfg.stall_limit : 8;

  route_result res;
  res.initial_map = initial ? *initial : mapping::identity( graph.num_qubits() );
  if ( res.initial_map.size() != graph.num_qubits() )
    throw std::invalid_argument( "route: initial mapping size must equal the device size" );

  auto t0 = clock::now();
  distance_matrix const dist = distance_matrix::apsp( graph );
  dep_graph dg = build_dep_graph( c );
  auto t1 = clock::now();
  res.times.depgraph_ms = to_ms( t1 - t0 );
  transitive_weights( dg );
  auto t2 = clock::now();
  res.times.closure_ms = to_ms( t2 - t1 );

  mapping phi = res.initial_map;
  decay_vector decay( graph.num_qubits() );
  std::mt19937_64 rng( cfg.seed );

  res.routed.name = c.name;
  res.routed.num_qubits = graph.num_qubits();

  // emission order over all gates (barriers fence, one-qubit gates flow eagerly)
  detail::schedule_dag sched = detail::build_schedule_dag( c );
  std::vector<char> emitted( c.gates.size(), 0 );

  auto emit_physical = [&]( gate const& g ) {
    gate out = g;
    out.id = static_cast<int32_t>( res.routed.gates.size() );
    for ( int32_t& q : out.qubits )
      q = phi.phys_of( q );
    res.routed.gates.push_back( std::move( out ) );
  };

  // emits every schedulable gate that never needs routing (reached from `from`, or all roots)
  std::vector<int32_t> cascade;
  auto flush_nonrouting = [&]( int32_t from ) {
    cascade.clear();
    if ( from < 0 )
    {
      for ( gate const& g : c.gates )
        if ( sched.indeg[g.id] == 0 && !g.is_two_qubit_op() )
          cascade.push_back( g.id );
    }
    else
    {
      for ( int32_t s : sched.succ[from] )
        if ( --sched.indeg[s] == 0 && !c.gates[s].is_two_qubit_op() )
          cascade.push_back( s );
    }
    for ( size_t head = 0; head < cascade.size(); ++head )
    {
      int32_t const gid = cascade[head];
      emit_physical( c.gates[gid] );
      emitted[gid] = 1;
      for ( int32_t s : sched.succ[gid] )
        if ( --sched.indeg[s] == 0 && !c.gates[s].is_two_qubit_op() )
          cascade.push_back( s );
    }
  };

  flush_nonrouting( -1 );

  // mutable routing state over dependence-graph nodes
  std::vector<int32_t> indeg( dg.num_nodes() );
  std::set<int32_t> front;      // node indices, ascending = time order
  std::set<int32_t> unexecuted; // node indices
  for ( int32_t v = 0; v < dg.num_nodes(); ++v )
  {
    indeg[v] = dg.pred_count( v );
    if ( indeg[v] == 0 )
      front.insert( v );
    unexecuted.insert( v );
  }

  auto emit_swap = [&]( int32_t p1, int32_t p2 ) {
    gate sw;
    sw.id = static_cast<int32_t>( res.routed.gates.size() );
    sw.kind = gate_kind::swap;
    sw.name = "swap";
    sw.qubits = { p1, p2 };
    sw.routing_swap = true;
    res.routed.gates.push_back( std::move( sw ) );
    if ( cfg.decay_by_physical )
    {
      decay.bump( p1, cfg.decay_increment );
      decay.bump( p2, cfg.decay_increment );
    }
    else
    {
      decay.bump( phi.log_at( p1 ), cfg.decay_increment );
      decay.bump( phi.log_at( p2 ), cfg.decay_increment );
    }
    phi.apply_swap( p1, p2 );
    ++res.swap_count;
  };

  auto const deadline = cfg.timeout_sec > 0.0
                            ? t2 + std::chrono::duration_cast<clock::duration>( std::chrono::duration<double>( cfg.timeout_sec ) )
                            : clock::time_point::max();

  std::vector<int32_t> ready;
  std::vector<int32_t> front_gate_ids;
  std::vector<int32_t> front_nodes;
  int32_t swaps_since_execution = 0;

  while ( !front.empty() )
  {
    if ( cfg.timeout_sec > 0.0 && clock::now() > deadline )
      throw route_timeout_error( cfg.timeout_sec );

    ready.clear();
    for ( int32_t v : front )
    {
      if ( graph.adjacent( phi.phys_of( dg.operands[v][0] ), phi.phys_of( dg.operands[v][1] ) ) )
        ready.push_back( v );
    }

    if ( !ready.empty() )
    {
      for ( int32_t v : ready )
      {
        emit_physical( c.gates[dg.gate_ids[v]] );
        emitted[dg.gate_ids[v]] = 1;
        front.erase( v );
        unexecuted.erase( v );
        auto [it, end] = dg.succs( v );
        for ( ; it != end; ++it )
          if ( --indeg[*it] == 0 )
            front.insert( *it );
        flush_nonrouting( dg.gate_ids[v] );
      }
      decay.reset();
      swaps_since_execution = 0;
      continue;
    }

    if ( swaps_since_execution >= stall_limit )
    {
      // forced routing: walk the oldest front gate's qubits together
      int32_t const v = *front.begin();
      auto const path = graph.shortest_path( phi.phys_of( dg.operands[v][0] ), phi.phys_of( dg.operands[v][1] ) );
      for ( size_t i = 0; i + 2 < path.size(); ++i )
        emit_swap( path[i], path[i + 1] );
      swaps_since_execution = 0;
      continue;
    }

    front_nodes.assign( front.begin(), front.end() );
    front_gate_ids.clear();
    for ( int32_t v : front_nodes )
      front_gate_ids.push_back( dg.gate_ids[v] );

    layered_window win;
    if ( cfg.variant == score_variant::distance_only )
    {
      win.front = front_gate_ids;
      win.window = front_gate_ids;
      win.layers = { front_gate_ids };
    }
    else
    {
      win = detail::make_window( dg, front_nodes, unexecuted.begin(), unexecuted.end(), phi, c_window,
                                 cfg.window_affinity_filter );
    }

    auto const candidates = candidate_swaps( front_gate_ids, dg, phi, graph );
    score_state st{ phi, decay, dist, dg, win, cfg.variant, cfg.omega_smoothing, cfg.decay_by_physical };
    auto const chosen = select_swap( candidates, st, rng );
    emit_swap( chosen.first, chosen.second );
    ++swaps_since_execution;
  }

  if ( static_cast<size_t>( std::count( emitted.begin(), emitted.end(), 1 ) ) != c.gates.size() )
    throw std::logic_error( "route: not all gates were scheduled" );

  res.final_map = phi;
  res.depth = depth( res.routed, cfg.depth_model );
  res.times.route_ms = to_ms( clock::now() - t2 );
  return res;
}

/*! \brief Forward-backward routing passes that produce an initial mapping.
 *
 * Each pass routes the circuit from the current assignment and then routes
 * the reversed circuit from the resulting final mapping; the mapping left
 * behind is a layout tuned to the circuit's opening gates.  Zero passes
 * return the identity.
 */
inline mapping bidirectional_initial_mapping( circuit const& c, coupling_graph const& graph,
                                              router_config const& cfg, int32_t passes )
{
  mapping m = mapping::identity( graph.num_qubits() );
  if ( passes <= 0 )
    return m;
  circuit const rev = reversed( c );
  for ( int32_t p = 0; p < passes; ++p )
  {
    route_result fwd = route( c, graph, cfg, m );
    route_result bwd = route( rev, graph, cfg, fwd.final_map );
    m = bwd.final_map;
  }
  return m;
}

} // namespace qlosure

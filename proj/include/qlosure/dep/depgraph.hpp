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
  \file depgraph.hpp
  \brief Two-qubit-gate dependence DAG and transitive successor weights

  The dependence DAG links two-qubit gates that share a logical qubit,
  storing immediate edges only (per-qubit chaining).  Its transitive
  reachability equals that of the full shared-qubit relation, because that
  relation contains all of its own transitive edges.  Each node carries a
  weight: the exact number of distinct gates transitively depending on it.
*/

#pragma once

#include "../circuit.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cstdint>
#include <sstream>
#include <stdexcept>
#include <string>
#include <unordered_set>
#include <vector>

namespace qlosure
{

namespace detail
{

/*! \brief Per-qubit chaining DAG over all gates (barriers are nodes).
 *
 * Used for emission ordering and for replaying a routed circuit against
 * the original partial order.
 */
struct schedule_dag
{
  std::vector<std::vector<int32_t>> succ;
  std::vector<int32_t> indeg;
};

inline schedule_dag build_schedule_dag( circuit const& c )
{
  schedule_dag d;
  d.succ.assign( c.gates.size(), {} );
  d.indeg.assign( c.gates.size(), 0 );
  std::vector<int32_t> last( c.num_qubits, -1 );
  std::vector<int32_t> preds;
  for ( gate const& g : c.gates )
  {
    preds.clear();
    for ( int32_t q : g.qubits )
    {
      if ( last[q] >= 0 )
        preds.push_back( last[q] );
    }
    std::sort( preds.begin(), preds.end() );
    preds.erase( std::unique( preds.begin(), preds.end() ), preds.end() );
    for ( int32_t p : preds )
    {
      d.succ[p].push_back( g.id );
      ++d.indeg[g.id];
    }
    for ( int32_t q : g.qubits )
      last[q] = g.id;
  }
  return d;
}

} // namespace detail

/*! \brief Dependence DAG over the circuit's two-qubit gates.
 *
 * Nodes are indexed densely in time order; `gate_ids` maps a node back to
 * its gate.  `omega` holds the transitive successor counts once
 * `transitive_weights` has run.
 */
struct dep_graph
{
  std::vector<int32_t> gate_ids;                  //!< node -> gate id, strictly increasing
  std::vector<int32_t> node_of_gate;              //!< gate id -> node index, -1 for non-two-qubit gates
  std::vector<std::array<int32_t, 2>> operands;   //!< node -> logical qubit pair
  std::vector<int32_t> succ_off, succ_adj;        //!< immediate successors (CSR, node indices)
  std::vector<int32_t> pred_off, pred_adj;        //!< immediate predecessors (CSR)
  std::vector<int64_t> omega;                     //!< transitive successor counts

  int32_t num_nodes() const { return static_cast<int32_t>( gate_ids.size() ); }

  std::pair<int32_t const*, int32_t const*> succs( int32_t v ) const
  {
    return { succ_adj.data() + succ_off[v], succ_adj.data() + succ_off[v + 1] };
  }
  std::pair<int32_t const*, int32_t const*> preds( int32_t v ) const
  {
    return { pred_adj.data() + pred_off[v], pred_adj.data() + pred_off[v + 1] };
  }
  int32_t pred_count( int32_t v ) const { return pred_off[v + 1] - pred_off[v]; }
  int64_t omega_of_gate( int32_t gate_id ) const { return omega[node_of_gate[gate_id]]; }
};

/*! \brief Builds the dependence DAG with immediate edges only.
 *
 * For each qubit, consecutive two-qubit gates touching it are linked.  A
 * barrier fences its operand qubits: the set of "last gates" of every
 * fenced qubit becomes the union over the fence, so orderings that cross
 * qubits through a barrier are preserved exactly.  One-qubit gates and
 * measures are transparent (they add no ordering between two-qubit gates
 * beyond what shared qubits already give).
 */
inline dep_graph build_dep_graph( circuit const& c )
{
  dep_graph dg;
  dg.node_of_gate.assign( c.gates.size(), -1 );
  for ( gate const& g : c.gates )
  {
    if ( g.is_two_qubit_op() )
    {
      dg.node_of_gate[g.id] = dg.num_nodes();
      dg.gate_ids.push_back( g.id );
      dg.operands.push_back( { g.qubits[0], g.qubits[1] } );
    }
  }

  int32_t const n = dg.num_nodes();
  std::vector<std::vector<int32_t>> last( c.num_qubits ); // last two-qubit nodes per qubit
  std::vector<std::vector<int32_t>> pred_lists( n );
  std::vector<int32_t> merged;
  int64_t num_edges = 0;

  for ( gate const& g : c.gates )
  {
    if ( g.is_two_qubit_op() )
    {
      int32_t v = dg.node_of_gate[g.id];
      merged.clear();
      for ( int32_t q : g.qubits )
        merged.insert( merged.end(), last[q].begin(), last[q].end() );
      std::sort( merged.begin(), merged.end() );
      merged.erase( std::unique( merged.begin(), merged.end() ), merged.end() );
      pred_lists[v] = merged;
      num_edges += static_cast<int64_t>( merged.size() );
      for ( int32_t q : g.qubits )
        last[q] = { v };
    }
    else if ( g.kind == gate_kind::barrier )
    {
      merged.clear();
      for ( int32_t q : g.qubits )
        merged.insert( merged.end(), last[q].begin(), last[q].end() );
      std::sort( merged.begin(), merged.end() );
      merged.erase( std::unique( merged.begin(), merged.end() ), merged.end() );
      for ( int32_t q : g.qubits )
        last[q] = merged;
    }
  }

  dg.pred_off.assign( n + 1, 0 );
  dg.succ_off.assign( n + 1, 0 );
  dg.pred_adj.reserve( num_edges );
  for ( int32_t v = 0; v < n; ++v )
  {
    dg.pred_off[v + 1] = dg.pred_off[v] + static_cast<int32_t>( pred_lists[v].size() );
    dg.pred_adj.insert( dg.pred_adj.end(), pred_lists[v].begin(), pred_lists[v].end() );
    for ( int32_t p : pred_lists[v] )
      ++dg.succ_off[p + 1];
  }
  for ( int32_t v = 0; v < n; ++v )
    dg.succ_off[v + 1] += dg.succ_off[v];
  dg.succ_adj.assign( num_edges, 0 );
  std::vector<int32_t> fill = dg.succ_off;
  for ( int32_t v = 0; v < n; ++v )
  {
    for ( int32_t p : pred_lists[v] )
      dg.succ_adj[fill[p]++] = v;
  }
  return dg;
}

/*! \brief Fills `omega` with exact transitive successor counts.
 *
 * Reverse topological sweep with per-node successor bitsets.  Counts
 * distinct reachable nodes, not paths.  Columns are processed in blocks of
 * at most 2^16 target nodes, and a node's bitset is released as soon as
 * its last predecessor has consumed it, which keeps memory proportional to
 * the frontier width rather than the circuit length.
 *
 * Throws when an edge does not advance in time (the input would not be the
 * DAG of a schedule).
 */
inline void transitive_weights( dep_graph& dg )
{
  int32_t const n = dg.num_nodes();
  dg.omega.assign( n, 0 );
  if ( n == 0 )
    return;
  for ( int32_t v = 0; v < n; ++v )
  {
    auto [it, end] = dg.succs( v );
    for ( ; it != end; ++it )
    {
      if ( *it <= v )
        throw std::invalid_argument( "transitive_weights: cycle (dependence edge does not advance in time)" );
    }
  }

  constexpr int32_t max_block_bits = 1 << 16;
  std::vector<std::vector<uint64_t>> pool;
  std::vector<int32_t> free_bufs;
  std::vector<int32_t> buf_of( n );
  std::vector<int32_t> uses( n );

  for ( int32_t lo = 0; lo < n; lo += max_block_bits )
  {
    int32_t const hi = std::min( n, lo + max_block_bits );
    size_t const words = ( static_cast<size_t>( hi - lo ) + 63 ) / 64;
    std::fill( buf_of.begin(), buf_of.end(), -1 );
    for ( int32_t v = 0; v < hi; ++v )
      uses[v] = dg.pred_count( v );

    auto acquire = [&]() -> int32_t {
      if ( !free_bufs.empty() )
      {
        int32_t b = free_bufs.back();
        free_bufs.pop_back();
        std::fill( pool[b].begin(), pool[b].end(), 0 );
        return b;
      }
      pool.emplace_back( words, 0 );
      return static_cast<int32_t>( pool.size() ) - 1;
    };

    for ( int32_t v = hi - 1; v >= 0; --v )
    {
      int32_t const b = acquire();
      std::vector<uint64_t>& set = pool[b];
      bool const in_block = v >= lo;
      if ( in_block )
        set[( v - lo ) >> 6] |= uint64_t{ 1 } << ( ( v - lo ) & 63 );
      auto [it, end] = dg.succs( v );
      for ( ; it != end; ++it )
      {
        int32_t const u = *it;
        if ( u < hi )
        {
          std::vector<uint64_t> const& other = pool[buf_of[u]];
          for ( size_t w = 0; w < words; ++w )
            set[w] |= other[w];
          if ( --uses[u] == 0 )
          {
            free_bufs.push_back( buf_of[u] );
            buf_of[u] = -1;
          }
        }
      }
      int64_t count = 0;
      for ( size_t w = 0; w < words; ++w )
        count += std::popcount( set[w] );
      dg.omega[v] += count - ( in_block ? 1 : 0 );
      if ( uses[v] == 0 )
        free_bufs.push_back( b );
      else
        buf_of[v] = b;
    }
  }
}

/*! \brief Unexecuted gates whose predecessors have all executed.
 *
 * Pure recomputation used by tests and one-shot callers; the router keeps
 * the front layer incrementally.  Returns gate ids in ascending order.
 */
inline std::vector<int32_t> front_layer( dep_graph const& dg, std::unordered_set<int32_t> const& executed_gate_ids )
{
  std::vector<int32_t> front;
  for ( int32_t v = 0; v < dg.num_nodes(); ++v )
  {
    if ( executed_gate_ids.count( dg.gate_ids[v] ) )
      continue;
    bool ready = true;
    auto [it, end] = dg.preds( v );
    for ( ; ready && it != end; ++it )
      ready = executed_gate_ids.count( dg.gate_ids[*it] ) != 0;
    if ( ready )
      front.push_back( dg.gate_ids[v] );
  }
  return front;
}

/*! \brief Graphviz dump with dependence weights as node labels. */
inline std::string to_dot( dep_graph const& dg )
{
  std::ostringstream out;
  out << "digraph depgraph {\n";
  for ( int32_t v = 0; v < dg.num_nodes(); ++v )
  {
    out << "  g" << dg.gate_ids[v] << " [label=\"g" << dg.gate_ids[v] << " (q" << dg.operands[v][0]
        << ",q" << dg.operands[v][1] << ")";
    if ( !dg.omega.empty() )
      out << "\\nw=" << dg.omega[v];
    out << "\"];\n";
  }
  for ( int32_t v = 0; v < dg.num_nodes(); ++v )
  {
    auto [it, end] = dg.succs( v );
    for ( ; it != end; ++it )
      out << "  g" << dg.gate_ids[v] << " -> g" << dg.gate_ids[*it] << ";\n";
  }
  out << "}\n";
  return out.str();
}

} // namespace qlosure

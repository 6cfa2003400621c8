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
  \file lookahead.hpp
  \brief Layered look-ahead window over the dependence DAG

  The window holds the topologically earliest k unexecuted two-qubit
  gates, where k = c * n_f and n_f is the number of distinct physical
  qubits hosting front-layer operands.  Window gates are partitioned into
  layers by dependence distance from the front: a gate's layer is one more
  than the deepest of its unexecuted predecessors, so a layer becomes
  executable only once the previous one has fully drained.
*/

#pragma once

#include "../route/mapping.hpp"
#include "../topology/coupling_graph.hpp"
#include "depgraph.hpp"

#include <algorithm>
#include <cstdint>
#include <unordered_set>
#include <vector>

namespace qlosure
{

struct layered_window
{
  std::vector<int32_t> front;                //!< ready gate ids, ascending
  std::vector<int32_t> window;               //!< gate ids in the window, ascending (time order)
  std::vector<std::vector<int32_t>> layers;  //!< layers[l] holds the gate ids at dependence distance l
  int32_t k = 0;                             //!< window capacity c * n_f
};

namespace detail
{

/*! \brief Window construction over any ascending range of unexecuted node indices. */
template<typename Iterator>
layered_window make_window( dep_graph const& dg, std::vector<int32_t> const& front_nodes,
                            Iterator unexec_first, Iterator unexec_last, mapping const& phi,
                            int32_t c, bool affinity_filter )
{
  layered_window win;

  // n_f: distinct physical qubits hosting front-layer operands
  std::vector<int32_t> phys;
  phys.reserve( 2 * front_nodes.size() );
  for ( int32_t v : front_nodes )
  {
    phys.push_back( phi.phys_of( dg.operands[v][0] ) );
    phys.push_back( phi.phys_of( dg.operands[v][1] ) );
  }
  std::sort( phys.begin(), phys.end() );
  phys.erase( std::unique( phys.begin(), phys.end() ), phys.end() );
  int32_t const n_f = static_cast<int32_t>( phys.size() );
  win.k = c * n_f;

  std::unordered_set<int32_t> front_set( front_nodes.begin(), front_nodes.end() );
  std::vector<int32_t> window_nodes;
  window_nodes.reserve( win.k );
  for ( Iterator it = unexec_first; it != unexec_last && static_cast<int32_t>( window_nodes.size() ) < win.k; ++it )
  {
    int32_t const v = *it;
    if ( affinity_filter && !front_set.count( v ) )
    {
      // keep only gates touching a physical qubit active in the front layer
      int32_t const p1 = phi.phys_of( dg.operands[v][0] );
      int32_t const p2 = phi.phys_of( dg.operands[v][1] );
      if ( !std::binary_search( phys.begin(), phys.end(), p1 ) &&
           !std::binary_search( phys.begin(), phys.end(), p2 ) )
        continue;
    }
    window_nodes.push_back( v );
  }

  // dependence distance: longest predecessor chain from the front, inside the window
  std::vector<int32_t> level( window_nodes.size(), 1 );
  int32_t max_level = window_nodes.empty() ? 0 : 1;
  for ( size_t i = 0; i < window_nodes.size(); ++i )
  {
    int32_t const v = window_nodes[i];
    if ( front_set.count( v ) )
    {
      level[i] = 1;
    }
    else
    {
      int32_t lv = 2;
      auto [it, end] = dg.preds( v );
      for ( ; it != end; ++it )
      {
        auto pos = std::lower_bound( window_nodes.begin(), window_nodes.begin() + i, *it );
        if ( pos != window_nodes.begin() + i && *pos == *it )
          lv = std::max( lv, level[pos - window_nodes.begin()] + 1 );
      }
      level[i] = lv;
    }
    max_level = std::max( max_level, level[i] );
  }

  win.layers.assign( max_level, {} );
  for ( size_t i = 0; i < window_nodes.size(); ++i )
    win.layers[level[i] - 1].push_back( dg.gate_ids[window_nodes[i]] );
  for ( int32_t v : window_nodes )
    win.window.push_back( dg.gate_ids[v] );
  for ( int32_t v : front_nodes )
    win.front.push_back( dg.gate_ids[v] );
  return win;
}

} // namespace detail

/*! \brief Builds the layered look-ahead window.
 *
 * `front` and the result are in gate ids; `executed_gate_ids` identifies
 * gates that have already been scheduled.  The window is the pure
 * topological prefix of the unexecuted two-qubit gates (earliest k in time
 * order); pass `affinity_filter = true` to restrict it to gates touching
 * physical qubits active in the front layer.
 */
inline layered_window lookahead_window( dep_graph const& dg, std::vector<int32_t> const& front,
                                        std::unordered_set<int32_t> const& executed_gate_ids,
                                        mapping const& phi, int32_t c, bool affinity_filter = false )
{
  std::vector<int32_t> front_nodes;
  front_nodes.reserve( front.size() );
  for ( int32_t gid : front )
    front_nodes.push_back( dg.node_of_gate[gid] );
  std::sort( front_nodes.begin(), front_nodes.end() );

  std::vector<int32_t> unexec;
  unexec.reserve( dg.num_nodes() );
  for ( int32_t v = 0; v < dg.num_nodes(); ++v )
  {
    if ( !executed_gate_ids.count( dg.gate_ids[v] ) )
      unexec.push_back( v );
  }
  return detail::make_window( dg, front_nodes, unexec.begin(), unexec.end(), phi, c, affinity_filter );
}

} // namespace qlosure

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
  \file verify.hpp
  \brief Permutation-level verification of routed circuits

  Replays a routed circuit while tracking the permutation induced by its
  routing swaps, recovers each gate's logical operands, and matches them
  against the original program: the recovered gates must be exactly the
  original multiset, in an order consistent with the original dependence
  partial order, and every two-qubit gate must act on a device edge.
  Verification never throws on a semantic failure; it reports.
*/

#pragma once

#include "../circuit.hpp"
#include "../dep/depgraph.hpp"
#include "../route/mapping.hpp"
#include "../topology/coupling_graph.hpp"

#include <algorithm>
#include <cstdint>
#include <cstring>
#include <string>
#include <unordered_map>
#include <vector>

#include <json.hpp>

namespace qlosure
{

enum class violation_kind : uint8_t
{
  nonadjacent,
  missing_gate,
  reordered,
  wrong_operands
};

inline char const* to_string( violation_kind k )
{
  switch ( k )
  {
  case violation_kind::nonadjacent: return "nonadjacent";
  case violation_kind::missing_gate: return "missing_gate";
  case violation_kind::reordered: return "reordered";
  default: return "wrong_operands";
  }
}

struct violation
{
  int32_t gate_id = -1; //!< id in the circuit the violation was detected in
  violation_kind kind = violation_kind::wrong_operands;
  std::string detail;
};

struct verification_report
{
  bool ok = true;
  std::vector<violation> violations;
};

inline nlohmann::json to_json( verification_report const& r )
{
  nlohmann::json j;
  j["ok"] = r.ok;
  auto& v = j["violations"] = nlohmann::json::array();
  for ( violation const& x : r.violations )
    v.push_back( { { "gate_id", x.gate_id }, { "kind", to_string( x.kind ) }, { "detail", x.detail } } );
  return j;
}

namespace detail
{

/*! \brief Content key of a gate in logical-operand form (barrier operands
 * are order-insensitive). */
inline std::string gate_content_key( gate_kind kind, std::string const& name,
                                   std::vector<int32_t> qubits, std::vector<double> const& params,
                                   int32_t cbit )
{
  if ( kind == gate_kind::barrier )
    std::sort( qubits.begin(), qubits.end() );
  std::string key;
  key += static_cast<char>( '0' + static_cast<int>( kind ) );
  key += name;
  for ( int32_t q : qubits )
    key += "," + std::to_string( q );
  key += ";" + std::to_string( cbit );
  for ( double p : params )
  {
    uint64_t bits;
    std::memcpy( &bits, &p, sizeof( bits ) );
    key += ":" + std::to_string( bits );
  }
  return key;
}

} // namespace detail

/*! \brief Checks that `routed` is a hardware-compliant reordering of `original`.
 *
 * `routed` must be in physical-operand form; `initial` gives the layout at
 * its start.  Gates flagged as routing swaps update the tracked
 * permutation; everything else is matched against the original program.
 */
inline verification_report verify_routed( circuit const& original, circuit const& routed,
                                          mapping const& initial, coupling_graph const& graph )
{
  verification_report report;
  auto flag = [&]( int32_t id, violation_kind kind, std::string detail ) {
    report.ok = false;
    report.violations.push_back( { id, kind, std::move( detail ) } );
  };

  detail::schedule_dag order = detail::build_schedule_dag( original );
  std::vector<char> matched( original.gates.size(), 0 );

  // gates of the original that are ready to be matched, grouped by content
  std::unordered_map<std::string, std::vector<int32_t>> ready;
  std::unordered_map<std::string, int32_t> unmatched; // content -> count over all unmatched gates
  auto signature_of = [&]( gate const& g ) {
    return detail::gate_content_key( g.kind, g.name, g.qubits, g.params, g.cbit );
  };
  for ( gate const& g : original.gates )
  {
    ++unmatched[signature_of( g )];
    if ( order.indeg[g.id] == 0 )
      ready[signature_of( g )].push_back( g.id );
  }

  std::vector<int32_t> phys2log = initial.phys_to_log();

  for ( gate const& r : routed.gates )
  {
    if ( r.kind == gate_kind::swap && r.routing_swap )
    {
      if ( !graph.adjacent( r.qubits[0], r.qubits[1] ) )
        flag( r.id, violation_kind::nonadjacent,
              "routing swap on non-adjacent pair (" + std::to_string( r.qubits[0] ) + "," + std::to_string( r.qubits[1] ) + ")" );
      std::swap( phys2log[r.qubits[0]], phys2log[r.qubits[1]] );
      continue;
    }

    std::vector<int32_t> logical;
    bool in_range = true;
    for ( int32_t p : r.qubits )
    {
      if ( p < 0 || p >= static_cast<int32_t>( phys2log.size() ) )
      {
        in_range = false;
        break;
      }
      logical.push_back( phys2log[p] );
    }
    if ( !in_range )
    {
      flag( r.id, violation_kind::wrong_operands, "physical operand out of device range" );
      continue;
    }
    if ( r.is_two_qubit_op() && !graph.adjacent( r.qubits[0], r.qubits[1] ) )
      flag( r.id, violation_kind::nonadjacent,
            "gate on non-adjacent pair (" + std::to_string( r.qubits[0] ) + "," + std::to_string( r.qubits[1] ) + ")" );

    std::string const key = detail::gate_content_key( r.kind, r.name, logical, r.params, r.cbit );
    auto it = ready.find( key );
    if ( it == ready.end() || it->second.empty() )
    {
      if ( auto un = unmatched.find( key ); un != unmatched.end() && un->second > 0 )
        flag( r.id, violation_kind::reordered, "gate scheduled before a dependence predecessor" );
      else
        flag( r.id, violation_kind::wrong_operands, "no matching gate in the original circuit" );
      continue;
    }

    // match the oldest ready gate with this content and release its dependents
    int32_t const gid = *std::min_element( it->second.begin(), it->second.end() );
    it->second.erase( std::find( it->second.begin(), it->second.end(), gid ) );
    matched[gid] = 1;
    --unmatched[key];
    for ( int32_t s : order.succ[gid] )
    {
      if ( --order.indeg[s] == 0 )
        ready[signature_of( original.gates[s] )].push_back( s );
    }
  }

  for ( gate const& g : original.gates )
  {
    if ( !matched[g.id] )
      flag( g.id, violation_kind::missing_gate, "gate '" + g.name + "' never appears in the routed circuit" );
  }
  return report;
}

} // namespace qlosure

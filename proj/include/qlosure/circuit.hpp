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
  \file circuit.hpp
  \brief Gate-level circuit representation
*/

#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace qlosure
{

enum class gate_kind : uint8_t
{
  one_qubit,
  two_qubit,
  swap,
  barrier,
  measure
};

/*! \brief A single gate instance.
 *
 * Gate ids are dense and equal the gate's position in program order, so the
 * id doubles as the gate's logical time step.  Two-qubit gates (including
 * swaps) are the only gates the router ever has to repair; barriers act as
 * ordering fences on their operand qubits and measures are scheduled like
 * one-qubit gates.
 */
struct gate
{
  int32_t id = 0;
  gate_kind kind = gate_kind::one_qubit;
  std::string name;
  /*! \brief Operand qubit indices (logical before routing, physical after). */
  std::vector<int32_t> qubits;
  /*! \brief Rotation angles in radians, empty for parameterless gates. */
  std::vector<double> params;
  /*! \brief Classical bit written by a measure, -1 otherwise. */
  int32_t cbit = -1;
  /*! \brief True for swaps inserted by the router (as opposed to swaps that
   * were part of the input program).
   */
  bool routing_swap = false;

  bool is_two_qubit_op() const
  {
    return kind == gate_kind::two_qubit || kind == gate_kind::swap;
  }
};

struct circuit
{
  std::string name;
  int32_t num_qubits = 0;
  std::vector<gate> gates;

  int64_t num_two_qubit_gates() const
  {
    return std::count_if( gates.begin(), gates.end(), []( gate const& g ) { return g.is_two_qubit_op(); } );
  }

  /*! \brief Number of quantum operations (all gates except barriers). */
  int64_t num_qops() const
  {
    return std::count_if( gates.begin(), gates.end(), []( gate const& g ) { return g.kind != gate_kind::barrier; } );
  }
};

/*! \brief Checks the circuit invariants.
 *
 * Ids must be 0..n-1 in order, operands must be distinct and within range,
 * and two-qubit gates must have exactly two operands.  Throws
 * `std::invalid_argument` on the first violation.
 */
inline void validate( circuit const& c )
{
  for ( size_t i = 0; i < c.gates.size(); ++i )
  {
    gate const& g = c.gates[i];
    if ( g.id != static_cast<int32_t>( i ) )
      throw std::invalid_argument( "circuit: gate ids must be 0..n-1 in program order" );
    if ( g.is_two_qubit_op() && g.qubits.size() != 2 )
      throw std::invalid_argument( "circuit: two-qubit gate must have exactly 2 operands" );
    if ( ( g.kind == gate_kind::one_qubit || g.kind == gate_kind::measure ) && g.qubits.size() != 1 )
      throw std::invalid_argument( "circuit: one-qubit gate must have exactly 1 operand" );
    for ( size_t a = 0; a < g.qubits.size(); ++a )
    {
      if ( g.qubits[a] < 0 || g.qubits[a] >= c.num_qubits )
        throw std::invalid_argument( "circuit: operand qubit out of range in gate " + std::to_string( g.id ) );
      for ( size_t b = a + 1; b < g.qubits.size(); ++b )
      {
        if ( g.qubits[a] == g.qubits[b] )
          throw std::invalid_argument( "circuit: repeated operand in gate " + std::to_string( g.id ) );
      }
    }
  }
}

/*! \brief Structural equality: same qubit count and gate list.
 *
 * Parameters are compared within `param_tol`; ids, kinds, names, operands
 * and classical bits must match exactly.
 */
inline bool structurally_equal( circuit const& a, circuit const& b, double param_tol = 1e-12 )
{
  if ( a.num_qubits != b.num_qubits || a.gates.size() != b.gates.size() )
    return false;
  for ( size_t i = 0; i < a.gates.size(); ++i )
  {
    gate const& x = a.gates[i];
    gate const& y = b.gates[i];
    if ( x.id != y.id || x.kind != y.kind || x.name != y.name || x.qubits != y.qubits || x.cbit != y.cbit )
      return false;
    if ( x.params.size() != y.params.size() )
      return false;
    for ( size_t p = 0; p < x.params.size(); ++p )
    {
      if ( std::abs( x.params[p] - y.params[p] ) > param_tol )
        return false;
    }
  }
  return true;
}

/*! \brief The circuit with its gate order reversed (ids renumbered). */
inline circuit reversed( circuit const& c )
{
  circuit r;
  r.name = c.name;
  r.num_qubits = c.num_qubits;
  r.gates.assign( c.gates.rbegin(), c.gates.rend() );
  for ( size_t i = 0; i < r.gates.size(); ++i )
  {
    r.gates[i].id = static_cast<int32_t>( i );
  }
  return r;
}

/*! \brief Relabels every operand qubit q as perm[q]. */
inline circuit relabel_qubits( circuit const& c, std::vector<int32_t> const& perm )
{
  if ( perm.size() != static_cast<size_t>( c.num_qubits ) )
    throw std::invalid_argument( "relabel_qubits: permutation size mismatch" );
  circuit r = c;
  for ( gate& g : r.gates )
  {
    for ( int32_t& q : g.qubits )
    {
      q = perm[q];
    }
  }
  return r;
}

} // namespace qlosure

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
  \file lift.hpp
  \brief Affine lifting of gate traces into macro-gates

  A macro-gate covers a maximal run of consecutive gates that share one
  gate name and whose operands follow one affine function a*i + b per
  operand position over a single iterator i.  Lifting raises the analysis
  granularity from gate instances to such runs; expansion is the exact
  inverse.
*/

#pragma once

#include "../circuit.hpp"

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

namespace qlosure
{

/*! \brief Affine index function i -> a*i + b. */
struct affine_form
{
  int64_t a = 0;
  int64_t b = 0;

  int64_t at( int64_t i ) const { return a * i + b; }
  bool operator==( affine_form const& ) const = default;
};

/*! \brief A run of `domain_size` gates with affine operand access.
 *
 * Instance i (0 <= i < domain_size) has operand j equal to
 * `operand_forms[j].at(i)` and time step `schedule.at(i)`.
 */
struct macro_gate
{
  gate_kind kind = gate_kind::one_qubit;
  std::string name;
  std::vector<double> params;
  int64_t domain_size = 1;
  std::vector<affine_form> operand_forms;
  /*! \brief Classical-bit function for measure runs. */
  affine_form cbit_form{ 0, -1 };
  /*! \brief Time function i -> s*i + t0 with s >= 1. */
  affine_form schedule{ 1, 0 };
};

/*! \brief A circuit in lifted (macro-gate) form. */
struct lifted_circuit
{
  std::string name;
  int32_t num_qubits = 0;
  std::vector<macro_gate> macros;
};

struct compression_summary
{
  int64_t num_macros = 0;
  int64_t num_gates = 0;
  double ratio = 1.0;
};

/*! \brief Greedy maximal-run lifting.
 *
 * Scans left to right; a run is extended as long as the next gate has the
 * same name, kind, parameters and arity, and every operand position (plus
 * the classical bit of measures) stays on the line fixed by the run's
 * first two gates.  Every gate lands in exactly one macro-gate; a gate
 * that fits no line starts a new singleton run.  Concatenated expansion
 * reproduces the original gate order.
 */
inline lifted_circuit lift( circuit const& c )
{
  lifted_circuit lc;
  lc.name = c.name;
  lc.num_qubits = c.num_qubits;

  size_t i = 0;
  while ( i < c.gates.size() )
  {
    gate const& first = c.gates[i];
    macro_gate m;
    m.kind = first.kind;
    m.name = first.name;
    m.params = first.params;
    m.schedule = { 1, first.id };
    m.domain_size = 1;
    m.operand_forms.assign( first.qubits.size(), affine_form{} );
    for ( size_t j = 0; j < first.qubits.size(); ++j )
      m.operand_forms[j] = { 0, first.qubits[j] };
    if ( first.kind == gate_kind::measure )
      m.cbit_form = { 0, first.cbit };

    size_t next = i + 1;
    auto compatible = [&]( gate const& g ) {
      return g.kind == m.kind && g.name == m.name && g.params == m.params &&
             g.qubits.size() == m.operand_forms.size();
    };

    if ( next < c.gates.size() && compatible( c.gates[next] ) )
    {
      // the second gate fixes the slope of every operand line
      gate const& second = c.gates[next];
      for ( size_t j = 0; j < m.operand_forms.size(); ++j )
        m.operand_forms[j].a = second.qubits[j] - first.qubits[j];
      if ( m.kind == gate_kind::measure )
        m.cbit_form.a = second.cbit - first.cbit;
      m.domain_size = 2;
      ++next;

      while ( next < c.gates.size() && compatible( c.gates[next] ) )
      {
        gate const& g = c.gates[next];
        int64_t k = m.domain_size;
        bool fits = true;
        for ( size_t j = 0; fits && j < m.operand_forms.size(); ++j )
          fits = m.operand_forms[j].at( k ) == g.qubits[j];
        if ( fits && m.kind == gate_kind::measure )
          fits = m.cbit_form.at( k ) == g.cbit;
        if ( !fits )
          break;
        ++m.domain_size;
        ++next;
      }
    }

    lc.macros.push_back( std::move( m ) );
    i = next;
  }
  return lc;
}

/*! \brief Expands macro-gates back into a flat circuit.
 *
 * Round-trip contract: `expand( lift( c ) )` equals `c` exactly.  Throws
 * `std::out_of_range` when an expanded operand index leaves the qubit
 * range, and `std::invalid_argument` when a two-qubit instance degenerates
 * to equal operands.
 */
inline circuit expand( lifted_circuit const& lc )
{
  circuit c;
  c.name = lc.name;
  c.num_qubits = lc.num_qubits;
  for ( macro_gate const& m : lc.macros )
  {
    if ( m.domain_size < 1 )
      throw std::invalid_argument( "expand: macro-gate domain must be nonempty" );
    for ( int64_t i = 0; i < m.domain_size; ++i )
    {
      gate g;
      g.id = static_cast<int32_t>( c.gates.size() );
      g.kind = m.kind;
      g.name = m.name;
      g.params = m.params;
      for ( affine_form const& f : m.operand_forms )
      {
        int64_t q = f.at( i );
        if ( q < 0 || q >= lc.num_qubits )
          throw std::out_of_range( "expand: operand index " + std::to_string( q ) + " out of range" );
        g.qubits.push_back( static_cast<int32_t>( q ) );
      }
      if ( g.is_two_qubit_op() && g.qubits[0] == g.qubits[1] )
        throw std::invalid_argument( "expand: two-qubit instance with equal operands" );
      if ( m.kind == gate_kind::measure )
        g.cbit = static_cast<int32_t>( m.cbit_form.at( i ) );
      c.gates.push_back( std::move( g ) );
    }
  }
  return c;
}

inline compression_summary compression_stats( lifted_circuit const& lc )
{
  compression_summary s;
  s.num_macros = static_cast<int64_t>( lc.macros.size() );
  for ( macro_gate const& m : lc.macros )
    s.num_gates += m.domain_size;
  s.ratio = s.num_macros == 0 ? 1.0 : static_cast<double>( s.num_gates ) / static_cast<double>( s.num_macros );
  return s;
}

/*! \brief Debug dump: one object per macro-gate with its affine forms. */
inline nlohmann::json macros_to_json( lifted_circuit const& lc )
{
  nlohmann::json arr = nlohmann::json::array();
  for ( macro_gate const& m : lc.macros )
  {
    nlohmann::json j;
    j["name"] = m.name;
    j["n"] = m.domain_size;
    for ( size_t k = 0; k < m.operand_forms.size(); ++k )
      j["q" + std::to_string( k + 1 )] = nlohmann::json::array( { m.operand_forms[k].a, m.operand_forms[k].b } );
    j["sched"] = nlohmann::json::array( { m.schedule.a, m.schedule.b } );
    if ( !m.params.empty() )
      j["params"] = m.params;
    arr.push_back( std::move( j ) );
  }
  return arr;
}

} // namespace qlosure

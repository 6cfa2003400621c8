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
  \file metrics.hpp
  \brief Circuit depth and depth-factor metrics
*/

#pragma once

#include "../circuit.hpp"

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <vector>

namespace qlosure
{

/*! \brief How a SWAP counts toward depth: one layer, or three sequential
 * two-qubit gates (its CX decomposition).
 */
enum class swap_depth_model : uint8_t
{
  unit,
  three_cx
};

inline char const* to_string( swap_depth_model m )
{
  return m == swap_depth_model::unit ? "unit" : "three_cx";
}

/*! \brief Critical-path length of the circuit's gate DAG.
 *
 * Every gate occupies weighted time on its operand qubits: one step for
 * ordinary gates and measures, the model's weight for swaps, and zero for
 * barriers (which only synchronize their operands).
 */
inline int64_t depth( circuit const& c, swap_depth_model model = swap_depth_model::unit )
{
  std::vector<int64_t> mark( c.num_qubits, 0 );
  int64_t result = 0;
  for ( gate const& g : c.gates )
  {
    int64_t t = 0;
    for ( int32_t q : g.qubits )
      t = std::max( t, mark[q] );
    int64_t w = 1;
    if ( g.kind == gate_kind::barrier )
      w = 0;
    else if ( g.kind == gate_kind::swap )
      w = model == swap_depth_model::three_cx ? 3 : 1;
    t += w;
    for ( int32_t q : g.qubits )
      mark[q] = t;
    result = std::max( result, t );
  }
  return result;
}

/*! \brief Routed depth relative to a reference (typically the known optimum). */
inline double depth_factor( int64_t routed_depth, int64_t reference_depth )
{
  if ( reference_depth < 1 )
    throw std::invalid_argument( "depth_factor: reference depth must be >= 1" );
  return static_cast<double>( routed_depth ) / static_cast<double>( reference_depth );
}

} // namespace qlosure

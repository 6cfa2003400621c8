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
  \file score.hpp
  \brief Candidate SWAP generation and the layered swap-cost function

  A candidate SWAP s on a physical pair (p1, p2) is scored by

      M(s) = max(d_q1, d_q2) * sum_l ( Gamma_l / |G_l| )
      Gamma_l = sum_{g in G_l} w_g * D[phi_s(g_q1)][phi_s(g_q2)] / l

  where phi_s is the tentative mapping after s, G_l are the window layers
  (l = 1 for the front layer), w_g the transitive dependence weight of g,
  D the physical distance matrix, and d the decay of the two swapped
  logical qubits.  The reduced variants drop components: the layer-adjusted
  score sets w == 1, and the distance-only score sums front-layer distances
  with no layers, weights or decay.
*/

#pragma once

#include "../dep/lookahead.hpp"
#include "../topology/coupling_graph.hpp"
#include "../topology/distance_matrix.hpp"
#include "mapping.hpp"

#include <algorithm>
#include <cstdint>
#include <utility>
#include <vector>

namespace qlosure
{

enum class score_variant : uint8_t
{
  distance_only,
  layer_adjusted,
  dependency_weighted,
  full
};

inline char const* to_string( score_variant v )
{
  switch ( v )
  {
  case score_variant::distance_only: return "distance_only";
  case score_variant::layer_adjusted: return "layer_adjusted";
  case score_variant::dependency_weighted: return "dependency_weighted";
  default: return "full";
  }
}

/*! \brief Per-logical-qubit swap penalty, >= 1.
 *
 * Grows by a fixed increment whenever its qubit is swapped and resets to
 * one as soon as any gate executes, discouraging repeated swapping of the
 * same qubit between executions.
 */
class decay_vector
{
public:
  explicit decay_vector( int32_t n ) : delta_( n, 1.0 ) {}

  double operator[]( int32_t q ) const { return delta_[q]; }
  void bump( int32_t q, double increment ) { delta_[q] += increment; }
  void reset() { std::fill( delta_.begin(), delta_.end(), 1.0 ); }
  int32_t size() const { return static_cast<int32_t>( delta_.size() ); }

private:
  std::vector<double> delta_;
};

/*! \brief All SWAPs between a front-layer physical qubit and one of its neighbors.
 *
 * Only meaningful when no front gate is executable; pairs are unordered
 * (normalized to min,max) and returned sorted without duplicates.
 */
inline std::vector<std::pair<int32_t, int32_t>> candidate_swaps( std::vector<int32_t> const& front,
                                                                 dep_graph const& dg, mapping const& phi,
                                                                 coupling_graph const& graph )
{
  std::vector<int32_t> front_phys;
  for ( int32_t gid : front )
  {
    int32_t const v = dg.node_of_gate[gid];
    front_phys.push_back( phi.phys_of( dg.operands[v][0] ) );
    front_phys.push_back( phi.phys_of( dg.operands[v][1] ) );
  }
  std::sort( front_phys.begin(), front_phys.end() );
  front_phys.erase( std::unique( front_phys.begin(), front_phys.end() ), front_phys.end() );

  std::vector<std::pair<int32_t, int32_t>> swaps;
  for ( int32_t p1 : front_phys )
  {
    for ( int32_t p2 : graph.neighbors( p1 ) )
      swaps.emplace_back( std::min( p1, p2 ), std::max( p1, p2 ) );
  }
  std::sort( swaps.begin(), swaps.end() );
  swaps.erase( std::unique( swaps.begin(), swaps.end() ), swaps.end() );
  return swaps;
}

/*! \brief Inputs needed to score one candidate SWAP. */
struct score_state
{
  mapping const& phi;
  decay_vector const& decay;
  distance_matrix const& dist;
  dep_graph const& dg;
  layered_window const& window;
  score_variant variant = score_variant::full;
  bool omega_smoothing = false;
  bool decay_by_physical = false;
};

/*! \brief Evaluates the swap-cost function for one candidate.
 *
 * The tentative mapping is evaluated on the fly; nothing is committed.
 */
inline double m_score( std::pair<int32_t, int32_t> s, score_state const& st )
{
  auto const [p1, p2] = s;
  auto phys_after = [&]( int32_t q ) {
    int32_t const p = st.phi.phys_of( q );
    return p == p1 ? p2 : p == p2 ? p1 : p;
  };
  auto gate_distance = [&]( int32_t gid ) {
    int32_t const v = st.dg.node_of_gate[gid];
    return st.dist( phys_after( st.dg.operands[v][0] ), phys_after( st.dg.operands[v][1] ) );
  };

  if ( st.variant == score_variant::distance_only )
  {
    double sum = 0.0;
    if ( !st.window.layers.empty() )
    {
      for ( int32_t gid : st.window.layers.front() )
        sum += gate_distance( gid );
    }
    return sum;
  }

  bool const use_omega = st.variant != score_variant::layer_adjusted;
  double total = 0.0;
  for ( size_t l = 0; l < st.window.layers.size(); ++l )
  {
    std::vector<int32_t> const& layer = st.window.layers[l];
    if ( layer.empty() )
      continue;
    double gamma = 0.0;
    for ( int32_t gid : layer )
    {
      double w = 1.0;
      if ( use_omega )
      {
        w = static_cast<double>( st.dg.omega_of_gate( gid ) );
        if ( st.omega_smoothing )
          w += 1.0;
      }
      gamma += w * gate_distance( gid ) / static_cast<double>( l + 1 );
    }
    total += gamma / static_cast<double>( layer.size() );
  }

  double const d1 = st.decay[st.decay_by_physical ? p1 : st.phi.log_at( p1 )];
  double const d2 = st.decay[st.decay_by_physical ? p2 : st.phi.log_at( p2 )];
  return std::max( d1, d2 ) * total;
}

} // namespace qlosure

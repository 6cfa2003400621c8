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
  \file benchgen.hpp
  \brief Benchmark circuits with a provably known optimal depth

  A circuit is built as T cycles of qubit-disjoint gates on a target
  coupling graph: each cycle draws a random matching of device edges for
  two-qubit gates plus random one-qubit fill.  A witness chain threads one
  gate per cycle that shares a qubit with the previous cycle's chain gate,
  so the depth is exactly T (not merely at most T).  The qubit labels are
  then scrambled by a random permutation to hide the perfect layout; the
  unscrambled circuit runs with zero swaps under the identity mapping, so T
  is a certified lower bound for any mapping of the scrambled circuit.
*/

#pragma once

#include "../circuit.hpp"
#include "../topology/coupling_graph.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

namespace qlosure
{

struct bench_spec
{
  int32_t target_depth = 1;
  /*! \brief Expected fraction of free qubits receiving a one-qubit gate per cycle. */
  double p1q = 0.479;
  /*! \brief Expected fraction of qubits covered by two-qubit gates per cycle. */
  double p2q = 0.271;
  uint64_t seed = 0;
};

struct generated_circuit
{
  circuit scrambled;              //!< the benchmark as emitted (layout hidden)
  circuit unscrambled;            //!< zero-swap executable under the identity mapping
  std::vector<int32_t> scramble;  //!< relabeling applied: scrambled operand = scramble[unscrambled operand]
  int32_t optimal_depth = 0;
};

namespace detail
{

inline uint64_t mix64( uint64_t x )
{
  x += 0x9e3779b97f4a7c15ULL;
  x = ( x ^ ( x >> 30 ) ) * 0xbf58476d1ce4e5b9ULL;
  x = ( x ^ ( x >> 27 ) ) * 0x94d049bb133111ebULL;
  return x ^ ( x >> 31 );
}

} // namespace detail

/*! \brief Generates one benchmark circuit on the given device graph.
 *
 * Throws when the two-qubit density is positive but the graph has no edge
 * to place a gate on.
 */
inline generated_circuit generate( coupling_graph const& graph, bench_spec const& spec )
{
  if ( spec.target_depth < 1 )
    throw std::invalid_argument( "generate: target depth must be >= 1" );
  if ( spec.p1q < 0.0 || spec.p2q < 0.0 )
    throw std::invalid_argument( "generate: densities must be nonnegative" );
  int32_t const n = graph.num_qubits();
  bool const want_2q = spec.p2q > 0.0;
  if ( want_2q && graph.edges().empty() )
    throw std::invalid_argument( "generate: two-qubit density infeasible, the graph has no edges" );

  std::mt19937_64 rng( spec.seed );
  static char const* one_qubit_names[] = { "h", "x", "s", "t" };

  generated_circuit out;
  out.optimal_depth = spec.target_depth;
  circuit& c = out.unscrambled;
  c.num_qubits = n;

  auto push = [&c]( gate g ) {
    g.id = static_cast<int32_t>( c.gates.size() );
    c.gates.push_back( std::move( g ) );
  };
  auto push_2q = [&]( int32_t a, int32_t b ) {
    gate g;
    g.kind = gate_kind::two_qubit;
    g.name = "cx";
    g.qubits = { a, b };
    push( std::move( g ) );
  };
  auto push_1q = [&]( int32_t q ) {
    gate g;
    g.kind = gate_kind::one_qubit;
    g.name = one_qubit_names[rng() % 4];
    g.qubits = { q };
    push( std::move( g ) );
  };

  int64_t const target_pairs = std::max<int64_t>( want_2q ? 1 : 0, std::llround( spec.p2q * n / 2.0 ) );
  std::vector<char> used( n );
  std::vector<size_t> edge_order( graph.edges().size() );
  std::iota( edge_order.begin(), edge_order.end(), size_t{ 0 } );

  int32_t chain_qubit = static_cast<int32_t>( rng() % n );
  for ( int32_t cycle = 0; cycle < spec.target_depth; ++cycle )
  {
    std::fill( used.begin(), used.end(), 0 );
    int64_t pairs = 0;

    if ( want_2q )
    {
      // witness chain: one gate per cycle sharing a qubit with the previous chain gate
      auto const& nb = graph.neighbors( chain_qubit );
      int32_t const partner = nb[rng() % nb.size()];
      push_2q( chain_qubit, partner );
      used[chain_qubit] = used[partner] = 1;
      ++pairs;
      chain_qubit = ( rng() % 2 ) ? partner : chain_qubit;

      std::shuffle( edge_order.begin(), edge_order.end(), rng );
      for ( size_t ei : edge_order )
      {
        if ( pairs >= target_pairs )
          break;
        auto const& [a, b] = graph.edges()[ei];
        if ( !used[a] && !used[b] )
        {
          push_2q( a, b );
          used[a] = used[b] = 1;
          ++pairs;
        }
      }
    }
    else
    {
      push_1q( chain_qubit );
      used[chain_qubit] = 1;
    }

    if ( spec.p1q > 0.0 )
    {
      std::uniform_real_distribution<double> coin( 0.0, 1.0 );
      for ( int32_t q = 0; q < n; ++q )
      {
        if ( !used[q] && coin( rng ) < spec.p1q )
          push_1q( q );
      }
    }
  }

  out.scramble.resize( n );
  std::iota( out.scramble.begin(), out.scramble.end(), 0 );
  std::shuffle( out.scramble.begin(), out.scramble.end(), rng );
  out.scrambled = relabel_qubits( c, out.scramble );
  return out;
}

struct suite_entry
{
  std::string name;
  generated_circuit bench;
  uint64_t seed = 0;
};

/*! \brief Deterministic suite of `per_depth` circuits per requested depth. */
inline std::vector<suite_entry> make_suite( coupling_graph const& graph, std::vector<int32_t> const& depths,
                                            int32_t per_depth, uint64_t seed, double p1q = 0.479,
                                            double p2q = 0.271 )
{
  std::vector<suite_entry> suite;
  for ( int32_t t : depths )
  {
    for ( int32_t i = 0; i < per_depth; ++i )
    {
      bench_spec spec;
      spec.target_depth = t;
      spec.p1q = p1q;
      spec.p2q = p2q;
      spec.seed = detail::mix64( seed ^ detail::mix64( ( static_cast<uint64_t>( t ) << 20 ) | static_cast<uint64_t>( i ) ) );
      suite_entry e;
      e.seed = spec.seed;
      e.name = ( graph.name().empty() ? "bench" : graph.name() ) + "_q" + std::to_string( graph.num_qubits() ) +
               "_d" + std::to_string( t ) + "_i" + std::to_string( i );
      e.bench = generate( graph, spec );
      e.bench.scrambled.name = e.name;
      e.bench.unscrambled.name = e.name;
      suite.push_back( std::move( e ) );
    }
  }
  return suite;
}

/*! \brief Suite manifest: one record per circuit plus the generation knobs. */
inline nlohmann::json suite_manifest( coupling_graph const& graph, std::vector<suite_entry> const& suite,
                                      uint64_t seed, double p1q, double p2q )
{
  nlohmann::json j;
  j["schema_version"] = 1;
  j["graph"] = graph.name();
  j["num_qubits"] = graph.num_qubits();
  j["seed"] = seed;
  j["densities"] = { { "p1q", p1q }, { "p2q", p2q } };
  auto& arr = j["circuits"] = nlohmann::json::array();
  for ( suite_entry const& e : suite )
  {
    arr.push_back( { { "name", e.name },
                     { "qubits", e.bench.scrambled.num_qubits },
                     { "optimal_depth", e.bench.optimal_depth },
                     { "seed", e.seed } } );
  }
  return j;
}

} // namespace qlosure

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
  \file coupling_graph.hpp
  \brief Physical qubit connectivity: validated undirected graphs and generators
*/

#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <fstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

namespace qlosure
{

/*! \brief Undirected coupling graph over physical qubits.
 *
 * Connected, with no self-loops and no duplicate edges; both properties are
 * enforced at construction.  A SWAP may be applied to any edge.
 */
class coupling_graph
{
public:
  coupling_graph() = default;

  /*! \brief Builds and validates a graph from an edge list. */
  coupling_graph( int32_t num_qubits, std::vector<std::pair<int32_t, int32_t>> edge_list, std::string name = "" )
      : name_( std::move( name ) ), num_qubits_( num_qubits )
  {
    if ( num_qubits <= 0 )
      throw std::invalid_argument( "coupling_graph: qubit count must be positive" );
    for ( auto& [a, b] : edge_list )
    {
      if ( a == b )
        throw std::invalid_argument( "coupling_graph: self-loop at qubit " + std::to_string( a ) );
      if ( a < 0 || b < 0 || a >= num_qubits || b >= num_qubits )
        throw std::invalid_argument( "coupling_graph: edge endpoint out of range" );
      if ( a > b )
        std::swap( a, b );
    }
    std::sort( edge_list.begin(), edge_list.end() );
    if ( std::adjacent_find( edge_list.begin(), edge_list.end() ) != edge_list.end() )
      throw std::invalid_argument( "coupling_graph: duplicate edge" );
    edges_ = std::move( edge_list );

    adj_.assign( num_qubits_, {} );
    for ( auto const& [a, b] : edges_ )
    {
      adj_[a].push_back( b );
      adj_[b].push_back( a );
    }
    for ( auto& nb : adj_ )
      std::sort( nb.begin(), nb.end() );

    if ( !is_connected() )
      throw std::invalid_argument( "coupling_graph: graph is disconnected" );
  }

  int32_t num_qubits() const { return num_qubits_; }
  std::vector<std::pair<int32_t, int32_t>> const& edges() const { return edges_; }
  std::vector<int32_t> const& neighbors( int32_t p ) const { return adj_[p]; }
  std::string const& name() const { return name_; }
  void set_name( std::string name ) { name_ = std::move( name ); }

  bool adjacent( int32_t p, int32_t q ) const
  {
    auto const& nb = adj_[p];
    return std::binary_search( nb.begin(), nb.end(), q );
  }

  int32_t degree( int32_t p ) const { return static_cast<int32_t>( adj_[p].size() ); }

  int32_t max_degree() const
  {
    int32_t d = 0;
    for ( auto const& nb : adj_ )
      d = std::max<int32_t>( d, static_cast<int32_t>( nb.size() ) );
    return d;
  }

  /*! \brief BFS shortest path between two physical qubits (inclusive). */
  std::vector<int32_t> shortest_path( int32_t from, int32_t to ) const
  {
    std::vector<int32_t> parent( num_qubits_, -1 );
    std::vector<int32_t> queue{ from };
    parent[from] = from;
    for ( size_t head = 0; head < queue.size() && parent[to] < 0; ++head )
    {
      for ( int32_t w : adj_[queue[head]] )
      {
        if ( parent[w] < 0 )
        {
          parent[w] = queue[head];
          queue.push_back( w );
        }
      }
    }
    std::vector<int32_t> path;
    for ( int32_t v = to; v != from; v = parent[v] )
      path.push_back( v );
    path.push_back( from );
    std::reverse( path.begin(), path.end() );
    return path;
  }

  nlohmann::json to_json() const
  {
    nlohmann::json j;
    j["name"] = name_;
    j["num_qubits"] = num_qubits_;
    auto& e = j["edges"] = nlohmann::json::array();
    for ( auto const& [a, b] : edges_ )
      e.push_back( nlohmann::json::array( { a, b } ) );
    return j;
  }

private:
  bool is_connected() const
  {
    std::vector<char> seen( num_qubits_, 0 );
    std::vector<int32_t> stack{ 0 };
    seen[0] = 1;
    int32_t count = 1;
    while ( !stack.empty() )
    {
      int32_t v = stack.back();
      stack.pop_back();
      for ( int32_t w : adj_[v] )
      {
        if ( !seen[w] )
        {
          seen[w] = 1;
          ++count;
          stack.push_back( w );
        }
      }
    }
    return count == num_qubits_;
  }

  std::string name_;
  int32_t num_qubits_ = 0;
  std::vector<std::pair<int32_t, int32_t>> edges_;
  std::vector<std::vector<int32_t>> adj_;
};

/*! \brief Loads a coupling graph from JSON: {"num_qubits": N, "edges": [[a,b],...]}. */
inline coupling_graph load_coupling( std::string const& path )
{
  std::ifstream in( path );
  if ( !in )
    throw std::runtime_error( "cannot open coupling file: " + path );
  nlohmann::json j = nlohmann::json::parse( in );
  std::vector<std::pair<int32_t, int32_t>> edges;
  for ( auto const& e : j.at( "edges" ) )
    edges.emplace_back( e.at( 0 ).get<int32_t>(), e.at( 1 ).get<int32_t>() );
  std::string name = j.value( "name", std::string{} );
  return coupling_graph( j.at( "num_qubits" ).get<int32_t>(), std::move( edges ), name );
}

/*! \brief Path graph p0 - p1 - ... - p(n-1). */
inline coupling_graph gen_line( int32_t n )
{
  if ( n <= 0 )
    throw std::invalid_argument( "gen_line: need at least one qubit" );
  std::vector<std::pair<int32_t, int32_t>> edges;
  for ( int32_t i = 0; i + 1 < n; ++i )
    edges.emplace_back( i, i + 1 );
  return coupling_graph( n, std::move( edges ), "line" + std::to_string( n ) );
}

/*! \brief Grid with 8-neighbor connectivity.
 *
 * Each interior cell connects to its horizontal, vertical and diagonal
 * neighbors; edge and corner cells have correspondingly fewer links.
 */
inline coupling_graph gen_grid8( int32_t rows, int32_t cols )
{
  if ( rows <= 0 || cols <= 0 )
    throw std::invalid_argument( "gen_grid8: rows and cols must be positive" );
  auto id = [cols]( int32_t r, int32_t c ) { return r * cols + c; };
  std::vector<std::pair<int32_t, int32_t>> edges;
  for ( int32_t r = 0; r < rows; ++r )
  {
    for ( int32_t c = 0; c < cols; ++c )
    {
      // right, down, and the two downward diagonals; upward links come from earlier cells
      if ( c + 1 < cols )
        edges.emplace_back( id( r, c ), id( r, c + 1 ) );
      if ( r + 1 < rows )
        edges.emplace_back( id( r, c ), id( r + 1, c ) );
      if ( r + 1 < rows && c + 1 < cols )
        edges.emplace_back( id( r, c ), id( r + 1, c + 1 ) );
      if ( r + 1 < rows && c > 0 )
        edges.emplace_back( id( r, c ), id( r + 1, c - 1 ) );
    }
  }
  return coupling_graph( rows * cols, std::move( edges ),
                         "grid8_" + std::to_string( rows ) + "x" + std::to_string( cols ) );
}

/*! \brief Default bridge endpoints for gen_concat2x: the two lowest-index
 * qubits of degree 1 or 2.
 */
inline std::array<int32_t, 2> default_bridge_endpoints( coupling_graph const& g )
{
  std::array<int32_t, 2> ep{ -1, -1 };
  int found = 0;
  for ( int32_t p = 0; p < g.num_qubits() && found < 2; ++p )
  {
    if ( g.degree( p ) <= 2 )
      ep[found++] = p;
  }
  if ( found < 2 )
    throw std::invalid_argument( "gen_concat2x: no default bridge endpoints (pass them explicitly)" );
  return ep;
}

/*! \brief Two disjoint copies of `g` joined through two fresh bridge qubits.
 *
 * Each bridge pair (a, b) names one qubit per copy in the original index
 * space; bridge qubit i sits between qubit a_i of copy 0 and qubit b_i of
 * copy 1.  The result has 2*|g|+2 qubits: copy 0 keeps its indices, copy 1
 * is offset by |g|, and the bridges are the last two indices.
 */
inline coupling_graph gen_concat2x( coupling_graph const& g,
                                    std::vector<std::pair<int32_t, int32_t>> const& bridges )
{
  if ( bridges.size() != 2 )
    throw std::invalid_argument( "gen_concat2x: exactly two bridges required" );
  int32_t n = g.num_qubits();
  for ( auto const& [a, b] : bridges )
  {
    if ( a < 0 || a >= n || b < 0 || b >= n )
      throw std::invalid_argument( "gen_concat2x: bridge endpoint out of range" );
  }
  std::vector<std::pair<int32_t, int32_t>> edges;
  for ( auto const& [a, b] : g.edges() )
  {
    edges.emplace_back( a, b );
    edges.emplace_back( a + n, b + n );
  }
  for ( size_t i = 0; i < 2; ++i )
  {
    int32_t bridge = 2 * n + static_cast<int32_t>( i );
    edges.emplace_back( bridges[i].first, bridge );
    edges.emplace_back( bridge, bridges[i].second + n );
  }
  std::string name = g.name().empty() ? "concat2x" : g.name() + "_2x";
  return coupling_graph( 2 * n + 2, std::move( edges ), name );
}

/*! \brief gen_concat2x with the default bridge endpoints. */
inline coupling_graph gen_concat2x( coupling_graph const& g )
{
  auto ep = default_bridge_endpoints( g );
  return gen_concat2x( g, { { ep[0], ep[0] }, { ep[1], ep[1] } } );
}

} // namespace qlosure

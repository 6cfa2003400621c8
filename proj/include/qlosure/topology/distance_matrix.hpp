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
  \file distance_matrix.hpp
  \brief All-pairs SWAP distances between physical qubits
*/

#pragma once

#include "coupling_graph.hpp"

#include <cstdint>
#include <ostream>
#include <vector>

namespace qlosure
{

/*! \brief Symmetric matrix of minimum SWAP counts between physical qubits.
 *
 * Entry (p, q) is the unweighted shortest-path length from p to q in the
 * coupling graph, i.e. the number of SWAPs needed to make the pair adjacent
 * plus one.
 */
class distance_matrix
{
public:
  distance_matrix() = default;

  int32_t size() const { return n_; }

  int32_t operator()( int32_t p, int32_t q ) const { return d_[static_cast<size_t>( p ) * n_ + q]; }

  /*! \brief BFS from every node of a connected graph. */
  static distance_matrix apsp( coupling_graph const& g )
  {
    distance_matrix m;
    m.n_ = g.num_qubits();
    m.d_.assign( static_cast<size_t>( m.n_ ) * m.n_, -1 );
    std::vector<int32_t> queue;
    queue.reserve( m.n_ );
    for ( int32_t s = 0; s < m.n_; ++s )
    {
      int32_t* row = m.d_.data() + static_cast<size_t>( s ) * m.n_;
      queue.clear();
      queue.push_back( s );
      row[s] = 0;
      for ( size_t head = 0; head < queue.size(); ++head )
      {
        int32_t v = queue[head];
        for ( int32_t w : g.neighbors( v ) )
        {
          if ( row[w] < 0 )
          {
            row[w] = row[v] + 1;
            queue.push_back( w );
          }
        }
      }
    }
    return m;
  }

  void dump_csv( std::ostream& out ) const
  {
    for ( int32_t p = 0; p < n_; ++p )
    {
      for ( int32_t q = 0; q < n_; ++q )
        out << ( q ? "," : "" ) << ( *this )( p, q );
      out << "\r\n";
    }
  }

private:
  int32_t n_ = 0;
  std::vector<int32_t> d_;
};

} // namespace qlosure

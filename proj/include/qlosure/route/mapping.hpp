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
  \file mapping.hpp
  \brief Logical-to-physical qubit assignment
*/

#pragma once

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <vector>

namespace qlosure
{

/*! \brief Bijection between logical and physical qubits.
 *
 * Always a full permutation over the device size: when a circuit uses
 * fewer logical qubits than the device provides, the surplus logical
 * indices are virtual placeholders that simply occupy the remaining
 * slots.  Applying a SWAP on a physical pair exchanges the logical qubits
 * hosted there (composition with the transposition).
 */
class mapping
{
public:
  mapping() = default;

  explicit mapping( std::vector<int32_t> log2phys ) : log2phys_( std::move( log2phys ) )
  {
    int32_t const n = static_cast<int32_t>( log2phys_.size() );
    phys2log_.assign( n, -1 );
    for ( int32_t q = 0; q < n; ++q )
    {
      int32_t const p = log2phys_[q];
      if ( p < 0 || p >= n || phys2log_[p] >= 0 )
        throw std::invalid_argument( "mapping: not a bijection" );
      phys2log_[p] = q;
    }
  }

  static mapping identity( int32_t n )
  {
    std::vector<int32_t> v( n );
    std::iota( v.begin(), v.end(), 0 );
    return mapping( std::move( v ) );
  }

  int32_t size() const { return static_cast<int32_t>( log2phys_.size() ); }

  /*! \brief Physical qubit hosting logical q. */
  int32_t phys_of( int32_t q ) const { return log2phys_[q]; }

  /*! \brief Logical qubit hosted at physical p. */
  int32_t log_at( int32_t p ) const { return phys2log_[p]; }

  std::vector<int32_t> const& log_to_phys() const { return log2phys_; }
  std::vector<int32_t> const& phys_to_log() const { return phys2log_; }

  /*! \brief Exchanges the logical qubits hosted at p1 and p2. */
  void apply_swap( int32_t p1, int32_t p2 )
  {
    int32_t const q1 = phys2log_[p1];
    int32_t const q2 = phys2log_[p2];
    phys2log_[p1] = q2;
    phys2log_[p2] = q1;
    log2phys_[q1] = p2;
    log2phys_[q2] = p1;
  }

  bool operator==( mapping const& other ) const { return log2phys_ == other.log2phys_; }

private:
  std::vector<int32_t> log2phys_;
  std::vector<int32_t> phys2log_;
};

} // namespace qlosure

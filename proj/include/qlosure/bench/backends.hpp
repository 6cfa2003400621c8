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
  \file backends.hpp
  \brief Named backend resolution

  Accepted specifiers: `line:N`, `grid8:RxC`, the shipped device files
  `sherbrooke` (127 qubits) and `ankaa` (82 qubits), `sherbrooke2x` (two
  bridged copies of sherbrooke, 256 qubits), or a path to a coupling JSON
  file.  The shipped files are looked up in $QLOSURE_DATA_DIR, falling back
  to the build-time data directory.
*/

#pragma once

#include "../topology/coupling_graph.hpp"

#include <cstdlib>
#include <stdexcept>
#include <string>

namespace qlosure
{

inline std::string default_data_dir()
{
  if ( char const* env = std::getenv( "QLOSURE_DATA_DIR" ) )
    return env;
#ifdef QLOSURE_DEFAULT_DATA_DIR
  return QLOSURE_DEFAULT_DATA_DIR;
#else
  return "data";
#endif
}

inline coupling_graph resolve_backend( std::string const& spec )
{
  auto parse_dims = [&]( std::string const& s, char sep ) {
    auto const pos = s.find( sep );
    if ( pos == std::string::npos )
      throw std::invalid_argument( "backend '" + spec + "': expected <rows>" + std::string( 1, sep ) + "<cols>" );
    return std::pair<int32_t, int32_t>{ std::stoi( s.substr( 0, pos ) ), std::stoi( s.substr( pos + 1 ) ) };
  };

  if ( spec.rfind( "line:", 0 ) == 0 )
    return gen_line( std::stoi( spec.substr( 5 ) ) );
  if ( spec.rfind( "grid8:", 0 ) == 0 )
  {
    auto [r, c] = parse_dims( spec.substr( 6 ), 'x' );
    return gen_grid8( r, c );
  }
  if ( spec == "sherbrooke" )
    return load_coupling( default_data_dir() + "/sherbrooke_127.json" );
  if ( spec == "ankaa" )
    return load_coupling( default_data_dir() + "/ankaa_82.json" );
  if ( spec == "sherbrooke2x" )
    return gen_concat2x( load_coupling( default_data_dir() + "/sherbrooke_127.json" ) );
  return load_coupling( spec );
}

} // namespace qlosure

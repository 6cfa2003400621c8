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
  \file writer.hpp
  \brief OpenQASM 2.0 serialization
*/

#pragma once

#include "../circuit.hpp"

#include <algorithm>
#include <iomanip>
#include <sstream>
#include <string>

namespace qlosure
{

namespace detail
{

inline std::string format_param( double v )
{
  std::ostringstream ss;
  ss << std::setprecision( 17 ) << v;
  return ss.str();
}

} // namespace detail

/*! \brief Serializes a circuit back to OpenQASM 2.0 text.
 *
 * Round-trip contract: `parse_qasm( emit_qasm( c ) )` is structurally equal
 * to `c`.  A barrier covering every qubit is emitted in the compact
 * whole-register form.  The optional header comment is placed at the top,
 * one `//` line per input line.
 */
inline std::string emit_qasm( circuit const& c, std::string const& header_comment = "" )
{
  std::ostringstream out;
  if ( !header_comment.empty() )
  {
    std::istringstream lines( header_comment );
    std::string line;
    while ( std::getline( lines, line ) )
      out << "// " << line << "\n";
  }
  out << "OPENQASM 2.0;\n";
  out << "include \"qelib1.inc\";\n";
  out << "qreg q[" << c.num_qubits << "];\n";
  int32_t num_cbits = 0;
  for ( gate const& g : c.gates )
    num_cbits = std::max( num_cbits, g.cbit + 1 );
  if ( num_cbits > 0 )
    out << "creg c[" << num_cbits << "];\n";

  for ( gate const& g : c.gates )
  {
    switch ( g.kind )
    {
    case gate_kind::barrier:
    {
      bool whole_register = static_cast<int32_t>( g.qubits.size() ) == c.num_qubits;
      for ( size_t i = 0; whole_register && i < g.qubits.size(); ++i )
        whole_register = g.qubits[i] == static_cast<int32_t>( i );
      if ( whole_register )
      {
        out << "barrier q;\n";
      }
      else
      {
        out << "barrier ";
        for ( size_t i = 0; i < g.qubits.size(); ++i )
          out << ( i ? "," : "" ) << "q[" << g.qubits[i] << "]";
        out << ";\n";
      }
      break;
    }
    case gate_kind::measure:
      out << "measure q[" << g.qubits[0] << "] -> c[" << g.cbit << "];\n";
      break;
    default:
      out << g.name;
      if ( !g.params.empty() )
      {
        out << "(";
        for ( size_t i = 0; i < g.params.size(); ++i )
          out << ( i ? "," : "" ) << detail::format_param( g.params[i] );
        out << ")";
      }
      out << " ";
      for ( size_t i = 0; i < g.qubits.size(); ++i )
        out << ( i ? "," : "" ) << "q[" << g.qubits[i] << "]";
      out << ";\n";
      break;
    }
  }
  return out.str();
}

} // namespace qlosure

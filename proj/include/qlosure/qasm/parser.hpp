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
  \file parser.hpp
  \brief OpenQASM 2.0 parser for a practical standard-library subset

  Supported statements: the OPENQASM/include headers, one qreg/creg pair,
  applications of u1/u2/u3/rz/rx/ry/h/x/y/z/s/t/sdg/tdg/cx/cz/swap,
  barrier, and measure.  Gates of arity three or more (ccx, ...), custom
  gate definitions, opaque declarations and classical conditionals are
  rejected with positioned errors.
*/

#pragma once

#include "../circuit.hpp"

#include <cctype>
#include <cmath>
#include <cstdint>
#include <fstream>
#include <functional>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace qlosure
{

/*! \brief Parse failure with 1-based source position. */
class parse_error : public std::runtime_error
{
public:
  parse_error( std::string const& msg, int line, int column )
      : std::runtime_error( "qasm:" + std::to_string( line ) + ":" + std::to_string( column ) + ": " + msg ),
        line( line ), column( column )
  {
  }

  int line;
  int column;
};

namespace detail
{

struct qasm_token
{
  enum class kind : uint8_t
  {
    ident,
    number,
    string,
    symbol, // single char: ( ) [ ] , ; + - * / or the two-char ->
    end
  };

  kind k = kind::end;
  std::string text;
  double value = 0.0;
  int line = 1;
  int col = 1;
};

class qasm_lexer
{
public:
  explicit qasm_lexer( std::string const& text ) : src_( text ) {}

  qasm_token next()
  {
    skip_ws_and_comments();
    qasm_token t;
    t.line = line_;
    t.col = col_;
    if ( pos_ >= src_.size() )
    {
      t.k = qasm_token::kind::end;
      return t;
    }
    char c = src_[pos_];
    if ( std::isalpha( static_cast<unsigned char>( c ) ) || c == '_' )
    {
      size_t start = pos_;
      while ( pos_ < src_.size() && ( std::isalnum( static_cast<unsigned char>( src_[pos_] ) ) || src_[pos_] == '_' ) )
        advance();
      t.k = qasm_token::kind::ident;
      t.text = src_.substr( start, pos_ - start );
      return t;
    }
    if ( std::isdigit( static_cast<unsigned char>( c ) ) || ( c == '.' && pos_ + 1 < src_.size() && std::isdigit( static_cast<unsigned char>( src_[pos_ + 1] ) ) ) )
    {
      size_t start = pos_;
      while ( pos_ < src_.size() && ( std::isdigit( static_cast<unsigned char>( src_[pos_] ) ) || src_[pos_] == '.' ) )
        advance();
      if ( pos_ < src_.size() && ( src_[pos_] == 'e' || src_[pos_] == 'E' ) )
      {
        advance();
        if ( pos_ < src_.size() && ( src_[pos_] == '+' || src_[pos_] == '-' ) )
          advance();
        while ( pos_ < src_.size() && std::isdigit( static_cast<unsigned char>( src_[pos_] ) ) )
          advance();
      }
      t.k = qasm_token::kind::number;
      t.text = src_.substr( start, pos_ - start );
      try
      {
        t.value = std::stod( t.text );
      }
      catch ( std::exception const& )
      {
        throw parse_error( "malformed number '" + t.text + "'", t.line, t.col );
      }
      return t;
    }
    if ( c == '"' )
    {
      advance();
      size_t start = pos_;
      while ( pos_ < src_.size() && src_[pos_] != '"' )
        advance();
      if ( pos_ >= src_.size() )
        throw parse_error( "unterminated string", t.line, t.col );
      t.k = qasm_token::kind::string;
      t.text = src_.substr( start, pos_ - start );
      advance();
      return t;
    }
    if ( c == '-' && pos_ + 1 < src_.size() && src_[pos_ + 1] == '>' )
    {
      advance();
      advance();
      t.k = qasm_token::kind::symbol;
      t.text = "->";
      return t;
    }
    static const std::string singles = "()[],;+-*/=<>!";
    if ( singles.find( c ) != std::string::npos )
    {
      advance();
      t.k = qasm_token::kind::symbol;
      t.text = std::string( 1, c );
      return t;
    }
    throw parse_error( std::string( "unexpected character '" ) + c + "'", line_, col_ );
  }

private:
  void advance()
  {
    if ( src_[pos_] == '\n' )
    {
      ++line_;
      col_ = 1;
    }
    else
    {
      ++col_;
    }
    ++pos_;
  }

  void skip_ws_and_comments()
  {
    while ( pos_ < src_.size() )
    {
      char c = src_[pos_];
      if ( c == ' ' || c == '\t' || c == '\r' || c == '\n' )
      {
        advance();
      }
      else if ( c == '/' && pos_ + 1 < src_.size() && src_[pos_ + 1] == '/' )
      {
        while ( pos_ < src_.size() && src_[pos_] != '\n' )
          advance();
      }
      else
      {
        break;
      }
    }
  }

  std::string const& src_;
  size_t pos_ = 0;
  int line_ = 1;
  int col_ = 1;
};

struct gate_signature
{
  gate_kind kind;
  int num_params;
};

inline std::optional<gate_signature> standard_gate( std::string const& name )
{
  if ( name == "u1" || name == "rz" || name == "rx" || name == "ry" )
    return gate_signature{ gate_kind::one_qubit, 1 };
  if ( name == "u2" )
    return gate_signature{ gate_kind::one_qubit, 2 };
  if ( name == "u3" || name == "u" )
    return gate_signature{ gate_kind::one_qubit, 3 };
  if ( name == "h" || name == "x" || name == "y" || name == "z" || name == "s" || name == "t" || name == "sdg" || name == "tdg" )
    return gate_signature{ gate_kind::one_qubit, 0 };
  if ( name == "cx" || name == "cz" )
    return gate_signature{ gate_kind::two_qubit, 0 };
  if ( name == "swap" )
    return gate_signature{ gate_kind::swap, 0 };
  return std::nullopt;
}

} // namespace detail

/*! \brief Parses OpenQASM 2.0 text into a circuit.
 *
 * Gate ids are assigned 0..n-1 in textual order.  Multi-qubit register
 * references are flattened to plain indices.  Broadcast forms (`h q;`,
 * `measure q -> c;`) expand to one gate per qubit.
 */
inline circuit parse_qasm( std::string const& text, std::string const& name = "" )
{
  using detail::qasm_token;
  detail::qasm_lexer lex( text );
  qasm_token tok = lex.next();

  auto accept = [&]( char const* sym ) -> bool {
    if ( tok.k == qasm_token::kind::symbol && tok.text == sym )
    {
      tok = lex.next();
      return true;
    }
    return false;
  };
  auto expect = [&]( char const* sym ) {
    if ( !accept( sym ) )
      throw parse_error( std::string( "expected '" ) + sym + "' before '" + ( tok.k == qasm_token::kind::end ? "<eof>" : tok.text ) + "'", tok.line, tok.col );
  };
  auto expect_ident = [&]() -> qasm_token {
    if ( tok.k != qasm_token::kind::ident )
      throw parse_error( "expected identifier", tok.line, tok.col );
    qasm_token t = tok;
    tok = lex.next();
    return t;
  };
  auto expect_uint = [&]() -> int64_t {
    if ( tok.k != qasm_token::kind::number || tok.text.find_first_of( ".eE" ) != std::string::npos )
      throw parse_error( "expected integer", tok.line, tok.col );
    int64_t v = std::stoll( tok.text );
    tok = lex.next();
    return v;
  };

  // parameter expressions: +, -, *, /, unary minus, parentheses, pi, numbers
  std::function<double()> parse_expr;
  std::function<double()> parse_primary = [&]() -> double {
    if ( accept( "-" ) )
      return -parse_primary();
    if ( accept( "+" ) )
      return parse_primary();
    if ( accept( "(" ) )
    {
      double v = parse_expr();
      expect( ")" );
      return v;
    }
    if ( tok.k == qasm_token::kind::number )
    {
      double v = tok.value;
      tok = lex.next();
      return v;
    }
    if ( tok.k == qasm_token::kind::ident && tok.text == "pi" )
    {
      tok = lex.next();
      return M_PI;
    }
    throw parse_error( "expected parameter expression", tok.line, tok.col );
  };
  std::function<double()> parse_term = [&]() -> double {
    double v = parse_primary();
    for ( ;; )
    {
      if ( accept( "*" ) )
        v *= parse_primary();
      else if ( accept( "/" ) )
        v /= parse_primary();
      else
        return v;
    }
  };
  parse_expr = [&]() -> double {
    double v = parse_term();
    for ( ;; )
    {
      if ( accept( "+" ) )
        v += parse_term();
      else if ( accept( "-" ) )
        v -= parse_term();
      else
        return v;
    }
  };

  circuit c;
  c.name = name;
  std::string qreg_name;
  std::string creg_name;
  int64_t num_cbits = 0;
  bool saw_header = false;

  // argument = reg | reg[index]; returns index or -1 for a whole-register reference
  struct arg_ref
  {
    int64_t index;
    int line, col;
  };
  auto parse_arg = [&]( bool classical ) -> arg_ref {
    qasm_token id = expect_ident();
    std::string const& declared = classical ? creg_name : qreg_name;
    char const* what = classical ? "classical" : "quantum";
    if ( declared.empty() )
      throw parse_error( std::string( "no " ) + what + " register declared", id.line, id.col );
    if ( id.text != declared )
      throw parse_error( "undeclared register '" + id.text + "'", id.line, id.col );
    if ( accept( "[" ) )
    {
      int64_t idx = expect_uint();
      expect( "]" );
      int64_t size = classical ? num_cbits : c.num_qubits;
      if ( idx >= size )
        throw parse_error( "operand " + std::to_string( idx ) + " out of range for register '" + id.text + "[" + std::to_string( size ) + "]'", id.line, id.col );
      return { idx, id.line, id.col };
    }
    return { -1, id.line, id.col };
  };

  auto push_gate = [&]( gate g ) {
    g.id = static_cast<int32_t>( c.gates.size() );
    c.gates.push_back( std::move( g ) );
  };

  while ( tok.k != qasm_token::kind::end )
  {
    if ( tok.k != qasm_token::kind::ident )
      throw parse_error( "expected statement", tok.line, tok.col );
    qasm_token stmt = tok;
    tok = lex.next();

    if ( stmt.text == "OPENQASM" )
    {
      if ( tok.k != qasm_token::kind::number )
        throw parse_error( "expected version number", tok.line, tok.col );
      if ( tok.text != "2.0" && tok.text != "2" )
        throw parse_error( "unsupported OpenQASM version '" + tok.text + "'", tok.line, tok.col );
      tok = lex.next();
      expect( ";" );
      saw_header = true;
    }
    else if ( stmt.text == "include" )
    {
      if ( tok.k != qasm_token::kind::string )
        throw parse_error( "expected include file name", tok.line, tok.col );
      tok = lex.next();
      expect( ";" );
    }
    else if ( stmt.text == "qreg" )
    {
      if ( !qreg_name.empty() )
        throw parse_error( "multiple quantum registers are not supported", stmt.line, stmt.col );
      qasm_token id = expect_ident();
      expect( "[" );
      int64_t n = expect_uint();
      expect( "]" );
      expect( ";" );
      if ( n <= 0 )
        throw parse_error( "quantum register must have at least one qubit", id.line, id.col );
      qreg_name = id.text;
      c.num_qubits = static_cast<int32_t>( n );
    }
    else if ( stmt.text == "creg" )
    {
      if ( !creg_name.empty() )
        throw parse_error( "multiple classical registers are not supported", stmt.line, stmt.col );
      qasm_token id = expect_ident();
      expect( "[" );
      num_cbits = expect_uint();
      expect( "]" );
      expect( ";" );
      creg_name = id.text;
    }
    else if ( stmt.text == "barrier" )
    {
      gate g;
      g.kind = gate_kind::barrier;
      g.name = "barrier";
      bool whole_register = false;
      do
      {
        arg_ref a = parse_arg( false );
        if ( a.index < 0 )
          whole_register = true;
        else
          g.qubits.push_back( static_cast<int32_t>( a.index ) );
      } while ( accept( "," ) );
      expect( ";" );
      if ( whole_register )
      {
        g.qubits.clear();
        for ( int32_t q = 0; q < c.num_qubits; ++q )
          g.qubits.push_back( q );
      }
      for ( size_t a = 0; a < g.qubits.size(); ++a )
        for ( size_t b = a + 1; b < g.qubits.size(); ++b )
          if ( g.qubits[a] == g.qubits[b] )
            throw parse_error( "repeated operand in barrier", stmt.line, stmt.col );
      push_gate( std::move( g ) );
    }
    else if ( stmt.text == "measure" )
    {
      arg_ref q = parse_arg( false );
      expect( "->" );
      arg_ref cb = parse_arg( true );
      expect( ";" );
      if ( ( q.index < 0 ) != ( cb.index < 0 ) )
        throw parse_error( "measure must map register to register or bit to bit", stmt.line, stmt.col );
      if ( q.index < 0 )
      {
        if ( num_cbits < c.num_qubits )
          throw parse_error( "classical register too small for broadcast measure", stmt.line, stmt.col );
        for ( int32_t i = 0; i < c.num_qubits; ++i )
        {
          gate g;
          g.kind = gate_kind::measure;
          g.name = "measure";
          g.qubits = { i };
          g.cbit = i;
          push_gate( std::move( g ) );
        }
      }
      else
      {
        gate g;
        g.kind = gate_kind::measure;
        g.name = "measure";
        g.qubits = { static_cast<int32_t>( q.index ) };
        g.cbit = static_cast<int32_t>( cb.index );
        push_gate( std::move( g ) );
      }
    }
    else if ( stmt.text == "if" )
    {
      throw parse_error( "classical conditionals are not supported", stmt.line, stmt.col );
    }
    else if ( stmt.text == "gate" || stmt.text == "opaque" )
    {
      throw parse_error( "custom gate definitions are not supported", stmt.line, stmt.col );
    }
    else if ( stmt.text == "ccx" )
    {
      throw parse_error( "unsupported gate arity: 'ccx' acts on 3 qubits", stmt.line, stmt.col );
    }
    else
    {
      auto sig = detail::standard_gate( stmt.text );
      if ( !sig )
        throw parse_error( "unknown gate '" + stmt.text + "'", stmt.line, stmt.col );

      std::vector<double> params;
      if ( accept( "(" ) )
      {
        if ( !accept( ")" ) )
        {
          do
          {
            params.push_back( parse_expr() );
          } while ( accept( "," ) );
          expect( ")" );
        }
      }
      if ( static_cast<int>( params.size() ) != sig->num_params )
        throw parse_error( "gate '" + stmt.text + "' expects " + std::to_string( sig->num_params ) + " parameter(s), got " + std::to_string( params.size() ), stmt.line, stmt.col );

      std::vector<arg_ref> args;
      do
      {
        args.push_back( parse_arg( false ) );
      } while ( accept( "," ) );
      expect( ";" );

      if ( sig->kind == gate_kind::one_qubit && args.size() == 1 && args[0].index < 0 )
      {
        // broadcast over the whole register
        for ( int32_t q = 0; q < c.num_qubits; ++q )
        {
          gate g;
          g.kind = sig->kind;
          g.name = stmt.text;
          g.qubits = { q };
          g.params = params;
          push_gate( std::move( g ) );
        }
        continue;
      }
      for ( arg_ref const& a : args )
      {
        if ( a.index < 0 )
          throw parse_error( "whole-register operand not supported for gate '" + stmt.text + "'", a.line, a.col );
      }
      size_t expected_arity = sig->kind == gate_kind::one_qubit ? 1 : 2;
      if ( args.size() != expected_arity )
        throw parse_error( "unsupported gate arity: '" + stmt.text + "' expects " + std::to_string( expected_arity ) + " operand(s), got " + std::to_string( args.size() ), stmt.line, stmt.col );
      if ( expected_arity == 2 && args[0].index == args[1].index )
        throw parse_error( "repeated operand q[" + std::to_string( args[0].index ) + "] in gate '" + stmt.text + "'", stmt.line, stmt.col );

      gate g;
      g.kind = sig->kind;
      g.name = stmt.text;
      for ( arg_ref const& a : args )
        g.qubits.push_back( static_cast<int32_t>( a.index ) );
      g.params = std::move( params );
      push_gate( std::move( g ) );
    }
  }

  if ( !saw_header && !c.gates.empty() )
    throw parse_error( "missing OPENQASM 2.0 header", 1, 1 );
  return c;
}

/*! \brief Reads and parses a QASM file. */
inline circuit parse_qasm_file( std::string const& path )
{
  std::ifstream in( path );
  if ( !in )
    throw std::runtime_error( "cannot open file: " + path );
  std::ostringstream ss;
  ss << in.rdbuf();
  std::string stem = path;
  if ( auto slash = stem.find_last_of( "/\\" ); slash != std::string::npos )
    stem = stem.substr( slash + 1 );
  if ( auto dot = stem.find_last_of( '.' ); dot != std::string::npos )
    stem = stem.substr( 0, dot );
  return parse_qasm( ss.str(), stem );
}

} // namespace qlosure

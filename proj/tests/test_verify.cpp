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

#include <qlosure/qasm/parser.hpp>
#include <qlosure/route/router.hpp>
#include <qlosure/verify/metrics.hpp>
#include <qlosure/verify/verify.hpp>

#include "support/oracles.hpp"
#include "support/random_gen.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <random>

using namespace qlosure;

TEST_CASE( "depth of the worked trace is three" )
{
  circuit c = parse_qasm( "OPENQASM 2.0;\nqreg q[8];\ncx q[0],q[1];\ncx q[1],q[3];\ncx q[2],q[5];\ncx q[3],q[7];\n" );
  CHECK( depth( c ) == 3 );
  CHECK( depth( c ) == oracles::longest_path_depth( c ) );
}

TEST_CASE( "depth basics" )
{
  circuit single = parse_qasm( "OPENQASM 2.0;\nqreg q[2];\ncx q[0],q[1];\n" );
  CHECK( depth( single ) == 1 );
  CHECK( depth( circuit{} ) == 0 );

  circuit swaps = parse_qasm( "OPENQASM 2.0;\nqreg q[2];\nswap q[0],q[1];\ncx q[0],q[1];\n" );
  CHECK( depth( swaps, swap_depth_model::unit ) == 2 );
  CHECK( depth( swaps, swap_depth_model::three_cx ) == 4 );
}

TEST_CASE( "depth agrees with the longest-path evaluation on random circuits" )
{
  std::mt19937_64 rng( 41 );
  for ( int trial = 0; trial < 60; ++trial )
  {
    circuit c = testgen::random_circuit( rng, 2 + static_cast<int32_t>( rng() % 12 ),
                                         static_cast<int32_t>( rng() % 100 ) );
    CHECK( depth( c, swap_depth_model::unit ) == oracles::longest_path_depth( c, swap_depth_model::unit ) );
    CHECK( depth( c, swap_depth_model::three_cx ) == oracles::longest_path_depth( c, swap_depth_model::three_cx ) );
  }
}

TEST_CASE( "depth is at least the busiest qubit's gate count" )
{
  std::mt19937_64 rng( 42 );
  circuit c = testgen::random_circuit( rng, 8, 120 );
  std::vector<int64_t> touches( c.num_qubits, 0 );
  for ( gate const& g : c.gates )
  {
    if ( g.kind == gate_kind::barrier )
      continue;
    for ( int32_t q : g.qubits )
      ++touches[q];
  }
  CHECK( depth( c ) >= *std::max_element( touches.begin(), touches.end() ) );
}

TEST_CASE( "depth ignores order of commuting adjacent gates" )
{
  circuit a = parse_qasm( "OPENQASM 2.0;\nqreg q[4];\ncx q[0],q[1];\ncx q[2],q[3];\ncx q[1],q[2];\n" );
  circuit b = parse_qasm( "OPENQASM 2.0;\nqreg q[4];\ncx q[2],q[3];\ncx q[0],q[1];\ncx q[1],q[2];\n" );
  CHECK( depth( a ) == depth( b ) );
}

TEST_CASE( "depth factor guards its reference" )
{
  CHECK( depth_factor( 900, 900 ) == 1.0 );
  CHECK( depth_factor( 450, 300 ) == Catch::Approx( 1.5 ) );
  CHECK_THROWS_AS( depth_factor( 10, 0 ), std::invalid_argument );
}

TEST_CASE( "verify accepts routed output and reports layout-breaking edits" )
{
  std::mt19937_64 rng( 43 );
  coupling_graph g = gen_grid8( 3, 3 );
  circuit c = testgen::random_circuit( rng, 9, 80 );
  route_result rr = route( c, g );

  verification_report ok = verify_routed( c, rr.routed, rr.initial_map, g );
  CHECK( ok.ok );
  CHECK( ok.violations.empty() );

  // deleting one routing swap corrupts the permutation tracking
  circuit broken = rr.routed;
  auto it = std::find_if( broken.gates.begin(), broken.gates.end(),
                          []( gate const& gg ) { return gg.routing_swap; } );
  if ( it != broken.gates.end() )
  {
    broken.gates.erase( it );
    for ( size_t i = 0; i < broken.gates.size(); ++i )
      broken.gates[i].id = static_cast<int32_t>( i );
    verification_report bad = verify_routed( c, broken, rr.initial_map, g );
    CHECK_FALSE( bad.ok );
  }
}

TEST_CASE( "transposing independent gates is still a valid order" )
{
  circuit c = parse_qasm( "OPENQASM 2.0;\nqreg q[4];\ncx q[0],q[1];\ncx q[2],q[3];\n" );
  coupling_graph g = gen_line( 4 );
  route_result rr = route( c, g );
  REQUIRE( rr.swap_count == 0 );
  REQUIRE( rr.routed.gates.size() == 2 );
  std::swap( rr.routed.gates[0], rr.routed.gates[1] );
  rr.routed.gates[0].id = 0;
  rr.routed.gates[1].id = 1;
  verification_report vr = verify_routed( c, rr.routed, rr.initial_map, g );
  CHECK( vr.ok );
}

TEST_CASE( "transposing dependent gates is flagged as reordered" )
{
  circuit c = parse_qasm( "OPENQASM 2.0;\nqreg q[3];\ncx q[0],q[1];\ncx q[1],q[2];\n" );
  coupling_graph g = gen_line( 3 );
  route_result rr = route( c, g );
  REQUIRE( rr.swap_count == 0 );
  std::swap( rr.routed.gates[0], rr.routed.gates[1] );
  rr.routed.gates[0].id = 0;
  rr.routed.gates[1].id = 1;
  verification_report vr = verify_routed( c, rr.routed, rr.initial_map, g );
  REQUIRE_FALSE( vr.ok );
  CHECK( vr.violations[0].kind == violation_kind::reordered );
}

TEST_CASE( "missing and foreign gates are reported" )
{
  circuit c = parse_qasm( "OPENQASM 2.0;\nqreg q[2];\ncx q[0],q[1];\nh q[0];\n" );
  coupling_graph g = gen_line( 2 );
  route_result rr = route( c, g );

  circuit missing = rr.routed;
  missing.gates.pop_back();
  verification_report vm = verify_routed( c, missing, rr.initial_map, g );
  REQUIRE_FALSE( vm.ok );
  CHECK( std::any_of( vm.violations.begin(), vm.violations.end(),
                      []( violation const& v ) { return v.kind == violation_kind::missing_gate; } ) );

  circuit foreign = rr.routed;
  gate extra;
  extra.id = static_cast<int32_t>( foreign.gates.size() );
  extra.kind = gate_kind::one_qubit;
  extra.name = "x";
  extra.qubits = { 1 };
  foreign.gates.push_back( extra );
  verification_report vf = verify_routed( c, foreign, rr.initial_map, g );
  REQUIRE_FALSE( vf.ok );
  CHECK( std::any_of( vf.violations.begin(), vf.violations.end(),
                      []( violation const& v ) { return v.kind == violation_kind::wrong_operands; } ) );
}

TEST_CASE( "nonadjacent two-qubit gates are reported" )
{
  circuit c = parse_qasm( "OPENQASM 2.0;\nqreg q[3];\ncx q[0],q[2];\n" );
  coupling_graph g = gen_line( 3 );
  circuit fake;
  fake.num_qubits = 3;
  gate gg;
  gg.id = 0;
  gg.kind = gate_kind::two_qubit;
  gg.name = "cx";
  gg.qubits = { 0, 2 };
  fake.gates.push_back( gg );
  verification_report vr = verify_routed( c, fake, mapping::identity( 3 ), g );
  REQUIRE_FALSE( vr.ok );
  CHECK( vr.violations[0].kind == violation_kind::nonadjacent );
}

TEST_CASE( "verification report serializes to json" )
{
  verification_report r;
  r.ok = false;
  r.violations.push_back( { 7, violation_kind::nonadjacent, "detail" } );
  nlohmann::json j = to_json( r );
  CHECK( j["ok"] == false );
  CHECK( j["violations"][0]["gate_id"] == 7 );
  CHECK( j["violations"][0]["kind"] == "nonadjacent" );
}

TEST_CASE( "end-to-end property: routed circuits verify on all topologies" )
{
  std::mt19937_64 rng( 44 );
  std::vector<coupling_graph> graphs;
  graphs.push_back( gen_line( 12 ) );
  graphs.push_back( gen_grid8( 3, 4 ) );
  for ( int trial = 0; trial < 30; ++trial )
  {
    circuit c = testgen::random_circuit( rng, 4 + static_cast<int32_t>( rng() % 9 ),
                                         10 + static_cast<int32_t>( rng() % 120 ) );
    for ( coupling_graph const& g : graphs )
    {
      router_config cfg;
      cfg.seed = trial;
      route_result rr = route( c, g, cfg );
      verification_report vr = verify_routed( c, rr.routed, rr.initial_map, g );
      REQUIRE( vr.ok );
    }
  }
}

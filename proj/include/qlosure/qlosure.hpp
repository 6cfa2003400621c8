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
  \file qlosure.hpp
  \brief Umbrella header
*/

#pragma once

#include "affine/lift.hpp"
#include "bench/backends.hpp"
#include "bench/benchgen.hpp"
#include "bench/harness.hpp"
#include "bench/report.hpp"
#include "circuit.hpp"
#include "dep/depgraph.hpp"
#include "dep/lookahead.hpp"
#include "qasm/parser.hpp"
#include "qasm/writer.hpp"
#include "route/mapping.hpp"
#include "route/router.hpp"
#include "route/score.hpp"
#include "topology/coupling_graph.hpp"
#include "topology/distance_matrix.hpp"
#include "verify/metrics.hpp"
#include "verify/verify.hpp"

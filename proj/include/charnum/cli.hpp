/**
 * @file cli.hpp
 * @brief Command-line front end: compute/cache potentials, query single
 *        numbers, export per-class tables, and run the verification suite.
 */
#pragma once

#include "charnum/types.hpp"

namespace charnum {

/// One coefficient request, fully addressed.
struct QuerySpec {
    Target target = Target::Plane;
    Kind kind = Kind::G;
    CurveClass cls;
    ExponentTuple cell;
    int z = 1;  ///< degree of the fixed contact curve; plane F only
};

/// Parse arguments and dispatch; returns the process exit status.
int run_cli(int argc, char** argv);

}  // namespace charnum

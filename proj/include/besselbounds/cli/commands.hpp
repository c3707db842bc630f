#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "besselbounds/cli/csv.hpp"
#include "besselbounds/cli/grid.hpp"
#include "besselbounds/types.hpp"

namespace besselbounds::cli {

enum ExitCode : int {
    kExitOk = 0,
    kExitUsage = 1,
    kExitVerifyFailed = 2,
    kExitNonConvergence = 3,
};

// Grids reproducing the three figures:
//   1: ratio bounds at x = 100, nu in [0, 150] step 0.015
//   2: H bounds at x = 50, nu in [0, 200] step 0.01 (oracle eps 0.01)
//   3: exp(-x) I_0(x) bounds, x in [0, 100] step 0.01
GridSpec figure_grid(int figure);
inline constexpr double kFigure2Eps = 0.01;

std::vector<std::string> ratio_columns();
std::vector<Cell> ratio_row(const EvalPoint& p, double tol);

std::vector<std::string> hsum_columns();
std::vector<Cell> hsum_row(const EvalPoint& p, double eps);

std::vector<std::string> scaled_bessel_columns();
std::vector<Cell> scaled_bessel_row(double x, double tol);

// Full command line including the program name in args[0]. Writes CSV to
// `out` unless --out is given, diagnostics to `err`, and returns an ExitCode.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace besselbounds::cli

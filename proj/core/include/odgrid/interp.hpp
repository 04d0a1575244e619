#pragma once

#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "odgrid/util.hpp"

namespace odgrid {

enum class InterpMethod {
    stineman,      // 1D, default
    akima,         // 1D
    steffen,       // 1D, strictly monotonicity preserving
    bicubic,       // 2D symmetric
    keys,          // 2D symmetric, cubic convolution (uniform axes)
    cubic_linear,  // 2D asymmetric: cubic in x1, linear in x2
    trilinear,     // 3D
};

bool is_1d_method(InterpMethod m);
InterpMethod parse_interp_method(std::string_view name);
const char* to_string(InterpMethod m);

/// One interpolation sheet: strictly increasing abscissae, ordinates and the
/// per-knot slope estimates of the chosen scheme.  Slopes are computed once,
/// evaluation afterwards is a pure read.
struct Knots1D {
    std::vector<double> xs, ys, slopes;
    InterpMethod method = InterpMethod::stineman;
    std::optional<double> uniform_spacing;

    static Knots1D make(std::vector<double> xs, std::vector<double> ys, InterpMethod m,
                        std::optional<double> uniform = {});
};

/// Slope estimates per knot: Stineman (circle slopes), Akima, or Steffen.
/// Requires at least 6 knots and strictly increasing xs.
std::vector<double> slopes_1d(std::span<const double> xs, std::span<const double> ys, InterpMethod m);

/// Evaluate at x.  Exact at knots; linear extrapolation from the boundary
/// knot slope outside [xs.front(), xs.back()].
double eval_1d(const Knots1D& knots, double x);

/// Same evaluation on borrowed storage (engines keep their own sheets).
double eval_1d_span(std::span<const double> xs, std::span<const double> ys, std::span<const double> slopes,
                    InterpMethod m, std::optional<double> uniform, double x);

/// Bracketing interval index in [0, n-2]: O(1) lookup when the spacing is
/// uniform, binary search otherwise.
int locate_interval(std::span<const double> xs, std::optional<double> uniform, double x);

/// 2D value sheet on a rectangular (x1, x2) node set.  values(i, j) sits at
/// (x1s[i], x2s[j]).  prepare_* fills the per-step auxiliary data for the
/// evaluation family in use.
struct Lattice2D {
    std::vector<double> x1s, x2s;
    Grid2D values;

    // bicubic node derivatives (central differences, one-sided at edges)
    Grid2D d1, d2, d12;
    // cubic-x1 slopes per x2 row
    Grid2D row_slopes;
    InterpMethod row_method = InterpMethod::stineman;

    void prepare_bicubic();
    void prepare_rows(InterpMethod one_d);

    double eval_bicubic(double x1, double x2) const;
    double eval_keys(double x1, double x2, std::optional<double> clamp_floor = {}) const;
    double eval_cubic_linear(double x1, double x2) const;
};

struct Lattice3D {
    std::vector<double> x1s, x2s, x3s;
    Grid3D values;

    double eval_trilinear(double x1, double x2, double x3) const;
};

}  // namespace odgrid

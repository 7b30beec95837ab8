#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "hardylab/hardy.hpp"
#include "hardylab/weights.hpp"

namespace hardylab {

using RealFunction = std::function<double(double)>;

struct Bracket {
    double a = 0.0;
    double b = 0.0;
};

/// lo, lo + step, lo + 2 step, ..., with hi appended when the last step
/// falls short of it.
std::vector<double> scan_grid(double lo, double hi, double step);

/// 0.01 below t = 1000, 0.005 above.
double default_scan_step(double t_hi);

/// Every grid cell [a, b] with f(a) f(b) < 0. A grid point where f is exactly
/// zero between opposite-signed neighbours yields the bracket [x, x].
/// Tangential zeros produce nothing.
std::vector<Bracket> scan_sign_changes(const RealFunction& f, double lo, double hi, double step,
                                       unsigned workers = 1);
/// Same scan from precomputed samples.
std::vector<Bracket> sign_changes(const std::vector<double>& grid, const std::vector<double>& values);

/// Root inside a sign-changing bracket to within tol (TOMS 748, at most
/// 200 iterations). Throws ContractError if f(a) f(b) > 0.
double refine_root(const RealFunction& f, Bracket bracket, double tol);

enum class GramKind { First, Second, Third };
std::string to_string(GramKind kind);

struct GramPoint {
    GramKind kind = GramKind::First;
    std::int64_t index = 0;
    double t = 0.0;
};

/// t >= 10 with theta(t) = target (Newton from a Lambert-W start).
/// Throws DomainError if the solution would lie below t = 10.
double solve_theta(double target);

struct ThirdKindOptions {
    WeightMode mode = WeightMode::Sigmoid;
    PlanPolicy policy = PlanPolicy::Auto;
    std::optional<WeightPlan> plan;  ///< explicit plan, overrides policy
    double step = 0.01;
    double tol = 1e-10;
};

/// `count` consecutive Gram points starting at index n_from.
/// First: theta = (n-1) pi. Second: theta = (n-1) pi / 2.
/// Third: zeros of Z_0; the first zero found in the search window gets the
/// index of the first-kind Gram interval (theta in ((n-2)pi, (n-1)pi]) that
/// contains it and the rest are numbered consecutively.
std::vector<GramPoint> gram_points(GramKind kind, std::int64_t n_from, std::int64_t count,
                                   const ThirdKindOptions& third = {});

/// Identity of a scanned function: enough to rebuild it and to key caches.
struct FunctionLabel {
    enum class Kind { ZAlpha, YAlpha, Q, ZSequence, CosTheta, ZOracle, YOracle, ZRiemannSiegel };

    Kind kind = Kind::ZAlpha;
    double alpha = 0.5;
    std::int64_t index = 1;  ///< j for Q, k for ZSequence
    WeightMode mode = WeightMode::Sigmoid;
    PlanPolicy policy = PlanPolicy::Auto;
    std::optional<WeightPlan> plan;  ///< explicit plan, used frozen; overrides policy
    std::optional<PhasePerturbation> perturbation;

    /// Canonical description including the resolved plan for [lo, hi].
    std::string describe(double lo, double hi) const;
};

std::string to_string(FunctionLabel::Kind kind);
FunctionLabel::Kind parse_function_kind(const std::string& name);

/// Callable for the label over [lo, hi].
RealFunction make_function(const FunctionLabel& label, double lo, double hi);

struct ZeroList {
    std::string label;
    double lo = 0.0;
    double hi = 0.0;
    double step = 0.0;
    double refine_tol = 0.0;
    std::vector<double> zeros;
    std::vector<bool> tangent;  ///< parallel to zeros; true for even zeros
};

ZeroList zeros_of(const std::string& label, const RealFunction& f, double lo, double hi, double step, double tol,
                  unsigned workers = 1);
ZeroList zeros_of(const FunctionLabel& label, double lo, double hi, double step, double tol,
                  unsigned workers = 1);

struct EvenZero {
    double t = 0.0;
    double value = 0.0;
};

/// Local minima of |f| on the grid where f keeps its sign, polished by
/// Brent minimisation, reported when |f| < eps and f has the same sign on
/// both sides.
std::vector<EvenZero> detect_even_zero(const RealFunction& f, double lo, double hi, double step, double eps);

/// Adds even zeros to a sign-change list, keeping it sorted.
void merge_even_zeros(ZeroList& list, const std::vector<EvenZero>& even);

}  // namespace hardylab

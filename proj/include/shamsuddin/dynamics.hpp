#pragma once

// Iteration and fixed points of polynomial maps of the plane.

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "shamsuddin/bigrat.hpp"
#include "shamsuddin/error.hpp"
#include "shamsuddin/poly_map.hpp"

namespace shamsuddin {

/// A map whose Jacobian determinant is a nonzero constant. A constant
/// Jacobian is only a necessary condition for invertibility; `inverse` is set
/// when an explicit two-sided inverse was constructed and checked.
struct AutomorphismCert {
  PolyMap map;
  BigRat jacobian_det;
  std::optional<PolyMap> inverse;

  bool necessary_condition_only() const { return !inverse.has_value(); }
  /// Re-checks the Jacobian and, when present, both compositions with the inverse.
  bool verify() const;
};

struct AutomorphismRejection {
  BPoly jacobian_det;  // not a nonzero constant
};

using AutomorphismVerdict = std::variant<AutomorphismCert, AutomorphismRejection>;

/// Accepts iff the Jacobian determinant is a nonzero constant. The inverse is
/// built by peeling off elementary maps (x - l*y^k, y) / (x, y - l*x^k) until
/// an affine map remains; maps that are not such compositions keep no inverse.
AutomorphismVerdict validate_automorphism(const PolyMap& rho);

/// Stored-term limit for a single iterate.
inline constexpr std::size_t kIterationTermBudget = 1'000'000;

class IterationBlowUp : public OperationError {
 public:
  explicit IterationBlowUp(int last_completed)
      : OperationError("iteration blow-up after n = " + std::to_string(last_completed)),
        last_completed_(last_completed) {}
  int last_completed() const { return last_completed_; }

 private:
  int last_completed_;
};

struct DynDegreeEstimate {
  std::vector<int> degree_sequence;      // deg rho^n, n = 1..N
  std::vector<double> per_step_roots;    // (deg rho^n)^(1/n)
  bool bounded = false;                  // last min(3, N) degrees equal
  /// deg rho^N / deg rho^(N-1) (deg rho when N = 1); exactly 1 for a bounded tail.
  BigRat delta_estimate;
};

/// Throws IterationBlowUp when an iterate exceeds `term_budget` stored terms.
DynDegreeEstimate degree_sequence(const PolyMap& rho, int n_max, std::size_t term_budget = kIterationTermBudget);

enum class ClosureVerdict { ExistsOverClosure, NoneOverClosure, InfinitelyMany, Unknown };

std::string to_string(ClosureVerdict v);

struct FixedPointReport {
  std::vector<std::pair<BigRat, BigRat>> rational_points;  // sorted
  ClosureVerdict closure_verdict = ClosureVerdict::Unknown;
};

/// Solves f = x, g = y. Throws OperationError for the identity map.
FixedPointReport fixed_points(const PolyMap& rho);

/// Smallest n <= n_max with rho^n = id.
std::optional<int> order_detect(const PolyMap& rho, int n_max, std::size_t term_budget = kIterationTermBudget);

}  // namespace shamsuddin

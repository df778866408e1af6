#include <cmath>
#include <limits>
#include <vector>

#include "doctest.h"
#include "gnio/datagen.hpp"
#include "gnio/grid_oracle.hpp"
#include "gnio/pwl.hpp"

using namespace gnio;

namespace {
const double kInf = std::numeric_limits<double>::infinity();
}

TEST_SUITE("oracle") {

TEST_CASE("grid solve reproduces the fusion optimum") {
  auto inst = make_instance({0, 2}, {.5, .5}, {kInf}, {kInf}, LossKind::Square);
  auto sol = grid_solve(inst, default_grid(inst, 1e-3));
  CHECK(std::abs(sol.objective - 1.0) <= 1e-3);
  CHECK(std::abs(sol.x[0] - sol.x[1]) <= 1e-12);  // hard fusion on the grid
}

TEST_CASE("grid solve reproduces the weighted median optimum") {
  auto inst = make_instance({1, 3, 10}, {1, 1, 1}, {kInf, kInf}, {kInf, kInf},
                            LossKind::Abs);
  auto sol = grid_solve(inst, default_grid(inst, 1e-3));
  CHECK(std::abs(sol.objective - 9.0) <= 1e-3);
}

TEST_CASE("single point grid solve lands on the data value") {
  auto inst = make_instance({0.5}, {2.0}, {}, {}, LossKind::Square);
  auto sol = grid_solve(inst, default_grid(inst, 1e-3));
  CHECK(std::abs(sol.x[0] - 0.5) <= 1e-9);
  CHECK(sol.objective <= 1e-12);
}

TEST_CASE("grid objective never increases under refinement") {
  auto inst = gen_instance({PatternName::Fused, 8, 31}, WeightScheme::FixedL2,
                           LossKind::Square);
  double prev = std::numeric_limits<double>::infinity();
  for (double step : {1e-1, 1e-2, 1e-3}) {
    auto sol = grid_solve(inst, default_grid(inst, step));
    CHECK(sol.objective <= prev + 1e-12);
    prev = sol.objective;
  }
}

TEST_CASE("grid output respects hard order constraints") {
  auto inst = gen_instance({PatternName::Isotonic, 9, 12},
                           WeightScheme::FixedL1, LossKind::Abs);
  auto sol = grid_solve(inst, default_grid(inst, 1e-2));
  for (std::size_t i = 0; i + 1 < sol.x.size(); ++i) {
    CHECK(sol.x[i] <= sol.x[i + 1]);
  }
  CHECK(std::isfinite(sol.objective));
}

TEST_CASE("oversized grids are rejected") {
  auto inst = make_instance({0, 2}, {1, 1}, {1}, {1}, LossKind::Square);
  CHECK_THROWS_AS(grid_solve(inst, GridSpec{0.0, 1e3, 1e-6}), GnioError);
  // Also guarded: total state space n * m.
  auto big = gen_instance({PatternName::Uniform, 500, 1}, WeightScheme::FixedL2,
                          LossKind::Square);
  CHECK_THROWS_AS(grid_solve(big, default_grid(big, 1e-3)), GnioError);
}

TEST_CASE("slope bound sums loss slopes and finite penalties") {
  auto l1 = make_instance({0, 0}, {1, 2}, {3}, {0}, LossKind::Abs);
  CHECK(slope_bound(l1, GridSpec{-1, 1, 1e-3}) == doctest::Approx(6.0));

  auto l2 = make_instance({0.0}, {0.5}, {}, {}, LossKind::Square);
  // 2 w max|x - y| over the box = 2 * 0.5 * 1.
  CHECK(slope_bound(l2, GridSpec{-1, 1, 1e-3}) == doctest::Approx(1.0));

  // Infinite penalties do not enter the bound.
  auto hard = make_instance({0, 0}, {1, 1}, {kInf}, {5}, LossKind::Abs);
  CHECK(slope_bound(hard, GridSpec{-1, 1, 1e-3}) == doctest::Approx(7.0));
}

TEST_CASE("certificate accepts the fusion optimum and rejects others") {
  auto inst = make_instance({0, 2}, {.5, .5}, {kInf}, {kInf}, LossKind::Square);
  std::vector<double> opt{1, 1};
  CHECK(perturbation_certificate(inst, opt, 1e-4));
  // Feasible but off-optimum: every single-coordinate move is blocked by a
  // hard constraint, yet shifting the whole block toward the mean descends.
  std::vector<double> block{0, 0};
  CHECK_FALSE(perturbation_certificate(inst, block, 1e-4));
}

TEST_CASE("certificate catches single-coordinate descent directions") {
  auto inst = make_instance({0, 2}, {1, 1}, {0}, {0}, LossKind::Square);
  std::vector<double> off{0.5, 2};  // x0 wants to move back to 0
  CHECK_FALSE(perturbation_certificate(inst, off, 1e-4));
  std::vector<double> opt{0, 2};
  CHECK(perturbation_certificate(inst, opt, 1e-4));
}

TEST_CASE("certificate requires a feasible base point") {
  auto inst = make_instance({1, 0}, {.5, .5}, {kInf}, {0}, LossKind::Square);
  std::vector<double> infeasible{1, 0};
  CHECK_THROWS_AS(perturbation_certificate(inst, infeasible, 1e-4), GnioError);
}

TEST_CASE("certificate passes on l1 solver output across seeds") {
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    auto inst = gen_instance({PatternName::Mixed, 12, seed},
                             WeightScheme::FixedL1, LossKind::Abs);
    auto sol = solve_l1(inst);
    CAPTURE(seed);
    CHECK(perturbation_certificate(inst, sol.x, 1e-5));
  }
}

TEST_CASE("grid objective upper-bounds the engine objective") {
  // The grid point set is feasible for the continuous problem, so the grid
  // optimum can only sit above the true one (modulo rounding noise).
  for (std::uint64_t seed = 1; seed <= 5; ++seed) {
    auto inst = gen_instance({PatternName::Uniform, 10, seed},
                             WeightScheme::FixedL1, LossKind::Abs);
    auto sol = solve_l1(inst);
    auto ref = grid_solve(inst, default_grid(inst, 1e-3));
    CHECK(sol.objective <= ref.objective + 1e-9);
  }
}

}  // TEST_SUITE("oracle")

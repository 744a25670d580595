#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <string>
#include <vector>

#include <Eigen/Cholesky>

#include "rolling/batch.hpp"
#include "rolling/commands.hpp"
#include "rolling/sampling.hpp"

namespace rolling {

namespace {

constexpr int kFullSamples = 1000;
constexpr int kReducedSamples = 1000;
constexpr int kChartSamples = 100;
constexpr double kFdStep = 1e-6;

struct FamilyResult {
  std::string name;
  double worst;
  double limit;
  bool pass;
  int failures;  // samples whose evaluation raised an error
  std::string detail = {};
};

void print(std::ostream& out, const FamilyResult& r) {
  char line[256];
  if (r.detail.empty()) {
    std::snprintf(line, sizeof(line), "%s %-28s worst=%.3e limit=%.1e errors=%d\n",
                  r.pass ? "PASS" : "FAIL", r.name.c_str(), r.worst, r.limit, r.failures);
  } else {
    std::snprintf(line, sizeof(line), "%s %-28s %s errors=%d\n", r.pass ? "PASS" : "FAIL",
                  r.name.c_str(), r.detail.c_str(), r.failures);
  }
  out << line;
}

FamilyResult make_result(std::string name, double worst, double limit, int failures) {
  return FamilyResult{std::move(name), worst, limit, failures == 0 && worst <= limit, failures};
}

// The corrupted build negates the gravity torque m g s x (A^T k).
FullField check_field(const Scene& scene, bool corrupt) {
  if (!corrupt) return make_full_field(scene);
  return [scene](const FullState& state) {
    FullTangent t = vector_field_full(scene, state);
    const Vec3 s = scene.body.surface.eval(state.yM);
    const Vec3 torque =
        scene.body.mass * scene.body.gravity * s.cross(state.A.transpose() * unit_k());
    t.dOmega -= 2.0 * augmented_inertia(scene.body, s).llt().solve(torque);
    return t;
  };
}

std::vector<FullState> sample_full(const Scene& scene, Rng& rng, int n) {
  std::vector<FullState> states;
  states.reserve(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) states.push_back(random_full_state(scene, rng));
  return states;
}

FamilyResult energy_invariance_full(const CheckOptions& opts, Rng& rng) {
  double worst = 0.0;
  int failures = 0;
  for (const auto& [name, scene] : reference_scenes()) {
    const auto states = sample_full(scene, rng, kFullSamples / 4);
    const auto rates =
        energy_rates(scene, check_field(scene, opts.corrupt_gravity_torque), states, kFdStep);
    for (const auto& r : rates) {
      if (r.error) {
        ++failures;
        continue;
      }
      worst = std::max(worst, std::abs(r.rate) / (1.0 + std::abs(r.energy)));
    }
  }
  return make_result("energy_invariance_full", worst, 1e-6, failures);
}

FamilyResult tangent_membership(const CheckOptions& opts, Rng& rng) {
  double worst = 0.0;
  int failures = 0;
  for (const auto& [name, scene] : reference_scenes()) {
    const auto states = sample_full(scene, rng, kFullSamples / 4);
    const auto fields = evaluate_fields(check_field(scene, opts.corrupt_gravity_torque), states);
    for (std::size_t i = 0; i < states.size(); ++i) {
      if (fields[i].error) {
        ++failures;
        continue;
      }
      worst = std::max(worst, tangent_membership_residual(scene, states[i], fields[i].tangent));
    }
  }
  return make_result("tangent_membership", worst, 1e-10, failures);
}

FamilyResult contact_preservation(const CheckOptions& opts, Rng& rng) {
  double worst = 0.0;
  int failures = 0;
  for (const auto& [name, scene] : reference_scenes()) {
    const auto states = sample_full(scene, rng, kFullSamples / 4);
    const auto fields = evaluate_fields(check_field(scene, opts.corrupt_gravity_torque), states);
    auto mismatch = [&scene](const FullState& s) -> Vec3 {
      return s.A * normal(scene.body.surface, s.yM) - normal(scene.world, s.yH);
    };
    for (std::size_t i = 0; i < states.size(); ++i) {
      if (fields[i].error) {
        ++failures;
        continue;
      }
      const Vec3 rate = (mismatch(advance_euler(states[i], fields[i].tangent, kFdStep)) -
                         mismatch(advance_euler(states[i], fields[i].tangent, -kFdStep))) /
                        (2.0 * kFdStep);
      worst = std::max(worst, rate.norm());
    }
  }
  return make_result("contact_preservation", worst, 1e-6, failures);
}

FamilyResult shape_operator_oracle(Rng& rng) {
  const std::vector<SurfaceChart> charts{
      SurfaceChart::plane(-1), SurfaceChart::sphere(0.7, Vec3(0.1, -0.05, 0.08)),
      SurfaceChart::ellipsoid(0.6, 0.8, 1.2), SurfaceChart::paraboloid(0.5, -0.3)};
  double worst = 0.0;
  for (const auto& chart : charts) {
    const ChartDomain region = sampling_region(chart);
    for (int i = 0; i < kChartSamples; ++i) {
      const Vec2 y = rng.uniform2(region.lo, region.hi);
      Vec2 dir = rng.uniform2(Vec2(-1, -1), Vec2(1, 1));
      const Vec3 v = chart.jacobian(y) * dir;
      const Vec3 dn = (normal(chart, y + kFdStep * dir) - normal(chart, y - kFdStep * dir)) /
                      (2.0 * kFdStep);
      worst = std::max(worst, (dn + weingarten_ambient(chart, y) * v).norm());
    }
  }
  return make_result("shape_operator_oracle", worst, 1e-6, 0);
}

std::vector<NamedScene> planar_scenes() {
  std::vector<NamedScene> out;
  for (auto& ns : reference_scenes()) {
    if (ns.scene.is_planar()) out.push_back(ns);
  }
  return out;
}

FamilyResult reduction_commutes(Rng& rng) {
  double worst = 0.0;
  int failures = 0;
  for (const auto& [name, scene] : planar_scenes()) {
    for (int i = 0; i < kReducedSamples / 2; ++i) {
      const ReducedState r = random_reduced_state(scene.body, rng);
      const double theta = rng.uniform(0.0, 2.0 * std::numbers::pi);
      const Vec2 x0 = rng.uniform2(Vec2(-2, -2), Vec2(2, 2));
      try {
        const FullTangent full = vector_field_full(scene, embed_reduced_in_full(scene, r, theta, x0));
        const ReducedTangent red = vector_field_reduced(scene.body, r);
        const double scale = 1.0 + red.dy.norm() + red.dOmega.norm();
        const double dev = (full.dyM - red.dy).norm() + (full.dOmega - red.dOmega).norm();
        worst = std::max(worst, dev / scale);
      } catch (const RollingError&) {
        ++failures;
      }
    }
  }
  return make_result("reduction_commutes", worst, 1e-9, failures);
}

FamilyResult reduced_forms_agree(Rng& rng) {
  const RigidBody body = reference_ellipsoid_body();
  double worst = 0.0;
  int failures = 0;
  for (int i = 0; i < kReducedSamples; ++i) {
    const ReducedState r = random_reduced_state(body, rng);
    try {
      const ReducedTangent a = vector_field_reduced(body, r);
      const ReducedTangent b = vector_field_reduced_coords(body, r);
      worst = std::max({worst, (a.dy - b.dy).cwiseAbs().maxCoeff(),
                        (a.dOmega - b.dOmega).cwiseAbs().maxCoeff()});
    } catch (const RollingError&) {
      ++failures;
    }
  }
  return make_result("reduced_forms_agree", worst, 1e-10, failures);
}

FamilyResult energy_invariance_reduced(Rng& rng) {
  double worst = 0.0;
  int failures = 0;
  for (const auto& [name, scene] : planar_scenes()) {
    std::vector<ReducedState> states;
    for (int i = 0; i < kReducedSamples / 2; ++i) {
      states.push_back(random_reduced_state(scene.body, rng));
    }
    for (const auto& r : energy_rates(scene.body, make_reduced_field(scene.body), states, kFdStep)) {
      if (r.error) {
        ++failures;
        continue;
      }
      worst = std::max(worst, std::abs(r.rate) / (1.0 + std::abs(r.energy)));
    }
  }
  return make_result("energy_invariance_reduced", worst, 1e-6, failures);
}

// Energy drift of a sphere-on-plane run at steps h and h/2; a fourth order
// scheme gives a ratio close to 16.
FamilyResult integrator_order(const CheckOptions& opts) {
  const Scene scene = reference_scenes().front().scene;
  const FullState state0 =
      make_full_state(scene, Vec2(1.3, 0.4), Vec2::Zero(), 0.0, Vec3(1.5, -2.0, 3.0));
  auto drift = [&](double h) {
    IntegratorConfig cfg;
    cfg.h = h;
    cfg.T = 2.0;
    const auto traj =
        integrate(scene, check_field(scene, opts.corrupt_gravity_torque), state0, cfg);
    double d = 0.0;
    for (double e : traj.energy) d = std::max(d, std::abs(e - traj.energy.front()));
    return d;
  };
  double ratio = 0.0;
  int failures = 0;
  try {
    ratio = drift(0.02) / drift(0.01);
  } catch (const RollingError&) {
    failures = 1;
  }
  FamilyResult r = make_result("integrator_order", std::abs(ratio - 16.0), 4.0, failures);
  char detail[96];
  std::snprintf(detail, sizeof(detail), "ratio=%.3f range=[12,20]", ratio);
  r.detail = detail;
  return r;
}

}  // namespace

int cmd_check(const CheckOptions& options, std::ostream& out) {
  Rng rng(options.seed);
  out << "invariant check, seed " << options.seed << '\n';
  std::vector<FamilyResult> results;
  results.push_back(energy_invariance_full(options, rng));
  results.push_back(tangent_membership(options, rng));
  results.push_back(contact_preservation(options, rng));
  results.push_back(shape_operator_oracle(rng));
  results.push_back(reduction_commutes(rng));
  results.push_back(reduced_forms_agree(rng));
  results.push_back(energy_invariance_reduced(rng));
  results.push_back(integrator_order(options));
  bool all = true;
  for (const auto& r : results) {
    print(out, r);
    all = all && r.pass;
  }
  out << (all ? "all invariants hold\n" : "invariant failures detected\n");
  return all ? kExitOk : kExitMismatch;
}

}  // namespace rolling

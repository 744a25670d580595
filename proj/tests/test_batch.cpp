#include <gtest/gtest.h>

#include <cmath>
#include <cstring>
#include <vector>

#include "rolling/batch.hpp"
#include "rolling/sampling.hpp"

namespace rolling {
namespace {

bool same_bits(double a, double b) { return std::memcmp(&a, &b, sizeof a) == 0; }

template <class V>
bool same_bits(const V& a, const V& b) {
  for (int i = 0; i < a.size(); ++i)
    if (!same_bits(a(i), b(i))) return false;
  return true;
}

std::vector<FullState> sample_states(const Scene& scene, int n, std::uint64_t seed) {
  Rng rng(seed);
  std::vector<FullState> out;
  for (int i = 0; i < n; ++i) out.push_back(random_full_state(scene, rng));
  return out;
}

TEST(EnergyRate, FullFieldConservesEnergy) {
  int total = 0;
  for (const auto& [name, scene] : reference_scenes()) {
    const auto states = sample_states(scene, 250, 100 + total);
    const auto rates = energy_rates(scene, make_full_field(scene), states, 1e-6);
    for (const auto& r : rates) {
      ASSERT_FALSE(r.error.has_value()) << name;
      EXPECT_LE(std::abs(r.rate), 1e-6 * (1.0 + std::abs(r.energy))) << name;
    }
    total += static_cast<int>(rates.size());
  }
  EXPECT_EQ(total, 1000);
}

TEST(EnergyRate, ReducedFieldConservesEnergy) {
  const RigidBody body = reference_ellipsoid_body();
  Rng rng(200);
  std::vector<ReducedState> states;
  for (int i = 0; i < 500; ++i) states.push_back(random_reduced_state(body, rng));
  for (const auto& r : energy_rates(body, make_reduced_field(body), states, 1e-6)) {
    ASSERT_FALSE(r.error.has_value());
    EXPECT_LE(std::abs(r.rate), 1e-6 * (1.0 + std::abs(r.energy)));
  }
}

// Negative control: the rate oracle is sensitive enough to notice a wrong
// gravity torque.
TEST(EnergyRate, DetectsCorruptedTorque) {
  const Scene scene = reference_scenes()[2].scene;
  const FullField good = make_full_field(scene);
  const FullField bad = [&](const FullState& s) {
    FullTangent t = good(s);
    t.dOmega *= 1.0 + 1e-3;
    return t;
  };
  const auto states = sample_states(scene, 50, 300);
  double worst = 0.0;
  for (const auto& r : energy_rates(scene, bad, states, 1e-6)) {
    worst = std::max(worst, std::abs(r.rate) / (1.0 + std::abs(r.energy)));
  }
  EXPECT_GT(worst, 1e-6);
}

TEST(Batch, ParallelMatchesSerialBitwise) {
  const Scene scene = reference_scenes()[3].scene;
  auto states = sample_states(scene, 2000, 400);
  // A few failing samples, to check that errors stay attached to their index.
  states[17].yM(0) = -1.0;
  states[1234].yH(0) = 10.0;
  const FullField field = make_full_field(scene);

  const auto par = evaluate_fields(field, states);
  const auto ser = evaluate_fields_serial(field, states);
  ASSERT_EQ(par.size(), states.size());
  ASSERT_EQ(ser.size(), states.size());
  for (std::size_t i = 0; i < states.size(); ++i) {
    ASSERT_EQ(par[i].error, ser[i].error) << i;
    EXPECT_TRUE(same_bits(par[i].tangent.dyM, ser[i].tangent.dyM)) << i;
    EXPECT_TRUE(same_bits(par[i].tangent.dyH, ser[i].tangent.dyH)) << i;
    EXPECT_TRUE(same_bits(par[i].tangent.dOmega, ser[i].tangent.dOmega)) << i;
    EXPECT_TRUE(same_bits(par[i].tangent.Omega_frame, ser[i].tangent.Omega_frame)) << i;
  }
  EXPECT_EQ(par[17].error, ErrorKind::ChartBoundary);
  EXPECT_EQ(par[1234].error, ErrorKind::ChartBoundary);
  EXPECT_FALSE(par[0].error.has_value());

  const auto rp = energy_rates(scene, field, states, 1e-6);
  const auto rs = energy_rates_serial(scene, field, states, 1e-6);
  for (std::size_t i = 0; i < states.size(); ++i) {
    ASSERT_EQ(rp[i].error, rs[i].error);
    EXPECT_TRUE(same_bits(rp[i].rate, rs[i].rate)) << i;
    EXPECT_TRUE(same_bits(rp[i].energy, rs[i].energy)) << i;
  }
}

TEST(Batch, ReducedParallelMatchesSerial) {
  const RigidBody body = reference_ellipsoid_body();
  Rng rng(500);
  std::vector<ReducedState> states;
  for (int i = 0; i < 1000; ++i) states.push_back(random_reduced_state(body, rng));
  const ReducedField field = make_reduced_field(body);
  const auto a = energy_rates(body, field, states, 1e-6);
  const auto b = energy_rates_serial(body, field, states, 1e-6);
  ASSERT_EQ(a.size(), b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    EXPECT_TRUE(same_bits(a[i].rate, b[i].rate));
    EXPECT_TRUE(same_bits(a[i].energy, b[i].energy));
  }
}

TEST(Batch, EmptyInput) {
  const Scene scene = reference_scenes()[0].scene;
  EXPECT_TRUE(evaluate_fields(make_full_field(scene), std::span<const FullState>{}).empty());
}

TEST(EnergyRate, SingleStateHelperMatchesBatch) {
  const Scene scene = reference_scenes()[1].scene;
  const auto states = sample_states(scene, 3, 600);
  const FullField field = make_full_field(scene);
  const auto batch = energy_rates_serial(scene, field, states, 1e-6);
  for (std::size_t i = 0; i < states.size(); ++i) {
    EXPECT_EQ(energy_rate_fd(scene, field, states[i], 1e-6), batch[i].rate);
  }
}

}  // namespace
}  // namespace rolling

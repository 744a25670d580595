#include "rolling/batch.hpp"

#include <cstddef>

namespace rolling {

namespace {

template <class Kernel>
void sweep_parallel(std::size_t n, Kernel&& kernel) {
  const auto count = static_cast<long long>(n);
#pragma omp parallel for schedule(static)
  for (long long i = 0; i < count; ++i) {
    kernel(static_cast<std::size_t>(i));
  }
}

template <class Kernel>
void sweep_serial(std::size_t n, Kernel&& kernel) {
  for (std::size_t i = 0; i < n; ++i) kernel(i);
}

// Exceptions must not escape an OpenMP region; failures become tags.
template <class State, class Field, class Energy>
EnergyRateSample rate_sample(const Field& field, const State& state, double eps,
                             const Energy& energy) {
  EnergyRateSample out;
  try {
    const auto tangent = field(state);
    out.energy = energy(state);
    out.rate = (energy(advance_euler(state, tangent, eps)) -
                energy(advance_euler(state, tangent, -eps))) /
               (2.0 * eps);
  } catch (const RollingError& e) {
    out.error = e.kind();
  }
  return out;
}

FieldSample field_sample(const FullField& field, const FullState& state) {
  FieldSample out;
  try {
    out.tangent = field(state);
  } catch (const RollingError& e) {
    out.error = e.kind();
  }
  return out;
}

template <bool Parallel, class Kernel>
void sweep(std::size_t n, Kernel&& kernel) {
  if constexpr (Parallel) {
    sweep_parallel(n, kernel);
  } else {
    sweep_serial(n, kernel);
  }
}

template <bool Parallel>
std::vector<FieldSample> fields_impl(const FullField& field, std::span<const FullState> states) {
  std::vector<FieldSample> out(states.size());
  sweep<Parallel>(states.size(), [&](std::size_t i) { out[i] = field_sample(field, states[i]); });
  return out;
}

template <bool Parallel>
std::vector<EnergyRateSample> full_rates_impl(const Scene& scene, const FullField& field,
                                              std::span<const FullState> states, double eps) {
  std::vector<EnergyRateSample> out(states.size());
  auto energy = [&scene](const FullState& s) { return energy_full(scene, s); };
  sweep<Parallel>(states.size(),
                  [&](std::size_t i) { out[i] = rate_sample(field, states[i], eps, energy); });
  return out;
}

template <bool Parallel>
std::vector<EnergyRateSample> reduced_rates_impl(const RigidBody& body, const ReducedField& field,
                                                 std::span<const ReducedState> states,
                                                 double eps) {
  std::vector<EnergyRateSample> out(states.size());
  auto energy = [&body](const ReducedState& s) { return energy_reduced(body, s); };
  sweep<Parallel>(states.size(),
                  [&](std::size_t i) { out[i] = rate_sample(field, states[i], eps, energy); });
  return out;
}

}  // namespace

double energy_rate_fd(const Scene& scene, const FullField& field, const FullState& state,
                      double eps) {
  const FullTangent tangent = field(state);
  return (energy_full(scene, advance_euler(state, tangent, eps)) -
          energy_full(scene, advance_euler(state, tangent, -eps))) /
         (2.0 * eps);
}

double energy_rate_fd(const RigidBody& body, const ReducedField& field,
                      const ReducedState& state, double eps) {
  const ReducedTangent tangent = field(state);
  return (energy_reduced(body, advance_euler(state, tangent, eps)) -
          energy_reduced(body, advance_euler(state, tangent, -eps))) /
         (2.0 * eps);
}

std::vector<FieldSample> evaluate_fields(const FullField& field,
                                         std::span<const FullState> states) {
  return fields_impl<true>(field, states);
}

std::vector<FieldSample> evaluate_fields_serial(const FullField& field,
                                                std::span<const FullState> states) {
  return fields_impl<false>(field, states);
}

std::vector<EnergyRateSample> energy_rates(const Scene& scene, const FullField& field,
                                           std::span<const FullState> states, double eps) {
  return full_rates_impl<true>(scene, field, states, eps);
}

std::vector<EnergyRateSample> energy_rates_serial(const Scene& scene, const FullField& field,
                                                  std::span<const FullState> states, double eps) {
  return full_rates_impl<false>(scene, field, states, eps);
}

std::vector<EnergyRateSample> energy_rates(const RigidBody& body, const ReducedField& field,
                                           std::span<const ReducedState> states, double eps) {
  return reduced_rates_impl<true>(body, field, states, eps);
}

std::vector<EnergyRateSample> energy_rates_serial(const RigidBody& body,
                                                  const ReducedField& field,
                                                  std::span<const ReducedState> states,
                                                  double eps) {
  return reduced_rates_impl<false>(body, field, states, eps);
}

}  // namespace rolling

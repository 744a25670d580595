#pragma once

#include <optional>
#include <span>
#include <vector>

#include "rolling/integrate.hpp"

namespace rolling {

// Data-parallel sweeps over independent phase-space samples. Each kernel
// comes in an OpenMP version and a serial reference; both run the same
// per-sample code, so their outputs are bitwise identical and ordered by
// sample index.

struct FieldSample {
  FullTangent tangent;
  std::optional<ErrorKind> error;
};

struct EnergyRateSample {
  double energy = 0.0;
  /// Central difference of the energy along the flow.
  double rate = 0.0;
  std::optional<ErrorKind> error;
};

/// (E(x + eps Y) - E(x - eps Y)) / (2 eps) with the Euler displacement of
/// advance_euler.
double energy_rate_fd(const Scene& scene, const FullField& field, const FullState& state,
                      double eps);
double energy_rate_fd(const RigidBody& body, const ReducedField& field,
                      const ReducedState& state, double eps);

std::vector<FieldSample> evaluate_fields(const FullField& field,
                                         std::span<const FullState> states);
std::vector<FieldSample> evaluate_fields_serial(const FullField& field,
                                                std::span<const FullState> states);

std::vector<EnergyRateSample> energy_rates(const Scene& scene, const FullField& field,
                                           std::span<const FullState> states, double eps);
std::vector<EnergyRateSample> energy_rates_serial(const Scene& scene, const FullField& field,
                                                  std::span<const FullState> states, double eps);

std::vector<EnergyRateSample> energy_rates(const RigidBody& body, const ReducedField& field,
                                           std::span<const ReducedState> states, double eps);
std::vector<EnergyRateSample> energy_rates_serial(const RigidBody& body,
                                                  const ReducedField& field,
                                                  std::span<const ReducedState> states,
                                                  double eps);

}  // namespace rolling

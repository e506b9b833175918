#pragma once

#include <string>
#include <variant>

#include "zeno/chain.hpp"
#include "zeno/models/large_spin.hpp"
#include "zeno/models/single_spin.hpp"
#include "zeno/models/spin_bath.hpp"

namespace zeno {

// Any of the supported physical setups; the sweep layer is generic over this.
using Scenario = std::variant<SingleSpinModel, SpinBathModel, LargeSpinModel>;

// Stable identifier used in config files and output columns.
std::string model_name(const Scenario& scenario);

void validate(const Scenario& scenario);

// One-period transition set of the active model at spacing tau.
TransitionSet scenario_transitions(const Scenario& scenario, double tau);

// Analytic-expression rate of the active model (the cross-check route the
// chain composition is compared against).
double scenario_direct_rate(const Scenario& scenario, double tau, std::uint64_t steps,
                            MeasurementKind kind);

}  // namespace zeno

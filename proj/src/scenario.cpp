#include "zeno/scenario.hpp"

namespace zeno {

std::string model_name(const Scenario& scenario) {
  struct Visitor {
    std::string operator()(const SingleSpinModel&) const { return "single_spin"; }
    std::string operator()(const SpinBathModel&) const { return "spin_bath"; }
    std::string operator()(const LargeSpinModel&) const { return "large_spin"; }
  };
  return std::visit(Visitor{}, scenario);
}

void validate(const Scenario& scenario) {
  std::visit([](const auto& model) { validate(model); }, scenario);
}

TransitionSet scenario_transitions(const Scenario& scenario, double tau) {
  return std::visit([tau](const auto& model) { return transitions(model, tau); }, scenario);
}

double scenario_direct_rate(const Scenario& scenario, double tau, std::uint64_t steps,
                            MeasurementKind kind) {
  return std::visit(
      [&](const auto& model) { return direct_decay_rate(model, tau, steps, kind); }, scenario);
}

}  // namespace zeno

#include "zeno/runner.hpp"

#include <atomic>
#include <cstdlib>
#include <exception>
#include <limits>
#include <mutex>
#include <string>
#include <thread>
#include <vector>

#include "zeno/errors.hpp"
#include "zeno/output.hpp"

namespace zeno {

namespace {

struct FirstFailure {
  std::mutex mutex;
  std::size_t index = std::numeric_limits<std::size_t>::max();
  std::exception_ptr error;

  void offer(std::size_t i, std::exception_ptr e) {
    const std::lock_guard<std::mutex> lock(mutex);
    if (i < index) {
      index = i;
      error = std::move(e);
    }
  }
};

[[noreturn]] void rethrow_with_tau(double tau, const std::exception_ptr& error) {
  const std::string prefix = "tau = " + format_double(tau) + ": ";
  try {
    std::rethrow_exception(error);
  } catch (const capacity_error& e) {
    throw capacity_error(prefix + e.what());
  } catch (const numerical_error& e) {
    throw numerical_error(prefix + e.what());
  } catch (const validation_error& e) {
    throw validation_error(prefix + e.what());
  }
  std::abort();  // unreachable: rethrow_exception never returns
}

int worker_count(int configured, std::size_t jobs) {
  int n = configured;
  if (n <= 0) n = static_cast<int>(std::thread::hardware_concurrency());
  if (n < 1) n = 1;
  if (static_cast<std::size_t>(n) > jobs) n = static_cast<int>(jobs);
  return n;
}

}  // namespace

SweepResult run_sweep(const RunConfig& config) {
  validate(config.scenario);
  validate(config.grid);
  if (config.protocols.empty())
    throw validation_error("sweep needs at least one protocol");

  SweepResult result;
  result.taus = config.grid.taus();
  const std::size_t n = result.taus.size();

  // One transition set per tau, computed exactly once whatever the number of
  // protocols; pre-sized slots keep writes disjoint across workers.
  std::vector<TransitionSet> transitions(n);
  std::atomic<std::size_t> cursor{0};
  FirstFailure failure;
  const int workers = worker_count(config.threads, n);
  auto work = [&]() {
    while (true) {
      const std::size_t i = cursor.fetch_add(1);
      if (i >= n) return;
      try {
        transitions[i] = scenario_transitions(config.scenario, result.taus[i]);
      } catch (...) {
        failure.offer(i, std::current_exception());
      }
    }
  };
  if (workers == 1) {
    work();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(workers));
    for (int t = 0; t < workers; ++t) pool.emplace_back(work);
    for (std::thread& t : pool) t.join();
  }
  if (failure.error) rethrow_with_tau(result.taus[failure.index], failure.error);

  for (const ProtocolSpec& protocol : config.protocols) {
    SweepCurve curve;
    curve.protocol = protocol;
    curve.survival.resize(n);
    curve.rate.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
      try {
        curve.survival[i] = protocol_survival(transitions[i], protocol.kind, protocol.steps);
        curve.rate[i] =
            effective_decay_rate(curve.survival[i], protocol.steps, result.taus[i]);
      } catch (...) {
        rethrow_with_tau(result.taus[i], std::current_exception());
      }
    }
    if (n >= 3) curve.analysis = analyze_curve(result.taus, curve.rate);
    result.curves.push_back(std::move(curve));
  }
  return result;
}

}  // namespace zeno

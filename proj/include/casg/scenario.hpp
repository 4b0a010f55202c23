#pragma once

#include <string>
#include <vector>

namespace casg {

struct Check {
  std::string description;
  std::string expected;
  std::string actual;
  bool pass = false;
};

struct ScenarioReport {
  std::string name;
  std::vector<Check> checks;
  double elapsed_ms = 0;

  bool pass() const;
  void add(std::string description, std::string expected, std::string actual);
  void add_bool(std::string description, bool expected, bool actual);
  std::string to_text() const;
  std::string to_json_text() const;  // deterministic modulo the timing field
};

/// Path of a bundled data file (psi_free.json, psi_surface.json, ...).
std::string default_data_file(const std::string& name);

/// Replays the free-group computation: psi(A^-2) = A^-3, the psi-image of K1
/// equals K2, indices, the BS(2,3) relation, and the gamma-word evaluation on
/// B*A*B^-1*A^-1 against the pinned output.
ScenarioReport run_free_demo(const std::string& psi_file);

/// Same scenario with the automatically constructed psi (order-preserving
/// basis bijection); the gamma-word output is checked against the bundled
/// independently derived fixture.
ScenarioReport run_free_demo_auto();

/// Genus-2 counterpart; also checks the evaluated gamma-word against the
/// bundled expected image word and its nontriviality against C.
ScenarioReport run_surface_demo(const std::string& psi_file);

/// rho(gamma) = 1 under the BS(2,3) relator rewriting while gamma is a
/// nonempty reduced word.
ScenarioReport run_kernel_check();

}  // namespace casg

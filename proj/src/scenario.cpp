#include "casg/scenario.hpp"

#include <chrono>
#include <fstream>
#include <sstream>

#include "casg/errors.hpp"
#include "casg/io.hpp"

#ifndef CASG_DATA_DIR
#define CASG_DATA_DIR "data"
#endif

namespace casg {

bool ScenarioReport::pass() const {
  for (const Check& c : checks)
    if (!c.pass) return false;
  return true;
}

void ScenarioReport::add(std::string description, std::string expected,
                         std::string actual) {
  bool ok = expected == actual;
  checks.push_back({std::move(description), std::move(expected), std::move(actual), ok});
}

void ScenarioReport::add_bool(std::string description, bool expected, bool actual) {
  add(std::move(description), expected ? "true" : "false", actual ? "true" : "false");
}

std::string ScenarioReport::to_text() const {
  std::ostringstream out;
  out << "== " << name << " ==\n";
  for (const Check& c : checks) {
    out << (c.pass ? "  ok   " : "  FAIL ") << c.description << ": expected " << c.expected;
    if (!c.pass) out << ", got " << c.actual;
    out << "\n";
  }
  out << (pass() ? "PASS" : "FAIL") << " (" << static_cast<int>(elapsed_ms) << " ms)\n";
  return out.str();
}

std::string ScenarioReport::to_json_text() const {
  nlohmann::json j;
  j["scenario"] = name;
  j["pass"] = pass();
  j["timing_ms"] = elapsed_ms;
  j["checks"] = nlohmann::json::array();
  for (const Check& c : checks)
    j["checks"].push_back({{"description", c.description},
                           {"expected", c.expected},
                           {"actual", c.actual},
                           {"pass", c.pass}});
  return j.dump(2) + "\n";
}

std::string default_data_file(const std::string& name) {
  return std::string(CASG_DATA_DIR) + "/" + name;
}

namespace {

struct Timer {
  std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
  double ms() const {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() -
                                                     start)
        .count();
  }
};

CommWordInstance gamma_instance(const GroupPresentation& G, Commensurator psi,
                                Commensurator phi) {
  CommWordInstance inst;
  inst.G = &G;
  inst.names = {"a", "b"};
  inst.letters = {std::move(psi), std::move(phi)};
  inst.set_word("b^-1 a b a^-1 b^-1 a b a^-1 b^-1");
  return inst;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

namespace {

ScenarioReport free_demo_impl(std::optional<SubgroupIso> psi_data,
                              const std::string& expected_word10) {
  Timer timer;
  ScenarioReport rep;
  rep.name = psi_data ? "free-demo" : "free-demo (auto psi)";
  const GroupPresentation& G = GroupPresentation::free_rank2();

  auto [psi, phi] = build_bs_pair(G, 2, 3, std::move(psi_data));
  const SubgroupIso& psi_iso = psi.rep();

  rep.add("psi(A^-2)", "A^-3", G.print(psi_iso.evaluate(G.parse("A^-2"))));
  {
    WitnessGraph g = WitnessGraph::fold(G, psi_iso.images());
    rep.add_bool("psi image of K1 equals K2", true,
                 g.equals_table(psi_iso.codomain().table()));
  }
  rep.add("index of K1", "6", std::to_string(psi_iso.domain().table().index()));
  rep.add("index of K2", "6", std::to_string(psi_iso.codomain().table().index()));
  rep.add_bool("psi phi^2 psi^-1 = phi^3", true,
               psi.compose(phi.pow(2)).compose(psi.inverse()).equals(phi.pow(3)));

  CommWordInstance inst = gamma_instance(G, psi, phi);
  Word test = G.parse("B*A*B^-1*A^-1");
  Word image = sequential_evaluate(inst, test);
  rep.add("gamma-word image of B*A*B^-1*A^-1", expected_word10, G.print(image));
  rep.add_bool("image differs from the input", true, !words_equal(G, image, test));

  rep.elapsed_ms = timer.ms();
  return rep;
}

}  // namespace

ScenarioReport run_free_demo(const std::string& psi_file) {
  return free_demo_impl(load_iso_file(psi_file), "A^3*B*A*B^-1*A^2");
}

ScenarioReport run_free_demo_auto() {
  std::string expected = read_file(default_data_file("auto_psi_word10.txt"));
  while (!expected.empty() && (expected.back() == '\n' || expected.back() == ' '))
    expected.pop_back();
  return free_demo_impl(std::nullopt, expected);
}

ScenarioReport run_surface_demo(const std::string& psi_file) {
  Timer timer;
  ScenarioReport rep;
  rep.name = "surface-demo";
  const GroupPresentation& G = GroupPresentation::genus2();

  SubgroupIso psi_iso = load_iso_file(psi_file);  // construction verifies the iso
  rep.add_bool("iso data verified (two-sided inverse on generators)", true, true);
  auto [psi, phi] = build_bs_pair(G, 2, 3, psi_iso);

  rep.add("psi(A^-2)", "A^-3", G.print(psi_iso.evaluate(G.parse("A^-2"))));
  rep.add("index of K1", "6", std::to_string(psi_iso.domain().table().index()));
  rep.add("index of K2", "6", std::to_string(psi_iso.codomain().table().index()));
  rep.add_bool("psi phi^2 psi^-1 = phi^3", true,
               psi.compose(phi.pow(2)).compose(psi.inverse()).equals(phi.pow(3)));

  CommWordInstance inst = gamma_instance(G, psi, phi);
  Word test = G.parse("C");
  Word image = sequential_evaluate(inst, test);
  Word expected = G.parse(read_file(default_data_file("word10_surface.txt")));
  rep.add_bool("gamma-word image of C equals the expected image word", true,
               words_equal(G, image, expected));
  rep.add_bool("image * C^-1 is nontrivial", true,
               !is_trivial(G, expected * test.inverse()));
  rep.add_bool("computed image * C^-1 is nontrivial", true,
               !is_trivial(G, image * test.inverse()));

  rep.elapsed_ms = timer.ms();
  return rep;
}

ScenarioReport run_kernel_check() {
  Timer timer;
  ScenarioReport rep;
  rep.name = "kernel-check";
  const GroupPresentation& L = GroupPresentation::bs_letters();

  KernelWitnessResult res = bs_kernel_witness_check();
  rep.add_bool("gamma is a nonempty reduced word", true, !res.gamma.empty());
  rep.add("gamma", "b^-1*a*b*a^-1*b^-1*a*b*a^-1*b^-1", L.print(res.gamma));
  rep.add("normalized rho(gamma) length", "0",
          std::to_string(res.rho_gamma_normalized.size()));
  rep.add_bool("rho(gamma) is the identity", true, res.ok);

  // the same normalizer must not kill gamma itself
  rep.add_bool("gamma survives the normalizer", true,
               !bs23_normalize(res.gamma).empty());

  rep.elapsed_ms = timer.ms();
  return rep;
}

}  // namespace casg

// casg command-line driver: replay the bundled computations, verify iso data
// files, and evaluate commensurator words.

#include <iostream>

#include "CLI11.hpp"

#include "casg/errors.hpp"
#include "casg/io.hpp"
#include "casg/scenario.hpp"

namespace {

int emit(const casg::ScenarioReport& rep, bool as_json) {
  std::cout << (as_json ? rep.to_json_text() : rep.to_text());
  return rep.pass() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"commensurator arithmetic for surface groups"};
  app.require_subcommand(1);
  app.fallthrough();  // app-level flags may follow the subcommand
  bool as_json = false;
  app.add_flag("--json", as_json, "emit reports as JSON");

  std::string psi_free = casg::default_data_file("psi_free.json");
  std::string psi_surface = casg::default_data_file("psi_surface.json");

  auto* free_cmd = app.add_subcommand("free-demo", "replay the rank-2 free group computation");
  free_cmd->add_option("--psi-file", psi_free, "iso definition file for psi");
  bool auto_psi = false;
  free_cmd->add_flag("--auto-psi", auto_psi, "build psi from the Schreier bases instead");

  auto* surf_cmd = app.add_subcommand("surface-demo", "replay the genus-2 computation");
  surf_cmd->add_option("--psi-file", psi_surface, "iso definition file for psi");

  auto* kern_cmd = app.add_subcommand("kernel-check",
                                      "check the residual-finiteness kernel witness");
  (void)kern_cmd;

  auto* eval_cmd = app.add_subcommand("eval", "evaluate a commensurator word on a test word");
  std::string letters_path, word_text, test_text;
  bool verdict = false;
  eval_cmd->add_option("--letters", letters_path, "letters file (named commensurators)")
      ->required();
  eval_cmd->add_option("--word", word_text, "word over the letters, e.g. \"a^-1 b a\"")
      ->required();
  eval_cmd->add_option("--test", test_text, "test word in the ambient group")->required();
  eval_cmd->add_flag("--verdict", verdict, "also decide triviality and print a witness");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;  // usage errors exit 2, --help exits 0
  }

  try {
    if (free_cmd->parsed())
      return emit(auto_psi ? casg::run_free_demo_auto() : casg::run_free_demo(psi_free),
                  as_json);
    if (surf_cmd->parsed()) return emit(casg::run_surface_demo(psi_surface), as_json);
    if (kern_cmd->parsed()) return emit(casg::run_kernel_check(), as_json);
    if (eval_cmd->parsed()) {
      casg::CommWordInstance inst = casg::load_letters_file(letters_path);
      inst.set_word(word_text);
      const casg::GroupPresentation& G = *inst.G;
      casg::Word test = G.parse(test_text);
      try {
        casg::Word image = casg::sequential_evaluate(inst, test);
        std::cout << G.print(image) << "\n";
      } catch (const casg::DomainError& e) {
        std::cerr << "domain error: " << e.what() << "\n";
        return 1;
      }
      if (verdict) {
        casg::CommVerdict v = casg::decide_comm_word(inst);
        std::cout << (v.trivial ? "trivial" : "nontrivial") << "\n";
        if (!v.trivial)
          std::cout << "witness: " << G.print(v.witnesses[0].first) << " -> "
                    << G.print(v.witnesses[0].second) << "\n";
      }
      return 0;
    }
  } catch (const casg::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const casg::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}

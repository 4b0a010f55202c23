#include "casg/io.hpp"

#include <filesystem>
#include <fstream>

#include "casg/errors.hpp"

namespace casg {

using nlohmann::json;

json table_to_json(const CosetTable& t) {
  json j;
  j["group"] = t.group().name();
  j["n_states"] = t.index();
  j["base"] = 0;
  json tr = json::object();
  for (int g = 0; g < t.group().rank(); ++g)
    tr[t.group().generator_names()[g]] = t.transitions()[g];
  j["transitions"] = tr;
  return j;
}

CosetTable table_from_json(const json& j) {
  const GroupPresentation& G = GroupPresentation::by_name(j.at("group").get<std::string>());
  int n = j.at("n_states").get<int>();
  std::vector<std::vector<int>> fwd;
  for (const std::string& name : G.generator_names()) {
    auto col = j.at("transitions").at(name).get<std::vector<int>>();
    if (static_cast<int>(col.size()) != n) throw ParseError("transition length mismatch");
    fwd.push_back(std::move(col));
  }
  return CosetTable(G, std::move(fwd), j.value("base", 0));
}

namespace {

FiniteAbelianTarget target_from_json(const GroupPresentation& G, const json& j) {
  FiniteAbelianTarget t;
  t.moduli = j.at("moduli").get<std::vector<int>>();
  t.images.assign(G.rank(), std::vector<int>(t.moduli.size(), 0));
  for (auto& [name, val] : j.at("images").items()) {
    int g = G.generator_index(name);
    if (g < 0) throw ParseError("unknown generator '" + name + "' in kernel spec");
    auto img = val.get<std::vector<int>>();
    if (img.size() != t.moduli.size()) throw ParseError("image arity mismatch");
    t.images[g] = std::move(img);
  }
  return t;
}

}  // namespace

SubgroupIso load_iso_json(const json& j) {
  if (j.value("format", "") != "casg-iso") throw ParseError("not a casg-iso file");
  const GroupPresentation& G = GroupPresentation::by_name(j.at("group").get<std::string>());
  CosetTable dom = kernel_table(G, target_from_json(G, j.at("domain_kernel")));
  CosetTable cod = kernel_table(G, target_from_json(G, j.at("codomain_kernel")));
  std::vector<Word> images;
  for (const auto& s : j.at("images")) images.push_back(G.parse(s.get<std::string>()));
  std::optional<std::vector<Word>> invs;
  if (j.contains("inverse_images")) {
    invs.emplace();
    for (const auto& s : j.at("inverse_images"))
      invs->push_back(G.parse(s.get<std::string>()));
  }
  return SubgroupIso::define(std::move(dom), std::move(cod), std::move(images),
                             std::move(invs));
}

SubgroupIso load_iso_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open iso file: " + path);
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    throw ParseError("bad JSON in " + path + ": " + e.what());
  }
  try {
    return load_iso_json(j);
  } catch (const json::exception& e) {
    throw ParseError("bad iso file " + path + ": " + e.what());
  }
}

CommWordInstance load_letters_file(const std::string& path, const std::string& base_dir) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open letters file: " + path);
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    throw ParseError("bad JSON in " + path + ": " + e.what());
  }
  CommWordInstance inst;
  try {
    const GroupPresentation& G =
        GroupPresentation::by_name(j.at("group").get<std::string>());
    inst.G = &G;
    for (auto& [name, spec] : j.at("letters").items()) {
      inst.names.push_back(name);
      if (spec.contains("inner")) {
        inst.letters.push_back(
            Commensurator::inner(G, G.parse(spec.at("inner").get<std::string>())));
      } else if (spec.contains("iso_file")) {
        std::filesystem::path p = spec.at("iso_file").get<std::string>();
        if (p.is_relative()) {
          // relative to base_dir, or to the letters file itself
          std::filesystem::path root =
              base_dir.empty() ? std::filesystem::path(path).parent_path()
                               : std::filesystem::path(base_dir);
          p = root / p;
        }
        inst.letters.push_back(Commensurator::of(load_iso_file(p.string())));
      } else {
        throw ParseError("letter '" + name + "' needs 'inner' or 'iso_file'");
      }
    }
  } catch (const json::exception& e) {
    throw ParseError("bad letters file " + path + ": " + e.what());
  }
  return inst;
}

}  // namespace casg

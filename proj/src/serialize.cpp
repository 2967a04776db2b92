#include "horotower/serialize.hpp"

#include <memory>
#include <stdexcept>
#include <utility>

#include "horotower/common.hpp"

#include "json.hpp"

namespace horotower {

namespace {

using Json = nlohmann::ordered_json;

Json presentation_doc(const Presentation& p) {
  Json doc;
  doc["genus"] = p.genus;
  doc["cusps"] = p.cusp_count;
  doc["generators"] = p.generator_names;
  Json words = Json::array();
  for (const Word& w : p.peripherals) words.push_back(w.letters());
  doc["peripherals"] = std::move(words);
  return doc;
}

Presentation presentation_from_doc(const Json& doc) {
  int genus = doc.at("genus").get<int>();
  int cusps = doc.at("cusps").get<int>();
  check_arg(genus >= 0 && cusps >= 1, "surface layout out of range");
  Presentation p = surface_group(genus, cusps);
  check_arg(doc.at("generators").get<std::vector<std::string>>() ==
                p.generator_names,
            "generator names do not match the surface layout");
  const Json& words = doc.at("peripherals");
  check_arg(words.is_array() && words.size() == p.peripherals.size(),
            "peripheral count does not match the surface layout");
  for (size_t j = 0; j < p.peripherals.size(); ++j)
    check_arg(Word(words[j].get<std::vector<int32_t>>()) == p.peripherals[j],
              "peripheral words do not match the surface layout");
  return p;
}

[[noreturn]] void rethrow_malformed(const nlohmann::json::exception& e) {
  throw std::invalid_argument(std::string("malformed document: ") + e.what());
}

}  // namespace

std::string presentation_to_json(const Presentation& p) {
  return presentation_doc(p).dump(2) + "\n";
}

Presentation presentation_from_json(const std::string& text) {
  try {
    return presentation_from_doc(Json::parse(text));
  } catch (const nlohmann::json::exception& e) {
    rethrow_malformed(e);
  }
}

std::string assignment_to_json(const FiniteAssignment& rho) {
  check_arg(rho.group != nullptr, "assignment has no group");
  Json doc;
  doc["group"] = Json::parse(rho.group->descriptor_json());
  doc["images"] = rho.images;
  return doc.dump(2) + "\n";
}

FiniteAssignment assignment_from_json(const std::string& text) {
  try {
    Json doc = Json::parse(text);
    FiniteAssignment rho;
    rho.group = group_from_descriptor(doc.at("group").dump());
    rho.images = doc.at("images").get<std::vector<uint32_t>>();
    for (uint32_t g : rho.images)
      check_arg(g < rho.group->size(), "image index beyond the group");
    return rho;
  } catch (const nlohmann::json::exception& e) {
    rethrow_malformed(e);
  }
}

std::string tower_to_json(const Tower& t) {
  t.validate();
  Json doc;
  doc["schema_version"] = 1;
  doc["kind"] = "cover_tower";
  doc["label"] = t.label;
  doc["base"] = presentation_doc(*t.base);
  Json levels = Json::array();
  for (const TowerLevel& level : t.levels) {
    Json rec;
    rec["label"] = level.cover.label;
    rec["degree"] = level.cover.degree();
    rec["basepoint"] = level.cover.basepoint;
    Json images = Json::array();
    for (const Perm& p : level.cover.gen_perms) images.push_back(p.images());
    rec["gen_images"] = std::move(images);
    rec["q"] = level.q;
    levels.push_back(std::move(rec));
  }
  doc["levels"] = std::move(levels);
  return doc.dump(2) + "\n";
}

Tower tower_from_json(const std::string& text) {
  try {
    Json doc = Json::parse(text);
    check_arg(doc.at("schema_version").get<int>() == 1,
              "unsupported schema version");
    check_arg(doc.at("kind").get<std::string>() == "cover_tower",
              "document is not a tower");
    auto base = std::make_shared<Presentation>(
        presentation_from_doc(doc.at("base")));
    Tower t;
    t.base = base;
    t.label = doc.at("label").get<std::string>();
    for (const Json& rec : doc.at("levels")) {
      TowerLevel level;
      level.cover.base = base;
      level.cover.label = rec.at("label").get<std::string>();
      level.cover.basepoint = rec.at("basepoint").get<uint32_t>();
      uint32_t degree = rec.at("degree").get<uint32_t>();
      for (const Json& img : rec.at("gen_images")) {
        Perm p(img.get<std::vector<uint32_t>>());
        check_arg(p.degree() == degree, "generator image table has odd size");
        level.cover.gen_perms.push_back(std::move(p));
      }
      level.q = rec.at("q").get<std::vector<uint32_t>>();
      t.levels.push_back(std::move(level));
    }
    // A file that parses but breaks tower structure is still bad input.
    try {
      t.validate();
    } catch (const InvariantError& e) {
      throw std::invalid_argument(std::string("file is not a valid tower: ") +
                                  e.what());
    }
    return t;
  } catch (const nlohmann::json::exception& e) {
    rethrow_malformed(e);
  }
}

}  // namespace horotower

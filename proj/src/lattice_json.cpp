#include "joinmeet/lattice_json.hpp"

#include <json.hpp>

#include "joinmeet/error.hpp"

namespace joinmeet {

namespace detail {
// Generated from fixtures/*.json at configure time.
extern const char* const kFixtureB3;
extern const char* const kFixtureFig2;
extern const char* const kFixtureFig4;
extern const char* const kFixtureFig5;
}  // namespace detail

Poset poset_from_json(std::string_view text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw InputError(std::string("invalid lattice JSON: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("elements") || !doc.contains("covers"))
    throw InputError("lattice JSON needs \"elements\" and \"covers\"");
  std::vector<std::string> labels;
  std::vector<std::pair<std::string, std::string>> covers;
  try {
    labels = doc.at("elements").get<std::vector<std::string>>();
    for (const auto& c : doc.at("covers")) {
      if (!c.is_array() || c.size() != 2) throw InputError("each cover must be a pair");
      covers.emplace_back(c[0].get<std::string>(), c[1].get<std::string>());
    }
  } catch (const nlohmann::json::exception& e) {
    throw InputError(std::string("invalid lattice JSON: ") + e.what());
  }
  return Poset::from_covers(std::move(labels), covers);
}

Lattice lattice_from_json(std::string_view text) { return as_lattice(poset_from_json(text)); }

std::string to_json(const Poset& p) {
  std::string out = "{\"elements\": [";
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (i) out += ",";
    out += nlohmann::json(p.label(i)).dump();
  }
  out += "], \"covers\": [";
  bool first = true;
  for (auto [a, b] : p.covers()) {
    if (!first) out += ",";
    first = false;
    out += "[" + nlohmann::json(p.label(a)).dump() + "," + nlohmann::json(p.label(b)).dump() + "]";
  }
  out += "]}";
  return out;
}

namespace {

const char* lookup(std::string_view name) {
  if (name.ends_with(".json")) name.remove_suffix(5);
  if (name == "b3") return detail::kFixtureB3;
  if (name == "fig2" || name == "thin_fig2") return detail::kFixtureFig2;
  if (name == "fig4") return detail::kFixtureFig4;
  if (name == "fig5") return detail::kFixtureFig5;
  return nullptr;
}

}  // namespace

bool has_builtin_fixture(std::string_view name) { return lookup(name) != nullptr; }

std::string builtin_fixture(std::string_view name) {
  const char* text = lookup(name);
  if (!text) throw InputError("no builtin fixture named '" + std::string(name) + "'");
  return text;
}

}  // namespace joinmeet

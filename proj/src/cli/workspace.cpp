#include "measlat/cli/workspace.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include "json.hpp"

namespace measlat::cli {

using Json = nlohmann::ordered_json;

namespace {

[[noreturn]] void semantic(std::string_view source, std::string_view pointer, std::string_view message) {
  throw CliError(ExitCode::SemanticError,
                 "error: " + std::string(source) + ": " + std::string(pointer) + ": " + std::string(message) + "\n");
}

Json parse_json(std::string_view text, std::string_view source) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    const std::size_t offset = e.byte > 0 ? e.byte - 1 : 0;
    std::string message = e.what();
    // Drop nlohmann's "[json.exception.parse_error.101] parse error at line 1, column 2: " prefix.
    if (const auto colon = message.find(": "); colon != std::string::npos)
      message = message.substr(colon + 2);
    throw CliError(ExitCode::ParseError, render_diagnostic(source, text, offset, message));
  }
}

template <class Value>
Value parse_value(const Json& j, std::string_view source, const std::string& pointer) {
  if (!j.is_string())
    semantic(source, pointer, "expected a string such as \"1/2\" or \"inf\", found " + j.dump());
  const auto& text = j.get_ref<const std::string&>();
  try {
    return Value::parse(text);
  } catch (const Error& e) {
    throw CliError(ExitCode::ParseError, "error: " + std::string(source) + ": " + pointer + ": " + e.what() + "\n");
  }
}

template <class Value>
std::vector<Value> parse_weights(const Json& j, const MeasurableSpace& space, std::string_view source,
                                 const std::string& pointer) {
  if (!j.is_object())
    semantic(source, pointer, "expected an object mapping atoms to values");
  std::vector<Value> weights;
  for (std::size_t i = 0; i < space.size(); ++i) {
    const auto& atom = space.atom_name(i);
    const auto it = j.find(atom);
    if (it == j.end())
      semantic(source, pointer, "missing weight for atom '" + atom + "'");
    weights.push_back(parse_value<Value>(*it, source, pointer + "/" + atom));
  }
  for (const auto& [key, value] : j.items()) {
    if (!space.find_atom(key))
      semantic(source, pointer + "/" + key, "'" + key + "' is not a declared atom");
  }
  return weights;
}

// Accepts {"name": {weights}} or [{"name": ..., "weights": {...}}].
template <class Value, class Out>
void parse_measure_section(const Json& doc, const char* key, const MeasurableSpace& space, std::string_view source,
                           Out& out) {
  const auto it = doc.find(key);
  if (it == doc.end())
    return;
  const std::string base = std::string("/") + key;
  std::vector<std::pair<std::string, std::vector<Value>>> entries;
  if (it->is_object()) {
    for (const auto& [name, weights] : it->items())
      entries.emplace_back(name, parse_weights<Value>(weights, space, source, base + "/" + name));
  } else if (it->is_array()) {
    for (std::size_t i = 0; i < it->size(); ++i) {
      const Json& entry = (*it)[i];
      const std::string pointer = base + "/" + std::to_string(i);
      if (!entry.is_object() || !entry.contains("name") || !entry["name"].is_string() || !entry.contains("weights"))
        semantic(source, pointer, "expected {\"name\": ..., \"weights\": {...}}");
      entries.emplace_back(entry["name"].get<std::string>(),
                           parse_weights<Value>(entry["weights"], space, source, pointer + "/weights"));
    }
  } else {
    semantic(source, base, "expected an object or an array");
  }

  std::set<std::string> seen;
  for (auto& [name, weights] : entries) {
    if (!is_identifier(name) || name == "zero" || name == "infinity")
      semantic(source, base + "/" + name, "'" + name + "' is not a usable measure name");
    if (!seen.insert(name).second)
      semantic(source, base + "/" + name, "duplicate measure name '" + name + "'");
    using Target = typename Out::value_type::second_type;
    out.emplace_back(name, Target(space, std::move(weights)));
  }
}

} // namespace

const Measure* Workspace::find_measure(const std::string& name) const {
  for (const auto& [n, m] : measures)
    if (n == name)
      return &m;
  return nullptr;
}

const SignedMeasure* Workspace::find_signed(const std::string& name) const {
  for (const auto& [n, m] : signed_measures)
    if (n == name)
      return &m;
  return nullptr;
}

Workspace parse_workspace(std::string_view json_text, std::string_view source) {
  const Json doc = parse_json(json_text, source);
  if (!doc.is_object())
    semantic(source, "", "a workspace must be a JSON object");
  for (const auto& [key, value] : doc.items()) {
    if (key != "atoms" && key != "measures" && key != "signed")
      semantic(source, "/" + key, "unknown workspace key '" + key + "'");
  }

  const auto atoms = doc.find("atoms");
  if (atoms == doc.end() || !atoms->is_array())
    semantic(source, "/atoms", "expected an array of atom names");
  std::vector<std::string> names;
  for (std::size_t i = 0; i < atoms->size(); ++i) {
    const Json& a = (*atoms)[i];
    if (!a.is_string())
      semantic(source, "/atoms/" + std::to_string(i), "atom names must be strings");
    const auto& name = a.get_ref<const std::string&>();
    if (!is_identifier(name) || name == "empty" || name == "all")
      semantic(source, "/atoms/" + std::to_string(i), "'" + name + "' is not a usable atom name");
    names.push_back(name);
  }

  Workspace ws;
  try {
    ws.space = MeasurableSpace(std::move(names));
  } catch (const Error& e) {
    semantic(source, "/atoms", e.what());
  }
  parse_measure_section<ExtNonneg>(doc, "measures", ws.space, source, ws.measures);
  parse_measure_section<ExtSigned>(doc, "signed", ws.space, source, ws.signed_measures);
  return ws;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in)
    throw CliError(ExitCode::SemanticError, "error: cannot open '" + path + "'\n");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

Workspace load_workspace(const std::string& path) { return parse_workspace(read_file(path), path); }

SetFunctionTable parse_table(std::string_view json_text, std::string_view source, const MeasurableSpace& space) {
  const Json doc = parse_json(json_text, source);
  if (!doc.is_object() || !doc.contains("values") || !doc["values"].is_object())
    semantic(source, "/values", "expected {\"values\": {\"<set expression>\": \"<value>\", ...}}");

  const std::size_t count = std::size_t{1} << space.size();
  std::vector<std::optional<ExtNonneg>> values(count);
  for (const auto& [expr, value] : doc["values"].items()) {
    const std::string pointer = "/values/" + expr;
    MeasurableSet set = [&] {
      try {
        return evaluate_set(expr, space);
      } catch (const CliError& e) {
        throw CliError(e.code(), "error: " + std::string(source) + ": " + pointer + ":\n" + e.what());
      }
    }();
    auto& slot = values[set.mask()];
    if (slot)
      semantic(source, pointer, "set " + set.to_string() + " is listed more than once");
    slot = parse_value<ExtNonneg>(value, source, pointer);
  }

  std::vector<ExtNonneg> table;
  table.reserve(count);
  for (std::size_t mask = 0; mask < count; ++mask) {
    if (!values[mask])
      semantic(source, "/values", "no value for set '" + space.from_mask(mask).to_expression() + "'");
    table.push_back(*values[mask]);
  }
  return SetFunctionTable(space, std::move(table));
}

SetFunctionTable load_table(const std::string& path, const MeasurableSpace& space) {
  return parse_table(read_file(path), path, space);
}

} // namespace measlat::cli

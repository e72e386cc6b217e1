#include "sublat/spec_file.hpp"

#include <fstream>
#include <sstream>

#include "sublat/error.hpp"

namespace sublat {

namespace {

std::string trim(const std::string& s) {
  std::size_t a = s.find_first_not_of(" \t\r\n");
  if (a == std::string::npos) return "";
  std::size_t b = s.find_last_not_of(" \t\r\n");
  return s.substr(a, b - a + 1);
}

// Splits on commas at parenthesis depth zero, so cycle strings stay intact.
std::vector<std::string> split_generators(const std::string& s) {
  std::vector<std::string> out;
  std::string cur;
  int depth = 0;
  for (char ch : s) {
    if (ch == '(') ++depth;
    if (ch == ')') --depth;
    if (ch == ',' && depth == 0) {
      if (!trim(cur).empty()) out.push_back(trim(cur));
      cur.clear();
    } else {
      cur += ch;
    }
  }
  if (!trim(cur).empty()) out.push_back(trim(cur));
  return out;
}

}  // namespace

GroupSpecFile parse_spec(std::istream& in) {
  GroupSpecFile spec;
  bool saw_degree = false;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    auto colon = line.find(':');
    if (colon == std::string::npos)
      throw ParseError("spec file: expected 'key: value' at line " + std::to_string(lineno),
                       lineno);
    std::string key = trim(line.substr(0, colon));
    std::string value = trim(line.substr(colon + 1));
    try {
      if (key == "name") {
        spec.name = value;
      } else if (key == "degree") {
        spec.degree = std::stoi(value);
        saw_degree = true;
      } else if (key == "gens") {
        for (auto& g : split_generators(value)) spec.generators.push_back(std::move(g));
      } else if (key == "recipe") {
        std::istringstream tok(value);
        std::string id, part;
        while (tok >> part) id += (id.empty() ? "" : "_") + part;
        spec.recipe = parse_recipe_id(id);
        spec.has_recipe = true;
      } else {
        throw ParseError("spec file: unknown key '" + key + "'", lineno);
      }
    } catch (const ParseError& e) {
      throw ParseError(std::string(e.what()) + " (line " + std::to_string(lineno) + ")", lineno);
    } catch (const std::exception& e) {
      throw ParseError("spec file: " + std::string(e.what()) + " (line " +
                           std::to_string(lineno) + ")",
                       lineno);
    }
  }
  if (spec.name.empty()) throw ParseError("spec file: missing 'name:'");
  if (spec.has_recipe == !spec.generators.empty())
    throw ParseError("spec file: exactly one of 'gens:' and 'recipe:' must be present");
  if (!spec.has_recipe && (!saw_degree || spec.degree < 1))
    throw ParseError("spec file: 'gens:' requires a positive 'degree:'");
  return spec;
}

GroupSpecFile parse_spec_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open spec file: " + path);
  return parse_spec(in);
}

LoadedGroup load_spec(const std::string& path, int element_cap) {
  GroupSpecFile spec = parse_spec_file(path);
  if (spec.has_recipe) return {spec.name, build(spec.recipe, element_cap)};
  std::vector<Perm> gens;
  for (const std::string& s : spec.generators) gens.push_back(parse_cycles(s, spec.degree));
  return {spec.name, generate_elements(gens, element_cap)};
}

void write_spec(std::ostream& out, const std::string& name, const GroupTable& t) {
  out << "name: " << name << "\n";
  out << "degree: " << t.degree() << "\n";
  out << "gens: ";
  bool first = true;
  for (int g : t.generators()) {
    if (!first) out << ", ";
    out << format_cycles(t.element(g));
    first = false;
  }
  out << "\n";
}

}  // namespace sublat

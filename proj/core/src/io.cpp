#include "hexalab/io.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>

#include <json.hpp>

#include "hexalab/error.hpp"

namespace hexalab {

using nlohmann::json;

namespace {

Rational rational_of(const json& j) {
  if (j.is_string()) return Rational::parse(j.get<std::string>());
  if (j.is_number_integer()) return Rational(j.get<std::int64_t>());
  if (j.is_number_float()) {
    // Round-trip through the shortest decimal text so 0.4 parses as 2/5.
    std::ostringstream os;
    os << j.get<double>();
    return Rational::parse(os.str());
  }
  throw InputError("expected a rational, got " + j.dump());
}

std::vector<Rational> rationals_of(const json& j) {
  if (!j.is_array()) throw InputError("expected an array of rationals, got " + j.dump());
  std::vector<Rational> out;
  for (const auto& x : j) out.push_back(rational_of(x));
  return out;
}

std::vector<std::string> strings_of(const json& j) {
  if (!j.is_array()) throw InputError("expected an array of strings, got " + j.dump());
  std::vector<std::string> out;
  for (const auto& x : j) {
    if (x.is_string()) out.push_back(x.get<std::string>());
    else out.push_back(x.dump());
  }
  return out;
}

const json& field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw InputError(std::string("recipe is missing \"") + key + "\"");
  return j.at(key);
}

std::size_t size_of(const json& j, const char* key) {
  const auto& v = field(j, key);
  if (!v.is_number_integer() || v.get<long long>() < 0) throw InputError(std::string("\"") + key + "\" must be a count");
  return v.get<std::size_t>();
}

json parse_json(std::string_view text) {
  try {
    return json::parse(text.begin(), text.end());
  } catch (const json::exception& e) {
    throw InputError(std::string("malformed JSON: ") + e.what());
  }
}

FiniteMetricMeasureSpace explicit_space(const json& j) {
  const auto& dist = field(j, "dist");
  if (!dist.is_array()) throw InputError("\"dist\" must be a matrix");
  const std::size_t n = dist.size();
  std::vector<Rational> d;
  d.reserve(n * n);
  for (const auto& row : dist) {
    if (!row.is_array() || row.size() != n) throw InputError("\"dist\" must be a square matrix");
    for (const auto& x : row) d.push_back(rational_of(x));
  }
  std::vector<std::string> labels = j.contains("points") ? strings_of(j.at("points")) : std::vector<std::string>{};
  if (labels.empty()) {
    for (std::size_t i = 0; i < n; ++i) labels.push_back(std::to_string(i));
  }
  std::vector<Rational> weights;
  if (j.contains("weights")) {
    weights = rationals_of(j.at("weights"));
  } else {
    weights.assign(n, n ? Rational(1, static_cast<std::int64_t>(n)) : Rational{});
  }
  const ValueKind kind =
      j.contains("value_kind") ? parse_value_kind(j.at("value_kind").get<std::string>()) : ValueKind::plain;
  return FiniteMetricMeasureSpace(std::move(labels), std::move(d), std::move(weights), kind);
}

FiniteGroup group_of(const json& j) {
  const auto& g = field(j, "group");
  if (!g.is_string()) throw InputError("\"group\" must be a string such as \"cyclic:3,4\"");
  return parse_group_spec(g.get<std::string>());
}

Construction build(const json& j);

CayleySpec cayley_of(const json& j) {
  CayleySpec spec{group_of(j), {}};
  const auto& gens = field(j, "generators");
  if (gens.is_string() && gens.get<std::string>() == "standard") {
    spec.generators = spec.group.is_cyclic_product() ? spec.group.unit_vectors() : spec.group.transpositions();
  } else {
    for (const auto& label : strings_of(gens)) {
      const auto id = spec.group.find(label);
      if (!id) throw InputError("unknown group element '" + label + "' in " + spec.group.name());
      spec.generators.push_back(*id);
    }
  }
  return spec;
}

Construction build(const json& j) {
  if (!j.is_object()) throw InputError("recipe must be a JSON object");
  if (!j.contains("kind")) return {explicit_space(j), {}};
  const std::string kind = j.at("kind").get<std::string>();
  if (kind == "explicit") return {explicit_space(j), {}};
  if (kind == "cayley") return {cayley_graph(cayley_of(j)), {}};
  if (kind == "named") {
    const std::size_t n = j.contains("n") ? size_of(j, "n") : 0;
    return {named_graph(field(j, "name").get<std::string>(), n), {}};
  }
  if (kind == "product") {
    auto left = build(field(j, "left"));
    auto right = build(field(j, "right"));
    const auto& p = field(j, "p");
    const std::string ps = p.is_string() ? p.get<std::string>() : p.dump();
    Construction out{product_space(left.space, right.space, parse_product_norm(ps)), left.warnings};
    out.warnings.insert(out.warnings.end(), right.warnings.begin(), right.warnings.end());
    return out;
  }
  if (kind == "union") {
    auto left = build(field(j, "left"));
    auto right = build(field(j, "right"));
    return union_space(left.space, right.space, rational_of(field(j, "L")));
  }
  if (kind == "substitution") {
    auto backbone = build(field(j, "backbone"));
    std::vector<FiniteMetricMeasureSpace> parts;
    if (j.contains("parts")) {
      for (const auto& p : j.at("parts")) parts.push_back(build(p).space);
    } else {
      const auto part = build(field(j, "part")).space;
      parts.assign(backbone.space.size(), part);
    }
    return graph_substitution(backbone.space, parts, rational_of(field(j, "L")));
  }
  if (kind == "hamming") {
    const std::size_t n = size_of(j, "n");
    std::vector<Rational> w = j.contains("weights") ? rationals_of(j.at("weights")) : std::vector<Rational>(n, 1);
    return {hamming_space(n, w), {}};
  }
  if (kind == "cantor") return {cantor_space(size_of(j, "depth")), {}};
  if (kind == "zmod") {
    std::vector<long long> gens;
    const auto& g = field(j, "generators");
    if (!g.is_array()) throw InputError("\"generators\" must be an array of integers");
    for (const auto& x : g) {
      if (!x.is_number_integer()) throw InputError("zmod generators must be integers");
      gens.push_back(x.get<long long>());
    }
    return {zmod_graph(size_of(j, "n"), gens), {}};
  }
  throw InputError("unknown recipe kind '" + kind + "'");
}

std::vector<std::string> split_csv_line(std::string_view line) {
  std::vector<std::string> out;
  std::string cur;
  bool quoted = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    const char c = line[i];
    if (quoted) {
      if (c == '"' && i + 1 < line.size() && line[i + 1] == '"') {
        cur += '"';
        ++i;
      } else if (c == '"') {
        quoted = false;
      } else {
        cur += c;
      }
    } else if (c == '"') {
      quoted = true;
    } else if (c == ',') {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  out.push_back(cur);
  for (auto& s : out) {
    const auto b = s.find_first_not_of(" \t");
    const auto e = s.find_last_not_of(" \t");
    s = b == std::string::npos ? std::string{} : s.substr(b, e - b + 1);
  }
  return out;
}

IntervalTable parse_table_csv(std::string_view text) {
  if (text.substr(0, 3) == "\xEF\xBB\xBF") text.remove_prefix(3);
  std::vector<std::vector<std::string>> rows;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    auto end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    auto line = text.substr(pos, end - pos);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    const auto first = line.find_first_not_of(" \t");
    if (first != std::string_view::npos && line[first] != '#') rows.push_back(split_csv_line(line));
    pos = end + 1;
  }
  if (rows.empty()) throw InputError("empty table");
  const auto& header = rows.front();
  std::vector<std::string> points(header.begin() + 1, header.end());
  if (rows.size() != points.size() + 1) {
    throw InputError("table has " + std::to_string(rows.size() - 1) + " rows but " + std::to_string(points.size()) +
                     " column labels");
  }
  std::vector<std::vector<std::string>> cells;
  for (std::size_t i = 1; i < rows.size(); ++i) {
    const auto& row = rows[i];
    if (row.size() != points.size() + 1) throw InputError("table row " + std::to_string(i) + " has the wrong length");
    if (row.front() != points[i - 1]) {
      throw InputError("row label '" + row.front() + "' does not match column label '" + points[i - 1] + "'");
    }
    cells.emplace_back(row.begin() + 1, row.end());
  }
  return IntervalTable::from_cells(std::move(points), cells);
}

IntervalTable parse_table_json(std::string_view text) {
  const json j = parse_json(text);
  auto points = strings_of(field(j, "points"));
  std::vector<std::vector<std::string>> cells;
  for (const auto& row : field(j, "values")) cells.push_back(strings_of(row));
  std::vector<Rational> weights = j.contains("weights") ? rationals_of(j.at("weights")) : std::vector<Rational>{};
  if (!j.contains("symbols")) return IntervalTable::from_cells(std::move(points), cells, std::move(weights));

  auto symbols = strings_of(j.at("symbols"));
  const std::size_t n = points.size();
  if (cells.size() != n) throw InputError("interval table needs one row per point");
  std::vector<std::uint32_t> values;
  for (const auto& row : cells) {
    if (row.size() != n) throw InputError("interval table must be square");
    for (const auto& c : row) {
      const auto it = std::find(symbols.begin(), symbols.end(), c);
      if (it == symbols.end()) throw InputError("cell '" + c + "' is not in \"symbols\"");
      values.push_back(static_cast<std::uint32_t>(it - symbols.begin()));
    }
  }
  return IntervalTable(std::move(points), std::move(symbols), std::move(values), std::move(weights));
}

}  // namespace

std::string space_to_json(const FiniteMetricMeasureSpace& space, int indent) {
  json j;
  j["points"] = std::vector<std::string>(space.labels().begin(), space.labels().end());
  json w = json::array();
  for (const auto& x : space.weights()) w.push_back(x.str());
  j["weights"] = w;
  json d = json::array();
  for (std::size_t i = 0; i < space.size(); ++i) {
    json row = json::array();
    for (std::size_t k = 0; k < space.size(); ++k) row.push_back(space.d(i, k).str());
    d.push_back(std::move(row));
  }
  j["dist"] = std::move(d);
  j["value_kind"] = to_string(space.value_kind());
  return j.dump(indent);
}

Construction build_from_recipe(std::string_view json_text) {
  const json j = parse_json(json_text);
  try {
    return build(j);
  } catch (const json::exception& e) {
    throw InputError(std::string("malformed recipe: ") + e.what());
  }
}

std::optional<FiniteGroup> recipe_group(std::string_view json_text) {
  const json j = parse_json(json_text);
  if (!j.is_object() || !j.contains("kind") || j.at("kind") != "cayley") return std::nullopt;
  return group_of(j);
}

FiniteGroup parse_group_spec(std::string_view text) {
  const auto colon = text.find(':');
  if (colon == std::string_view::npos) throw InputError("group spec must look like cyclic:3,4 or symmetric:3");
  const auto name = text.substr(0, colon);
  std::vector<int> args;
  auto rest = text.substr(colon + 1);
  while (!rest.empty()) {
    int v = 0;
    const auto [ptr, ec] = std::from_chars(rest.data(), rest.data() + rest.size(), v);
    if (ec != std::errc()) throw InputError("cannot parse group spec '" + std::string(text) + "'");
    args.push_back(v);
    rest.remove_prefix(static_cast<std::size_t>(ptr - rest.data()));
    if (!rest.empty()) {
      if (rest.front() != ',') throw InputError("cannot parse group spec '" + std::string(text) + "'");
      rest.remove_prefix(1);
    }
  }
  if (name == "cyclic") return FiniteGroup::cyclic_product(args);
  if (name == "symmetric" && args.size() == 1) return FiniteGroup::symmetric(args[0]);
  throw InputError("unknown group spec '" + std::string(text) + "'");
}

IntervalTable parse_table(std::string_view text) {
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string_view::npos && text[first] == '{') {
    try {
      return parse_table_json(text);
    } catch (const json::exception& e) {
      throw InputError(std::string("malformed table: ") + e.what());
    }
  }
  return parse_table_csv(text);
}

std::string csv_field(std::string_view s) {
  const bool comment_like = !s.empty() && s.front() == '#';
  if (!comment_like && s.find_first_of(",\"\n") == std::string_view::npos) return std::string(s);
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + '"';
}

std::string table_to_csv(const IntervalTable& t) {
  std::string out = "f";
  for (const auto& p : t.points()) out += "," + csv_field(p);
  out += '\n';
  for (std::size_t x = 0; x < t.size(); ++x) {
    out += csv_field(t.point(x));
    for (std::size_t y = 0; y < t.size(); ++y) out += "," + csv_field(t.cell(x, y));
    out += '\n';
  }
  return out;
}

std::string table_to_json(const IntervalTable& t, int indent) {
  json j;
  j["points"] = t.points();
  j["symbols"] = t.symbols();
  json values = json::array();
  for (std::size_t x = 0; x < t.size(); ++x) {
    json row = json::array();
    for (std::size_t y = 0; y < t.size(); ++y) row.push_back(t.cell(x, y));
    values.push_back(std::move(row));
  }
  j["values"] = std::move(values);
  json w = json::array();
  for (const auto& x : t.weights()) w.push_back(x.str());
  j["weights"] = std::move(w);
  return j.dump(indent);
}

std::string render_over(const Rational& r, std::int64_t denominator) {
  if (denominator > 0 && denominator % r.den() == 0) {
    return std::to_string(r.num() * (denominator / r.den())) + "/" + std::to_string(denominator);
  }
  return r.str();
}

}  // namespace hexalab

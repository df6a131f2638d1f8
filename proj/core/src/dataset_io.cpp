#include "bss/dataset_io.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "bss/error.hpp"
#include "bss/tabular.hpp"

namespace bss {

namespace {

using nlohmann::json;

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open '" + path.string() + "' for reading");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

// ---- JSON ---------------------------------------------------------------

std::vector<std::string> string_list(const json& j, const char* field) {
  if (!j.is_array()) throw ParseError(std::string("'") + field + "' must be an array of strings");
  std::vector<std::string> out;
  for (const auto& v : j) {
    if (!v.is_string())
      throw ParseError(std::string("'") + field + "' must contain only strings");
    out.push_back(v.get<std::string>());
  }
  return out;
}

Parameter parameter_from_json(const json& j) {
  if (j.is_string()) return Parameter::with_default_negation(j.get<std::string>());
  if (!j.is_object() || !j.contains("label") || !j["label"].is_string())
    throw ParseError("a parameter is either a string or {\"label\": ..., \"negation\": ...}");
  auto label = j["label"].get<std::string>();
  if (!j.contains("negation")) return Parameter::with_default_negation(std::move(label));
  if (!j["negation"].is_string()) throw ParseError("'negation' of '" + label + "' must be a string");
  return {std::move(label), j["negation"].get<std::string>()};
}

std::map<std::string, ObjectSet> membership_map(const json& j, const Universe& u,
                                                const char* field) {
  if (!j.is_object()) throw ParseError(std::string("'") + field + "' must be an object");
  std::map<std::string, ObjectSet> out;
  for (const auto& [key, members] : j.items()) {
    auto ids = string_list(members, field);
    out.emplace(key, ObjectSet::named(u, ids));
  }
  return out;
}

BipolarSoftSet parse_json(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(e.what());
  }
  if (!doc.is_object()) throw ParseError("dataset must be a JSON object");
  if (!doc.contains("universe")) throw ParseError("missing 'universe'");
  if (!doc.contains("parameters")) throw ParseError("missing 'parameters'");

  auto universe = make_universe(string_list(doc["universe"], "universe"));
  if (!doc["parameters"].is_array()) throw ParseError("'parameters' must be an array");
  std::vector<Parameter> params;
  for (const auto& p : doc["parameters"]) params.push_back(parameter_from_json(p));
  auto space = make_space(std::move(params));

  const bool has_table = doc.contains("table");
  const bool has_maps = doc.contains("positive") || doc.contains("negative");
  if (has_table && has_maps)
    throw ParseError("give either 'table' or 'positive'/'negative', not both");

  if (has_table) {
    if (!doc.contains("domain")) throw ParseError("'table' requires 'domain' naming its columns");
    auto columns = string_list(doc["domain"], "domain");
    const auto& rows_json = doc["table"];
    if (!rows_json.is_array()) throw ParseError("'table' must be an array of rows");
    std::vector<std::vector<int>> rows;
    for (const auto& r : rows_json) {
      if (!r.is_array()) throw ParseError("each table row must be an array");
      std::vector<int> row;
      for (const auto& v : r) {
        if (!v.is_number_integer()) throw ParseError("table entries must be integers");
        row.push_back(v.get<int>());
      }
      rows.push_back(std::move(row));
    }
    return from_tri_table(TriTable(universe->ids(), std::move(columns), rows), space);
  }

  std::map<std::string, ObjectSet> positive;
  std::map<std::string, ObjectSet> negative;
  if (doc.contains("positive")) positive = membership_map(doc["positive"], *universe, "positive");
  if (doc.contains("negative")) negative = membership_map(doc["negative"], *universe, "negative");

  std::vector<std::string> domain;
  if (doc.contains("domain")) {
    domain = string_list(doc["domain"], "domain");
  } else {
    for (const auto& [label, _] : positive) domain.push_back(label);
  }
  return BipolarSoftSet::create(universe, space, domain, positive, negative);
}

std::string format_json(const BipolarSoftSet& s) {
  json doc;
  doc["universe"] = s.universe().ids();
  doc["parameters"] = json::array();
  for (const auto& p : s.space().parameters())
    doc["parameters"].push_back({{"label", p.positive}, {"negation", p.negation}});
  doc["domain"] = s.domain_labels();
  doc["positive"] = json::object();
  doc["negative"] = json::object();
  for (const auto& e : s.entries()) {
    const auto& p = s.space()[e.parameter];
    doc["positive"][p.positive] = e.positive.names(s.universe());
    doc["negative"][p.negation] = e.negative.names(s.universe());
  }
  return doc.dump(2) + "\n";
}

// ---- delimited table ----------------------------------------------------

std::vector<std::string> split_row(std::string_view line, char delim, std::size_t line_no) {
  std::vector<std::string> out;
  std::string cur;
  bool quoted = false;
  bool was_quoted = false;
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
      was_quoted = true;
    } else if (c == delim) {
      out.push_back(was_quoted ? cur : std::string(trim(cur)));
      cur.clear();
      was_quoted = false;
    } else {
      cur += c;
    }
  }
  if (quoted) throw ParseError("unterminated quoted field", line_no);
  out.push_back(was_quoted ? cur : std::string(trim(cur)));
  return out;
}

std::string quote_field(const std::string& field) {
  if (field.find_first_of(",\"\t") == std::string::npos) return field;
  std::string out = "\"";
  for (char c : field) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

Parameter parameter_from_cell(const std::string& cell, std::size_t line_no) {
  if (cell.empty()) throw ParseError("empty parameter label", line_no);
  auto bar = cell.find('|');
  if (bar == std::string::npos) return Parameter::with_default_negation(cell);
  auto label = cell.substr(0, bar);
  auto negation = cell.substr(bar + 1);
  if (label.empty() || negation.empty())
    throw ParseError("malformed parameter cell '" + cell + "'", line_no);
  return {label, negation};
}

std::string parameter_to_cell(const Parameter& p) {
  if (p.negation == "not_" + p.positive) return p.positive;
  return p.positive + "|" + p.negation;
}

int parse_entry(const std::string& cell, std::size_t line_no) {
  int v = 0;
  std::size_t used = 0;
  try {
    v = std::stoi(cell, &used);
  } catch (const std::exception&) {
    throw ParseError("entry '" + cell + "' is not an integer", line_no);
  }
  if (used != cell.size()) throw ParseError("entry '" + cell + "' is not an integer", line_no);
  if (v < -1 || v > 1)
    throw BadEntry("value " + cell + " at line " + std::to_string(line_no) +
                   " is not in {-1,0,1}");
  return v;
}

BipolarSoftSet parse_table(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string raw;
  std::size_t line_no = 0;
  std::optional<std::vector<Parameter>> declared_space;
  std::vector<Parameter> columns;
  std::vector<bool> explicit_negation;
  bool have_header = false;
  char delim = ',';
  std::vector<std::string> objects;
  std::vector<std::vector<int>> rows;

  while (std::getline(in, raw)) {
    ++line_no;
    auto line = trim(raw);
    if (line.empty()) continue;
    if (line.front() == '#') {
      auto body = trim(line.substr(1));
      constexpr std::string_view kSpace = "space:";
      if (body.substr(0, kSpace.size()) == kSpace) {
        if (have_header) throw ParseError("'# space:' must precede the header", line_no);
        declared_space.emplace();
        auto list = trim(body.substr(kSpace.size()));
        if (!list.empty())
          for (const auto& cell : split_row(list, ',', line_no))
            declared_space->push_back(parameter_from_cell(cell, line_no));
      }
      continue;
    }
    if (!have_header) {
      if (line.find('\t') != std::string_view::npos && line.find(',') == std::string_view::npos)
        delim = '\t';
      auto cells = split_row(line, delim, line_no);
      for (std::size_t i = 1; i < cells.size(); ++i) {
        columns.push_back(parameter_from_cell(cells[i], line_no));
        explicit_negation.push_back(cells[i].find('|') != std::string::npos);
      }
      have_header = true;
      continue;
    }
    auto cells = split_row(line, delim, line_no);
    if (cells.size() != columns.size() + 1)
      throw ParseError("expected " + std::to_string(columns.size() + 1) + " fields, got " +
                           std::to_string(cells.size()),
                       line_no);
    if (cells[0].empty()) throw ParseError("empty object identifier", line_no);
    objects.push_back(cells[0]);
    std::vector<int> row;
    row.reserve(columns.size());
    for (std::size_t i = 1; i < cells.size(); ++i) row.push_back(parse_entry(cells[i], line_no));
    rows.push_back(std::move(row));
  }
  if (!have_header) throw ParseError("table has no header row");

  ParameterSpacePtr space;
  if (declared_space) {
    space = make_space(*declared_space);
    for (std::size_t k = 0; k < columns.size(); ++k) {
      const auto& c = columns[k];
      auto idx = space->index_of(c.positive);
      if (explicit_negation[k] && (*space)[idx].negation != c.negation)
        throw DomainMismatch("column '" + c.positive + "' disagrees with '# space:' on its negation");
    }
  } else {
    space = make_space(columns);
  }
  std::vector<std::string> labels;
  for (const auto& c : columns) labels.push_back(c.positive);
  return from_tri_table(TriTable(std::move(objects), std::move(labels), rows), space);
}

std::string format_table(const BipolarSoftSet& s) {
  std::ostringstream os;
  std::vector<Parameter> column_params;
  for (const auto& e : s.entries()) column_params.push_back(s.space()[e.parameter]);
  if (!(column_params == s.space().parameters())) {
    os << "# space: ";
    bool first = true;
    for (const auto& p : s.space().parameters()) {
      if (!first) os << ',';
      os << quote_field(parameter_to_cell(p));
      first = false;
    }
    os << '\n';
  }
  os << "object";
  for (const auto& p : column_params) os << ',' << quote_field(parameter_to_cell(p));
  os << '\n';
  const auto tri = to_tri_table(s);
  for (std::size_t r = 0; r < tri.rows(); ++r) {
    os << quote_field(tri.row_labels()[r]);
    for (std::size_t c = 0; c < tri.cols(); ++c) os << ',' << tri.at(r, c);
    os << '\n';
  }
  return os.str();
}

}  // namespace

DatasetFormat detect_format(const std::filesystem::path& path, std::string_view content) {
  auto ext = path.extension().string();
  std::transform(ext.begin(), ext.end(), ext.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  if (ext == ".json") return DatasetFormat::Json;
  if (ext == ".csv" || ext == ".tsv" || ext == ".txt") return DatasetFormat::Table;
  auto body = trim(content);
  return !body.empty() && body.front() == '{' ? DatasetFormat::Json : DatasetFormat::Table;
}

BipolarSoftSet parse_dataset(std::string_view text, DatasetFormat format) {
  return format == DatasetFormat::Json ? parse_json(text) : parse_table(text);
}

std::string format_dataset(const BipolarSoftSet& s, DatasetFormat format) {
  return format == DatasetFormat::Json ? format_json(s) : format_table(s);
}

BipolarSoftSet load_dataset(const std::filesystem::path& path) {
  const auto text = read_file(path);
  return parse_dataset(text, detect_format(path, text));
}

void save_dataset(const BipolarSoftSet& s, const std::filesystem::path& path,
                  DatasetFormat format) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot open '" + path.string() + "' for writing");
  out << format_dataset(s, format);
  if (!out) throw IoError("failed writing '" + path.string() + "'");
}

std::map<std::string, double> parse_weights(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("weights: ") + e.what());
  }
  if (!doc.is_object()) throw ParseError("weights file must be a JSON object of label: weight");
  std::map<std::string, double> out;
  for (const auto& [label, v] : doc.items()) {
    if (!v.is_number()) throw ParseError("weight of '" + label + "' is not a number");
    const double w = v.get<double>();
    if (!(w >= 0.0 && w <= 1.0))
      throw WeightOutOfRange("weight of '" + label + "' is " + v.dump());
    out.emplace(label, w);
  }
  return out;
}

std::map<std::string, double> load_weights(const std::filesystem::path& path) {
  return parse_weights(read_file(path));
}

}  // namespace bss

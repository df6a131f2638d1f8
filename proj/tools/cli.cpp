#include "cli.hpp"

#include <algorithm>
#include <cstdio>
#include <functional>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "bss/bss.hpp"

namespace bss::cli {

namespace {

using nlohmann::json;

std::string fixed1(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.1f", v);
  std::string s = buf;
  return s == "-0.0" ? "0.0" : s;
}

std::string join(const std::vector<std::string>& items, const char* sep = ",") {
  std::string out;
  for (std::size_t i = 0; i < items.size(); ++i) {
    if (i) out += sep;
    out += items[i];
  }
  return out;
}

std::vector<std::string> split_list(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    item.erase(0, item.find_first_not_of(" \t"));
    item.erase(item.find_last_not_of(" \t") + 1);
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

// Right-aligned grid; first column left-aligned.
void print_grid(std::ostream& os, const std::vector<std::vector<std::string>>& rows) {
  std::vector<std::size_t> width;
  for (const auto& r : rows) {
    if (width.size() < r.size()) width.resize(r.size(), 0);
    for (std::size_t c = 0; c < r.size(); ++c) width[c] = std::max(width[c], r[c].size());
  }
  for (const auto& r : rows) {
    std::string line;
    for (std::size_t c = 0; c < r.size(); ++c) {
      if (c == 0) {
        line += r[c] + std::string(width[c] - r[c].size(), ' ');
      } else {
        line += "  " + std::string(width[c] - r[c].size(), ' ') + r[c];
      }
    }
    line.erase(line.find_last_not_of(' ') + 1);
    os << line << '\n';
  }
}

json blocks_json(const Partition& p, const Universe& u) {
  json out = json::array();
  for (const auto& b : p.blocks()) {
    json block = json::array();
    for (auto i : b) block.push_back(u[i]);
    out.push_back(std::move(block));
  }
  return out;
}

std::string value_text(double v, bool weighted) {
  return weighted ? fixed1(v) : std::to_string(static_cast<long long>(v));
}

void print_decision_table(std::ostream& os, const DecisionResult& r) {
  const auto& t = r.table.table;
  const bool weighted = r.weighted.has_value();
  std::vector<std::vector<std::string>> rows;
  std::vector<std::string> header{"object"};
  for (const auto& c : t.column_labels()) header.push_back(c);
  header.push_back("d");
  rows.push_back(std::move(header));
  if (weighted) {
    std::vector<std::string> w{"weight"};
    for (double x : r.weighted->weights) w.push_back(fixed1(x));
    w.push_back("");
    rows.push_back(std::move(w));
  }
  for (std::size_t i = 0; i < t.rows(); ++i) {
    std::vector<std::string> row{t.row_labels()[i]};
    for (std::size_t j = 0; j < t.cols(); ++j)
      row.push_back(weighted ? fixed1(r.weighted->at(i, j)) : std::to_string(t.at(i, j)));
    row.push_back(value_text(r.decisions[i], weighted));
    rows.push_back(std::move(row));
  }
  print_grid(os, rows);
}

void print_reduction(std::ostream& os, const ReductionReport& rep) {
  std::vector<std::string> elim;
  for (const auto& e : rep.eliminated)
    elim.push_back(e.ind_equal ? e.parameter : e.parameter + " (inclusion only)");
  os << "eliminated: " << (elim.empty() ? "none" : join(elim, ", ")) << '\n';
  os << "core: " << join(rep.core) << '\n';
}

void print_decision(std::ostream& os, const DecisionResult& r, const Universe& u) {
  const bool weighted = r.weighted.has_value();
  os << (weighted ? "weighted decision table" : "decision table") << " for C = {"
     << join(r.table.table.column_labels()) << "}\n";
  print_decision_table(os, r);
  os << "IND(C): " << r.ind_parameters.to_string(u) << '\n';
  os << "IND(D): " << r.ind_decisions.to_string(u) << '\n';
  os << "consistent: " << (r.consistent ? "yes" : "no") << '\n';
  if (r.reduction) {
    print_reduction(os, *r.reduction);
  } else {
    os << "reduction: skipped, table is inconsistent\n";
  }
  std::vector<std::string> ranking;
  for (const auto& e : r.ranking) ranking.push_back(e.object + " (" + value_text(e.value, weighted) + ")");
  os << "ranking: " << join(ranking, ", ") << '\n';
  os << "maximizers: {" << join(r.maximizers) << "}\n";
  if (!r.maximizers.empty()) os << "optimal: " << r.maximizers.front() << '\n';
}

json decision_json(const DecisionResult& r, const Universe& u) {
  const auto& t = r.table.table;
  json out;
  out["choice"] = t.column_labels();
  out["objects"] = t.row_labels();
  json table = json::array();
  for (std::size_t i = 0; i < t.rows(); ++i) table.push_back(t.row(i));
  out["table"] = std::move(table);
  if (r.weighted) {
    out["weights"] = r.weighted->weights;
    json cells = json::array();
    for (std::size_t i = 0; i < t.rows(); ++i) {
      json row = json::array();
      for (std::size_t j = 0; j < t.cols(); ++j) row.push_back(r.weighted->at(i, j));
      cells.push_back(std::move(row));
    }
    out["weighted_table"] = std::move(cells);
  }
  out["decisions"] = r.decisions;
  out["ind_parameters"] = blocks_json(r.ind_parameters, u);
  out["ind_decisions"] = blocks_json(r.ind_decisions, u);
  out["consistent"] = r.consistent;
  if (r.reduction) {
    json elim = json::array();
    for (const auto& e : r.reduction->eliminated)
      elim.push_back({{"parameter", e.parameter}, {"ind_equal", e.ind_equal}});
    out["eliminated"] = std::move(elim);
    out["core"] = r.reduction->core;
  } else {
    out["eliminated"] = nullptr;
    out["core"] = nullptr;
  }
  json ranking = json::array();
  for (const auto& e : r.ranking) ranking.push_back({{"object", e.object}, {"value", e.value}});
  out["ranking"] = std::move(ranking);
  out["maximizers"] = r.maximizers;
  out["optimal"] = r.maximizers.empty() ? json(nullptr) : json(r.maximizers.front());
  return out;
}

DecisionResult run_decision(const BipolarSoftSet& s, const std::string& params,
                            const std::string& weights_path) {
  auto choice = split_list(params);
  if (choice.empty()) choice = s.domain_labels();
  if (weights_path.empty()) return decide(s, choice);
  return decide_weighted(s, choice, load_weights(weights_path));
}

using BinaryOp = BipolarSoftSet (*)(const BipolarSoftSet&, const BipolarSoftSet&);

const std::map<std::string, BinaryOp>& binary_ops() {
  static const std::map<std::string, BinaryOp> ops{
      {"union-ext", &union_extended},       {"union-res", &union_restricted},
      {"int-ext", &intersection_extended},  {"int-res", &intersection_restricted},
      {"and", &and_product},                {"or", &or_product},
  };
  return ops;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Bipolar soft sets: algebra, tables and decision making", "bss"};
  app.require_subcommand(1);

  std::string file;
  std::string file2;
  std::string output;
  std::string format;
  std::string params;
  std::string weights;
  std::string op_name;
  bool as_json = false;
  bool pair = false;

  auto* validate = app.add_subcommand("validate", "Check that a dataset loads and is consistent");
  validate->add_option("file", file, "Dataset (.json or .csv)")->required();

  auto* op = app.add_subcommand("op", "Apply an operation and write the result dataset");
  std::vector<std::string> op_names{"complement"};
  for (const auto& [name, _] : binary_ops()) op_names.push_back(name);
  op->add_option("operation", op_name, "Operation")->required()->check(CLI::IsMember(op_names));
  op->add_option("file", file, "First operand")->required();
  op->add_option("file2", file2, "Second operand (binary operations)");
  op->add_option("-o,--output", output, "Output path; stdout when omitted");
  op->add_option("--format", format, "Output format, by default from the output extension")
      ->check(CLI::IsMember({"json", "csv"}));

  auto* hes = app.add_subcommand("hesitation", "Print H(e) for every parameter in the domain");
  hes->add_option("file", file, "Dataset")->required();

  auto* table = app.add_subcommand("table", "Print the tri-valued table");
  table->add_option("file", file, "Dataset")->required();
  table->add_flag("--pair", pair, "Print the F and G indicator tables instead");

  auto* dec = app.add_subcommand("decide", "Rank objects over a set of choice parameters");
  dec->add_option("file", file, "Dataset")->required();
  dec->add_option("--params", params, "Comma-separated choice parameters (default: whole domain)");
  dec->add_option("--weights", weights, "JSON weights file");
  dec->add_flag("--json", as_json, "Emit JSON");

  auto* red = app.add_subcommand("reduce", "Eliminate dispensable choice parameters");
  red->add_option("file", file, "Dataset")->required();
  red->add_option("--params", params, "Comma-separated choice parameters (default: whole domain)");
  red->add_option("--weights", weights, "JSON weights file");
  red->add_flag("--json", as_json, "Emit JSON");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 1;
  }

  try {
    if (validate->parsed()) {
      const auto s = load_dataset(file);
      out << "ok: " << s.universe().size() << " objects, " << s.domain_size() << " of "
          << s.space().size() << " parameters in the domain\n";
      return 0;
    }

    if (op->parsed()) {
      const auto x = load_dataset(file);
      std::optional<BipolarSoftSet> result;
      if (op_name == "complement") {
        if (!file2.empty()) throw std::invalid_argument("complement takes a single dataset");
        result = complement(x);
      } else {
        if (file2.empty()) throw std::invalid_argument(op_name + " needs two datasets");
        result = binary_ops().at(op_name)(x, load_dataset(file2));
      }
      DatasetFormat fmt = DatasetFormat::Json;
      if (format == "csv") {
        fmt = DatasetFormat::Table;
      } else if (format.empty() && !output.empty()) {
        fmt = detect_format(output, "{");
      }
      if (output.empty()) {
        out << format_dataset(*result, fmt);
      } else {
        save_dataset(*result, output, fmt);
      }
      return 0;
    }

    if (hes->parsed()) {
      const auto s = load_dataset(file);
      for (const auto& [p, h] : hesitation(s))
        out << "H(" << s.space()[p].positive << ") = " << h.to_string(s.universe()) << '\n';
      return 0;
    }

    if (table->parsed()) {
      const auto s = load_dataset(file);
      if (pair) {
        const auto pt = to_pair_table(s);
        for (int half = 0; half < 2; ++half) {
          std::vector<std::vector<std::string>> rows;
          std::vector<std::string> header{"object"};
          for (const auto& l : half == 0 ? pt.f_labels : pt.g_labels) header.push_back(l);
          rows.push_back(std::move(header));
          for (std::size_t r = 0; r < pt.rows(); ++r) {
            std::vector<std::string> row{pt.row_labels[r]};
            for (std::size_t c = 0; c < pt.cols(); ++c)
              row.push_back(std::to_string(half == 0 ? pt.f_at(r, c) : pt.g_at(r, c)));
            rows.push_back(std::move(row));
          }
          if (half == 1) out << '\n';
          print_grid(out, rows);
        }
      } else {
        const auto t = to_tri_table(s);
        std::vector<std::vector<std::string>> rows;
        std::vector<std::string> header{"object"};
        for (const auto& l : t.column_labels()) header.push_back(l);
        rows.push_back(std::move(header));
        for (std::size_t r = 0; r < t.rows(); ++r) {
          std::vector<std::string> row{t.row_labels()[r]};
          for (std::size_t c = 0; c < t.cols(); ++c) row.push_back(std::to_string(t.at(r, c)));
          rows.push_back(std::move(row));
        }
        print_grid(out, rows);
      }
      return 0;
    }

    if (dec->parsed()) {
      const auto s = load_dataset(file);
      const auto r = run_decision(s, params, weights);
      if (as_json) {
        out << decision_json(r, s.universe()).dump(2) << '\n';
      } else {
        print_decision(out, r, s.universe());
      }
      return 0;
    }

    if (red->parsed()) {
      const auto s = load_dataset(file);
      const auto r = run_decision(s, params, weights);
      if (!r.reduction)
        throw InconsistentTable("IND(C) does not refine IND(D); reduction is undefined");
      if (as_json) {
        json j;
        j["choice"] = r.table.table.column_labels();
        json elim = json::array();
        for (const auto& e : r.reduction->eliminated)
          elim.push_back({{"parameter", e.parameter}, {"ind_equal", e.ind_equal}});
        j["eliminated"] = std::move(elim);
        j["core"] = r.reduction->core;
        out << j.dump(2) << '\n';
      } else {
        out << "C = {" << join(r.table.table.column_labels()) << "}\n";
        print_reduction(out, *r.reduction);
      }
      return 0;
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return exit_code(e.kind());
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
  return 1;
}

}  // namespace bss::cli

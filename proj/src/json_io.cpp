#include "triobj/json_io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace triobj {

using nlohmann::json;

namespace {

json parse_text(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("instance document: ") + e.what());
  }
}

}  // namespace

Instance parse_instance(const std::string& text) {
  const json doc = parse_text(text);
  if (!doc.is_object()) throw ParseError("instance document: expected an object");
  Instance inst;
  try {
    inst.name = doc.value("name", std::string{});
    inst.family = doc.value("family", std::string{"generic"});
    if (!doc.contains("n")) throw ParseError("instance document: missing 'n'");
    inst.n = doc.at("n").get<int>();
    inst.p = doc.value("p", 3);
    if (!doc.contains("objectives"))
      throw ParseError("instance document: missing 'objectives'");
    inst.objectives =
        doc.at("objectives").get<std::vector<std::vector<double>>>();
    if (doc.contains("senses")) {
      for (const auto& s : doc.at("senses")) {
        const std::string v = s.get<std::string>();
        if (v == "min")
          inst.original_senses.push_back(ObjectiveSense::Min);
        else if (v == "max")
          inst.original_senses.push_back(ObjectiveSense::Max);
        else
          throw ParseError("instance document: senses entries must be 'min' or 'max'");
      }
    } else {
      inst.original_senses.assign(static_cast<std::size_t>(inst.p),
                                  ObjectiveSense::Min);
    }
    if (doc.contains("constraints")) {
      std::size_t r = 0;
      for (const auto& c : doc.at("constraints")) {
        ConstraintRow row;
        row.sense = sense_from_string(c.at("sense").get<std::string>());
        row.rhs = c.at("rhs").get<double>();
        for (const auto& pair : c.at("coeffs")) {
          if (!pair.is_array() || pair.size() != 2)
            throw ParseError("instance document: constraints[" +
                             std::to_string(r) + "].coeffs entries must be [index, value]");
          const int idx = pair.at(0).get<int>();
          const double val = pair.at(1).get<double>();
          if (val != 0.0) row.coeffs.emplace_back(idx, val);
        }
        std::sort(row.coeffs.begin(), row.coeffs.end(),
                  [](const auto& a, const auto& b) { return a.first < b.first; });
        for (std::size_t i = 1; i < row.coeffs.size(); ++i)
          if (row.coeffs[i].first == row.coeffs[i - 1].first)
            throw ParseError("instance document: constraints[" + std::to_string(r) +
                             "] repeats variable index " +
                             std::to_string(row.coeffs[i].first));
        inst.constraints.push_back(std::move(row));
        ++r;
      }
    }
  } catch (const json::exception& e) {
    throw ParseError(std::string("instance document: ") + e.what());
  }

  try {
    inst.validate();
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what());
  }

  // Store minimisation-only; flip max rows here, report them back on save.
  for (int k = 0; k < inst.p; ++k)
    if (inst.original_senses[static_cast<std::size_t>(k)] == ObjectiveSense::Max)
      for (double& c : inst.objectives[static_cast<std::size_t>(k)]) c = -c;
  return inst;
}

std::string instance_to_json(const Instance& inst) {
  json doc;
  doc["name"] = inst.name;
  doc["n"] = inst.n;
  doc["p"] = inst.p;
  json objs = json::array();
  for (int k = 0; k < inst.p; ++k) {
    json row = json::array();
    const bool maxed =
        inst.original_senses[static_cast<std::size_t>(k)] == ObjectiveSense::Max;
    for (double c : inst.objectives[static_cast<std::size_t>(k)])
      row.push_back(maxed ? -c : c);
    objs.push_back(std::move(row));
  }
  doc["objectives"] = std::move(objs);
  json senses = json::array();
  for (auto s : inst.original_senses)
    senses.push_back(s == ObjectiveSense::Max ? "max" : "min");
  doc["senses"] = std::move(senses);
  json cons = json::array();
  for (const auto& row : inst.constraints) {
    json c;
    json coeffs = json::array();
    for (const auto& [idx, v] : row.coeffs) coeffs.push_back(json::array({idx, v}));
    c["coeffs"] = std::move(coeffs);
    c["sense"] = sense_to_string(row.sense);
    c["rhs"] = row.rhs;
    cons.push_back(std::move(c));
  }
  doc["constraints"] = std::move(cons);
  doc["family"] = inst.family;
  return doc.dump(2) + "\n";
}

std::string front_to_json(const Front& front) {
  json doc;
  doc["points"] = front.points;
  json sols = json::array();
  for (const auto& s : front.solutions) {
    json bits = json::array();
    for (auto b : s) bits.push_back(static_cast<int>(b));
    sols.push_back(std::move(bits));
  }
  doc["solutions"] = std::move(sols);
  json stats;
  stats["size"] = front.stats.size;
  stats["branch"] = front.stats.branch;
  stats["fractionality"] = front.stats.fractionality;
  stats["lb_complete"] = front.stats.lb_complete;
  stats["warning"] = front.stats.warning;
  doc["stats"] = std::move(stats);
  return doc.dump(2) + "\n";
}

Front front_from_json(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("front document: ") + e.what());
  }
  Front front;
  try {
    front.points = doc.at("points").get<std::vector<std::vector<double>>>();
    for (const auto& s : doc.at("solutions")) {
      BitVector bits;
      for (const auto& b : s)
        bits.push_back(static_cast<std::uint8_t>(b.get<int>() != 0));
      front.solutions.push_back(std::move(bits));
    }
    if (doc.contains("stats")) {
      const auto& st = doc.at("stats");
      front.stats.size = st.value("size", static_cast<int>(front.points.size()));
      front.stats.branch = st.value("branch", std::string{});
      front.stats.fractionality = st.value("fractionality", 0.0);
      front.stats.lb_complete = st.value("lb_complete", true);
      front.stats.warning = st.value("warning", std::string{});
    } else {
      front.stats.size = static_cast<int>(front.points.size());
    }
  } catch (const json::exception& e) {
    throw ParseError(std::string("front document: ") + e.what());
  }
  return front;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write file: " + path);
  out << content;
  if (!out) throw std::runtime_error("write failed: " + path);
}

}  // namespace triobj

#include "listcomb/io.hpp"

#include <fstream>
#include <sstream>

namespace listcomb::io {

namespace {

std::pair<std::size_t, std::size_t> line_and_column(const std::string& text, std::size_t byte) {
  std::size_t line = 1;
  std::size_t column = 1;
  for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      column = 1;
    } else {
      ++column;
    }
  }
  return {line, column};
}

const Json& require(const Json& j, const char* key, const char* what) {
  if (!j.is_object() || !j.contains(key))
    throw FormatError(std::string(what) + " is missing the \"" + key + "\" field");
  return j.at(key);
}

std::string require_string(const Json& j, const char* what) {
  if (!j.is_string()) throw FormatError(std::string(what) + " must be a string");
  return j.get<std::string>();
}

std::vector<std::string> string_list(const Json& j, const char* what) {
  if (!j.is_array()) throw FormatError(std::string(what) + " must be an array of strings");
  std::vector<std::string> out;
  out.reserve(j.size());
  for (const auto& e : j) out.push_back(require_string(e, what));
  return out;
}

}  // namespace

Json parse_json(const std::string& text, const std::string& origin) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    auto [line, column] = line_and_column(text, e.byte == 0 ? 0 : e.byte - 1);
    throw FormatError(origin + ":" + std::to_string(line) + ":" + std::to_string(column) +
                      ": malformed JSON");
  }
}

Json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw FormatError("cannot open '" + path.string() + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_json(buffer.str(), path.string());
}

void write_text_file(const std::filesystem::path& path, const std::string& text) {
  if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
  std::ofstream out(path, std::ios::binary);
  if (!out) throw FormatError("cannot write '" + path.string() + "'");
  out << text;
}

ConceptClass class_from_json(const Json& j) {
  Domain domain(string_list(require(j, "domain", "class"), "domain"));
  LabelSpace labels(string_list(require(j, "labels", "class"), "labels"));
  const Json& kj = require(j, "k", "class");
  if (!kj.is_number_integer() || kj.get<std::int64_t>() < 1)
    throw FormatError("\"k\" must be a positive integer");
  const auto k = static_cast<std::size_t>(kj.get<std::int64_t>());
  const Json& cj = require(j, "concepts", "class");
  if (!cj.is_array()) throw FormatError("\"concepts\" must be an array");

  std::vector<ListConcept> concepts;
  concepts.reserve(cj.size());
  for (const auto& entry : cj) {
    std::string name;
    if (entry.is_object() && entry.contains("name") && !entry.at("name").is_null())
      name = require_string(entry.at("name"), "concept name");
    const Json& values = require(entry, "values", "concept");
    if (!values.is_object()) throw FormatError("concept \"values\" must be an object");
    std::vector<ListConcept::Value> row(domain.size());
    std::vector<bool> seen(domain.size(), false);
    for (auto it = values.begin(); it != values.end(); ++it) {
      const auto x = domain.find(it.key());
      if (!x) throw FormatError("concept refers to unknown point '" + it.key() + "'");
      if (seen[*x]) throw FormatError("point '" + it.key() + "' listed twice");
      seen[*x] = true;
      if (it.value().is_null()) continue;
      if (!it.value().is_array()) throw FormatError("value at '" + it.key() + "' must be null or an array");
      LabelSet set;
      for (const auto& lj : it.value()) {
        const auto y = labels.find(require_string(lj, "label"));
        if (!y) throw FormatError("unknown label '" + lj.get<std::string>() + "'");
        set.push_back(*y);
      }
      row[*x] = std::move(set);
    }
    for (std::size_t x = 0; x < domain.size(); ++x) {
      if (!seen[x]) throw FormatError("concept omits point '" + domain.name(x) + "'");
    }
    concepts.emplace_back(k, std::move(row), std::move(name));
  }
  std::string class_name;
  if (j.contains("name") && j.at("name").is_string()) class_name = j.at("name").get<std::string>();
  return ConceptClass(std::move(domain), std::move(labels), k, std::move(concepts),
                      std::move(class_name));
}

Json class_to_json(const ConceptClass& cls) {
  Json j = Json::object();
  if (!cls.name().empty()) j["name"] = cls.name();
  j["domain"] = cls.domain().names();
  j["labels"] = cls.labels().names();
  j["k"] = cls.k();
  Json concepts = Json::array();
  for (const auto& c : cls) {
    Json entry = Json::object();
    if (!c.name().empty()) entry["name"] = c.name();
    Json values = Json::object();
    for (std::size_t x = 0; x < cls.domain().size(); ++x) {
      const auto& v = c.value(static_cast<PointIndex>(x));
      if (!v) {
        values[cls.domain().name(x)] = nullptr;
        continue;
      }
      Json list = Json::array();
      for (LabelIndex y : *v) list.push_back(cls.labels().name(y));
      values[cls.domain().name(x)] = std::move(list);
    }
    entry["values"] = std::move(values);
    concepts.push_back(std::move(entry));
  }
  j["concepts"] = std::move(concepts);
  return j;
}

ConceptClass read_class(const std::filesystem::path& path) {
  return class_from_json(read_json_file(path));
}

Sample sample_from_json(const Json& j, const ConceptClass& cls) {
  const Json& pairs = require(j, "pairs", "sample");
  if (!pairs.is_array()) throw FormatError("\"pairs\" must be an array");
  Sample s;
  s.reserve(pairs.size());
  for (const auto& p : pairs) {
    if (!p.is_array() || p.size() != 2) throw FormatError("each pair must be [point, label]");
    s.push_back({cls.domain().at(require_string(p[0], "point")),
                 cls.labels().at(require_string(p[1], "label"))});
  }
  return s;
}

Json sample_to_json(const Sample& s, const ConceptClass& cls) {
  Json pairs = Json::array();
  for (const auto& p : s)
    pairs.push_back(Json::array({cls.domain().name(p.point), cls.labels().name(p.label)}));
  Json j = Json::object();
  j["pairs"] = std::move(pairs);
  return j;
}

Sample read_sample(const std::filesystem::path& path, const ConceptClass& cls) {
  return sample_from_json(read_json_file(path), cls);
}

DiscreteDistribution distribution_from_json(const Json& j, const ConceptClass& cls) {
  const Json& support = require(j, "support", "distribution");
  if (!support.is_array()) throw FormatError("\"support\" must be an array");
  std::vector<WeightedPair> pairs;
  pairs.reserve(support.size());
  for (const auto& e : support) {
    if (!e.is_array() || e.size() != 3 || !e[2].is_number())
      throw FormatError("each support entry must be [point, label, probability]");
    pairs.push_back({cls.domain().at(require_string(e[0], "point")),
                     cls.labels().at(require_string(e[1], "label")), e[2].get<double>()});
  }
  return DiscreteDistribution(std::move(pairs));
}

Json distribution_to_json(const DiscreteDistribution& d, const ConceptClass& cls) {
  Json support = Json::array();
  for (const auto& w : d.support())
    support.push_back(
        Json::array({cls.domain().name(w.point), cls.labels().name(w.label), w.probability}));
  Json j = Json::object();
  j["support"] = std::move(support);
  return j;
}

ConceptClass hypotheses_as_class(const std::vector<ListHypothesis>& hypotheses, const Domain& domain,
                                 const LabelSpace& labels, std::size_t k, std::string name) {
  std::vector<ListConcept> concepts;
  concepts.reserve(hypotheses.size());
  for (std::size_t i = 0; i < hypotheses.size(); ++i)
    concepts.push_back(hypotheses[i].to_concept("h" + std::to_string(i)));
  return ConceptClass(domain, labels, k, std::move(concepts), std::move(name));
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace listcomb::io

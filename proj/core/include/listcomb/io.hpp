#pragma once

// JSON file formats (see docs/file-formats.md):
//
//   class:        {"domain": [..], "labels": [..], "k": int,
//                  "concepts": [{"name": str?, "values": {point: null | [label x k]}}]}
//   sample:       {"pairs": [[point, label], ..]}
//   distribution: {"support": [[point, label, prob], ..]}
//
// Identifiers are resolved against the class the file is used with.

#include <filesystem>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>
#include "listcomb/core.hpp"

namespace listcomb::io {

using Json = nlohmann::ordered_json;

// Parses text; FormatError messages carry "<origin>:<line>:<column>".
Json parse_json(const std::string& text, const std::string& origin = "<input>");
Json read_json_file(const std::filesystem::path& path);
void write_text_file(const std::filesystem::path& path, const std::string& text);

ConceptClass class_from_json(const Json& j);
Json class_to_json(const ConceptClass& cls);
ConceptClass read_class(const std::filesystem::path& path);

Sample sample_from_json(const Json& j, const ConceptClass& cls);
Json sample_to_json(const Sample& s, const ConceptClass& cls);
Sample read_sample(const std::filesystem::path& path, const ConceptClass& cls);

DiscreteDistribution distribution_from_json(const Json& j, const ConceptClass& cls);
Json distribution_to_json(const DiscreteDistribution& d, const ConceptClass& cls);

// Hypotheses packaged as a total k-list class over the given domain/labels.
ConceptClass hypotheses_as_class(const std::vector<ListHypothesis>& hypotheses, const Domain& domain,
                                 const LabelSpace& labels, std::size_t k, std::string name = {});

// Canonical serialization: two-space indent, trailing newline.
std::string dump(const Json& j);

}  // namespace listcomb::io

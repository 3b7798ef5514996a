#pragma once

#include <string>

#include "triobj/front.hpp"
#include "triobj/model.hpp"

namespace triobj {

struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Instance interchange document. Objectives arrive in their original senses;
// max rows are negated on load and restored on save.
Instance parse_instance(const std::string& text);
std::string instance_to_json(const Instance& inst);

// Front document: {"points": [[..]], "solutions": [[0|1,..]], "stats": {..}}.
// Wall time is deliberately not serialised so repeated runs with one seed
// produce byte-identical files.
std::string front_to_json(const Front& front);
Front front_from_json(const std::string& text);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

}  // namespace triobj

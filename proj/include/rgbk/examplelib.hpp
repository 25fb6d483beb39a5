#pragma once

#include <string>

#include "rgbk/types.hpp"

namespace rgbk {

// Named example sets: appendixA8, grid37, kflat(k), standard_lex(m),
// sumset-demo. The comment goes into the header line of generated files.
struct Example {
  std::string name;
  std::string comment;
  TripleSet triples;
};

// Resolves a registry name, parsing parenthesized parameters.
// Throws "unknown-example" for anything else.
Example example_by_name(const std::string& name);

// The five registry templates, parameterized entries shown with placeholders.
std::vector<std::string> example_registry();

}  // namespace rgbk

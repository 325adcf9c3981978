#pragma once

#include <map>
#include <string>
#include <vector>

#include "bx/classify.hpp"

namespace bx {

struct CatalogEntry {
  Bx bx;
  Framework framework;
  SchemeSignature expected_signature;
  // Only the verdicts the entry exists to demonstrate; other laws are left out.
  std::map<std::pair<Law, Direction>, VerdictKind> expected_laws;
};

// Throws Error{UnknownName}.
const CatalogEntry& catalog(std::string_view name);
std::vector<std::string> catalog_names();  // registration order

// The list edit lens of the catalog with lists of up to `max_len` elements.
Bx make_list_edit_lens(std::size_t max_len);

// The signature each framework is defined to have.
SchemeSignature framework_signature(Framework f);

}  // namespace bx

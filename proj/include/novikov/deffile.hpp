#pragma once

#include <string>

#include "novikov/algebra.hpp"

namespace novikov {

// JSON definition file: field descriptor, dim, basis labels, sparse table
// with coefficients as exact strings. emit() is canonical (sorted (i,j),
// sorted k, reduced coefficients, fixed key order), so parse -> emit is a
// byte-identical fixpoint on canonical files.
Algebra parse_definition(const std::string& json_text);
std::string emit_definition(const Algebra& a);

Algebra load_definition_file(const std::string& path);
void save_definition_file(const Algebra& a, const std::string& path);

}  // namespace novikov

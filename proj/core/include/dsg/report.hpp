#pragma once

#include <string>
#include <vector>

#include "dsg/bounds.hpp"
#include "dsg/pipeline.hpp"

namespace dsg {

enum class OutputFormat { Text, Json };

// Renderers produce the whole document, newline-terminated. JSON keys are
// sorted and every number is an integer.
std::string render_bound(const BoundReport& r, OutputFormat f);
std::string render_invariants(const Analysis& a, OutputFormat f);
std::string render_hypotheses(const Analysis& a, OutputFormat f);
std::string render_basis(const std::string& ring, const std::string& ideal, const std::vector<std::string>& basis,
                         OutputFormat f);
std::string render_normal_form(const std::string& ring, const std::string& ideal, const std::string& poly,
                               const std::string& nf, OutputFormat f);
std::string render_jacobian(const std::string& ring, const JacobianIdeal& jac, OutputFormat f);

}  // namespace dsg

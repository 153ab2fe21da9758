#pragma once

#include "flowvol/diffop.hpp"
#include "flowvol/multipoly.hpp"

#include <string>
#include <string_view>

namespace flowvol {

/// LaTeX form with the rational content and the common monomial pulled out,
/// e.g. "\frac{1}{360} a_{1}^{3}(a_{1}^{3} + 6a_{1}^{2}a_{2} + ...)".
std::string to_latex(const MultiPoly& p, std::string_view symbol = "a");

std::string to_latex(const DiffOperator& d);

}  // namespace flowvol

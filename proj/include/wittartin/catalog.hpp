#pragma once

#include <string>
#include <vector>

#include "wittartin/splitting.hpp"

namespace wittartin {

struct CatalogParams {
  Index dim = 3;     // torus only
  Index subdim = 1;  // torus only
};

/// Names accepted by catalog_instance, in catalog order.
std::vector<std::string> catalog_names();

/// Built-in instances:
///   so3-generic        so(3), h = span(e1), mu = e3* (mu not collinear with h)
///   so3-collinear      so(3), h = span(e3), mu = e3*
///   so3-zero           so(3), h = span(e3), mu = 0
///   torus              abelian R^dim, h = first subdim coordinates, mu_i = (i+1)/(i+2)
///   so3xso3-diagonal   diagonal so(3) in so(3)+so(3), mu = (e3*, 2 e3*), g_m = 0
///   so3xso3-stabilized the same h with mu = (e3*, e3*) and g_m = span((e3, e3))
/// Each carries a 2-dimensional N1 with the standard symplectic form.
/// Throws Error(UnknownExample).
ProblemInstance catalog_instance(const std::string& name, const CatalogParams& params = {});

}  // namespace wittartin

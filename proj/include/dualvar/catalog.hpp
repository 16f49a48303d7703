#pragma once

#include <string>

#include "dualvar/multipoly.hpp"

namespace dualvar {

// Named polynomials:
//   det:n            determinant of an n x n matrix          (n^2 variables)
//   perm:m           permanent of an m x m matrix            (m^2 variables)
//   padded:perm:m:d  l^{d-m} perm_m with one extra variable  (m^2 + 1 variables)
//   plambda:n        boundary polynomial, odd n              (n^2 variables)
//   immanant:p1,...  immanant for the partition (p1,...)     (n^2 variables)
struct CatalogPoly {
    MultiPoly poly;
    std::string canonical_name;
};

bool is_catalog_name(const std::string& spec);
CatalogPoly resolve_catalog(const std::string& spec);

} // namespace dualvar

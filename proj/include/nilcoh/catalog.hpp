#pragma once

#include "nilcoh/document.hpp"

namespace nilcoh {

// Built-in example documents: the complex tori torus-1/2/3, the Iwasawa
// algebra with its bi-invariant structure and deformation family, and the
// Kodaira–Thurston algebra with its abelian structure.
const std::vector<std::string>& catalog_names();
bool is_catalog_name(const std::string& name);
AlgebraDocument catalog_document(const std::string& name);

} // namespace nilcoh

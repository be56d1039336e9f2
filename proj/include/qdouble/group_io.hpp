#pragma once

#include <string>

#include "qdouble/builtin_groups.hpp"

namespace qdouble {

// Group file schema:
//   {"order": n, "mult": [[...]], "irreps": [{"subgroup": [...], "dim": d,
//    "matrices": {"<elem>": [[{"re":..,"im":..},...],...], ...}, "label": "..."}]}
// Element indices are 0-based; index 0 must be the identity.
// Throws GroupValidationError (bad table / bad irreps) or std::runtime_error
// (unreadable file / malformed JSON).
GroupData load_group_file(const std::string& path);

// Resolves "S3", "Z4", ... via the catalog and "file:..." (or a bare path to
// an existing .json file) via load_group_file.
GroupData resolve_group(const std::string& source);

} // namespace qdouble

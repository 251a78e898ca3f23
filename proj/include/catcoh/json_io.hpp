#pragma once

// JSON reading and writing for categories, functors, coefficients and reports.

#include "catcoh/fibration.hpp"

#include "json.hpp"

#include <filesystem>

namespace catcoh {

using Json = nlohmann::ordered_json;

Json read_json_file(const std::filesystem::path& path);

// Inline objects or a path string resolved against dir.
FinCat category_from_json(const Json& j, const std::filesystem::path& dir = {});
Json category_to_json(const FinCat& c);

FinFunctor functor_from_json(const Json& j, CatPtr source, CatPtr target);

struct FunctorFile {
    CatPtr source;
    CatPtr target;
    FinFunctor functor;
};

// {"source": cat, "target": cat, "objects": {...}, "morphisms": {...}}
FunctorFile functor_file_from_json(const Json& j, const std::filesystem::path& dir = {});

ExactMatrix matrix_from_json(const Json& j, std::size_t rows, std::size_t cols, const std::string& where);
Json matrix_to_json(const ExactMatrix& m);

// Fills unnamed maps from identities and composites of named ones.
std::vector<ExactMatrix> complete_maps(const FinCat& index, Variance variance, const std::vector<std::size_t>& ranks,
                                       std::vector<std::optional<ExactMatrix>> given);

// "variance" in the file wins over fallback.
CoeffSystem coeff_from_json(const Json& j, CatPtr base, Ring ring, Variance fallback,
                            const std::filesystem::path& dir = {});

// {"fibers": {b: cat}, "transports": {φ: {"objects": ..., "morphisms": ...}}}
StrictFunctor strict_functor_from_json(const Json& j, CatPtr base, const std::filesystem::path& dir = {});

Json homology_to_json(const HomologyGroup& h);
HomologyGroup homology_from_json(const Json& j);

Json e2_to_json(const E2Page& page);
Json locality_to_json(const LocalityReport& r, const FinCat& base);
Json certificate_to_json(const FibrationCertificate& c, const FinFunctor& u);

} // namespace catcoh

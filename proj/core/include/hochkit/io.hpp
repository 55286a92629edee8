#pragma once

#include <filesystem>
#include <string>

#include <nlohmann/json.hpp>

#include "hochkit/algebra.hpp"
#include "hochkit/extensions.hpp"
#include "hochkit/koszul.hpp"
#include "hochkit/linalg.hpp"

namespace hochkit::io {

using Json = nlohmann::ordered_json;

/// Pretty printer with two-space indent that keeps arrays of primitives on one
/// line. Output ends with a newline.
[[nodiscard]] std::string dump(const Json& j);

/// Parses a file; ValidationError("parse") on malformed JSON or I/O failure.
[[nodiscard]] Json read_json(const std::filesystem::path& path);
void write_text(const std::filesystem::path& path, const std::string& text);

/// "Z", "Q" or {"Fp": p}.
[[nodiscard]] Json ring_to_json(const ScalarRing& ring);
[[nodiscard]] ScalarRing ring_from_json(const Json& j);

/// Rows of decimal strings.
[[nodiscard]] Json matrix_to_json(const Matrix& m);
/// Expects exactly rows x cols entries (cols inferred when rows == 0 is ambiguous).
[[nodiscard]] Matrix matrix_from_json(const ScalarRing& ring, const Json& j, std::size_t rows, std::size_t cols,
                                      const std::string& what);

[[nodiscard]] Json invariants_to_json(const KModuleInvariants& inv);

/// {"scalars", "rank", "basis", "unit", "mul"} with mul[i][j][k] the coefficient
/// of e_k in e_i e_j.
[[nodiscard]] Json algebra_to_json(const FiniteAlgebra& a);
[[nodiscard]] FiniteAlgebra algebra_from_json(const Json& j);
[[nodiscard]] FiniteAlgebra load_algebra(const std::filesystem::path& path);

/// "algebra" is either inline or a path relative to `base`.
[[nodiscard]] FiniteAlgebra algebra_ref(const Json& j, const std::filesystem::path& base);

/// {"algebra", "rank", "left", "right"}.
[[nodiscard]] Json bimodule_to_json(const Bimodule& m, const Json& algebra);
[[nodiscard]] Bimodule bimodule_from_json(const Json& j, const std::filesystem::path& base);
[[nodiscard]] Bimodule load_bimodule(const std::filesystem::path& path);

/// {"algebra", "rank", "actions", "relations"?}; relations are columns.
[[nodiscard]] Json module_to_json(const QuotientModule& m, const Json& algebra);
[[nodiscard]] QuotientModule module_from_json(const Json& j, const std::filesystem::path& base);
[[nodiscard]] QuotientModule load_module(const std::filesystem::path& path);

/// {"module": bimodule, "total": algebra, "projection", "inclusion", "section"}.
[[nodiscard]] Json extension_to_json(const ExtensionPresentation& e, const Json& module);
[[nodiscard]] ExtensionPresentation extension_from_json(const Json& j, const std::filesystem::path& base);
[[nodiscard]] ExtensionPresentation load_extension(const std::filesystem::path& path);

/// {"cocycle": m x d^2 matrix}.
[[nodiscard]] Json cocycle_to_json(const Matrix& b);
[[nodiscard]] Matrix cocycle_from_json(const Json& j, const Bimodule& m);

}  // namespace hochkit::io

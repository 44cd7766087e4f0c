#pragma once

#include <cstddef>
#include <string>
#include <string_view>

#include <json.hpp>

#include "riordan/identities.hpp"
#include "riordan/recursions.hpp"
#include "riordan/series.hpp"
#include "riordan/sheffer.hpp"
#include "riordan/triangle.hpp"
#include "riordan/umbra.hpp"

namespace riordan::io {

using Json = nlohmann::ordered_json;

enum class Format { table, csv, json };

/// Accepts table, csv, json.
Format parse_format(std::string_view text);

/// Array of rational strings, lowest order first.
Json series_to_json(const Series& f);
Series series_from_json(const Json& j);

/// {"moments": [...], "order": N}
Json umbra_to_json(const Umbra& u);
/// Accepts the object form or a bare moment array.
Umbra umbra_from_json(const Json& j);

/// {"flavor": "exp", "rows": [["1"], ["0", "1"]]}
Json triangle_to_json(const Triangle& t);
Triangle triangle_from_json(const Json& j);

/// Compact JSON, CSV (one row per line), or a right-aligned table.
std::string render(const Triangle& t, Format format);

/// Polynomials as ascending coefficient lists in JSON, one rendering per line otherwise.
std::string render(std::span<const Polynomial> sequence, Format format);

Json report_to_json(const RecursionReport& report);
Json report_to_json(const IdentityReport& report);

/// Resolves `[<rational>.]...<name>[.<rational>]` or `@file.json` to an umbra
/// of the given order. Dot chains fold from the right, so "2.catalan" is
/// 2.ς and "bernoulli.catalan" is β.ς; a trailing rational is a scalar umbra.
/// Files holding more moments are truncated; fewer is an error.
Umbra parse_spec(std::string_view text, std::size_t order);

}  // namespace riordan::io

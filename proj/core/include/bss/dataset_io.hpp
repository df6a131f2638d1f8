#pragma once

#include <filesystem>
#include <map>
#include <string>
#include <string_view>

#include "bss/soft_set.hpp"

namespace bss {

/// On-disk dataset encodings.
///
/// Json: a structured document naming the universe, the parameter pairs and
/// either membership lists or a tri-valued table:
///
///     {
///       "universe":   ["h1", "h2", ...],
///       "parameters": [{"label": "e1", "negation": "not_e1"}, "e2", ...],
///       "domain":     ["e1", "e2"],
///       "positive":   {"e1": ["h2", "h3"], ...},   // keyed by label
///       "negative":   {"not_e1": ["h4"], ...}      // keyed by negation
///     }
///
/// A bare string parameter gets the negation "not_<label>". Instead of
/// positive/negative a "table" array (one row per object, one column per
/// domain parameter, entries in {-1,0,1}) may be given.
///
/// Table: a delimited file shaped like the printed tables. The header row is
/// `object,<label>,...`; each following row is an object id and its entries.
/// A header cell `label|negation` overrides the default negation. Lines
/// starting with '#' are comments, except `# space: p1,p2|not_p2,...` which
/// declares an ambient parameter space larger than the columns.
enum class DatasetFormat { Json, Table };

/// By extension: .json is Json, .csv/.tsv/.txt are Table; otherwise sniffs
/// the first non-blank character of `content`.
DatasetFormat detect_format(const std::filesystem::path& path, std::string_view content);

BipolarSoftSet parse_dataset(std::string_view text, DatasetFormat format);
std::string format_dataset(const BipolarSoftSet& s, DatasetFormat format);

/// Throws IoError when the file cannot be read, ParseError/BadEntry on
/// malformed content, and the usual validation errors of BipolarSoftSet.
BipolarSoftSet load_dataset(const std::filesystem::path& path);
void save_dataset(const BipolarSoftSet& s, const std::filesystem::path& path,
                  DatasetFormat format);

/// Weights file: a JSON object mapping positive labels to weights in [0,1].
std::map<std::string, double> parse_weights(std::string_view text);
std::map<std::string, double> load_weights(const std::filesystem::path& path);

}  // namespace bss

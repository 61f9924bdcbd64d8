/** @file
 *  @brief JSON document input/output for every object the tool handles.
 *
 *  Documents are JSON objects with a "kind" field in {"skeleton",
 *  "embedding", "fan", "mfs-case", "trace"}.  Every rational value is a
 *  string "p" or "p/q" so nothing is rounded.  Loading validates both the
 *  schema and the mathematical axioms of the object; serialization is
 *  deterministic and round-trips exactly.
 */
#pragma once

#include <nlohmann/json.hpp>

#include <optional>
#include <string>

#include "sphcrit/criteria.hpp"
#include "sphcrit/gorenstein.hpp"

namespace sphcrit {

using Json = nlohmann::ordered_json;

// ---- object <-> json -------------------------------------------------------

Json skeleton_to_json(const SphericalSkeleton& sk);
SphericalSkeleton skeleton_from_json(const Json& j);

Json embedding_to_json(const LunaEmbeddingData& E);
LunaEmbeddingData embedding_from_json(const Json& j);

Json fan_to_json(const ColoredFan& F);
ColoredFan fan_from_json(const Json& j);

Json mfs_case_to_json(const MfsCase& c);
MfsCase mfs_case_from_json(const Json& j);

Json trace_to_json(const PipelineTrace& t);
PipelineTrace trace_from_json(const Json& j);

// ---- files -----------------------------------------------------------------

/** Parse a file as JSON; throws std::runtime_error with the file name on
 *  read or syntax errors. */
Json read_json_file(const std::string& path);

/** Write with two-space indentation and a trailing newline. */
void write_json_file(const std::string& path, const Json& j);

/** "kind" field of a document; throws when absent. */
std::string document_kind(const Json& j);

struct EmbeddingDoc {
  LunaEmbeddingData E;
  ColoredFan fan;      ///< empty when the document has no fan
  bool has_fan = false;
};

/** Load a "skeleton" document and validate it. */
SphericalSkeleton load_skeleton(const std::string& path);

/** Load an "embedding" or "fan" document; validates the data and, when a
 *  fan is present, the fan. */
EmbeddingDoc load_embedding_doc(const std::string& path);

/** Load an "mfs-case" document; validates shapes. */
MfsCase load_mfs_case(const std::string& path);

}  // namespace sphcrit

#pragma once

#include <string>

#include "json.hpp"

#include "ftag/instance.hpp"
#include "ftag/n3dm.hpp"
#include "ftag/reduction.hpp"
#include "ftag/verify.hpp"
#include "ftag/wakeup_tree.hpp"

namespace ftag {

// Key order is preserved so serialized documents are byte-reproducible.
using Json = nlohmann::ordered_json;

struct ParseError : std::runtime_error {
  explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

Json parse_json_text(const std::string& text);
Json load_json_file(const std::string& path);
void save_json_file(const std::string& path, const Json& doc);

// {"metric":"L1","robots":[["p/q","p/q"],...],"source":0}; metric "matrix"
// additionally carries "matrix":[["0","1"],...].  Rationals are strings,
// integers may drop the "/q" part; bare JSON integers are accepted on input.
FtpInstance instance_from_json(const Json& doc);
Json instance_to_json(const FtpInstance& inst);

// {"parent":[null,0,...]}
WakeupTree schedule_from_json(const Json& doc);
Json schedule_to_json(const WakeupTree& tree);

// {"U":[...],"V":[...],"W":[...]}; parsing canonicalizes via validate_n3dm.
N3dmInstance n3dm_from_json(const Json& doc);
Json n3dm_to_json(const N3dmInstance& inst);

// {"q":...,"triples":[[i,j,k],...]} with 0-based indices.
Json matching_to_json(const N3dmInstance& inst, const Matching& m);
Matching matching_from_json(const Json& doc);

// Reduction sidecar: threshold, parameters, shift used and group index maps.
struct ReductionMetadata {
  Rational makespan_bound, epsilon, delta;
  std::int64_t shift = 0;
  std::size_t source = 0;
  GroupIndex groups;
};

Json metadata_to_json(const ReductionArtifacts& art, std::int64_t shift_used);
ReductionMetadata metadata_from_json(const Json& doc);

Json grid_to_json(const GridEmbedding& emb);

Json report_to_json(const VerificationReport& report);
VerificationReport report_from_json(const Json& doc);

}  // namespace ftag

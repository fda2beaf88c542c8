#pragma once

#include <optional>
#include <string>

#include "json.hpp"
#include "quiver/exact.hpp"
#include "quiver/linear_oracle.hpp"
#include "quiver/marked_partition.hpp"
#include "quiver/orbit_catalog.hpp"

namespace quiver {

// One label per JSON line:
//   {"class_color":0|null,"n":2,"rows":[{"color":0,"length":2,"mark":1},...]}
// Serialization of a canonical document is byte-stable (sorted keys, compact).
struct LabelDocument {
    MarkedColoredPartition label;
    std::optional<CyclicColor> class_color;
};

nlohmann::json label_to_json(const MarkedColoredPartition& mcp,
                             std::optional<CyclicColor> class_color = std::nullopt);
LabelDocument label_from_json(const nlohmann::json& j);

std::string serialize_label(const LabelDocument& doc);
LabelDocument parse_label(const std::string& line);

nlohmann::json orbit_record_to_json(const OrbitRecord& rec);

// Raw pair document over the rationals:
//   {"n":2,"dims":[1,1],"blocks":[[[0]],[[1]]],"vector":{"color":0,"coords":[1]}|null}
// blocks[i] is the matrix V_i -> V_{i+1} (dims[i+1] rows, dims[i] columns);
// entries are integers or "p/q" strings.
struct PairDocument {
    ColoredVector<Rationals> vector;
    BlockNilpotent<Rationals> x;
};

PairDocument pair_from_json(const nlohmann::json& j);

}  // namespace quiver

#pragma once

#include <json.hpp>
#include <string_view>

#include "springer_kit/cuspidal.hpp"
#include "springer_kit/partition.hpp"
#include "springer_kit/springer.hpp"
#include "springer_kit/symbol.hpp"
#include "springer_kit/weyl.hpp"

namespace springer_kit {

using Json = nlohmann::ordered_json;

/// Every emitted record carries this in "schema_version".
inline constexpr int kSchemaVersion = 1;

// Domain values. The *_from_json functions validate through the same
// constructors as the library and throw Error(ParseError) on shape errors.

Json to_json(const Partition& p);     // [6,4,2]
Json to_json(const Bipartition& bp);  // [[3,1],[2]]
Json to_json(const Symbol& x);        // {"r":1,"s":1,"rows":[[0,3],[2]]}

Partition partition_from_json(const Json& j);
Bipartition bipartition_from_json(const Json& j);
Symbol symbol_from_json(const Json& j);

/// Parse the bracket syntax used on the command line, e.g. "[6,4,2]" or
/// "[[3,1],[2]]".
Partition parse_partition(std::string_view text);
Bipartition parse_bipartition(std::string_view text);

// Records: one JSON object per output line.

Json class_record(const SymplecticClassLabel& label);
Json springer_record(const SpringerImage& image);
Json verification_record(const VerificationReport& report);
Json series_label_record(const SeriesLabel& label);
Json harish_chandra_record(const HarishChandraDatum& datum);
Json error_record(std::string_view code, std::string_view message);

SymplecticClassLabel class_from_record(const Json& j);
VerificationReport verification_from_record(const Json& j);
SeriesLabel series_label_from_record(const Json& j);
HarishChandraDatum harish_chandra_from_record(const Json& j);

}  // namespace springer_kit

#pragma once

#include <filesystem>
#include <optional>
#include <string>

#include <json.hpp>

#include "ringlab/radicals.hpp"
#include "ringlab/ring.hpp"

namespace ringlab {

using Json = nlohmann::ordered_json;

/// {"label","order","add","mul","zero","one"[,"provenance"]}
Json ring_to_json(const FiniteRing& ring, const std::optional<std::string>& provenance = {});
/// Parses the ring file schema; throws RingError(ParseError) on shape errors.
RingTables ring_tables_from_json(const Json& doc);

/// Loads and validates. ParseError / IoError / ValidationFailed.
FiniteRing load_ring_file(const std::filesystem::path& path);
std::variant<FiniteRing, RingViolation> load_ring_file_checked(const std::filesystem::path& path);
void save_ring_file(const std::filesystem::path& path, const FiniteRing& ring,
                    const std::optional<std::string>& provenance = {});

/// One object per ideal: {"members":[...],"prime":b,"maximal":b,"contains_J":b}.
Json spectrum_to_json(const SpectrumReport& report);

}  // namespace ringlab

// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "dupread/channel.hpp"
#include "dupread/sidon_code.hpp"

namespace dupread {

// Sequences are JSON arrays of integers; entry vectors are arrays of
// length-q integer arrays. Indices and positions are 0-based everywhere.

nlohmann::json sequence_to_json(const Sequence& x);
Sequence sequence_from_json(const nlohmann::json& j, int q);

nlohmann::json entry_vector_to_json(const EntryVector& v);
EntryVector entry_vector_from_json(const nlohmann::json& j, int q);

nlohmann::json event_to_json(const DuplicationEvent& ev);
DuplicationEvent event_from_json(const nlohmann::json& j);

// Sidon sets persist as {"m": ..., "elements": [...], "t": ...} and are
// re-verified on load.
nlohmann::json sidon_to_json(const SidonSet& b);
SidonSet sidon_from_json(const nlohmann::json& j);

nlohmann::json load_json_file(const std::string& path);
void write_json_file(const std::string& path, const nlohmann::json& j);

}  // namespace dupread

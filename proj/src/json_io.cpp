// SPDX-License-Identifier: Apache-2.0
#include "dupread/json_io.hpp"

#include <fstream>

namespace dupread {

using nlohmann::json;

json sequence_to_json(const Sequence& x) { return json(x); }

Sequence sequence_from_json(const json& j, int q) {
  if (!j.is_array()) throw std::invalid_argument("sequence must be a JSON array");
  Sequence x;
  x.reserve(j.size());
  for (const auto& v : j) {
    if (!v.is_number_integer()) {
      throw std::invalid_argument("sequence entries must be integers");
    }
    const int s = v.get<int>();
    if (s < 0 || s >= q) {
      throw std::invalid_argument("sequence symbol outside the alphabet");
    }
    x.push_back(s);
  }
  return x;
}

json entry_vector_to_json(const EntryVector& v) { return json(v); }

EntryVector entry_vector_from_json(const json& j, int q) {
  if (!j.is_array()) throw std::invalid_argument("entry vector must be a JSON array");
  EntryVector v;
  v.reserve(j.size());
  for (const auto& e : j) {
    if (!e.is_array() || e.size() != static_cast<std::size_t>(q)) {
      throw std::invalid_argument("each entry must be an array of q integers");
    }
    std::vector<int> entry;
    entry.reserve(e.size());
    for (const auto& c : e) {
      if (!c.is_number_integer()) {
        throw std::invalid_argument("entry coordinates must be integers");
      }
      entry.push_back(c.get<int>());
    }
    v.push_back(std::move(entry));
  }
  return v;
}

json event_to_json(const DuplicationEvent& ev) {
  return json{{"pos", ev.pos}, {"len", ev.len}};
}

DuplicationEvent event_from_json(const json& j) {
  if (!j.is_object() || !j.contains("pos") || !j.contains("len")) {
    throw std::invalid_argument("event must be {\"pos\": ..., \"len\": ...}");
  }
  return {j.at("pos").get<std::size_t>(), j.at("len").get<std::size_t>()};
}

json sidon_to_json(const SidonSet& b) {
  return json{{"m", b.modulus}, {"elements", b.elements}, {"t", b.order}};
}

SidonSet sidon_from_json(const json& j) {
  if (!j.is_object() || !j.contains("m") || !j.contains("elements") ||
      !j.contains("t")) {
    throw std::invalid_argument("sidon set must be {m, elements, t}");
  }
  SidonSet b;
  b.modulus = j.at("m").get<long long>();
  b.elements = j.at("elements").get<std::vector<long long>>();
  b.order = j.at("t").get<int>();
  if (!verify_sidon(b)) {
    throw std::invalid_argument("sidon set failed verification on load");
  }
  return b;
}

json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open " + path);
  json j;
  in >> j;
  return j;
}

void write_json_file(const std::string& path, const json& j) {
  std::ofstream out(path);
  if (!out) throw std::invalid_argument("cannot write " + path);
  out << j.dump(2) << "\n";
}

}  // namespace dupread

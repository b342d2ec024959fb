#pragma once

#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "covertower/automorphism.hpp"
#include "covertower/limit.hpp"
#include "covertower/vaut.hpp"

namespace covertower::io {

using Json = nlohmann::ordered_json;

inline constexpr const char* kSchema = "covertower/1";

/// {"schema", "type", ...body}. Nested documents carry only "type".
Json document(const std::string& type, const Json& body);
Json nested(const std::string& type, const Json& body);

/// Reads a file and checks the schema field. Throws InvalidDocument.
Json read_document(const std::string& path);
/// Two-space indented, trailing newline.
std::string render(const Json& j);

// Sheets are numbered from 1 in documents; words are arrays of signed
// generator numbers; rationals are "p/q" strings (or plain integers).

Json cover_json(const CoverSpec& c);
CoverSpec parse_cover(const Json& j);

Json word_json(const GroupWord& w);
GroupWord parse_word(const Json& j, const Surface& s);

std::string rational_string(const Rational& q);
Rational parse_rational(const Json& j);

Json class_json(const Surface& s, const HomologyClass& u);
HomologyClass parse_class(const Json& j, Surface* surface = nullptr);

Json cycle_json(const CoverCycle& z);
CoverCycle parse_cycle(const Json& j);

/// Weights are included when given.
Json track_json(const TrainTrack& t, const Weights* w = nullptr);
TrainTrack parse_track(const Json& j);
std::optional<Weights> parse_weights(const Json& track_doc);

/// Accepts element documents as well as bare class, cycle and weighted
/// track documents.
Json element_json(const LimitElement& e);
LimitElement parse_element(const Json& j);

Json vaut_json(const TwoArrowVaut& v);
TwoArrowVaut parse_vaut(const Json& j);

Json automorphisms_json(const Surface& s, const std::vector<SurfaceAutomorphism>& auts);
std::vector<SurfaceAutomorphism> parse_automorphisms(const Json& j);

/// Runs f, converting JSON access failures into InvalidDocument.
template <class F>
auto guarded(F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::InvalidDocument, e.what());
  }
}

}  // namespace covertower::io

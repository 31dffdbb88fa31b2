#pragma once

#include <istream>
#include <ostream>
#include <span>
#include <string>

#include <json.hpp>

#include "mdrs/distance.hpp"
#include "mdrs/erasure.hpp"
#include "mdrs/gf.hpp"

namespace mdrs {

// Symbol files hold whitespace-separated decimal element codes; erased
// coordinates of a received word are spelled `?`. Writers emit one line of
// space-separated tokens with a trailing newline, so an encode/decode round
// trip reproduces the input file byte for byte.

std::vector<Element> read_symbols(std::istream& in, const Field& field,
                                  std::size_t expected,
                                  const std::string& what);

ReceivedWord read_received(std::istream& in, const Field& field,
                           std::size_t expected);

void write_symbols(std::ostream& out, std::span<const Element> symbols);

nlohmann::ordered_json field_to_json(const Field& field);
nlohmann::ordered_json report_to_json(const DistanceReport& report);
nlohmann::ordered_json stats_to_json(const ChannelStats& stats,
                                     const CodeSpec& spec);
nlohmann::ordered_json params_to_json(const DegreeRegion& region);

}  // namespace mdrs

#include "mdrs/io.hpp"

#include <cctype>

namespace mdrs {
namespace {

struct Token {
  std::string text;
  std::size_t line;
  std::size_t column;
};

std::vector<Token> tokenize(std::istream& in) {
  std::vector<Token> tokens;
  std::size_t line = 1, column = 0;
  Token current;
  bool open = false;
  for (int ch = in.get(); ch != EOF; ch = in.get()) {
    if (ch == '\n') {
      ++line;
      column = 0;
    } else {
      ++column;
    }
    if (std::isspace(ch)) {
      if (open) {
        tokens.push_back(current);
        open = false;
      }
      continue;
    }
    if (!open) {
      current = {"", line, column};
      open = true;
    }
    current.text.push_back(static_cast<char>(ch));
  }
  if (open) tokens.push_back(current);
  return tokens;
}

Element parse_symbol(const Token& token, const Field& field) {
  std::uint64_t value = 0;
  for (char ch : token.text) {
    if (ch < '0' || ch > '9')
      throw ParseError("invalid symbol token '" + token.text + "'",
                       token.line, token.column);
    value = value * 10 + static_cast<std::uint64_t>(ch - '0');
    if (value >= field.q())
      throw ParseError("symbol " + token.text + " out of range for q=" +
                       std::to_string(field.q()),
                       token.line, token.column);
  }
  return Element{static_cast<std::uint16_t>(value)};
}

}  // namespace

std::vector<Element> read_symbols(std::istream& in, const Field& field,
                                  std::size_t expected,
                                  const std::string& what) {
  const auto tokens = tokenize(in);
  std::vector<Element> out;
  out.reserve(tokens.size());
  for (const auto& token : tokens) out.push_back(parse_symbol(token, field));
  if (out.size() != expected)
    throw LengthMismatch(what + " has " + std::to_string(out.size()) +
                         " symbols, expected " + std::to_string(expected));
  return out;
}

ReceivedWord read_received(std::istream& in, const Field& field,
                           std::size_t expected) {
  const auto tokens = tokenize(in);
  ReceivedWord rx;
  rx.symbols.reserve(tokens.size());
  for (const auto& token : tokens) {
    if (token.text == "?")
      rx.symbols.emplace_back(std::nullopt);
    else
      rx.symbols.emplace_back(parse_symbol(token, field));
  }
  if (rx.symbols.size() != expected)
    throw LengthMismatch("received word has " +
                         std::to_string(rx.symbols.size()) +
                         " symbols, expected " + std::to_string(expected));
  return rx;
}

void write_symbols(std::ostream& out, std::span<const Element> symbols) {
  for (std::size_t i = 0; i < symbols.size(); ++i) {
    if (i) out << ' ';
    out << symbols[i].code;
  }
  out << '\n';
}

nlohmann::ordered_json field_to_json(const Field& field) {
  nlohmann::ordered_json j;
  j["p"] = field.p();
  j["m"] = field.m();
  j["modulus"] = field.modulus();
  j["alpha"] = field.alpha().code;
  return j;
}

nlohmann::ordered_json report_to_json(const DistanceReport& report) {
  nlohmann::ordered_json j;
  j["q"] = report.q;
  j["n"] = report.n;
  j["d"] = report.d;
  j["designed"] = report.designed;
  j["observed"] = report.observed;
  j["exhaustive"] = report.exhaustive;
  j["enumerated"] = report.enumerated;
  if (report.seed.has_value()) {
    j["seed"] = *report.seed;
    j["prng"] = report.prng;
  }
  return j;
}

nlohmann::ordered_json stats_to_json(const ChannelStats& stats,
                                     const CodeSpec& spec) {
  nlohmann::ordered_json j;
  j["q"] = spec.field.q();
  j["n"] = spec.n;
  j["d"] = spec.d;
  j["epsilon"] = stats.epsilon;
  j["trials"] = stats.trials;
  j["recovered"] = stats.recovered;
  j["rankDeficient"] = stats.rank_deficient;
  j["failureRate"] =
      stats.trials == 0
          ? 0.0
          : static_cast<double>(stats.rank_deficient) / stats.trials;
  j["seed"] = stats.seed;
  j["prng"] = stats.prng;
  return j;
}

nlohmann::ordered_json params_to_json(const DegreeRegion& region) {
  const CodeSpec& spec = region.spec;
  nlohmann::ordered_json j;
  j["q"] = spec.field.q();
  j["n"] = spec.n;
  j["d"] = spec.d;
  j["N"] = spec.length();
  j["K"] = region.dim();
  j["checkSymbols"] = spec.length() - region.dim();
  auto members = nlohmann::ordered_json::array();
  for (std::size_t r = 0; r < region.dim(); ++r) {
    auto entry = nlohmann::ordered_json::array();
    for (std::uint16_t e : region.member(r)) entry.push_back(e);
    members.push_back(std::move(entry));
  }
  j["region"] = std::move(members);
  return j;
}

}  // namespace mdrs

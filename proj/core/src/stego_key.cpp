#include <charconv>
#include <map>
#include <string>

#include "bpistego/error.hpp"
#include "bpistego/schemes.hpp"

namespace bpistego {
namespace {

[[noreturn]] void key_error(const std::string& what) {
  throw ParseError(ParseError::Kind::kMalformedKey, "stego key: " + what);
}

template <typename T>
T parse_decimal(std::string_view field, std::string_view text) {
  T value{};
  const auto* end = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (text.empty() || ec != std::errc{} || ptr != end) {
    key_error("bad value for '" + std::string(field) + "': '" +
              std::string(text) + "'");
  }
  return value;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) {
    s.remove_prefix(1);
  }
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' ||
                        s.back() == '\n' || s.back() == '\r')) {
    s.remove_suffix(1);
  }
  return s;
}

}  // namespace

std::string format_stego_key(const StegoKey& key) {
  std::string out = "scheme=";
  out += scheme_token(key.scheme);
  out += ";seed=" + std::to_string(key.seed);
  out += ";bits=" + std::to_string(key.bit_length);
  if (key.scheme == SchemeId::kBpi) {
    out += ";first=" + std::to_string(key.first_index);
  }
  return out;
}

StegoKey parse_stego_key(std::string_view text) {
  text = trim(text);
  std::map<std::string, std::string, std::less<>> fields;
  while (!text.empty()) {
    const auto semi = text.find(';');
    const auto item = text.substr(0, semi);
    text = semi == std::string_view::npos ? std::string_view{}
                                          : text.substr(semi + 1);
    const auto eq = item.find('=');
    if (eq == std::string_view::npos) {
      key_error("expected key=value, got '" + std::string(item) + "'");
    }
    auto [it, inserted] = fields.emplace(std::string(item.substr(0, eq)),
                                         std::string(item.substr(eq + 1)));
    if (!inserted) key_error("duplicate field '" + it->first + "'");
  }

  auto take = [&](std::string_view name) -> std::optional<std::string> {
    auto it = fields.find(name);
    if (it == fields.end()) return std::nullopt;
    auto value = std::move(it->second);
    fields.erase(it);
    return value;
  };

  const auto scheme_text = take("scheme");
  const auto seed_text = take("seed");
  const auto bits_text = take("bits");
  const auto first_text = take("first");
  if (!scheme_text || !seed_text || !bits_text) {
    key_error("scheme, seed and bits are required");
  }
  if (!fields.empty()) key_error("unknown field '" + fields.begin()->first + "'");

  StegoKey key;
  const auto scheme = parse_scheme(*scheme_text);
  if (!scheme) key_error("unknown scheme '" + *scheme_text + "'");
  key.scheme = *scheme;
  key.seed = parse_decimal<std::uint64_t>("seed", *seed_text);
  key.bit_length = parse_decimal<std::size_t>("bits", *bits_text);

  if (key.scheme == SchemeId::kBpi) {
    if (!first_text) key_error("bpi key requires 'first'");
    const int first = parse_decimal<int>("first", *first_text);
    if (first != 0 && first != 1) key_error("'first' must be 0 or 1");
    key.first_index = first;
  } else if (first_text) {
    key_error("'first' is only valid for bpi");
  }
  return key;
}

}  // namespace bpistego

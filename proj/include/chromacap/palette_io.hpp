/*
 * Copyright 2026 The chromacap Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

// Palette documents.
//
// Canonical form is a JSON object:
//
//   {"name": "t2", "colors": [[0, 0, 0], [255, 255, 255]]}   explicit palette
//   {"name": "hccb8", "n_colors": 8}                          sized-only palette
//
// A bare JSON array of [r, g, b] triples is read as an explicit palette, and a CSV
// file with header `r,g,b` holds one color per row. For both, the name comes from
// the caller (the file stem when reading from disk).

#ifndef CHROMACAP_PALETTE_IO_HPP
#define CHROMACAP_PALETTE_IO_HPP

#include <algorithm>
#include <cctype>
#include <charconv>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <string_view>

#include <nlohmann/json.hpp>

#include "chromacap/color.hpp"

namespace chromacap {

namespace detail {

inline int line_of_offset(std::string_view text, std::size_t offset) {
  offset = std::min(offset, text.size());
  return 1 + static_cast<int>(std::count(text.begin(), text.begin() + offset, '\n'));
}

inline std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

inline int parse_channel_json(const nlohmann::json& v, const std::string& where) {
  if (!v.is_number_integer()) throw ParseError(where + ": channel must be an integer");
  const auto x = v.get<long long>();
  if (x < 0 || x > kChannelMax) {
    throw ParseError(where + ": channel " + std::to_string(x) + " out of range [0,255]");
  }
  return static_cast<int>(x);
}

inline std::vector<Color> parse_colors_json(const nlohmann::json& arr) {
  if (!arr.is_array()) throw ParseError("colors: expected an array of [r,g,b] triples");
  std::vector<Color> out;
  out.reserve(arr.size());
  for (std::size_t i = 0; i < arr.size(); ++i) {
    const std::string where = "colors[" + std::to_string(i) + "]";
    const auto& t = arr[i];
    if (!t.is_array() || t.size() != 3) throw ParseError(where + ": expected [r,g,b]");
    out.push_back(Color{static_cast<std::uint8_t>(parse_channel_json(t[0], where + "[0]")),
                        static_cast<std::uint8_t>(parse_channel_json(t[1], where + "[1]")),
                        static_cast<std::uint8_t>(parse_channel_json(t[2], where + "[2]"))});
  }
  return out;
}

inline Palette checked(Palette p) {
  if (auto v = validate_palette(p); !v.empty()) {
    throw ParseError("palette '" + p.name + "': " + join_violations(v));
  }
  return p;
}

inline Palette parse_palette_json(std::string_view text, const std::string& fallback_name) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(e.what(), line_of_offset(text, e.byte > 0 ? e.byte - 1 : 0));
  }

  Palette p;
  p.name = fallback_name;
  if (doc.is_array()) {
    p.colors = parse_colors_json(doc);
    p.n_colors = static_cast<int>(p.colors.size());
    if (p.colors.empty()) throw ParseError("palette has no colors");
    return checked(std::move(p));
  }
  if (!doc.is_object()) throw ParseError("expected a palette object or an array of colors");

  if (auto it = doc.find("name"); it != doc.end()) {
    if (!it->is_string()) throw ParseError("name: expected a string");
    p.name = it->get<std::string>();
  }
  const auto colors = doc.find("colors");
  const auto n = doc.find("n_colors");
  if (colors == doc.end() && n == doc.end()) {
    throw ParseError("palette needs either 'colors' or 'n_colors'");
  }
  if (colors != doc.end()) {
    p.colors = parse_colors_json(*colors);
    if (p.colors.empty()) throw ParseError("colors: empty list");
    p.n_colors = static_cast<int>(p.colors.size());
  }
  if (n != doc.end()) {
    if (!n->is_number_integer() || n->get<long long>() < 1 ||
        n->get<long long>() > std::numeric_limits<int>::max()) {
      throw ParseError("n_colors: expected a positive integer");
    }
    p.n_colors = static_cast<int>(n->get<long long>());
  }
  return checked(std::move(p));
}

inline Palette parse_palette_csv(std::string_view text, const std::string& name) {
  Palette p;
  p.name = name;
  int line_no = 0;
  bool header_seen = false;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const auto eol = text.find('\n', pos);
    const auto raw = text.substr(pos, eol == std::string_view::npos ? text.npos : eol - pos);
    pos = eol == std::string_view::npos ? text.size() + 1 : eol + 1;
    ++line_no;
    const auto line = trim(raw);
    if (line.empty()) continue;

    std::vector<std::string_view> fields;
    std::size_t start = 0;
    while (true) {
      const auto comma = line.find(',', start);
      fields.push_back(trim(line.substr(start, comma == line.npos ? line.npos : comma - start)));
      if (comma == line.npos) break;
      start = comma + 1;
    }

    if (!header_seen) {
      std::string h;
      for (auto f : fields) {
        if (!h.empty()) h += ',';
        for (char ch : f) h += static_cast<char>(std::tolower(static_cast<unsigned char>(ch)));
      }
      if (h != "r,g,b") throw ParseError("expected CSV header 'r,g,b', got '" + std::string(line) + "'", line_no);
      header_seen = true;
      continue;
    }

    if (fields.size() != 3) {
      throw ParseError("expected 3 fields, got " + std::to_string(fields.size()), line_no);
    }
    int ch[3];
    for (int k = 0; k < 3; ++k) {
      const auto f = fields[k];
      long long v = 0;
      const auto [end, ec] = std::from_chars(f.data(), f.data() + f.size(), v);
      if (ec != std::errc{} || end != f.data() + f.size()) {
        throw ParseError("field " + std::string(1, "rgb"[k]) + ": '" + std::string(f) + "' is not an integer", line_no);
      }
      if (v < 0 || v > kChannelMax) {
        throw ParseError("field " + std::string(1, "rgb"[k]) + ": channel " + std::to_string(v) +
                             " out of range [0,255]",
                         line_no);
      }
      ch[k] = static_cast<int>(v);
    }
    p.colors.push_back(Color{static_cast<std::uint8_t>(ch[0]), static_cast<std::uint8_t>(ch[1]),
                             static_cast<std::uint8_t>(ch[2])});
  }
  if (!header_seen) throw ParseError("empty CSV document");
  if (p.colors.empty()) throw ParseError("CSV palette has no colors");
  p.n_colors = static_cast<int>(p.colors.size());
  return checked(std::move(p));
}

}  // namespace detail

/// Parses a palette document. JSON is recognized by a leading '{' or '['; anything
/// else is read as CSV. `fallback_name` names palettes whose document has no name.
inline Palette parse_palette(std::string_view text, const std::string& fallback_name = "palette") {
  const auto body = detail::trim(text);
  if (!body.empty() && (body.front() == '{' || body.front() == '[')) {
    return detail::parse_palette_json(text, fallback_name);
  }
  return detail::parse_palette_csv(text, fallback_name);
}

/// Emits the canonical JSON document, colors in stored order.
inline std::string serialize_palette(const Palette& p) {
  std::string out = "{\n  \"name\": " + nlohmann::json(p.name).dump();
  if (p.sized_only()) {
    out += ",\n  \"n_colors\": " + std::to_string(p.n_colors) + "\n}\n";
    return out;
  }
  out += ",\n  \"colors\": [";
  for (std::size_t i = 0; i < p.colors.size(); ++i) {
    const auto& c = p.colors[i];
    out += i == 0 ? "\n    [" : ",\n    [";
    out += std::to_string(c.r) + ", " + std::to_string(c.g) + ", " + std::to_string(c.b) + "]";
  }
  out += "\n  ]\n}\n";
  return out;
}

inline Palette read_palette_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open '" + path.string() + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  try {
    return parse_palette(ss.str(), path.stem().string());
  } catch (const ParseError& e) {
    throw ParseError(path.string() + ": " + e.what());
  }
}

/// Returns false when the file cannot be written.
inline bool write_palette_file(const std::filesystem::path& path, const Palette& p) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) return false;
  out << serialize_palette(p);
  out.flush();
  return static_cast<bool>(out);
}

}  // namespace chromacap

#endif  // CHROMACAP_PALETTE_IO_HPP

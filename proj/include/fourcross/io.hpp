// Instance and witness (de)serialization. JSON carries coordinates as
// decimal or "p/q" strings so round-trips are exact; CSV is the compact
// interchange form. Floating point JSON numbers are rejected, never rounded.
#pragma once

#include "fourcross/geometry.hpp"
#include "fourcross/reductions.hpp"

#include <json.hpp>

#include <cstddef>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace fourcross {

enum class FileFormat { json, csv };

struct parse_error : std::runtime_error {
  explicit parse_error(const std::string& msg, std::size_t line = 0)
      : std::runtime_error(line ? "line " + std::to_string(line) + ": " + msg : msg),
        line_number(line) {}
  std::size_t line_number;  // 1-based, 0 when unknown
};

// Format from file name, content as fallback: JSON instances start with '{'.
inline FileFormat sniff_format(std::string_view path, std::string_view content) {
  if (path.size() >= 5 && path.substr(path.size() - 5) == ".json") return FileFormat::json;
  if (path.size() >= 4 && path.substr(path.size() - 4) == ".csv") return FileFormat::csv;
  for (char c : content) {
    if (c == ' ' || c == '\t' || c == '\r' || c == '\n') continue;
    return c == '{' ? FileFormat::json : FileFormat::csv;
  }
  return FileFormat::csv;
}

namespace detail {

using json = nlohmann::ordered_json;

inline std::size_t line_of_byte(std::string_view text, std::size_t byte) {
  std::size_t line = 1;
  for (std::size_t i = 0; i < byte && i < text.size(); ++i)
    if (text[i] == '\n') ++line;
  return line;
}

inline json parse_json_text(std::string_view text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw parse_error(e.what(), line_of_byte(text, e.byte ? e.byte - 1 : 0));
  }
}

// Exact numeric field: a string ("-3/4", "2.5", "17") or a JSON integer.
// Floats are refused; 0.1 has no exact binary form to recover.
inline Rational rational_field(const json& v, const char* what) {
  if (v.is_string()) {
    try {
      return Rational::parse(v.get_ref<const std::string&>());
    } catch (const std::invalid_argument& e) {
      throw parse_error(std::string(what) + ": " + e.what());
    }
  }
  if (v.is_number_integer() || v.is_number_unsigned()) {
    return Rational::parse(v.dump());
  }
  if (v.is_number_float())
    throw parse_error(std::string(what) + ": floating point numbers are not exact; "
                      "pass the value as a string");
  throw parse_error(std::string(what) + ": expected a numeric string or integer");
}

inline ColorId color_field(const json& v, const char* what) {
  if (!v.is_number_unsigned() && !(v.is_number_integer() && v.get<long long>() >= 0))
    throw parse_error(std::string(what) + ": color must be a nonnegative integer");
  const auto c = v.get<unsigned long long>();
  if (c > 0xFFFFFFFFull)
    throw parse_error(std::string(what) + ": color out of range");
  return static_cast<ColorId>(c);
}

inline std::vector<Rational> rational_array(const json& v, const char* what) {
  if (!v.is_array()) throw parse_error(std::string(what) + ": expected an array");
  std::vector<Rational> out;
  out.reserve(v.size());
  for (const auto& e : v) out.push_back(rational_field(e, what));
  return out;
}

inline std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
  return s;
}

}  // namespace detail

inline PointSet parse_instance(std::string_view text, FileFormat format) {
  PointSet out;
  if (format == FileFormat::json) {
    const auto doc = detail::parse_json_text(text);
    if (!doc.is_object() || !doc.contains("points"))
      throw parse_error("expected an object with a \"points\" array");
    const auto& arr = doc["points"];
    if (!arr.is_array()) throw parse_error("\"points\" must be an array");
    out.points.reserve(arr.size());
    for (const auto& e : arr) {
      if (!e.is_object() || !e.contains("x") || !e.contains("y") || !e.contains("color"))
        throw parse_error("each point needs \"x\", \"y\" and \"color\"");
      ColoredPoint p;
      p.x = detail::rational_field(e["x"], "x");
      p.y = detail::rational_field(e["y"], "y");
      p.color = detail::color_field(e["color"], "color");
      out.points.push_back(std::move(p));
    }
    return out;
  }

  // CSV: a fixed "x,y,color" header, one point per line, blank lines skipped.
  std::size_t line_no = 0;
  bool saw_header = false;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t eol = text.find('\n', pos);
    std::string_view raw = text.substr(pos, eol == std::string_view::npos ? text.size() - pos
                                                                          : eol - pos);
    pos = eol == std::string_view::npos ? text.size() + 1 : eol + 1;
    ++line_no;
    const auto line = detail::trim(raw);
    if (line.empty()) continue;
    if (!saw_header) {
      std::string squashed;
      for (char c : line)
        if (c != ' ' && c != '\t') squashed.push_back(c);
      if (squashed != "x,y,color")
        throw parse_error("expected header \"x,y,color\"", line_no);
      saw_header = true;
      continue;
    }
    std::array<std::string_view, 3> field;
    std::size_t start = 0;
    for (int i = 0; i < 3; ++i) {
      const std::size_t comma = line.find(',', start);
      if (i < 2 && comma == std::string_view::npos)
        throw parse_error("expected three comma separated fields", line_no);
      if (i == 2 && comma != std::string_view::npos)
        throw parse_error("expected three comma separated fields", line_no);
      field[i] = detail::trim(line.substr(start, comma == std::string_view::npos
                                                     ? std::string_view::npos
                                                     : comma - start));
      start = comma + 1;
    }
    ColoredPoint p;
    try {
      p.x = Rational::parse(field[0]);
      p.y = Rational::parse(field[1]);
    } catch (const std::invalid_argument& e) {
      throw parse_error(e.what(), line_no);
    }
    unsigned long long c = 0;
    const auto cf = field[2];
    if (cf.empty()) throw parse_error("empty color field", line_no);
    for (char ch : cf) {
      if (ch < '0' || ch > '9') throw parse_error("color must be a nonnegative integer", line_no);
      c = c * 10 + static_cast<unsigned>(ch - '0');
      if (c > 0xFFFFFFFFull) throw parse_error("color out of range", line_no);
    }
    p.color = static_cast<ColorId>(c);
    out.points.push_back(std::move(p));
  }
  return out;
}

inline std::string serialize_instance(const PointSet& ps, FileFormat format) {
  if (format == FileFormat::json) {
    detail::json doc;
    doc["points"] = detail::json::array();
    for (const auto& p : ps.points) {
      detail::json e;
      e["x"] = p.x.str();
      e["y"] = p.y.str();
      e["color"] = p.color;
      doc["points"].push_back(std::move(e));
    }
    return doc.dump(2) + "\n";
  }
  std::string out = "x,y,color\n";
  for (const auto& p : ps.points) {
    out += p.x.str();
    out += ',';
    out += p.y.str();
    out += ',';
    out += std::to_string(p.color);
    out += '\n';
  }
  return out;
}

// Gap instances: JSON {"xs": [...], "ys": [...]} or two whitespace separated
// text lines, xs first.
inline CougInstance parse_coug(std::string_view text, FileFormat format) {
  CougInstance inst;
  if (format == FileFormat::json) {
    const auto doc = detail::parse_json_text(text);
    if (!doc.is_object() || !doc.contains("xs") || !doc.contains("ys"))
      throw parse_error("expected an object with \"xs\" and \"ys\" arrays");
    inst.xs = detail::rational_array(doc["xs"], "xs");
    inst.ys = detail::rational_array(doc["ys"], "ys");
    return inst;
  }
  std::vector<std::vector<Rational>> rows;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t eol = text.find('\n', pos);
    std::string_view raw = text.substr(pos, eol == std::string_view::npos ? text.size() - pos
                                                                          : eol - pos);
    pos = eol == std::string_view::npos ? text.size() + 1 : eol + 1;
    ++line_no;
    const auto line = detail::trim(raw);
    if (line.empty()) continue;
    if (rows.size() == 2) throw parse_error("expected exactly two nonempty lines", line_no);
    std::vector<Rational> vals;
    std::size_t i = 0;
    while (i < line.size()) {
      while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
      std::size_t j = i;
      while (j < line.size() && line[j] != ' ' && line[j] != '\t') ++j;
      if (j > i) {
        try {
          vals.push_back(Rational::parse(line.substr(i, j - i)));
        } catch (const std::invalid_argument& e) {
          throw parse_error(e.what(), line_no);
        }
      }
      i = j;
    }
    rows.push_back(std::move(vals));
  }
  if (rows.size() != 2) throw parse_error("expected two lines: xs then ys");
  inst.xs = std::move(rows[0]);
  inst.ys = std::move(rows[1]);
  return inst;
}

inline std::string serialize_coug(const CougInstance& inst, FileFormat format) {
  if (format == FileFormat::json) {
    detail::json doc;
    doc["xs"] = detail::json::array();
    doc["ys"] = detail::json::array();
    for (const auto& v : inst.xs) doc["xs"].push_back(v.str());
    for (const auto& v : inst.ys) doc["ys"].push_back(v.str());
    return doc.dump(2) + "\n";
  }
  std::string out;
  const auto row = [&](const std::vector<Rational>& vs) {
    for (std::size_t i = 0; i < vs.size(); ++i) {
      if (i) out += ' ';
      out += vs[i].str();
    }
    out += '\n';
  };
  row(inst.xs);
  row(inst.ys);
  return out;
}

// Witness serialization: center plus the four points keyed by the open
// quadrant each one occupies.
inline std::string cross_to_json(const Cross& cross) {
  detail::json doc;
  doc["center"] = {{"x", cross.center.x.str()}, {"y", cross.center.y.str()}};
  doc["witnesses"] = detail::json::array();
  for (Quadrant q : kQuadrants) {
    const auto& w = cross.witness_in(q);
    detail::json e;
    e["quadrant"] = std::string(to_string(q));
    e["x"] = w.x.str();
    e["y"] = w.y.str();
    e["color"] = w.color;
    doc["witnesses"].push_back(std::move(e));
  }
  return doc.dump(2) + "\n";
}

inline Cross cross_from_json(std::string_view text) {
  const auto doc = detail::parse_json_text(text);
  if (!doc.is_object() || !doc.contains("center") || !doc.contains("witnesses"))
    throw parse_error("expected an object with \"center\" and \"witnesses\"");
  Cross cross;
  cross.center.x = detail::rational_field(doc["center"]["x"], "center.x");
  cross.center.y = detail::rational_field(doc["center"]["y"], "center.y");
  const auto& arr = doc["witnesses"];
  if (!arr.is_array() || arr.size() != 4)
    throw parse_error("\"witnesses\" must list exactly four points");
  std::array<bool, 4> seen{};
  for (const auto& e : arr) {
    if (!e.is_object() || !e.contains("quadrant"))
      throw parse_error("each witness needs a \"quadrant\"");
    const auto q = parse_quadrant(e["quadrant"].get_ref<const std::string&>());
    if (!q) throw parse_error("unknown quadrant label");
    const auto slot = static_cast<std::size_t>(*q);
    if (seen[slot]) throw parse_error("duplicate quadrant label");
    seen[slot] = true;
    ColoredPoint w;
    w.x = detail::rational_field(e["x"], "witness.x");
    w.y = detail::rational_field(e["y"], "witness.y");
    w.color = detail::color_field(e["color"], "witness.color");
    cross.witness[slot] = std::move(w);
  }
  return cross;
}

}  // namespace fourcross

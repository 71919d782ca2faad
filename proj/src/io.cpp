#include "loopnr/io.hpp"

#include <charconv>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace loopnr {

using nlohmann::json;

namespace {

StructureKind parse_kind(std::string_view word) {
  if (word == "loop") return StructureKind::Loop;
  if (word == "lnr") return StructureKind::NearRing;
  if (word == "ring") return StructureKind::Ring;
  throw ParseError("unknown structure kind '" + std::string(word) + "' (expected loop, lnr or ring)");
}

std::vector<std::vector<Elem>> table_from_json(const json& rows, std::size_t n, const char* name) {
  if (!rows.is_array()) throw ParseError(std::string("\"") + name + "\" must be an array of rows");
  if (rows.size() != n)
    throw ValidationError(ErrorKind::NotSquare, {}, std::string(name) + " has " + std::to_string(rows.size()) +
                                                        " rows, expected " + std::to_string(n));
  std::vector<std::vector<Elem>> out(n);
  for (std::size_t a = 0; a < n; ++a) {
    const auto& row = rows[a];
    if (!row.is_array()) throw ParseError(std::string("\"") + name + "\" row " + std::to_string(a) + " is not an array");
    if (row.size() != n)
      throw ValidationError(ErrorKind::NotSquare, {static_cast<Elem>(a)},
                            std::string(name) + " row " + std::to_string(a) + " has " + std::to_string(row.size()) +
                                " entries, expected " + std::to_string(n));
    for (std::size_t b = 0; b < n; ++b) {
      const auto& v = row[b];
      if (!v.is_number_integer()) throw ParseError(std::string("\"") + name + "\" entries must be integers");
      const auto value = v.get<std::int64_t>();
      if (value < 0 || static_cast<std::uint64_t>(value) >= n)
        throw ValidationError(ErrorKind::EntryOutOfRange, {static_cast<Elem>(a), static_cast<Elem>(b)},
                              std::string(name) + " entry " + std::to_string(value) + " outside 0.." +
                                  std::to_string(n - 1));
      out[a].push_back(static_cast<Elem>(value));
    }
  }
  return out;
}

json table_to_json(const Table& t) {
  json rows = json::array();
  for (const auto& row : t.rows()) rows.push_back(row);
  return rows;
}

StructureFile parse_json(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
  if (!doc.is_object()) throw ParseError("structure file must be a JSON object");
  for (const char* key : {"kind", "n", "add"})
    if (!doc.contains(key)) throw ParseError(std::string("missing key \"") + key + "\"");
  if (!doc["kind"].is_string()) throw ParseError("\"kind\" must be a string");
  if (!doc["n"].is_number_unsigned() || doc["n"].get<std::uint64_t>() == 0)
    throw ParseError("\"n\" must be a positive integer");
  const auto n = doc["n"].get<std::uint64_t>();
  if (n > kMaxCarrier) throw BoundExceeded("carrier size", n, kMaxCarrier);

  StructureFile f;
  f.kind = parse_kind(doc["kind"].get<std::string>());
  f.add = Table::from_rows(table_from_json(doc["add"], n, "add"));
  if (f.kind != StructureKind::Loop) {
    if (!doc.contains("mul")) throw ParseError("missing key \"mul\"");
    if (!doc.contains("one")) throw ParseError("missing key \"one\"");
    f.mul = Table::from_rows(table_from_json(doc["mul"], n, "mul"));
    if (!doc["one"].is_number_integer()) throw ParseError("\"one\" must be an integer");
    const auto one = doc["one"].get<std::int64_t>();
    if (one < 0 || static_cast<std::uint64_t>(one) >= n)
      throw ValidationError(ErrorKind::EntryOutOfRange, {}, "one = " + std::to_string(one) + " outside carrier");
    f.one = static_cast<Elem>(one);
  }
  if (doc.contains("meta")) {
    if (!doc["meta"].is_object()) throw ParseError("\"meta\" must be an object");
    f.meta = doc["meta"];
  }
  return f;
}

std::vector<std::string> content_lines(std::string_view text) {
  std::vector<std::string> lines;
  std::istringstream in{std::string(text)};
  std::string line;
  while (std::getline(in, line)) {
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    lines.push_back(line);
  }
  return lines;
}

std::vector<std::int64_t> integers(const std::string& line, std::size_t lineno) {
  std::istringstream in(line);
  std::vector<std::int64_t> out;
  std::string word;
  while (in >> word) {
    std::int64_t v = 0;
    const auto [ptr, ec] = std::from_chars(word.data(), word.data() + word.size(), v);
    if (ec != std::errc{} || ptr != word.data() + word.size())
      throw ParseError("line " + std::to_string(lineno) + ": '" + word + "' is not an integer");
    out.push_back(v);
  }
  return out;
}

StructureFile parse_text(std::string_view text) {
  const auto lines = content_lines(text);
  if (lines.empty()) throw ParseError("empty structure file");
  std::istringstream header(lines[0]);
  std::string kind_word, n_word, extra;
  header >> kind_word >> n_word;
  if (n_word.empty() || (header >> extra)) throw ParseError("first line must be '<kind> <n>'");
  StructureFile f;
  f.kind = parse_kind(kind_word);
  std::size_t n = 0;
  const auto [ptr, ec] = std::from_chars(n_word.data(), n_word.data() + n_word.size(), n);
  if (ec != std::errc{} || ptr != n_word.data() + n_word.size() || n == 0)
    throw ParseError("'" + n_word + "' is not a positive size");
  if (n > kMaxCarrier) throw BoundExceeded("carrier size", n, kMaxCarrier);

  std::size_t next = 1;
  auto read_table = [&](const char* name) {
    json rows = json::array();
    for (std::size_t r = 0; r < n; ++r, ++next) {
      if (next >= lines.size() || lines[next].find('=') != std::string::npos)
        throw ValidationError(ErrorKind::NotSquare, {}, std::string(name) + " table has only " + std::to_string(r) +
                                                            " rows, expected " + std::to_string(n));
      rows.push_back(integers(lines[next], next + 1));
    }
    return Table::from_rows(table_from_json(rows, n, name));
  };
  f.add = read_table("add");
  if (f.kind != StructureKind::Loop) {
    f.mul = read_table("mul");
    if (next >= lines.size()) throw ParseError("missing 'one=k' line");
    std::string line = lines[next++];
    line.erase(0, line.find_first_not_of(" \t"));
    if (line.rfind("one=", 0) != 0) throw ParseError("expected 'one=k', got '" + line + "'");
    const auto values = integers(line.substr(4), next);
    if (values.size() != 1) throw ParseError("expected a single integer after 'one='");
    if (values[0] < 0 || static_cast<std::uint64_t>(values[0]) >= n)
      throw ValidationError(ErrorKind::EntryOutOfRange, {}, "one = " + std::to_string(values[0]) + " outside carrier");
    f.one = static_cast<Elem>(values[0]);
  }
  if (next != lines.size()) throw ParseError("unexpected content after the tables: '" + lines[next] + "'");
  return f;
}

std::uint64_t fnv1a(std::uint64_t h, std::uint64_t v) {
  for (int byte = 0; byte < 8; ++byte) {
    h ^= (v >> (8 * byte)) & 0xffu;
    h *= 1099511628211ull;
  }
  return h;
}

}  // namespace

StructureFile parse_structure_file(std::string_view text) {
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) throw ParseError("empty structure file");
  return text[first] == '{' ? parse_json(text) : parse_text(text);
}

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open '" + path.string() + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

StructureFile read_structure_file(const std::filesystem::path& path) {
  return parse_structure_file(read_text_file(path));
}

std::string serialize_structure_file(const StructureFile& file) {
  json doc;
  doc["kind"] = std::string(to_string(file.kind));
  doc["n"] = file.n();
  doc["add"] = table_to_json(file.add);
  if (file.mul) doc["mul"] = table_to_json(*file.mul);
  if (file.one) doc["one"] = *file.one;
  doc["meta"] = file.meta;
  return doc.dump() + "\n";
}

StructureFile to_structure_file(const Structure& s, json meta) {
  StructureFile f;
  f.kind = s.kind;
  f.add = s.loop.add_table();
  if (s.nr) {
    f.mul = s.nr->mul_table();
    f.one = s.nr->one();
  }
  f.meta = std::move(meta);
  return f;
}

std::vector<Violation> file_violations(const StructureFile& file, const Limits& limits) {
  if (file.kind == StructureKind::Loop) return loop_violations(file.add);
  auto found = lnr_violations(file.add, *file.mul, *file.one, limits);
  if (file.kind == StructureKind::Ring && found.empty()) {
    const auto extra = ring_violations(validate_lnr(file.add, *file.mul, *file.one, limits), limits);
    found.insert(found.end(), extra.begin(), extra.end());
  }
  return found;
}

Structure build_structure(const StructureFile& file, const Limits& limits) {
  require_within("structure size", file.n(), limits.max_n);
  std::string name = file.meta.contains("name") && file.meta["name"].is_string() ? file.meta["name"].get<std::string>()
                                                                                 : std::string("file");
  switch (file.kind) {
    case StructureKind::Loop: return Structure::of(validate_loop(file.add), std::move(name));
    case StructureKind::NearRing: return Structure::of(validate_lnr(file.add, *file.mul, *file.one, limits), std::move(name));
    case StructureKind::Ring: return Structure::of(make_ring(file.add, *file.mul, *file.one, limits), std::move(name));
  }
  throw ParseError("unknown structure kind");
}

std::string structure_hash(const Structure& s) {
  std::uint64_t h = 1469598103934665603ull;
  h = fnv1a(h, static_cast<std::uint64_t>(s.kind));
  const auto n = static_cast<Elem>(s.loop.size());
  h = fnv1a(h, n);
  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < n; ++b) h = fnv1a(h, s.loop.add(a, b));
  if (s.nr) {
    h = fnv1a(h, s.nr->one());
    for (Elem a = 0; a < n; ++a)
      for (Elem b = 0; b < n; ++b) h = fnv1a(h, s.nr->mul(a, b));
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

std::vector<Elem> parse_element_map(std::string_view text) {
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) throw ParseError("empty map file");
  json values;
  if (text[first] == '[' || text[first] == '{') {
    try {
      values = json::parse(text.begin(), text.end());
    } catch (const json::parse_error& e) {
      throw ParseError(std::string("invalid JSON map: ") + e.what());
    }
    if (values.is_object()) {
      if (!values.contains("map")) throw ParseError("map object needs a \"map\" key");
      values = values["map"];
    }
  } else {
    values = json::array();
    std::size_t lineno = 0;
    for (const auto& line : content_lines(text))
      for (auto v : integers(line, ++lineno)) values.push_back(v);
  }
  if (!values.is_array()) throw ParseError("element map must be an array");
  std::vector<Elem> out;
  for (const auto& v : values) {
    if (!v.is_number_integer() || v.get<std::int64_t>() < 0 || v.get<std::int64_t>() > std::int64_t{kMaxCarrier})
      throw ParseError("element map entries must be integers in 0.." + std::to_string(kMaxCarrier));
    out.push_back(static_cast<Elem>(v.get<std::uint64_t>()));
  }
  return out;
}

}  // namespace loopnr

#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "loopnr/generators.hpp"

namespace loopnr {

/// The on-disk form of a structure, before any axiom is checked.
///
/// JSON: {"add":[[...]],"kind":"ring","meta":{...},"mul":[[...]],"n":6,"one":1}
/// with keys sorted; loops carry no "mul"/"one". The plain-text input form is
///   ring 6
///   <n rows of the addition table>
///   <blank line>
///   <n rows of the multiplication table>
///   one=1
/// where '#' starts a comment.
struct StructureFile {
  StructureKind kind = StructureKind::Loop;
  Table add;
  std::optional<Table> mul;
  std::optional<Elem> one;
  nlohmann::json meta = nlohmann::json::object();

  std::size_t n() const noexcept { return add.size(); }
};

/// Detects JSON (first non-blank character '{') or the text form. Syntax errors
/// throw ParseError; tables of the wrong shape or with out-of-range entries throw
/// ValidationError (NotSquare / EntryOutOfRange).
StructureFile parse_structure_file(std::string_view text);
StructureFile read_structure_file(const std::filesystem::path& path);

/// Canonical JSON: sorted keys, one line, trailing newline.
std::string serialize_structure_file(const StructureFile& file);

StructureFile to_structure_file(const Structure& s, nlohmann::json meta = nlohmann::json::object());

/// Every axiom the file violates for its declared kind.
std::vector<Violation> file_violations(const StructureFile& file, const Limits& limits = {});

/// Validates for the declared kind; throws ValidationError on the first failure.
Structure build_structure(const StructureFile& file, const Limits& limits = {});

/// 16 hex digits of FNV-1a over kind, size and tables; independent of metadata.
std::string structure_hash(const Structure& s);

/// An element map for cmd_hom: a JSON array, {"map": [...]}, or whitespace-separated integers.
std::vector<Elem> parse_element_map(std::string_view text);

std::string read_text_file(const std::filesystem::path& path);

}  // namespace loopnr

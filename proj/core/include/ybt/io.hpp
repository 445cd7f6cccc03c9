#pragma once

#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "ybt/cochain.hpp"
#include "ybt/optable.hpp"
#include "ybt/sigma.hpp"

namespace ybt {

/// Raised on malformed or schema-violating input; the message carries a
/// JSON path such as "$.table[2][1]".
struct SchemaError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct StructureMetadata {
  std::optional<std::string> name;
  std::optional<std::string> family;
  std::optional<std::vector<long long>> params;

  bool empty() const { return !name && !family && !params; }
  friend bool operator==(const StructureMetadata&,
                         const StructureMetadata&) = default;
};

/// On-disk structure: a magma (operation table) or a sigma table, plus
/// optional metadata.
struct StructureFile {
  std::variant<OpTable, SigmaTable> payload;
  StructureMetadata metadata;

  bool is_magma() const { return std::holds_alternative<OpTable>(payload); }
  const OpTable& magma() const { return std::get<OpTable>(payload); }
  const SigmaTable& sigma() const { return std::get<SigmaTable>(payload); }
};

/// Canonical serialization: sorted keys, no insignificant whitespace, one
/// trailing LF.  save(load(x)) is byte-identical on canonical input.
std::string to_canonical_json(const StructureFile& file);
std::string to_canonical_json(const Cochain& cochain);

StructureFile parse_structure_json(const std::string& text);
Cochain parse_cochain_json(const std::string& text);

StructureFile load_structure(const std::filesystem::path& path);
void save_structure(const std::filesystem::path& path,
                    const StructureFile& file);
Cochain load_cochain(const std::filesystem::path& path);
void save_cochain(const std::filesystem::path& path, const Cochain& cochain);

}  // namespace ybt

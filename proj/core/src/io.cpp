#include "ybt/io.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"

namespace ybt {
namespace {

using nlohmann::json;

[[noreturn]] void fail(const std::string& path, const std::string& what) {
  throw SchemaError(path + ": " + what);
}

long long expect_int(const json& j, const std::string& path) {
  if (!j.is_number_integer()) fail(path, "expected an integer");
  return j.get<long long>();
}

int expect_element(const json& j, int size, const std::string& path) {
  const long long v = expect_int(j, path);
  if (v < 0 || v >= size)
    fail(path, "value " + std::to_string(v) + " out of range [0, " +
                   std::to_string(size) + ")");
  return static_cast<int>(v);
}

const json& expect_array(const json& j, size_t length, const std::string& path) {
  if (!j.is_array()) fail(path, "expected an array");
  if (j.size() != length)
    fail(path, "expected length " + std::to_string(length) + ", got " +
                   std::to_string(j.size()));
  return j;
}

void reject_unknown_keys(const json& j, std::initializer_list<const char*> keys,
                         const std::string& path) {
  for (const auto& [key, value] : j.items()) {
    bool known = false;
    for (const char* k : keys) known |= key == k;
    if (!known) fail(path + "." + key, "unknown field");
  }
}

StructureMetadata parse_metadata(const json& j, const std::string& path) {
  if (!j.is_object()) fail(path, "expected an object");
  reject_unknown_keys(j, {"name", "family", "params"}, path);
  StructureMetadata meta;
  if (j.contains("name")) {
    if (!j["name"].is_string()) fail(path + ".name", "expected a string");
    meta.name = j["name"].get<std::string>();
  }
  if (j.contains("family")) {
    if (!j["family"].is_string()) fail(path + ".family", "expected a string");
    meta.family = j["family"].get<std::string>();
  }
  if (j.contains("params")) {
    if (!j["params"].is_array()) fail(path + ".params", "expected an array");
    std::vector<long long> params;
    for (size_t i = 0; i < j["params"].size(); ++i)
      params.push_back(expect_int(j["params"][i],
                                  path + ".params[" + std::to_string(i) + "]"));
    meta.params = std::move(params);
  }
  return meta;
}

json metadata_to_json(const StructureMetadata& meta) {
  json j = json::object();
  if (meta.name) j["name"] = *meta.name;
  if (meta.family) j["family"] = *meta.family;
  if (meta.params) j["params"] = *meta.params;
  return j;
}

json parse_text(const std::string& text) {
  json j = json::parse(text, nullptr, false);
  if (j.is_discarded()) throw SchemaError("$: not valid JSON");
  return j;
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path.string() + " for reading");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void write_file(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot open " + path.string() + " for writing");
  out << text;
  if (!out) throw IoError("failed writing " + path.string());
}

}  // namespace

StructureFile parse_structure_json(const std::string& text) {
  const json j = parse_text(text);
  if (!j.is_object()) fail("$", "expected an object");
  reject_unknown_keys(j, {"kind", "size", "table", "metadata"}, "$");
  for (const char* key : {"kind", "size", "table"})
    if (!j.contains(key)) fail(std::string("$.") + key, "missing field");
  if (!j["kind"].is_string()) fail("$.kind", "expected a string");
  const std::string kind = j["kind"].get<std::string>();
  if (kind != "magma" && kind != "sigma")
    fail("$.kind", "expected \"magma\" or \"sigma\"");
  const long long size = expect_int(j["size"], "$.size");
  if (size < 1 || size > 4096) fail("$.size", "size out of supported range");
  const int m = static_cast<int>(size);

  StructureFile out{OpTable::from_rows({{0}}), {}};
  const json& table = expect_array(j["table"], static_cast<size_t>(m), "$.table");
  if (kind == "magma") {
    std::vector<std::vector<int>> rows(m, std::vector<int>(m));
    for (int a = 0; a < m; ++a) {
      const std::string row_path = "$.table[" + std::to_string(a) + "]";
      const json& row = expect_array(table[a], static_cast<size_t>(m), row_path);
      for (int b = 0; b < m; ++b)
        rows[a][b] =
            expect_element(row[b], m, row_path + "[" + std::to_string(b) + "]");
    }
    out.payload = OpTable::from_rows(rows);
  } else {
    std::vector<std::vector<std::array<int, 2>>> entries(
        m, std::vector<std::array<int, 2>>(m));
    for (int a = 0; a < m; ++a) {
      const std::string row_path = "$.table[" + std::to_string(a) + "]";
      const json& row = expect_array(table[a], static_cast<size_t>(m), row_path);
      for (int b = 0; b < m; ++b) {
        const std::string cell_path = row_path + "[" + std::to_string(b) + "]";
        const json& cell = expect_array(row[b], 2, cell_path);
        entries[a][b] = {expect_element(cell[0], m, cell_path + "[0]"),
                         expect_element(cell[1], m, cell_path + "[1]")};
      }
    }
    out.payload = SigmaTable::from_entries(entries);
  }
  if (j.contains("metadata"))
    out.metadata = parse_metadata(j["metadata"], "$.metadata");
  return out;
}

std::string to_canonical_json(const StructureFile& file) {
  json j;
  j["kind"] = file.is_magma() ? "magma" : "sigma";
  if (file.is_magma()) {
    const auto& op = file.magma();
    j["size"] = op.size();
    j["table"] = op.rows();
  } else {
    const auto& sigma = file.sigma();
    j["size"] = sigma.size();
    json table = json::array();
    for (const auto& row : sigma.entries()) {
      json jrow = json::array();
      for (const auto& cell : row) jrow.push_back({cell[0], cell[1]});
      table.push_back(std::move(jrow));
    }
    j["table"] = std::move(table);
  }
  if (!file.metadata.empty()) j["metadata"] = metadata_to_json(file.metadata);
  return j.dump() + "\n";
}

Cochain parse_cochain_json(const std::string& text) {
  const json j = parse_text(text);
  if (!j.is_object()) fail("$", "expected an object");
  reject_unknown_keys(j, {"degree", "modulus", "size", "values"}, "$");
  for (const char* key : {"degree", "modulus", "size", "values"})
    if (!j.contains(key)) fail(std::string("$.") + key, "missing field");
  const long long degree = expect_int(j["degree"], "$.degree");
  if (degree < 0 || degree > 16) fail("$.degree", "degree out of range");
  const long long modulus = expect_int(j["modulus"], "$.modulus");
  if (modulus < 0) fail("$.modulus", "modulus must be >= 0");
  const long long size = expect_int(j["size"], "$.size");
  if (size < 1 || size > 4096) fail("$.size", "size out of supported range");

  const int m = static_cast<int>(size);
  long long expected = 1;
  for (int i = 0; i < degree; ++i) {
    expected *= m;
    if (expected > (1LL << 32)) fail("$.values", "cochain space too large");
  }
  if (!j["values"].is_array()) fail("$.values", "expected an array");
  if (static_cast<long long>(j["values"].size()) != expected)
    fail("$.values", "expected length size^degree = " +
                         std::to_string(expected) + ", got " +
                         std::to_string(j["values"].size()));

  Cochain out(static_cast<int>(degree), modulus, m);
  for (long long i = 0; i < expected; ++i)
    out.set_rank(i, expect_int(j["values"][static_cast<size_t>(i)],
                               "$.values[" + std::to_string(i) + "]"));
  return out;
}

std::string to_canonical_json(const Cochain& cochain) {
  json j;
  j["degree"] = cochain.degree();
  j["modulus"] = cochain.modulus();
  j["size"] = cochain.carrier();
  j["values"] = cochain.values();
  return j.dump() + "\n";
}

StructureFile load_structure(const std::filesystem::path& path) {
  return parse_structure_json(read_file(path));
}

void save_structure(const std::filesystem::path& path,
                    const StructureFile& file) {
  write_file(path, to_canonical_json(file));
}

Cochain load_cochain(const std::filesystem::path& path) {
  return parse_cochain_json(read_file(path));
}

void save_cochain(const std::filesystem::path& path, const Cochain& cochain) {
  write_file(path, to_canonical_json(cochain));
}

}  // namespace ybt

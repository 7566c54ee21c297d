#include "hopfinv/io.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>

#include "hopfinv/error.hpp"
#include "json.hpp"

namespace hopfinv {

namespace {

using nlohmann::json;

json parse_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw HopfError("io/read", "cannot open '" + path + "'");
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    throw HopfError("io/format", path + ": " + e.what());
  }
  return j;
}

Cyc coeff_from_json(const json& v, const std::string& where) {
  if (v.is_number_integer()) return Cyc(static_cast<long>(v.get<long long>()));
  if (v.is_string()) {
    auto parsed = Cyc::parse(v.get<std::string>());
    if (!parsed) throw HopfError("io/format", where + ": bad scalar '" + v.get<std::string>() + "'");
    return *parsed;
  }
  throw HopfError("io/format", where + ": scalar must be a string or integer");
}

std::vector<Cyc> coeff_vector(const json& v, int dim, const std::string& where) {
  if (!v.is_array() || static_cast<int>(v.size()) != dim)
    throw HopfError("io/format", where + ": expected an array of length " + std::to_string(dim));
  std::vector<Cyc> out;
  out.reserve(dim);
  for (const auto& item : v) out.push_back(coeff_from_json(item, where));
  return out;
}

int index_1based(const json& v, int dim, const std::string& where) {
  if (!v.is_number_integer())
    throw HopfError("io/format", where + ": index must be an integer");
  long long i = v.get<long long>();
  if (i < 1 || i > dim)
    throw HopfError("io/format", where + ": index " + std::to_string(i) + " out of range");
  return static_cast<int>(i - 1);
}

}  // namespace

// json accessor faults (missing keys, wrong types) surface as io/format
static HopfPtr hopf_from_json(const json& j, const std::string& path) {
  if (!j.is_object() || !j.contains("dim"))
    throw HopfError("io/format", path + ": expected an object with 'dim'");
  auto h = std::make_shared<HopfStructure>();
  h->dim = j.at("dim").get<int>();
  if (h->dim < 1) throw HopfError("io/format", path + ": dim must be positive");
  h->name = j.value("name", std::filesystem::path(path).stem().string());
  std::optional<long> declared;
  if (j.contains("conductor")) declared = j.at("conductor").get<long>();
  if (j.contains("labels")) {
    for (const auto& l : j.at("labels")) h->labels.push_back(l.get<std::string>());
  }
  h->mult.assign(static_cast<size_t>(h->dim) * h->dim, {});
  for (const auto& entry : j.value("mult", json::array())) {
    if (!entry.is_array() || entry.size() != 4)
      throw HopfError("io/format", path + ": mult entries are [i, j, k, coeff]");
    int i = index_1based(entry[0], h->dim, "mult");
    int jj = index_1based(entry[1], h->dim, "mult");
    int k = index_1based(entry[2], h->dim, "mult");
    h->mult[static_cast<size_t>(i) * h->dim + jj].emplace_back(k,
                                                               coeff_from_json(entry[3], "mult"));
  }
  h->unit = coeff_vector(j.at("unit"), h->dim, "unit");
  h->comult.assign(h->dim, {});
  for (const auto& entry : j.value("comult", json::array())) {
    if (!entry.is_array() || entry.size() != 4)
      throw HopfError("io/format", path + ": comult entries are [i, j, k, coeff]");
    int i = index_1based(entry[0], h->dim, "comult");
    int jj = index_1based(entry[1], h->dim, "comult");
    int k = index_1based(entry[2], h->dim, "comult");
    h->comult[i].emplace_back(jj, k, coeff_from_json(entry[3], "comult"));
  }
  h->counit = coeff_vector(j.at("counit"), h->dim, "counit");
  h->antipode = Mat(h->dim, h->dim);
  for (const auto& entry : j.value("antipode", json::array())) {
    if (!entry.is_array() || entry.size() != 3)
      throw HopfError("io/format", path + ": antipode entries are [i, j, coeff]");
    int i = index_1based(entry[0], h->dim, "antipode");
    int jj = index_1based(entry[1], h->dim, "antipode");
    h->antipode.at(i, jj) += coeff_from_json(entry[2], "antipode");
  }
  if (j.contains("rmatrix")) {
    for (const auto& entry : j.at("rmatrix")) {
      if (!entry.is_array() || entry.size() != 3)
        throw HopfError("io/format", path + ": rmatrix entries are [i, j, coeff]");
      PairTerm t;
      t.i = index_1based(entry[0], h->dim, "rmatrix");
      t.j = index_1based(entry[1], h->dim, "rmatrix");
      t.c = coeff_from_json(entry[2], "rmatrix");
      h->rmatrix.push_back(std::move(t));
    }
    h->has_rmatrix = true;
  }
  h->finalize(declared);
  return h;
}

HopfPtr load_hopf(const std::string& path) {
  json j = parse_file(path);
  try {
    return hopf_from_json(j, path);
  } catch (const json::exception& e) {
    throw HopfError("io/format", path + ": " + e.what());
  }
}

std::string hopf_json_text(const HopfStructure& h) {
  json j;
  j["name"] = h.name;
  j["dim"] = h.dim;
  j["conductor"] = h.conductor;
  j["labels"] = h.labels;
  json mult = json::array();
  for (int i = 0; i < h.dim; ++i)
    for (int jj = 0; jj < h.dim; ++jj)
      for (const auto& [k, c] : h.mult[static_cast<size_t>(i) * h.dim + jj])
        mult.push_back({i + 1, jj + 1, k + 1, c.to_string()});
  j["mult"] = std::move(mult);
  json unit = json::array();
  for (const auto& c : h.unit) unit.push_back(c.to_string());
  j["unit"] = std::move(unit);
  json comult = json::array();
  for (int i = 0; i < h.dim; ++i)
    for (const auto& [a, b, c] : h.comult[i]) comult.push_back({i + 1, a + 1, b + 1, c.to_string()});
  j["comult"] = std::move(comult);
  json counit = json::array();
  for (const auto& c : h.counit) counit.push_back(c.to_string());
  j["counit"] = std::move(counit);
  json antipode = json::array();
  for (int r = 0; r < h.dim; ++r)
    for (int c = 0; c < h.dim; ++c)
      if (!h.antipode.at(r, c).is_zero())
        antipode.push_back({r + 1, c + 1, h.antipode.at(r, c).to_string()});
  j["antipode"] = std::move(antipode);
  if (h.has_rmatrix) {
    json rm = json::array();
    for (const auto& t : h.rmatrix) rm.push_back({t.i + 1, t.j + 1, t.c.to_string()});
    j["rmatrix"] = std::move(rm);
  }
  return j.dump(2) + "\n";
}

void save_hopf(const HopfStructure& h, const std::string& path) {
  write_text_file(path, hopf_json_text(h));
}

static FinGroup group_from_json(const json& j, const std::string& path) {
  if (!j.is_object() || !j.contains("order") || !j.contains("table"))
    throw HopfError("io/format", path + ": expected {order, table, name}");
  int n = j.at("order").get<int>();
  if (n < 1) throw HopfError("io/format", path + ": order must be positive");
  const auto& table = j.at("table");
  if (!table.is_array() || static_cast<int>(table.size()) != n * n)
    throw HopfError("io/format", path + ": table must hold order^2 entries");
  std::vector<int> entries;
  entries.reserve(table.size());
  for (const auto& v : table) entries.push_back(index_1based(v, n, "table"));
  std::string name = j.value("name", std::filesystem::path(path).stem().string());
  return FinGroup::from_table(name, n, entries);
}

FinGroup load_group(const std::string& path) {
  json j = parse_file(path);
  try {
    return group_from_json(j, path);
  } catch (const json::exception& e) {
    throw HopfError("io/format", path + ": " + e.what());
  }
}

void save_group(const FinGroup& g, const std::string& path) {
  json j;
  j["name"] = g.name;
  j["order"] = g.n;
  json table = json::array();
  for (int v : g.table) table.push_back(v + 1);
  j["table"] = std::move(table);
  write_text_file(path, j.dump(2) + "\n");
}

static CharTable table_from_json(const json& j, const std::string& path) {
  if (!j.is_object() || !j.contains("irreps"))
    throw HopfError("io/format", path + ": expected {conductor, irreps}");
  CharTable t;
  t.conductor = j.value("conductor", 1L);
  for (const auto& row : j.at("irreps")) {
    CharTable::Row r;
    r.name = row.at("name").get<std::string>();
    r.dim = row.at("dim").get<int>();
    for (const auto& v : row.at("values")) r.values.push_back(coeff_from_json(v, "values"));
    t.rows.push_back(std::move(r));
  }
  return t;
}

CharTable load_char_table(const std::string& path) {
  json j = parse_file(path);
  try {
    return table_from_json(j, path);
  } catch (const json::exception& e) {
    throw HopfError("io/format", path + ": " + e.what());
  }
}

void save_char_table(const CharTable& t, const std::string& path) {
  json j;
  j["conductor"] = t.conductor;
  json irreps = json::array();
  for (const auto& r : t.rows) {
    json row;
    row["name"] = r.name;
    row["dim"] = r.dim;
    json values = json::array();
    for (const auto& v : r.values) values.push_back(v.to_string());
    row["values"] = std::move(values);
    irreps.push_back(std::move(row));
  }
  j["irreps"] = std::move(irreps);
  write_text_file(path, j.dump(2) + "\n");
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw HopfError("io/read", "cannot open '" + path + "'");
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

void write_text_file(const std::string& path, const std::string& content) {
  std::ofstream out(path);
  if (!out) throw HopfError("io/write", "cannot open '" + path + "' for writing");
  out << content;
  if (!out) throw HopfError("io/write", "write to '" + path + "' failed");
}

HopfPtr resolve_hopf(const std::string& arg) {
  if (arg.rfind("dual:", 0) == 0)
    return dual_hopf(*group_algebra(resolve_group(arg.substr(5))));
  if (arg.rfind("double:", 0) == 0) return drinfeld_double(resolve_group(arg.substr(7)));
  if (arg.size() > 5 && arg.substr(arg.size() - 5) == ".json") return load_hopf(arg);
  if (std::filesystem::exists(arg)) return load_hopf(arg);
  return group_algebra(resolve_group(arg));
}

FinGroup resolve_group(const std::string& arg) {
  if (arg.size() > 5 && arg.substr(arg.size() - 5) == ".json") return load_group(arg);
  if (std::filesystem::exists(arg)) return load_group(arg);
  auto g = named_group(arg);
  if (!g)
    throw HopfError("io/unknown-group",
                    "'" + arg + "' is neither a file nor a known group name");
  return *g;
}

}  // namespace hopfinv

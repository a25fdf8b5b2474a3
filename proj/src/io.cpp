#include "ringlab/io.hpp"

#include <fstream>
#include <sstream>

namespace ringlab {

namespace {

Json table_to_json(std::span<const Index> table, std::size_t n) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < n; ++i) {
    rows.push_back(std::vector<Index>(table.begin() + i * n, table.begin() + (i + 1) * n));
  }
  return rows;
}

std::vector<Index> table_from_json(const Json& rows, std::size_t n, const char* key) {
  if (!rows.is_array() || rows.size() != n) {
    throw RingError(ErrorKind::ParseError, std::string(key) + " must have " + std::to_string(n) + " rows");
  }
  std::vector<Index> flat;
  flat.reserve(n * n);
  for (const auto& row : rows) {
    if (!row.is_array() || row.size() != n) {
      throw RingError(ErrorKind::ParseError, std::string(key) + " rows must have " + std::to_string(n) + " entries");
    }
    for (const auto& cell : row) {
      if (!cell.is_number_integer() || cell.get<long long>() < 0) {
        throw RingError(ErrorKind::ParseError, std::string(key) + " entries must be non-negative integers");
      }
      flat.push_back(static_cast<Index>(cell.get<long long>()));
    }
  }
  return flat;
}

}  // namespace

Json ring_to_json(const FiniteRing& ring, const std::optional<std::string>& provenance) {
  Json doc;
  doc["label"] = ring.label();
  doc["order"] = ring.order();
  doc["add"] = table_to_json(ring.add_table(), ring.order());
  doc["mul"] = table_to_json(ring.mul_table(), ring.order());
  doc["zero"] = ring.zero();
  doc["one"] = ring.one();
  if (provenance) doc["provenance"] = *provenance;
  return doc;
}

RingTables ring_tables_from_json(const Json& doc) {
  if (!doc.is_object()) throw RingError(ErrorKind::ParseError, "ring document must be an object");
  for (const char* key : {"order", "add", "mul", "zero", "one"}) {
    if (!doc.contains(key)) throw RingError(ErrorKind::ParseError, std::string("missing key ") + key);
  }
  if (!doc["order"].is_number_integer() || doc["order"].get<long long>() <= 0) {
    throw RingError(ErrorKind::ParseError, "order must be a positive integer");
  }
  RingTables t;
  t.order = doc["order"].get<std::size_t>();
  if (t.order > kMaxOrder) {
    throw RingError(ErrorKind::OrderCapExceeded, "order " + std::to_string(t.order));
  }
  t.label = doc.value("label", std::string("unnamed"));
  t.add = table_from_json(doc["add"], t.order, "add");
  t.mul = table_from_json(doc["mul"], t.order, "mul");
  for (const char* key : {"zero", "one"}) {
    if (!doc[key].is_number_integer() || doc[key].get<long long>() < 0) {
      throw RingError(ErrorKind::ParseError, std::string(key) + " must be a non-negative integer");
    }
  }
  t.zero = doc["zero"].get<Index>();
  t.one = doc["one"].get<Index>();
  return t;
}

std::variant<FiniteRing, RingViolation> load_ring_file_checked(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw RingError(ErrorKind::IoError, "cannot open " + path.string());
  Json doc;
  try {
    doc = Json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw RingError(ErrorKind::ParseError, path.string() + ": " + e.what());
  }
  return validate_ring(ring_tables_from_json(doc));
}

FiniteRing load_ring_file(const std::filesystem::path& path) {
  auto result = load_ring_file_checked(path);
  if (auto* v = std::get_if<RingViolation>(&result)) {
    throw RingError(ErrorKind::ValidationFailed, path.string() + ": " + v->describe());
  }
  return std::get<FiniteRing>(std::move(result));
}

void save_ring_file(const std::filesystem::path& path, const FiniteRing& ring,
                    const std::optional<std::string>& provenance) {
  std::ofstream out(path);
  if (!out) throw RingError(ErrorKind::IoError, "cannot write " + path.string());
  out << ring_to_json(ring, provenance).dump() << '\n';
  if (!out) throw RingError(ErrorKind::IoError, "write failed for " + path.string());
}

Json spectrum_to_json(const SpectrumReport& report) {
  Json ideals = Json::array();
  for (std::size_t i = 0; i < report.all_ideals.size(); ++i) {
    const Ideal& ideal = report.all_ideals[i];
    Json item;
    item["members"] = ideal.members();
    item["prime"] = report.is_prime(i);
    item["maximal"] = report.is_maximal(i);
    item["contains_J"] = report.jacobson.is_subset_of(ideal);
    ideals.push_back(std::move(item));
  }
  Json doc;
  doc["jacobson"] = report.jacobson.members();
  doc["ideals"] = std::move(ideals);
  return doc;
}

}  // namespace ringlab

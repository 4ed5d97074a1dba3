#include "ceerlab/ceer_io.hpp"

#include <fstream>
#include <istream>
#include <ostream>

#include <json.hpp>

namespace ceerlab {
namespace {

using json = nlohmann::ordered_json;

Natural natural_field(const json& rec, const char* key, std::size_t line) {
  auto it = rec.find(key);
  if (it == rec.end() || !it->is_number_unsigned())
    throw ParseError(line, std::string("expected a natural in field \"") + key + "\"");
  return it->get<Natural>();
}

template <class Fn>
void for_each_record(std::istream& in, Fn&& fn) {
  std::string text;
  std::size_t line = 0;
  while (std::getline(in, text)) {
    ++line;
    if (text.find_first_not_of(" \t\r") == std::string::npos) continue;
    json rec;
    try {
      rec = json::parse(text);
    } catch (const json::parse_error& e) {
      throw ParseError(line, e.what());
    }
    if (!rec.is_object()) throw ParseError(line, "expected a JSON object");
    fn(rec, line);
  }
}

}  // namespace

void dump_pairs(std::ostream& out, const CeerTable& table) {
  out << json{{"bound", table.bound()}}.dump() << '\n';
  for (const auto& p : table.pairs())
    out << json{{"a", p.a}, {"b", p.b}, {"s", p.stage}}.dump() << '\n';
}

CeerTable load_pairs(std::istream& in, Natural default_bound) {
  std::optional<CeerTable> table;
  for_each_record(in, [&](const json& rec, std::size_t line) {
    if (rec.contains("bound")) {
      if (table) throw ParseError(line, "bound record must come first");
      table.emplace(natural_field(rec, "bound", line));
      return;
    }
    if (!table) table.emplace(default_bound);
    try {
      table->add(natural_field(rec, "a", line), natural_field(rec, "b", line),
                 natural_field(rec, "s", line));
    } catch (const ParseError&) {
      throw;
    } catch (const Error& e) {
      throw ParseError(line, e.what());
    }
  });
  return table ? std::move(*table) : CeerTable(default_bound);
}

void dump_classes(std::ostream& out, const Partition& partition) {
  for (const auto& cls : partition.classes()) out << json(cls).dump() << '\n';
}

void dump_reduction(std::ostream& out, const ReductionFn& f) {
  out << json{{"bound", f.totality_bound()}}.dump() << '\n';
  for (const auto& [n, e] : f.table())
    out << json{{"n", n}, {"v", e.value}, {"s", e.stage}}.dump() << '\n';
}

ReductionFn load_reduction(std::istream& in) {
  ReductionFn f;
  bool saw_bound = false;
  Natural max_arg = 0;
  bool any = false;
  for_each_record(in, [&](const json& rec, std::size_t line) {
    if (rec.contains("bound")) {
      f.set_totality_bound(natural_field(rec, "bound", line));
      saw_bound = true;
      return;
    }
    Natural n = natural_field(rec, "n", line);
    try {
      f.define(n, natural_field(rec, "v", line), rec.contains("s") ? natural_field(rec, "s", line) : 0);
    } catch (const ParseError&) {
      throw;
    } catch (const Error& e) {
      throw ParseError(line, e.what());
    }
    max_arg = std::max(max_arg, n);
    any = true;
  });
  if (!saw_bound) f.set_totality_bound(any ? max_arg + 1 : 0);
  return f;
}

CeerTable load_pairs_file(const std::string& path, Natural default_bound) {
  std::ifstream in(path);
  if (!in) throw InvalidInput("cannot open " + path);
  return load_pairs(in, default_bound);
}

ReductionFn load_reduction_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidInput("cannot open " + path);
  return load_reduction(in);
}

}  // namespace ceerlab

#include "ceerlab/lab/run_log.hpp"

#include <fstream>
#include <sstream>

namespace ceerlab {

Json LogRecord::to_json() const {
  Json j;
  j["stage"] = stage;
  j["requirement"] = requirement;
  if (priority != kNoPriority) j["priority"] = priority;
  j["kind"] = kind;
  j["action"] = action;
  j["emitted-relations"] = relations;
  j["status-changes"] = status_changes;
  Json inj = Json::array();
  for (const auto& r : injured) inj.push_back({{"requirement", r.requirement}, {"priority", r.priority}});
  j["injured"] = std::move(inj);
  j["justification"] = justification;
  if (!details.empty()) j["details"] = details;
  return j;
}

LogRecord LogRecord::from_json(const Json& j) {
  LogRecord r;
  r.stage = j.at("stage").get<Stage>();
  r.requirement = j.at("requirement").get<std::string>();
  r.priority = j.contains("priority") ? j["priority"].get<std::size_t>() : kNoPriority;
  r.kind = j.value("kind", "");
  r.action = j.value("action", "");
  if (j.contains("emitted-relations")) r.relations = j["emitted-relations"].get<std::vector<std::string>>();
  if (j.contains("status-changes")) r.status_changes = j["status-changes"].get<std::vector<std::string>>();
  if (j.contains("injured"))
    for (const auto& e : j["injured"])
      r.injured.push_back({e.at("requirement").get<std::string>(), e.at("priority").get<std::size_t>()});
  r.justification = j.value("justification", "");
  if (j.contains("details")) r.details = j["details"];
  return r;
}

void RunLog::write(std::ostream& out) const {
  out << Json{{"header", header}}.dump() << '\n';
  for (const auto& r : records) out << r.to_json().dump() << '\n';
}

std::string RunLog::str() const {
  std::ostringstream out;
  write(out);
  return out.str();
}

void RunLog::save(const std::string& path) const {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InvalidInput("cannot write " + path);
  write(out);
}

RunLog RunLog::read(std::istream& in) {
  RunLog log;
  std::string line;
  std::size_t number = 0;
  bool first = true;
  while (std::getline(in, line)) {
    ++number;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    Json j;
    try {
      j = Json::parse(line);
    } catch (const Json::exception& e) {
      throw ParseError(number, std::string("malformed JSON: ") + e.what());
    }
    try {
      if (first && j.contains("header"))
        log.header = j["header"];
      else
        log.records.push_back(LogRecord::from_json(j));
    } catch (const Json::exception& e) {
      throw ParseError(number, std::string("malformed log record: ") + e.what());
    }
    first = false;
  }
  return log;
}

RunLog RunLog::load(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InvalidInput("cannot read " + path);
  return read(in);
}

}  // namespace ceerlab

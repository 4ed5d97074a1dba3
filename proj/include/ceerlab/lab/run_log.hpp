#pragma once

// Line-oriented JSON action logs. The first line is {"header": {...}} with
// the run's parameters and inputs; every further line is one action.

#include <iosfwd>
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "ceerlab/errors.hpp"

namespace ceerlab {

using Json = nlohmann::ordered_json;

inline constexpr std::size_t kNoPriority = std::numeric_limits<std::size_t>::max();

struct InjuredRequirement {
  std::string requirement;
  std::size_t priority = 0;
  bool operator==(const InjuredRequirement&) const = default;
};

struct LogRecord {
  Stage stage = 0;
  std::string requirement;
  /// Rank in the priority order (0 is highest); kNoPriority for
  /// initialization and responses outside the requirement list.
  std::size_t priority = kNoPriority;
  std::string kind;
  std::string action;
  std::vector<std::string> relations;
  std::vector<std::string> status_changes;
  std::vector<InjuredRequirement> injured;
  std::string justification;
  Json details = Json::object();

  Json to_json() const;
  static LogRecord from_json(const Json& j);
};

class RunLog {
 public:
  Json header = Json::object();
  std::vector<LogRecord> records;

  void write(std::ostream& out) const;
  std::string str() const;
  void save(const std::string& path) const;
  /// Throws ParseError with the offending line number.
  static RunLog read(std::istream& in);
  static RunLog load(const std::string& path);
};

}  // namespace ceerlab

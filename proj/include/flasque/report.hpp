#pragma once

#include <optional>
#include <string>
#include <vector>

namespace flasque {

struct CheckRecord {
  std::string id;
  bool passed = false;
  std::string statement;
  std::optional<std::string> witness;

  friend bool operator==(const CheckRecord&, const CheckRecord&) = default;
};

/// Records kept sorted by id; ids are unique.
class CheckReport {
 public:
  /// Throws DuplicateLabel when the id is already present.
  void add(CheckRecord record);
  void add(std::string id, bool passed, std::string statement, std::optional<std::string> witness = std::nullopt);
  void merge(const CheckReport& other);

  const std::vector<CheckRecord>& records() const { return records_; }
  const CheckRecord* find(const std::string& id) const;
  bool passed() const;
  std::size_t failures() const;

  friend bool operator==(const CheckReport&, const CheckReport&) = default;

 private:
  std::vector<CheckRecord> records_;
};

/// Runs `check`, turning a flasque::Error into a failed record with the message as witness.
template <class Fn>
void record_check(CheckReport& report, const std::string& id, const std::string& statement, Fn&& check);

}  // namespace flasque

#include "flasque/error.hpp"

namespace flasque {

template <class Fn>
void record_check(CheckReport& report, const std::string& id, const std::string& statement, Fn&& check) {
  try {
    auto [ok, witness] = check();
    report.add(id, ok, statement, std::move(witness));
  } catch (const Error& e) {
    report.add(id, false, statement, std::string(e.what()));
  }
}

}  // namespace flasque

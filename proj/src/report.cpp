#include "flasque/report.hpp"

#include <algorithm>

namespace flasque {

void CheckReport::add(CheckRecord record) {
  auto it = std::lower_bound(records_.begin(), records_.end(), record.id,
                             [](const CheckRecord& r, const std::string& id) { return r.id < id; });
  if (it != records_.end() && it->id == record.id) throw Error(Errc::DuplicateLabel, "check id " + record.id);
  records_.insert(it, std::move(record));
}

void CheckReport::add(std::string id, bool passed, std::string statement, std::optional<std::string> witness) {
  add(CheckRecord{std::move(id), passed, std::move(statement), std::move(witness)});
}

void CheckReport::merge(const CheckReport& other) {
  for (const auto& r : other.records_) add(r);
}

const CheckRecord* CheckReport::find(const std::string& id) const {
  for (const auto& r : records_)
    if (r.id == id) return &r;
  return nullptr;
}

bool CheckReport::passed() const { return failures() == 0; }

std::size_t CheckReport::failures() const {
  return static_cast<std::size_t>(std::count_if(records_.begin(), records_.end(), [](const auto& r) { return !r.passed; }));
}

}  // namespace flasque

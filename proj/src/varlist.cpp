#include "mhp/varlist.hpp"

#include <algorithm>
#include <memory>
#include <mutex>
#include <set>

#include "mhp/errors.hpp"

namespace mhp {
namespace {

const std::vector<std::string>* intern(const std::vector<std::string>& names) {
  if (names.size() > kMaxVars) {
    throw StructuralError("too many variables in ring (max " + std::to_string(kMaxVars) + ")");
  }
  std::set<std::string> seen(names.begin(), names.end());
  if (seen.size() != names.size()) throw StructuralError("duplicate variable name");

  static std::mutex mutex;
  static std::vector<std::unique_ptr<std::vector<std::string>>> pool;
  std::lock_guard lock(mutex);
  for (const auto& p : pool) {
    if (*p == names) return p.get();
  }
  pool.push_back(std::make_unique<std::vector<std::string>>(names));
  return pool.back().get();
}

}  // namespace

VarList::VarList() : names_(intern({})) {}
VarList::VarList(std::initializer_list<std::string> names)
    : names_(intern(std::vector<std::string>(names))) {}
VarList::VarList(const std::vector<std::string>& names) : names_(intern(names)) {}

std::optional<std::size_t> VarList::index(const std::string& name) const {
  auto it = std::find(names_->begin(), names_->end(), name);
  if (it == names_->end()) return std::nullopt;
  return static_cast<std::size_t>(it - names_->begin());
}

}  // namespace mhp

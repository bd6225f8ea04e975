#pragma once

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <string>
#include <vector>

namespace mhp {

inline constexpr std::size_t kMaxVars = 6;

/// An interned, ordered list of variable names. Two VarLists compare equal iff
/// they name the same variables in the same order; comparison is a pointer test.
class VarList {
 public:
  VarList();  // the empty ring Q
  VarList(std::initializer_list<std::string> names);
  explicit VarList(const std::vector<std::string>& names);

  std::size_t size() const { return names_->size(); }
  const std::string& name(std::size_t i) const { return (*names_)[i]; }
  const std::vector<std::string>& names() const { return *names_; }
  std::optional<std::size_t> index(const std::string& name) const;
  bool contains(const std::string& name) const { return index(name).has_value(); }

  friend bool operator==(const VarList& a, const VarList& b) { return a.names_ == b.names_; }
  friend bool operator!=(const VarList& a, const VarList& b) { return !(a == b); }

 private:
  const std::vector<std::string>* names_;
};

}  // namespace mhp

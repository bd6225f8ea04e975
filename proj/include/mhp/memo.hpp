#pragma once

#include <map>
#include <memory>
#include <mutex>

namespace mhp {

/// Thread-safe insert-once cache. Values are built outside the lock (a race
/// may build a value twice; the first insert wins) and never move afterwards,
/// so returned references stay valid for the program's lifetime.
template <class Key, class Value>
class Memo {
 public:
  template <class Make>
  const Value& get(const Key& key, Make&& make) {
    {
      std::lock_guard lock(mutex_);
      auto it = map_.find(key);
      if (it != map_.end()) return *it->second;
    }
    auto value = std::make_unique<Value>(make());
    std::lock_guard lock(mutex_);
    auto [it, inserted] = map_.try_emplace(key, std::move(value));
    return *it->second;
  }

 private:
  std::mutex mutex_;
  std::map<Key, std::unique_ptr<Value>> map_;
};

}  // namespace mhp

#pragma once

#include <map>
#include <mutex>
#include <shared_mutex>

namespace rhorep {

/// Memo table safe for concurrent readers; values are built outside the lock
/// and the first inserted value wins.
template <class K, class V>
class KeyedCache {
 public:
  template <class Make>
  V get_or_make(const K& key, Make make) {
    {
      std::shared_lock lk(mu_);
      auto it = map_.find(key);
      if (it != map_.end()) return it->second;
    }
    V v = make();
    std::unique_lock lk(mu_);
    return map_.emplace(key, std::move(v)).first->second;
  }

 private:
  std::shared_mutex mu_;
  std::map<K, V> map_;
};

}  // namespace rhorep

// Thread-safe memo table.  Entries are never modified or erased once inserted,
// so references returned by get() stay valid for the life of the table.
#pragma once

#include <map>
#include <mutex>
#include <shared_mutex>

namespace redalg {

template <class K, class V>
class Memo {
 public:
  // The producer may itself call get() recursively; no lock is held while it runs.
  template <class F>
  const V& get(const K& key, F&& produce) {
    {
      std::shared_lock lock(mutex_);
      auto it = map_.find(key);
      if (it != map_.end()) return it->second;
    }
    V value = produce();
    std::unique_lock lock(mutex_);
    return map_.emplace(key, std::move(value)).first->second;
  }

 private:
  std::shared_mutex mutex_;
  std::map<K, V> map_;
};

}  // namespace redalg

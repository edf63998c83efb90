#pragma once

#include <cstddef>
#include <list>
#include <mutex>
#include <optional>
#include <unordered_map>
#include <utility>

namespace fqmzv {

// Thread-safe bounded cache with least-recently-used eviction.  Lookups use
// full key equality, so a hit can never come from a mismatched key.
template <class K, class V, class Hash = std::hash<K>>
class LruCache {
  public:
    explicit LruCache(size_t capacity) : cap_(capacity) {}

    std::optional<V> get(const K& key) {
        std::lock_guard<std::mutex> lock(mu_);
        auto it = map_.find(key);
        if (it == map_.end()) return std::nullopt;
        order_.splice(order_.begin(), order_, it->second);
        return it->second->second;
    }

    void put(const K& key, V value) {
        std::lock_guard<std::mutex> lock(mu_);
        auto it = map_.find(key);
        if (it != map_.end()) {
            it->second->second = std::move(value);
            order_.splice(order_.begin(), order_, it->second);
            return;
        }
        order_.emplace_front(key, std::move(value));
        map_[key] = order_.begin();
        if (map_.size() > cap_) {
            map_.erase(order_.back().first);
            order_.pop_back();
        }
    }

    void clear() {
        std::lock_guard<std::mutex> lock(mu_);
        map_.clear();
        order_.clear();
    }

    void set_capacity(size_t capacity) {
        std::lock_guard<std::mutex> lock(mu_);
        cap_ = capacity;
        while (map_.size() > cap_) {
            map_.erase(order_.back().first);
            order_.pop_back();
        }
    }

    size_t size() const {
        std::lock_guard<std::mutex> lock(mu_);
        return map_.size();
    }

  private:
    size_t cap_;
    std::list<std::pair<K, V>> order_;
    std::unordered_map<K, typename std::list<std::pair<K, V>>::iterator, Hash> map_;
    mutable std::mutex mu_;
};

}  // namespace fqmzv

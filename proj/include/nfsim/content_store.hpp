#pragma once

#include <cstddef>
#include <list>
#include <unordered_map>

#include "nfsim/name.hpp"
#include "nfsim/packet.hpp"

namespace nfsim {

// LRU cache of Data packets. Capacity 0 disables caching entirely.
class ContentStore {
 public:
  explicit ContentStore(std::size_t capacity = 0) : capacity_(capacity) {}

  bool insert(const Data& data) {
    if (capacity_ == 0) return false;
    auto it = index_.find(data.name);
    if (it != index_.end()) {
      lru_.splice(lru_.begin(), lru_, it->second);
      return true;
    }
    if (lru_.size() >= capacity_) {
      index_.erase(lru_.back().name);
      lru_.pop_back();
    }
    lru_.push_front(data);
    index_[data.name] = lru_.begin();
    return true;
  }

  const Data* find(const Name& name) {
    auto it = index_.find(name);
    if (it == index_.end()) return nullptr;
    lru_.splice(lru_.begin(), lru_, it->second);
    return &*it->second;
  }

  std::size_t size() const { return lru_.size(); }
  std::size_t capacity() const { return capacity_; }

 private:
  std::size_t capacity_;
  std::list<Data> lru_;
  std::unordered_map<Name, std::list<Data>::iterator, NameHash> index_;
};

}  // namespace nfsim

// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <memory>
#include <shared_mutex>
#include <string>
#include <unordered_map>
#include <vector>

#include "hmi/adapters/adapter_set.hpp"

namespace hmi::adapters {

// Host-resident adapter sets. Unbounded; never evicts. Concurrent reads,
// serialized registrations. Sets are immutable once stored; replace swaps
// the whole set so in-flight readers keep a consistent snapshot.
class AdapterStore {
 public:
  void register_set(AdapterSet set);          // ConflictError on duplicate
  void replace(AdapterSet set);               // RoutingError if absent
  void erase(const std::string& task_id);
  std::shared_ptr<const AdapterSet> get(const std::string& task_id) const;
  bool contains(const std::string& task_id) const;
  std::size_t size() const;
  std::vector<std::string> task_ids() const;

 private:
  std::unordered_map<std::string, std::shared_ptr<const AdapterSet>> sets_;
  mutable std::shared_mutex mutex_;
};

}  // namespace hmi::adapters

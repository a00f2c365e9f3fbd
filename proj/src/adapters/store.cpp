// SPDX-License-Identifier: Apache-2.0

#include "hmi/adapters/store.hpp"

#include "hmi/errors.hpp"

namespace hmi::adapters {

void AdapterStore::register_set(AdapterSet set) {
  std::unique_lock lock(mutex_);
  const std::string id = set.task_id;
  auto [it, inserted] =
      sets_.emplace(id, std::make_shared<const AdapterSet>(std::move(set)));
  if (!inserted) {
    throw ConflictError("adapter set for task " + id + " already registered");
  }
}

void AdapterStore::replace(AdapterSet set) {
  std::unique_lock lock(mutex_);
  auto it = sets_.find(set.task_id);
  if (it == sets_.end()) {
    throw RoutingError("no adapter set registered for task " + set.task_id);
  }
  it->second = std::make_shared<const AdapterSet>(std::move(set));
}

void AdapterStore::erase(const std::string& task_id) {
  std::unique_lock lock(mutex_);
  sets_.erase(task_id);
}

std::shared_ptr<const AdapterSet> AdapterStore::get(const std::string& task_id) const {
  std::shared_lock lock(mutex_);
  auto it = sets_.find(task_id);
  if (it == sets_.end()) {
    throw RoutingError("no adapter set registered for task " + task_id);
  }
  return it->second;
}

bool AdapterStore::contains(const std::string& task_id) const {
  std::shared_lock lock(mutex_);
  return sets_.find(task_id) != sets_.end();
}

std::size_t AdapterStore::size() const {
  std::shared_lock lock(mutex_);
  return sets_.size();
}

std::vector<std::string> AdapterStore::task_ids() const {
  std::shared_lock lock(mutex_);
  std::vector<std::string> ids;
  ids.reserve(sets_.size());
  for (const auto& [id, set] : sets_) ids.push_back(id);
  return ids;
}

}  // namespace hmi::adapters

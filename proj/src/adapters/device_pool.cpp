// SPDX-License-Identifier: Apache-2.0

#include "hmi/adapters/device_pool.hpp"

#include <limits>

#include "hmi/errors.hpp"

namespace hmi::adapters {

DeviceSlotPool::DeviceSlotPool(std::size_t capacity_bytes, TransferLatencyModel transfer)
    : capacity_bytes_(capacity_bytes), transfer_(transfer) {}

bool DeviceSlotPool::make_room(std::size_t needed, const std::set<std::string>& protect,
                               std::vector<std::string>& evicted) {
  if (needed > capacity_bytes_) {
    throw CapacityError("adapter load of " + std::to_string(needed) +
                        " bytes exceeds pool capacity of " +
                        std::to_string(capacity_bytes_));
  }
  while (resident_bytes_ + needed > capacity_bytes_) {
    auto victim = resident_.end();
    std::uint64_t oldest = std::numeric_limits<std::uint64_t>::max();
    bool pinned_blockers = false;
    for (auto it = resident_.begin(); it != resident_.end(); ++it) {
      if (protect.contains(it->first)) continue;
      if (it->second.pins > 0) {
        pinned_blockers = true;
        continue;
      }
      if (it->second.last_used < oldest) {
        oldest = it->second.last_used;
        victim = it;
      }
    }
    if (victim == resident_.end()) {
      if (pinned_blockers) return false;
      throw CapacityError("working set of " +
                          std::to_string(resident_bytes_ + needed) +
                          " bytes exceeds pool capacity of " +
                          std::to_string(capacity_bytes_));
    }
    resident_bytes_ -= victim->second.bytes;
    evicted.push_back(victim->first);
    resident_.erase(victim);
  }
  return true;
}

std::vector<LoadRecord> DeviceSlotPool::ensure_resident(
    const AdapterStore& store, std::span<const std::string> task_ids) {
  std::lock_guard lock(mutex_);
  std::set<std::string> protect(task_ids.begin(), task_ids.end());
  std::vector<LoadRecord> report;
  std::set<std::string> seen;
  for (const std::string& task : task_ids) {
    if (!seen.insert(task).second) continue;
    const auto set = store.get(task);
    auto& res = resident_[task];
    std::size_t missing_bytes = 0;
    std::vector<std::size_t> missing;
    for (std::size_t l = 0; l < set->layers.size(); ++l) {
      if (!res.layers.contains(l)) {
        missing.push_back(l);
        missing_bytes += set->layer_byte_size(l);
      }
    }
    res.last_used = ++tick_;
    if (missing.empty()) {
      ++hits_;
      report.push_back(LoadRecord{task, true, 0, 0.0, {}});
      continue;
    }
    LoadRecord rec;
    rec.task_id = task;
    if (!make_room(missing_bytes, protect, rec.evicted)) {
      throw CapacityError("pinned working set blocks adapter load for task " + task);
    }
    auto& fresh = resident_[task];  // make_room may have erased an empty record
    for (std::size_t l : missing) fresh.layers.insert(l);
    fresh.bytes += missing_bytes;
    fresh.last_used = tick_;
    resident_bytes_ += missing_bytes;
    max_resident_bytes_ = std::max(max_resident_bytes_, resident_bytes_);
    ++loads_;
    rec.bytes = missing_bytes;
    rec.duration_ms = transfer_.duration_ms(missing_bytes);
    report.push_back(std::move(rec));
  }
  return report;
}

std::optional<std::vector<LoadRecord>> DeviceSlotPool::try_ensure_layer_resident(
    const AdapterStore& store, std::span<const std::string> task_ids,
    std::size_t layer) {
  std::lock_guard lock(mutex_);
  std::set<std::string> protect(task_ids.begin(), task_ids.end());
  std::vector<LoadRecord> report;
  std::set<std::string> seen;
  for (const std::string& task : task_ids) {
    if (!seen.insert(task).second) continue;
    const auto set = store.get(task);
    if (layer >= set->layers.size()) {
      throw DimensionError("layer index " + std::to_string(layer) +
                           " outside adapter set for task " + task);
    }
    auto& res = resident_[task];
    res.last_used = ++tick_;
    if (res.layers.contains(layer)) {
      ++hits_;
      report.push_back(LoadRecord{task, true, 0, 0.0, {}});
      continue;
    }
    const std::size_t bytes = set->layer_byte_size(layer);
    LoadRecord rec;
    rec.task_id = task;
    if (!make_room(bytes, protect, rec.evicted)) {
      if (resident_[task].layers.empty() && resident_[task].bytes == 0 &&
          resident_[task].pins == 0) {
        resident_.erase(task);
      }
      return std::nullopt;
    }
    auto& fresh = resident_[task];
    fresh.layers.insert(layer);
    fresh.bytes += bytes;
    fresh.last_used = tick_;
    resident_bytes_ += bytes;
    max_resident_bytes_ = std::max(max_resident_bytes_, resident_bytes_);
    ++loads_;
    rec.bytes = bytes;
    rec.duration_ms = transfer_.duration_ms(bytes);
    report.push_back(std::move(rec));
  }
  return report;
}

void DeviceSlotPool::pin(std::span<const std::string> task_ids) {
  std::lock_guard lock(mutex_);
  for (const auto& task : task_ids) {
    auto it = resident_.find(task);
    if (it != resident_.end()) ++it->second.pins;
  }
}

void DeviceSlotPool::unpin(std::span<const std::string> task_ids) {
  std::lock_guard lock(mutex_);
  for (const auto& task : task_ids) {
    auto it = resident_.find(task);
    if (it != resident_.end() && it->second.pins > 0) --it->second.pins;
  }
}

void DeviceSlotPool::touch(std::span<const std::string> task_ids) {
  std::lock_guard lock(mutex_);
  for (const auto& task : task_ids) {
    auto it = resident_.find(task);
    if (it != resident_.end()) it->second.last_used = ++tick_;
  }
}

bool DeviceSlotPool::evict(const std::string& task_id) {
  std::lock_guard lock(mutex_);
  auto it = resident_.find(task_id);
  if (it == resident_.end() || it->second.pins > 0) return false;
  resident_bytes_ -= it->second.bytes;
  resident_.erase(it);
  return true;
}

bool DeviceSlotPool::is_layer_resident(const std::string& task_id,
                                       std::size_t layer) const {
  std::lock_guard lock(mutex_);
  auto it = resident_.find(task_id);
  return it != resident_.end() && it->second.layers.contains(layer);
}

bool DeviceSlotPool::is_fully_resident(const AdapterStore& store,
                                       const std::string& task_id) const {
  const auto set = store.get(task_id);
  std::lock_guard lock(mutex_);
  auto it = resident_.find(task_id);
  if (it == resident_.end()) return false;
  for (std::size_t l = 0; l < set->layers.size(); ++l) {
    if (!it->second.layers.contains(l)) return false;
  }
  return true;
}

std::size_t DeviceSlotPool::resident_bytes() const {
  std::lock_guard lock(mutex_);
  return resident_bytes_;
}

std::size_t DeviceSlotPool::resident_task_count() const {
  std::lock_guard lock(mutex_);
  std::size_t n = 0;
  for (const auto& [id, res] : resident_) {
    if (!res.layers.empty()) ++n;
  }
  return n;
}

std::size_t DeviceSlotPool::max_resident_bytes_seen() const {
  std::lock_guard lock(mutex_);
  return max_resident_bytes_;
}

std::uint64_t DeviceSlotPool::hits() const {
  std::lock_guard lock(mutex_);
  return hits_;
}

std::uint64_t DeviceSlotPool::loads() const {
  std::lock_guard lock(mutex_);
  return loads_;
}

}  // namespace hmi::adapters

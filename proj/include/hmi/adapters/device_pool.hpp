// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <map>
#include <mutex>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <vector>

#include "hmi/adapters/store.hpp"

namespace hmi::adapters {

// duration = fixed overhead + bytes / bandwidth
struct TransferLatencyModel {
  double fixed_overhead_ms = 0.05;
  double bytes_per_ms = 12.0e6;  // ~PCIe 3.0

  double duration_ms(std::size_t bytes) const {
    return fixed_overhead_ms + static_cast<double>(bytes) / bytes_per_ms;
  }
};

struct LoadRecord {
  std::string task_id;
  bool hit = false;
  std::size_t bytes = 0;       // bytes transferred (0 on hit)
  double duration_ms = 0.0;    // simulated transfer duration
  std::vector<std::string> evicted;
};

// Bounded byte budget simulating GPU residency of adapter sets. Residency is
// tracked per (task, layer) so the pipeline can prefetch layer slices;
// eviction removes whole tasks, least-recently-used first. Pinned tasks are
// never evicted: the scheduler pins each in-flight batch's working set so a
// later batch's prefetch cannot violate the compute-residency contract.
class DeviceSlotPool {
 public:
  DeviceSlotPool(std::size_t capacity_bytes, TransferLatencyModel transfer = {});

  // Makes every layer of every listed task resident. LRU-evicts as needed;
  // throws CapacityError when the request cannot fit even after evicting all
  // unpinned residents.
  std::vector<LoadRecord> ensure_resident(const AdapterStore& store,
                                          std::span<const std::string> task_ids);

  // Layer-granular variant used by prefetch. Duplicate task ids are
  // deduplicated. Returns std::nullopt without loading anything further if
  // admission would require evicting a pinned task (caller retries after the
  // pin owner completes).
  std::optional<std::vector<LoadRecord>> try_ensure_layer_resident(
      const AdapterStore& store, std::span<const std::string> task_ids,
      std::size_t layer);

  void pin(std::span<const std::string> task_ids);
  void unpin(std::span<const std::string> task_ids);

  void touch(std::span<const std::string> task_ids);
  bool evict(const std::string& task_id);  // false if absent or pinned

  bool is_layer_resident(const std::string& task_id, std::size_t layer) const;
  bool is_fully_resident(const AdapterStore& store, const std::string& task_id) const;

  std::size_t capacity_bytes() const noexcept { return capacity_bytes_; }
  std::size_t resident_bytes() const;
  std::size_t resident_task_count() const;
  std::size_t max_resident_bytes_seen() const;
  std::uint64_t hits() const;
  std::uint64_t loads() const;
  const TransferLatencyModel& transfer_model() const noexcept { return transfer_; }

 private:
  struct Residency {
    std::set<std::size_t> layers;
    std::size_t bytes = 0;
    std::uint64_t last_used = 0;
    std::uint32_t pins = 0;
  };

  // Frees at least `needed` bytes. Returns false (no mutation beyond already
  // performed evictions) if pinned tasks block; throws CapacityError if the
  // bytes cannot fit even in an empty pool.
  bool make_room(std::size_t needed, const std::set<std::string>& protect,
                 std::vector<std::string>& evicted);

  std::size_t capacity_bytes_;
  TransferLatencyModel transfer_;
  std::map<std::string, Residency> resident_;
  std::size_t resident_bytes_ = 0;
  std::size_t max_resident_bytes_ = 0;
  std::uint64_t tick_ = 0;
  std::uint64_t hits_ = 0;
  std::uint64_t loads_ = 0;
  mutable std::mutex mutex_;
};

}  // namespace hmi::adapters

// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <deque>
#include <mutex>
#include <string>
#include <unordered_map>
#include <vector>

#include "hmi/transformer/model.hpp"

namespace hmi::sched {

struct InferRequest {
  std::string request_id;
  std::string tenant_id;
  std::string instance_id;
  std::vector<std::uint32_t> tokens;
  double enqueue_time_ms = 0.0;
};

struct InferBatch {
  std::size_t batch_id = 0;
  std::vector<InferRequest> requests;
};

// Routing record for one hPLM instance: which table version feeds retrieval,
// which adapter set customizes the higher stack, and the output head.
struct InstanceBinding {
  std::uint32_t version_id = 0;
  std::string task_id;
  OutputHead head;
};

using InstanceTable = std::unordered_map<std::string, InstanceBinding>;

struct InferResult {
  std::string request_id;
  std::size_t batch_id = 0;
  HeadOutput output;
  double queue_ms = 0.0;  // enqueue -> batch dequeue
  double total_ms = 0.0;  // enqueue -> completion
};

// Input queue applying the batching rule: a request joins the last open
// batch; when that batch is full a new one is opened first.
class BatchQueue {
 public:
  explicit BatchQueue(std::size_t max_batch_size);

  void enqueue(InferRequest req);
  std::vector<InferBatch> take_all();

  std::size_t max_batch_size() const noexcept { return max_batch_size_; }
  std::size_t pending_requests() const;
  std::size_t pending_batches() const;

 private:
  std::size_t max_batch_size_;
  std::size_t next_batch_id_ = 0;
  std::deque<InferBatch> batches_;
  mutable std::mutex mutex_;
};

}  // namespace hmi::sched

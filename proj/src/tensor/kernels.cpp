// SPDX-License-Identifier: Apache-2.0

#include "hmi/tensor/kernels.hpp"

#include <atomic>
#include <cstdlib>

namespace hmi::kernels {

#if defined(__x86_64__) || defined(_M_X64)
const KernelTable& avx2_table();  // kernels_avx2.cpp
#endif
#if defined(__aarch64__)
const KernelTable& neon_table();  // kernels_neon.cpp
#endif

std::vector<const KernelTable*> available_tables() {
  std::vector<const KernelTable*> tables{&scalar_table()};
#if defined(__x86_64__) || defined(_M_X64)
  if (__builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma")) {
    tables.push_back(&avx2_table());
  }
#endif
#if defined(__aarch64__)
  tables.push_back(&neon_table());
#endif
  return tables;
}

namespace {

std::atomic<const KernelTable*> g_active{nullptr};

const KernelTable* find_table(std::string_view name) {
  for (const KernelTable* t : available_tables()) {
    if (name == t->name) return t;
  }
  return nullptr;
}

const KernelTable* initial_table() {
  if (const char* env = std::getenv("HMI_KERNELS")) {
    if (const KernelTable* t = find_table(env)) return t;
  }
  return available_tables().back();  // best supported variant
}

}  // namespace

const KernelTable& active() {
  const KernelTable* t = g_active.load(std::memory_order_acquire);
  if (t == nullptr) {
    t = initial_table();
    g_active.store(t, std::memory_order_release);
  }
  return *t;
}

bool set_active(std::string_view name) {
  const KernelTable* t = find_table(name);
  if (t == nullptr) return false;
  g_active.store(t, std::memory_order_release);
  return true;
}

}  // namespace hmi::kernels

#include <atomic>
#include <cstdlib>
#include <stdexcept>
#include <string>

#include "josabpp/kernels.hpp"

namespace josabpp::kernels {

#if defined(JOSABPP_HAVE_AVX2)
const KernelOps& avx2_kernels();
#endif

bool avx2_available() {
#if defined(JOSABPP_HAVE_AVX2) && (defined(__x86_64__) || defined(__i386__))
  return __builtin_cpu_supports("avx2") != 0;
#else
  return false;
#endif
}

namespace {

const KernelOps* resolve(const std::string& name) {
  if (name == "scalar") return &scalar_kernels();
  if (name == "avx2") {
#if defined(JOSABPP_HAVE_AVX2)
    if (avx2_available()) return &avx2_kernels();
#endif
    throw std::invalid_argument("avx2 kernels not supported on this machine");
  }
  if (name == "auto" || name.empty()) {
#if defined(JOSABPP_HAVE_AVX2)
    if (avx2_available()) return &avx2_kernels();
#endif
    return &scalar_kernels();
  }
  throw std::invalid_argument("unknown kernel variant: " + name);
}

const KernelOps* initial() {
  const char* env = std::getenv("JOSABPP_KERNEL");
  return resolve(env != nullptr ? std::string(env) : std::string("auto"));
}

std::atomic<const KernelOps*>& active_slot() {
  static std::atomic<const KernelOps*> slot{initial()};
  return slot;
}

}  // namespace

const KernelOps& active_kernels() { return *active_slot().load(); }

void set_active_kernels(const std::string& name) {
  active_slot().store(resolve(name));
}

}  // namespace josabpp::kernels

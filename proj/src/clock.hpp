#ifndef PERMKIT_SRC_CLOCK_HPP
#define PERMKIT_SRC_CLOCK_HPP

#include <chrono>

namespace permkit::detail {

inline double now_seconds() {
  using namespace std::chrono;
  return duration<double>(steady_clock::now().time_since_epoch()).count();
}

}  // namespace permkit::detail

#endif  // PERMKIT_SRC_CLOCK_HPP

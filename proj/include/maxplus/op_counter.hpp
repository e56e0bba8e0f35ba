#ifndef MAXPLUS_OP_COUNTER_HPP_
#define MAXPLUS_OP_COUNTER_HPP_

#include <cstdint>

namespace maxplus {

// Counts scalar semiring operations performed by the matrix kernels on the
// calling thread. One unit is one multiply-accumulate step (a ⊗ followed by
// folding into a running ⊕) or one entrywise ⊕/⊕′ of two matrices.
// Comparisons, conjugation and copies are not counted.
namespace op_counter {

inline thread_local std::uint64_t count = 0;

inline void add(std::uint64_t n) noexcept { count += n; }
inline std::uint64_t value() noexcept { return count; }
inline void reset() noexcept { count = 0; }

}  // namespace op_counter

/// Reports the number of counted operations since construction.
class ScopedOpCount {
 public:
  ScopedOpCount() noexcept : start_(op_counter::value()) {}
  std::uint64_t elapsed() const noexcept {
    return op_counter::value() - start_;
  }

 private:
  std::uint64_t start_;
};

}  // namespace maxplus

#endif  // MAXPLUS_OP_COUNTER_HPP_

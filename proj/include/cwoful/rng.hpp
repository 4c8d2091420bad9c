#pragma once

#include <array>
#include <cstdint>
#include <limits>
#include <string_view>

namespace cwoful {

/// Name of the generator family, echoed into run metadata.
inline constexpr std::string_view kPrngFamily = "philox4x32-10";

/// Philox4x32 with 10 rounds (Salmon et al., Random123). Counter-based:
/// the output block is a pure function of (key, counter).
class Philox4x32 {
 public:
  using Counter = std::array<std::uint32_t, 4>;
  using Key = std::array<std::uint32_t, 2>;

  static Counter block(Counter counter, Key key);
};

/// Independent sub-streams of one episode. Changing the draws made on one
/// stream never shifts another.
enum class StreamId : std::uint32_t {
  kEnvironment = 1,
  kPolicy = 2,
  kAdversary = 3,
  kInstance = 4,
};

/// Sequential view over a Philox key: words 0..1 of the counter enumerate
/// blocks, words 2..3 hold the stream tag.
class RandomStream {
 public:
  using result_type = std::uint32_t;

  RandomStream(std::uint64_t seed, std::uint64_t tag);

  static constexpr result_type min() { return 0; }
  static constexpr result_type max() {
    return std::numeric_limits<result_type>::max();
  }

  result_type operator()();
  std::uint64_t next_u64();

  /// Uniform on [0, 1) with 53 random bits.
  double uniform();
  /// Standard normal (Box-Muller, one output per call).
  double normal();

  /// Derives a statistically independent child stream.
  RandomStream split(std::uint64_t tag) const;

  std::uint64_t blocks_consumed() const { return block_index_; }

 private:
  RandomStream(Philox4x32::Key key, std::uint64_t tag);
  void refill();

  Philox4x32::Key key_{};
  std::uint64_t tag_ = 0;
  std::uint64_t block_index_ = 0;
  Philox4x32::Counter buffer_{};
  int buffered_ = 0;
};

RandomStream make_stream(std::uint64_t seed, StreamId id);

std::uint64_t splitmix64(std::uint64_t x);

}  // namespace cwoful

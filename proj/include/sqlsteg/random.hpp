#ifndef SQLSTEG_RANDOM_HPP
#define SQLSTEG_RANDOM_HPP

#include <cstdint>
#include <random>
#include <stdexcept>
#include <utility>
#include <vector>

namespace sqlsteg {

// Uniform bounded draws. A bound of 1 has only one outcome and consumes
// no state, which keeps scripted sequences short.
class RandomSource {
 public:
  virtual ~RandomSource() = default;

  std::uint64_t below(std::uint64_t bound) {
    if (bound == 0) throw std::logic_error("RandomSource::below called with bound 0");
    if (bound == 1) return 0;
    return draw(bound);
  }

 protected:
  virtual std::uint64_t draw(std::uint64_t bound) = 0;
};

// mt19937_64 is fully specified by the standard, so a seed produces the
// same stream on every platform.
class SeededRandomSource final : public RandomSource {
 public:
  explicit SeededRandomSource(std::uint64_t seed) : engine_(seed) {}

 protected:
  std::uint64_t draw(std::uint64_t bound) override { return engine_() % bound; }

 private:
  std::mt19937_64 engine_;
};

// Replays a fixed choice sequence; used by tests to pin sampling outcomes.
class ScriptedRandomSource final : public RandomSource {
 public:
  explicit ScriptedRandomSource(std::vector<std::uint64_t> script) : script_(std::move(script)) {}

  bool exhausted() const { return next_ >= script_.size(); }

 protected:
  std::uint64_t draw(std::uint64_t bound) override {
    if (next_ >= script_.size()) throw std::logic_error("scripted random source exhausted");
    return script_[next_++] % bound;
  }

 private:
  std::vector<std::uint64_t> script_;
  std::size_t next_ = 0;
};

}  // namespace sqlsteg

#endif

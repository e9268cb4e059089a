#ifndef QUERYGAMES_CORE_STATE_HPP
#define QUERYGAMES_CORE_STATE_HPP

#include <memory>
#include <stdexcept>
#include <string>
#include <utility>

namespace qg {

// Immutable, shareable state token for learners and teachers. Each token
// carries a printable key; within one machine the key identifies the state
// (state deduplication and reports rely on that).
class StateToken {
 public:
  StateToken() = default;

  template <typename T>
  static StateToken of(T value, std::string key) {
    StateToken s;
    s.held_ = std::make_shared<Box<T>>(std::move(value));
    s.key_ = std::move(key);
    return s;
  }

  template <typename T>
  const T& as() const {
    auto* box = dynamic_cast<const Box<T>*>(held_.get());
    if (box == nullptr) throw std::logic_error("StateToken: wrong state type for key " + key_);
    return box->value;
  }

  const std::string& key() const { return key_; }
  bool empty() const { return held_ == nullptr; }

  friend bool operator==(const StateToken& a, const StateToken& b) { return a.key_ == b.key_; }

 private:
  struct BoxBase {
    virtual ~BoxBase() = default;
  };
  template <typename T>
  struct Box : BoxBase {
    explicit Box(T v) : value(std::move(v)) {}
    T value;
  };

  std::shared_ptr<const BoxBase> held_;
  std::string key_;
};

}  // namespace qg

#endif

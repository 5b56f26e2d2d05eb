#pragma once

#include <cstdint>
#include <string_view>

namespace rotkin {

// Reference-frame label. Two FrameId values denote the same frame iff their
// ids match; the name is only used in diagnostics.
class FrameId {
 public:
  constexpr FrameId(std::uint32_t id, std::string_view name) : id_(id), name_(name) {}

  constexpr std::uint32_t id() const { return id_; }
  constexpr std::string_view name() const { return name_; }

  friend constexpr bool operator==(FrameId a, FrameId b) { return a.id_ == b.id_; }
  friend constexpr bool operator!=(FrameId a, FrameId b) { return a.id_ != b.id_; }

 private:
  std::uint32_t id_;
  std::string_view name_;
};

// Canonical frames: the fixed world frame and the rotating body frame.
inline constexpr FrameId kWorld{0, "world"};
inline constexpr FrameId kBody{1, "body"};

}  // namespace rotkin

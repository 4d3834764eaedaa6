#pragma once

namespace dissipator {

inline constexpr const char* kVersion = "1.0.0";

}  // namespace dissipator

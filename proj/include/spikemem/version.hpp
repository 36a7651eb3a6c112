#pragma once

namespace spikemem {

inline constexpr const char* kVersion = "0.1.0";

} // namespace spikemem

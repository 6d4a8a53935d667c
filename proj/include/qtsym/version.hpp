#pragma once

namespace qtsym {

// Engine version: bump the stamp whenever a change could alter any computed
// value; cached results carry it and are discarded on mismatch.
inline constexpr const char* kVersion = "0.1.0";
inline constexpr const char* kEngineStamp = "qtsym-engine-1";

}  // namespace qtsym

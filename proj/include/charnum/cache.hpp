/**
 * @file cache.hpp
 * @brief On-disk cache of computed potentials: canonical JSON files plus a
 *        manifest recording target, kind, cap, flex degree and a content
 *        digest for each file.
 *
 * A cached potential is reused only when target, kind, cap, flex degree and
 * engine version all match and the stored digest agrees with the file bytes.
 * Writes are atomic (write to a temporary, then rename), and the writer is
 * canonical: identical potentials produce identical files.
 */
#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "charnum/potential.hpp"

namespace charnum {

inline constexpr const char* kEngineVersion = "1.0.0";

struct CacheEntry {
    std::string file;    ///< file name inside the cache directory
    std::string target;  ///< "p2" | "p1xp1"
    std::string kind;
    int cap = 0;
    int z = 0;           ///< flex degree for plane F files; 0 otherwise
    std::string digest;  ///< FNV-1a 64 over the file bytes, lowercase hex
};

struct CacheManifest {
    std::string engine_version = kEngineVersion;
    std::vector<CacheEntry> entries;  ///< kept sorted by file name
};

/// FNV-1a 64-bit digest, sixteen lowercase hex digits.
std::string fnv1a64(std::string_view bytes);

/// Load the manifest; absent file yields an empty manifest.  A manifest
/// written by a different engine version is treated as empty (stale cache).
CacheManifest load_manifest(const std::filesystem::path& dir);

/// Canonical file name for a potential: "<target>-<kind>-cap<N>.json", with
/// "-z<z>" inserted for plane triple-contact files.
std::string cache_file_name(Target target, Kind kind, int cap, int z = 0);

/// Serialize and store atomically; updates the manifest (also atomically).
void store_potential(const std::filesystem::path& dir, const Potential& p, int z = 0);

/// Load a cached potential; std::nullopt when no matching entry exists.
/// Throws std::runtime_error when an entry exists but the file is missing,
/// fails its digest, or contradicts its manifest row.
std::optional<Potential> load_potential(const std::filesystem::path& dir, Target target,
                                        Kind kind, int cap, int z = 0);

/// Largest cached cap for (target, kind, z); std::nullopt when none.
std::optional<int> best_cached_cap(const std::filesystem::path& dir, Target target, Kind kind,
                                   int z = 0);

}  // namespace charnum

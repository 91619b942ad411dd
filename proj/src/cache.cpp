/**
 * @file cache.cpp
 * @brief Potential cache: FNV-1a digests, manifest bookkeeping, atomic file
 *        writes and validated reads.
 */
#include "charnum/cache.hpp"

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace charnum {

namespace {

using nlohmann::json;

constexpr const char* kManifestName = "manifest.json";

/// Read a whole file into a string; std::nullopt when the file cannot be opened.
std::optional<std::string> slurp(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) return std::nullopt;
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

/// Write bytes to `path` atomically: write a sibling temporary, then rename.
void atomic_write(const std::filesystem::path& path, const std::string& bytes) {
    std::filesystem::create_directories(path.parent_path());
    const std::filesystem::path tmp = path.string() + ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw std::runtime_error("cannot write cache file " + tmp.string());
        out << bytes;
        out.flush();
        if (!out) throw std::runtime_error("short write to cache file " + tmp.string());
    }
    std::filesystem::rename(tmp, path);  // rename within one directory is atomic
}

std::string manifest_to_json(const CacheManifest& m) {
    std::ostringstream out;
    out << "{\"engine_version\":\"" << m.engine_version << "\",\"entries\":[";
    bool first = true;
    for (const CacheEntry& e : m.entries) {
        if (!first) out << ',';
        first = false;
        out << "{\"file\":\"" << e.file << "\",\"target\":\"" << e.target << "\",\"kind\":\""
            << e.kind << "\",\"cap\":" << e.cap << ",\"z\":" << e.z << ",\"digest\":\""
            << e.digest << "\"}";
    }
    out << "]}";
    return out.str();
}

void store_manifest(const std::filesystem::path& dir, CacheManifest& m) {
    std::sort(m.entries.begin(), m.entries.end(),
              [](const CacheEntry& a, const CacheEntry& b) { return a.file < b.file; });
    atomic_write(dir / kManifestName, manifest_to_json(m));
}

}  // namespace

std::string fnv1a64(std::string_view bytes) {
    std::uint64_t h = 14695981039346656037ull;
    for (unsigned char c : bytes) {
        h ^= static_cast<std::uint64_t>(c);
        h *= 1099511628211ull;
    }
    static const char* hex = "0123456789abcdef";
    std::string out(16, '0');
    for (int i = 15; i >= 0; --i) {
        out[static_cast<std::size_t>(i)] = hex[h & 0xf];
        h >>= 4;
    }
    return out;
}

CacheManifest load_manifest(const std::filesystem::path& dir) {
    CacheManifest m;
    const auto bytes = slurp(dir / kManifestName);
    if (!bytes) return m;
    json j;
    try {
        j = json::parse(*bytes);
    } catch (const json::parse_error&) {
        return m;  // unreadable manifest: treat the cache as cold
    }
    if (!j.is_object() || !j.contains("engine_version") || !j.contains("entries")) return m;
    if (j["engine_version"].get<std::string>() != kEngineVersion) return m;
    if (!j["entries"].is_array()) return m;
    for (const json& e : j["entries"]) {
        if (!e.is_object()) continue;
        CacheEntry entry;
        entry.file = e.value("file", std::string{});
        entry.target = e.value("target", std::string{});
        entry.kind = e.value("kind", std::string{});
        entry.cap = e.value("cap", 0);
        entry.z = e.value("z", 0);
        entry.digest = e.value("digest", std::string{});
        if (!entry.file.empty() && !entry.digest.empty()) m.entries.push_back(std::move(entry));
    }
    return m;
}

std::string cache_file_name(Target target, Kind kind, int cap, int z) {
    std::ostringstream name;
    name << target_name(target) << '-' << kind_name(kind);
    if (z > 0) name << "-z" << z;
    name << "-cap" << cap << ".json";
    return name.str();
}

void store_potential(const std::filesystem::path& dir, const Potential& p, int z) {
    const std::string file = cache_file_name(p.target, p.kind, p.cap, z);
    const std::string bytes = serialize(p);
    atomic_write(dir / file, bytes);

    CacheManifest m = load_manifest(dir);
    CacheEntry entry{file, target_name(p.target), kind_name(p.kind), p.cap, z, fnv1a64(bytes)};
    bool replaced = false;
    for (CacheEntry& e : m.entries) {
        if (e.file == file) {
            e = entry;
            replaced = true;
            break;
        }
    }
    if (!replaced) m.entries.push_back(std::move(entry));
    store_manifest(dir, m);
}

std::optional<Potential> load_potential(const std::filesystem::path& dir, Target target, Kind kind,
                                        int cap, int z) {
    const std::string file = cache_file_name(target, kind, cap, z);
    const CacheManifest m = load_manifest(dir);
    const CacheEntry* entry = nullptr;
    for (const CacheEntry& e : m.entries)
        if (e.file == file) entry = &e;
    if (entry == nullptr) return std::nullopt;
    if (entry->target != target_name(target) || entry->kind != kind_name(kind) ||
        entry->cap != cap || entry->z != z)
        throw std::runtime_error("cache manifest row for " + file +
                                 " contradicts its own file name");

    const auto bytes = slurp(dir / file);
    if (!bytes) throw std::runtime_error("cache file " + file + " listed in manifest is missing");
    if (fnv1a64(*bytes) != entry->digest)
        throw std::runtime_error("cache file " + file + " fails its digest check (corrupted?)");

    Potential p = parse_potential(*bytes);
    if (p.target != target || p.kind != kind || p.cap != cap)
        throw std::runtime_error("cache file " + file + " holds a different potential than named");
    return p;
}

std::optional<int> best_cached_cap(const std::filesystem::path& dir, Target target, Kind kind,
                                   int z) {
    const CacheManifest m = load_manifest(dir);
    std::optional<int> best;
    for (const CacheEntry& e : m.entries) {
        if (e.target != target_name(target) || e.kind != kind_name(kind) || e.z != z) continue;
        if (!best || e.cap > *best) best = e.cap;
    }
    return best;
}

}  // namespace charnum

#pragma once

/**
 * @file cache.hpp
 * @brief On-disk cache of Kazhdan-Lusztig tables, keyed by (D, maxLength, library version).
 *
 * Layout of the cache directory:
 *   manifest.json          {"entries": [{"D", "maxLength", "version", "hash", "path"}]}
 *   kl-D<d>-L<l>.jsonl     one {"u": window, "c": [{"y", "p"}]} object per line
 *   .lock                  advisory lock held while reading or writing the manifest
 */

#include <sys/file.h>
#include <fcntl.h>
#include <unistd.h>

#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "cellkit/hecke.hpp"
#include "cellkit/json_io.hpp"

namespace cellkit {

inline constexpr const char* kLibraryVersion = "0.1.0";

inline std::uint64_t fnv1a(const std::string& data) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : data) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    return h;
}

inline std::string hex64(std::uint64_t x) {
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(x));
    return buf;
}

class KlCache {
public:
    explicit KlCache(std::filesystem::path dir) : dir_(std::move(dir)) { std::filesystem::create_directories(dir_); }

    /// The cache named by CELLKIT_CACHE_DIR, if set and non-empty.
    static std::optional<KlCache> from_env() {
        const char* d = std::getenv("CELLKIT_CACHE_DIR");
        if (!d || !*d) return std::nullopt;
        return KlCache(d);
    }

    const std::filesystem::path& dir() const noexcept { return dir_; }

    /// Seeds H from a stored table covering max_length; false on a miss or a corrupt entry.
    bool load(HeckeAlgebra& H, int max_length) const {
        Lock lock(dir_);
        const auto manifest = read_manifest();
        for (const auto& e : manifest.at("entries")) {
            if (e.at("D") != H.period() || e.at("maxLength").get<int>() < max_length || e.at("version") != kLibraryVersion)
                continue;
            const auto path = dir_ / e.at("path").get<std::string>();
            const std::string data = slurp(path);
            if (hex64(fnv1a(data)) != e.at("hash").get<std::string>()) {
                std::cerr << "cellkit: ignoring cache entry with bad hash: " << path << "\n";
                continue;
            }
            std::istringstream in(data);
            std::string line;
            while (std::getline(in, line)) {
                if (line.empty()) continue;
                const auto j = json_io::json::parse(line);
                H.seed_kl(AffinePermutation(H.period(), j.at("u").get<std::vector<int>>()),
                          json_io::parse_hecke_element(j.at("c"), H.period()));
            }
            return true;
        }
        return false;
    }

    /// Computes (if needed) and stores the table of H up to max_length.
    void store(HeckeAlgebra& H, int max_length) const {
        std::ostringstream out;
        for (const auto& [u, c] : H.kl_table(max_length))
            out << json_io::json{{"u", json_io::window(u)}, {"c", json_io::hecke_element(c)}}.dump() << "\n";
        const std::string data = out.str();
        const std::string name = "kl-D" + std::to_string(H.period()) + "-L" + std::to_string(max_length) + ".jsonl";
        Lock lock(dir_);
        write_atomic(dir_ / name, data);
        auto manifest = read_manifest();
        auto& entries = manifest["entries"];
        json_io::json kept = json_io::json::array();
        for (const auto& e : entries)
            if (e.at("path") != name) kept.push_back(e);
        kept.push_back({{"D", H.period()}, {"maxLength", max_length}, {"version", kLibraryVersion},
                        {"hash", hex64(fnv1a(data))}, {"path", name}});
        entries = kept;
        write_atomic(dir_ / "manifest.json", manifest.dump(2) + "\n");
    }

    /// Loads on a hit, otherwise computes and stores; returns whether it was a hit.
    bool ensure(HeckeAlgebra& H, int max_length) const {
        if (load(H, max_length)) return true;
        store(H, max_length);
        return false;
    }

private:
    struct Lock {
        explicit Lock(const std::filesystem::path& dir) {
            fd = ::open((dir / ".lock").c_str(), O_RDWR | O_CREAT, 0644);
            if (fd < 0 || ::flock(fd, LOCK_EX) != 0) throw Error("CacheError", "cannot lock cache directory", dir.string());
        }
        ~Lock() {
            ::flock(fd, LOCK_UN);
            ::close(fd);
        }
        Lock(const Lock&) = delete;
        Lock& operator=(const Lock&) = delete;
        int fd = -1;
    };

    static std::string slurp(const std::filesystem::path& p) {
        std::ifstream in(p, std::ios::binary);
        if (!in) return {};
        std::ostringstream ss;
        ss << in.rdbuf();
        return ss.str();
    }

    static void write_atomic(const std::filesystem::path& p, const std::string& data) {
        const auto tmp = p.string() + ".tmp";
        {
            std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
            if (!out) throw Error("CacheError", "cannot write cache file", tmp);
            out << data;
        }
        std::filesystem::rename(tmp, p);
    }

    json_io::json read_manifest() const {
        const std::string data = slurp(dir_ / "manifest.json");
        if (data.empty()) return {{"entries", json_io::json::array()}};
        try {
            auto j = json_io::json::parse(data);
            if (!j.contains("entries") || !j["entries"].is_array()) throw Error("CacheError", "manifest lacks entries");
            return j;
        } catch (const json_io::json::exception&) {
            std::cerr << "cellkit: unreadable cache manifest, starting fresh\n";
            return {{"entries", json_io::json::array()}};
        }
    }

    std::filesystem::path dir_;
};

}  // namespace cellkit

#include "freybound/cache.hpp"

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <sstream>

namespace freybound {

namespace fs = std::filesystem;

namespace {

std::uint64_t fnv1a64(const std::string& data) {
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char c : data) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}

std::string hex64(std::uint64_t v) {
    static const char* digits = "0123456789abcdef";
    std::string s(16, '0');
    for (int i = 15; i >= 0; --i) {
        s[static_cast<std::size_t>(i)] = digits[v & 0xf];
        v >>= 4;
    }
    return s;
}

}  // namespace

std::string RecordCache::key_for(const std::string& canonical_input) {
    return hex64(fnv1a64(canonical_input));
}

std::optional<RecordCache::Entry> RecordCache::lookup(const std::string& subcommand,
                                                      const std::string& key) const {
    fs::path base = fs::path(dir_) / subcommand;
    fs::path content_path = base / (key + ".records");
    fs::path status_path = base / (key + ".status");
    std::error_code ec;
    if (!fs::exists(content_path, ec) || !fs::exists(status_path, ec)) return std::nullopt;

    std::ifstream cf(content_path, std::ios::binary);
    if (!cf) return std::nullopt;
    std::ostringstream buf;
    buf << cf.rdbuf();
    Entry entry;
    entry.content = buf.str();

    std::ifstream sf(status_path);
    std::string checksum;
    if (!(sf >> entry.exit_status >> checksum)) return std::nullopt;
    if (checksum != hex64(fnv1a64(entry.content))) return std::nullopt;  // corrupt: recompute
    return entry;
}

void RecordCache::store(const std::string& subcommand, const std::string& key,
                        const std::string& canonical_input, const Entry& entry) const {
    fs::path base = fs::path(dir_) / subcommand;
    std::error_code ec;
    fs::create_directories(base, ec);
    if (ec) return;  // cache is best-effort; computation already succeeded

    std::ofstream cf(base / (key + ".records"), std::ios::binary | std::ios::trunc);
    cf << entry.content;
    cf.close();
    std::ofstream sf(base / (key + ".status"), std::ios::trunc);
    sf << entry.exit_status << " " << hex64(fnv1a64(entry.content)) << "\n";
    sf.close();
    std::ofstream idx(base / "index.txt", std::ios::app);
    idx << key << "\t" << canonical_input << "\n";
}

}  // namespace freybound

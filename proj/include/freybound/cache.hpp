#ifndef FREYBOUND_CACHE_HPP
#define FREYBOUND_CACHE_HPP

#include <optional>
#include <string>

namespace freybound {

// Pure memo keyed by a content hash of the canonical input description.
// Layout: <dir>/<subcommand>/<hex key>.records plus a sidecar .status file
// carrying the exit code and a checksum; index.txt maps keys back to their
// inputs. Anything unreadable or checksum-mismatched counts as a miss.
class RecordCache {
  public:
    explicit RecordCache(std::string dir) : dir_(std::move(dir)) {}

    struct Entry {
        std::string content;
        int exit_status = 0;
    };

    static std::string key_for(const std::string& canonical_input);

    std::optional<Entry> lookup(const std::string& subcommand, const std::string& key) const;
    void store(const std::string& subcommand, const std::string& key,
               const std::string& canonical_input, const Entry& entry) const;

  private:
    std::string dir_;
};

}  // namespace freybound

#endif

#pragma once

#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace faro {

/// A known prefix of an integer sequence.  Fixture files are plain text, one
/// sequence per line: `id offset t0 t1 t2 ...`.
struct SequenceFixture {
    std::string id;
    long long offset = 0;
    std::vector<long long> terms;
};

bool valid_sequence_id(const std::string& id);  // letter + 6 digits

class FixtureStore {
public:
    static FixtureStore load_file(const std::string& path);
    static SequenceFixture parse_line(const std::string& line);

    const SequenceFixture* find(const std::string& id) const;
    std::vector<std::string> ids() const;
    void insert(SequenceFixture fx);

private:
    std::map<std::string, SequenceFixture> by_id_;
};

struct PrefixReport {
    bool ok = false;
    long long compared = 0;
    long long first_mismatch_index = -1;  // sequence index, honoring the offset
    std::string message;
};

/// Compare computed[j] (sequence index first_index + j) against the fixture
/// on the overlap of the two index ranges.
PrefixReport check_prefix(const SequenceFixture& fx, std::span<const long long> computed,
                          long long first_index);

/// Remote lookup is disabled by default; every offline suite works without it.
struct RemoteConfig {
    bool enabled = false;
    std::string cache_dir;
    std::string host = "oeis.org";
    int timeout_sec = 10;
};

/// Fetch the term list for id from the public JSON endpoint, caching the
/// result in cache_dir (one fixture line per file).  A cached id is returned
/// without touching the network.  Throws std::runtime_error when networking
/// is disabled or the request fails.
SequenceFixture remote_lookup(const std::string& id, const RemoteConfig& config);

}  // namespace faro

#include "faro/oeis.hpp"

#include <cctype>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>

#ifdef FARO_WITH_TLS
#include <httplib.h>
#include <nlohmann/json.hpp>
#endif

namespace faro {

bool valid_sequence_id(const std::string& id) {
    if (id.size() != 7) return false;
    if (!std::isupper(static_cast<unsigned char>(id[0]))) return false;
    for (std::size_t i = 1; i < id.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(id[i]))) return false;
    return true;
}

SequenceFixture FixtureStore::parse_line(const std::string& line) {
    std::istringstream is(line);
    SequenceFixture fx;
    if (!(is >> fx.id >> fx.offset))
        throw std::invalid_argument("fixture line: expected `id offset t0 t1 ...`");
    if (!valid_sequence_id(fx.id))
        throw std::invalid_argument("fixture line: bad sequence id '" + fx.id + "'");
    long long t;
    while (is >> t) fx.terms.push_back(t);
    if (fx.terms.empty())
        throw std::invalid_argument("fixture line: no terms for " + fx.id);
    return fx;
}

FixtureStore FixtureStore::load_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open fixture file: " + path);
    FixtureStore store;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') continue;
        store.insert(parse_line(line));
    }
    return store;
}

const SequenceFixture* FixtureStore::find(const std::string& id) const {
    const auto it = by_id_.find(id);
    return it == by_id_.end() ? nullptr : &it->second;
}

std::vector<std::string> FixtureStore::ids() const {
    std::vector<std::string> out;
    for (const auto& [id, fx] : by_id_) out.push_back(id);
    return out;
}

void FixtureStore::insert(SequenceFixture fx) {
    by_id_[fx.id] = std::move(fx);
}

PrefixReport check_prefix(const SequenceFixture& fx, std::span<const long long> computed,
                          long long first_index) {
    PrefixReport rep;
    const long long lo = std::max(first_index, fx.offset);
    const long long hi = std::min(first_index + static_cast<long long>(computed.size()),
                                  fx.offset + static_cast<long long>(fx.terms.size()));
    for (long long idx = lo; idx < hi; ++idx) {
        const long long got = computed[idx - first_index];
        const long long want = fx.terms[idx - fx.offset];
        ++rep.compared;
        if (got != want) {
            rep.first_mismatch_index = idx;
            rep.message = fx.id + ": mismatch at index " + std::to_string(idx) + ": computed " +
                          std::to_string(got) + ", fixture " + std::to_string(want);
            return rep;
        }
    }
    if (rep.compared == 0) {
        rep.message = fx.id + ": no overlap between computed range and fixture";
        return rep;
    }
    rep.ok = true;
    rep.message = fx.id + ": " + std::to_string(rep.compared) + " terms match";
    return rep;
}

namespace {

std::string cache_path(const RemoteConfig& config, const std::string& id) {
    return (std::filesystem::path(config.cache_dir) / (id + ".txt")).string();
}

std::string fixture_line(const SequenceFixture& fx) {
    std::ostringstream os;
    os << fx.id << ' ' << fx.offset;
    for (long long t : fx.terms) os << ' ' << t;
    return os.str();
}

}  // namespace

SequenceFixture remote_lookup(const std::string& id, const RemoteConfig& config) {
    if (!valid_sequence_id(id))
        throw std::invalid_argument("remote_lookup: bad sequence id '" + id + "'");
    if (config.cache_dir.empty())
        throw std::invalid_argument("remote_lookup: cache_dir is required");
    // the cache is consulted even when networking is off
    if (std::filesystem::exists(cache_path(config, id))) {
        std::ifstream in(cache_path(config, id));
        std::string line;
        std::getline(in, line);
        return FixtureStore::parse_line(line);
    }
    if (!config.enabled)
        throw std::runtime_error("remote_lookup: networking is disabled (offline is the default; "
                                 "pass --online to enable)");
#ifdef FARO_WITH_TLS
    httplib::SSLClient client(config.host);
    client.set_connection_timeout(config.timeout_sec);
    client.set_read_timeout(config.timeout_sec);
    const auto res = client.Get(("/search?q=id:" + id + "&fmt=json").c_str());
    if (!res || res->status != 200)
        throw std::runtime_error("remote_lookup: request failed for " + id);
    const auto doc = nlohmann::json::parse(res->body);
    const auto& results = doc.at("results");
    if (!results.is_array() || results.empty())
        throw std::runtime_error("remote_lookup: no results for " + id);
    const auto& entry = results.at(0);
    SequenceFixture fx;
    fx.id = id;
    const std::string offsets = entry.at("offset").get<std::string>();
    fx.offset = std::stoll(offsets.substr(0, offsets.find(',')));
    std::istringstream data(entry.at("data").get<std::string>());
    std::string tok;
    while (std::getline(data, tok, ',')) fx.terms.push_back(std::stoll(tok));
    if (fx.terms.empty()) throw std::runtime_error("remote_lookup: empty data for " + id);
    std::filesystem::create_directories(config.cache_dir);
    std::ofstream out(cache_path(config, id));
    out << fixture_line(fx) << '\n';
    return fx;
#else
    throw std::runtime_error("remote_lookup: built without TLS support");
#endif
}

}  // namespace faro

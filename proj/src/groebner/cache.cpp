#include "reglab/groebner/cache.hpp"

#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <sstream>

namespace reglab {

std::uint64_t stable_hash(const std::string& text) {
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char c : text) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}

std::string hex64(std::uint64_t v) {
    std::ostringstream os;
    os << std::hex << std::setw(16) << std::setfill('0') << v;
    return os.str();
}

std::filesystem::path default_cache_dir() {
    if (const char* env = std::getenv("REGLAB_CACHE"); env && *env) return env;
    return std::filesystem::current_path() / ".reglab-cache";
}

std::optional<nlohmann::json> GbCache::load(const std::string& key) const {
    std::ifstream in(dir_ / (key + ".json"));
    if (!in) return std::nullopt;
    try {
        return nlohmann::json::parse(in);
    } catch (const nlohmann::json::exception&) {
        return std::nullopt;
    }
}

void GbCache::store(const std::string& key, const nlohmann::json& value) const {
    std::filesystem::create_directories(dir_);
    // Write then rename so readers never see a partial file.
    auto tmp = dir_ / (key + ".json.tmp");
    {
        std::ofstream out(tmp);
        out << value.dump(1) << '\n';
    }
    std::filesystem::rename(tmp, dir_ / (key + ".json"));
}

std::vector<CacheEntry> GbCache::list() const {
    std::vector<CacheEntry> out;
    if (!std::filesystem::exists(dir_)) return out;
    for (const auto& e : std::filesystem::directory_iterator(dir_)) {
        if (e.path().extension() != ".json") continue;
        CacheEntry c;
        c.key = e.path().stem().string();
        c.bytes = e.file_size();
        if (auto j = load(c.key); j && j->contains("basis")) c.basis_size = j->at("basis").size();
        out.push_back(c);
    }
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.key < b.key; });
    return out;
}

std::size_t GbCache::clear() const {
    std::size_t n = 0;
    if (!std::filesystem::exists(dir_)) return 0;
    for (const auto& e : std::filesystem::directory_iterator(dir_))
        if (e.path().extension() == ".json") {
            std::filesystem::remove(e.path());
            ++n;
        }
    return n;
}

}  // namespace reglab

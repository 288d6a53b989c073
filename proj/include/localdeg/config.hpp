#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace localdeg {

struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Flat, sectioned key-value configuration:
///
///   # comment
///   [model]
///   type = sbm
///   communities = 10,25,15
///
/// Sections and keys keep insertion order, so parse -> serialize ->
/// parse is the identity on the canonical form. Unknown keys are
/// rejected against a per-command schema before any computation.
class Config {
public:
    static Config parse_file(const std::filesystem::path& path);
    static Config parse_string(const std::string& text);

    std::string serialize() const;
    void write_file(const std::filesystem::path& path) const;

    bool has_section(const std::string& section) const;
    bool has(const std::string& section, const std::string& key) const;

    const std::string& get(const std::string& section, const std::string& key) const;
    std::string get_or(const std::string& section, const std::string& key,
                       const std::string& fallback) const;

    double get_double(const std::string& section, const std::string& key) const;
    double get_double_or(const std::string& section, const std::string& key,
                         double fallback) const;
    long get_long(const std::string& section, const std::string& key) const;
    long get_long_or(const std::string& section, const std::string& key, long fallback) const;
    std::uint64_t get_u64_or(const std::string& section, const std::string& key,
                             std::uint64_t fallback) const;
    bool get_bool_or(const std::string& section, const std::string& key, bool fallback) const;
    std::vector<double> get_doubles(const std::string& section, const std::string& key) const;
    std::vector<int> get_ints(const std::string& section, const std::string& key) const;

    void set(const std::string& section, const std::string& key, const std::string& value);
    void remove(const std::string& section, const std::string& key);

    std::vector<std::string> section_names() const;
    std::vector<std::string> keys(const std::string& section) const;

    /// Throws ConfigError when a present section/key is not listed.
    void enforce_schema(
        const std::map<std::string, std::set<std::string>>& allowed) const;

private:
    struct Section {
        std::string name;
        std::vector<std::pair<std::string, std::string>> entries;
    };
    std::vector<Section> sections_;

    const Section* find(const std::string& name) const;
    Section& find_or_create(const std::string& name);
};

} // namespace localdeg

#include "localdeg/config.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

namespace localdeg {

namespace {
std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) return "";
    const auto e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}
} // namespace

Config Config::parse_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open config file " + path.string());
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_string(ss.str());
}

Config Config::parse_string(const std::string& text) {
    Config cfg;
    std::istringstream in(text);
    std::string line;
    std::string current;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const std::string t = trim(line);
        if (t.empty() || t[0] == '#') continue;
        if (t.front() == '[') {
            if (t.back() != ']')
                throw ConfigError("config line " + std::to_string(lineno) +
                                  ": unterminated section header");
            current = trim(t.substr(1, t.size() - 2));
            if (current.empty())
                throw ConfigError("config line " + std::to_string(lineno) + ": empty section name");
            cfg.find_or_create(current);
            continue;
        }
        const auto eq = t.find('=');
        if (eq == std::string::npos)
            throw ConfigError("config line " + std::to_string(lineno) + ": expected key = value");
        if (current.empty())
            throw ConfigError("config line " + std::to_string(lineno) +
                              ": key outside of any [section]");
        const std::string key = trim(t.substr(0, eq));
        const std::string value = trim(t.substr(eq + 1));
        if (key.empty())
            throw ConfigError("config line " + std::to_string(lineno) + ": empty key");
        if (cfg.has(current, key))
            throw ConfigError("config line " + std::to_string(lineno) + ": duplicate key '" +
                              key + "' in [" + current + "]");
        cfg.set(current, key, value);
    }
    return cfg;
}

std::string Config::serialize() const {
    std::ostringstream out;
    bool first = true;
    for (const auto& sec : sections_) {
        if (!first) out << '\n';
        first = false;
        out << '[' << sec.name << "]\n";
        for (const auto& [k, v] : sec.entries) out << k << " = " << v << '\n';
    }
    return out.str();
}

void Config::write_file(const std::filesystem::path& path) const {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw ConfigError("cannot write config file " + path.string());
    out << serialize();
}

const Config::Section* Config::find(const std::string& name) const {
    for (const auto& s : sections_)
        if (s.name == name) return &s;
    return nullptr;
}

Config::Section& Config::find_or_create(const std::string& name) {
    for (auto& s : sections_)
        if (s.name == name) return s;
    sections_.push_back({name, {}});
    return sections_.back();
}

bool Config::has_section(const std::string& section) const { return find(section) != nullptr; }

bool Config::has(const std::string& section, const std::string& key) const {
    const Section* s = find(section);
    if (!s) return false;
    return std::any_of(s->entries.begin(), s->entries.end(),
                       [&](const auto& e) { return e.first == key; });
}

const std::string& Config::get(const std::string& section, const std::string& key) const {
    const Section* s = find(section);
    if (s)
        for (const auto& e : s->entries)
            if (e.first == key) return e.second;
    throw ConfigError("missing config value [" + section + "] " + key);
}

std::string Config::get_or(const std::string& section, const std::string& key,
                           const std::string& fallback) const {
    return has(section, key) ? get(section, key) : fallback;
}

double Config::get_double(const std::string& section, const std::string& key) const {
    const std::string& v = get(section, key);
    try {
        std::size_t pos = 0;
        const double d = std::stod(v, &pos);
        if (pos != v.size()) throw std::invalid_argument("trailing characters");
        return d;
    } catch (const std::exception&) {
        throw ConfigError("config value [" + section + "] " + key + " = '" + v +
                          "' is not a number");
    }
}

double Config::get_double_or(const std::string& section, const std::string& key,
                             double fallback) const {
    return has(section, key) ? get_double(section, key) : fallback;
}

long Config::get_long(const std::string& section, const std::string& key) const {
    const std::string& v = get(section, key);
    try {
        std::size_t pos = 0;
        const long d = std::stol(v, &pos);
        if (pos != v.size()) throw std::invalid_argument("trailing characters");
        return d;
    } catch (const std::exception&) {
        throw ConfigError("config value [" + section + "] " + key + " = '" + v +
                          "' is not an integer");
    }
}

long Config::get_long_or(const std::string& section, const std::string& key,
                         long fallback) const {
    return has(section, key) ? get_long(section, key) : fallback;
}

std::uint64_t Config::get_u64_or(const std::string& section, const std::string& key,
                                 std::uint64_t fallback) const {
    if (!has(section, key)) return fallback;
    const std::string& v = get(section, key);
    try {
        std::size_t pos = 0;
        const std::uint64_t d = std::stoull(v, &pos);
        if (pos != v.size()) throw std::invalid_argument("trailing characters");
        return d;
    } catch (const std::exception&) {
        throw ConfigError("config value [" + section + "] " + key + " = '" + v +
                          "' is not an unsigned integer");
    }
}

bool Config::get_bool_or(const std::string& section, const std::string& key,
                         bool fallback) const {
    if (!has(section, key)) return fallback;
    const std::string& v = get(section, key);
    if (v == "true" || v == "1" || v == "yes") return true;
    if (v == "false" || v == "0" || v == "no") return false;
    throw ConfigError("config value [" + section + "] " + key + " = '" + v +
                      "' is not a boolean");
}

std::vector<double> Config::get_doubles(const std::string& section,
                                        const std::string& key) const {
    const std::string& v = get(section, key);
    std::vector<double> out;
    std::istringstream ss(v);
    std::string item;
    while (std::getline(ss, item, ',')) {
        const std::string t = trim(item);
        if (t.empty()) continue;
        try {
            out.push_back(std::stod(t));
        } catch (const std::exception&) {
            throw ConfigError("config value [" + section + "] " + key +
                              ": bad list element '" + t + "'");
        }
    }
    if (out.empty())
        throw ConfigError("config value [" + section + "] " + key + " is an empty list");
    return out;
}

std::vector<int> Config::get_ints(const std::string& section, const std::string& key) const {
    std::vector<int> out;
    for (double d : get_doubles(section, key)) {
        const int i = static_cast<int>(d);
        if (static_cast<double>(i) != d)
            throw ConfigError("config value [" + section + "] " + key +
                              ": expected integers");
        out.push_back(i);
    }
    return out;
}

void Config::set(const std::string& section, const std::string& key,
                 const std::string& value) {
    Section& s = find_or_create(section);
    for (auto& e : s.entries)
        if (e.first == key) {
            e.second = value;
            return;
        }
    s.entries.emplace_back(key, value);
}

void Config::remove(const std::string& section, const std::string& key) {
    for (auto& s : sections_) {
        if (s.name != section) continue;
        std::erase_if(s.entries, [&](const auto& e) { return e.first == key; });
    }
}

std::vector<std::string> Config::section_names() const {
    std::vector<std::string> out;
    out.reserve(sections_.size());
    for (const auto& s : sections_) out.push_back(s.name);
    return out;
}

std::vector<std::string> Config::keys(const std::string& section) const {
    const Section* s = find(section);
    if (!s) throw ConfigError("missing config section [" + section + "]");
    std::vector<std::string> out;
    out.reserve(s->entries.size());
    for (const auto& e : s->entries) out.push_back(e.first);
    return out;
}

void Config::enforce_schema(
    const std::map<std::string, std::set<std::string>>& allowed) const {
    for (const auto& sec : sections_) {
        const auto it = allowed.find(sec.name);
        if (it == allowed.end())
            throw ConfigError("unknown config section [" + sec.name + "]");
        for (const auto& [k, v] : sec.entries)
            if (!it->second.count(k))
                throw ConfigError("unknown config key '" + k + "' in [" + sec.name + "]");
    }
}

} // namespace localdeg

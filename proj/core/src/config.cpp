#include "netpen/config.hpp"

#include "netpen/error.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>

namespace netpen {

namespace {

std::string trim(const std::string& s) {
    size_t b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) return "";
    size_t e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

} // namespace

ConfigFile ConfigFile::parse(const std::string& text) {
    ConfigFile cfg;
    std::istringstream in(text);
    std::string line;
    std::string section;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::string t = trim(line);
        if (t.empty() || t[0] == '#' || t[0] == ';') continue;
        if (t.front() == '[') {
            if (t.back() != ']')
                throw Error(ErrorCode::InvalidConfig,
                            "unterminated section header at line " + std::to_string(lineno));
            section = trim(t.substr(1, t.size() - 2));
            cfg.sections_[section]; // ensure section exists even if empty
            continue;
        }
        size_t eq = t.find('=');
        if (eq == std::string::npos)
            throw Error(ErrorCode::InvalidConfig,
                        "expected key = value at line " + std::to_string(lineno));
        std::string key = trim(t.substr(0, eq));
        std::string value = trim(t.substr(eq + 1));
        if (key.empty())
            throw Error(ErrorCode::InvalidConfig, "empty key at line " + std::to_string(lineno));
        cfg.sections_[section][key] = value;
    }
    return cfg;
}

ConfigFile ConfigFile::load(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error(ErrorCode::IoFailure, "cannot open config: " + path);
    std::stringstream buf;
    buf << in.rdbuf();
    return parse(buf.str());
}

bool ConfigFile::has_section(const std::string& section) const {
    return sections_.count(section) > 0;
}

bool ConfigFile::has(const std::string& section, const std::string& key) const {
    auto it = sections_.find(section);
    return it != sections_.end() && it->second.count(key) > 0;
}

std::optional<std::string> ConfigFile::get(const std::string& section,
                                           const std::string& key) const {
    auto it = sections_.find(section);
    if (it == sections_.end()) return std::nullopt;
    auto kt = it->second.find(key);
    if (kt == it->second.end()) return std::nullopt;
    return kt->second;
}

std::string ConfigFile::get_string(const std::string& section, const std::string& key,
                                   const std::string& fallback) const {
    auto v = get(section, key);
    return v ? *v : fallback;
}

double ConfigFile::get_double(const std::string& section, const std::string& key,
                              double fallback) const {
    auto v = get(section, key);
    if (!v) return fallback;
    try {
        size_t pos = 0;
        double d = std::stod(*v, &pos);
        if (pos != v->size()) throw std::invalid_argument("trailing");
        return d;
    } catch (const std::exception&) {
        throw Error(ErrorCode::InvalidConfig, section + "." + key + " is not a number: " + *v);
    }
}

long ConfigFile::get_int(const std::string& section, const std::string& key,
                         long fallback) const {
    auto v = get(section, key);
    if (!v) return fallback;
    try {
        size_t pos = 0;
        long n = std::stol(*v, &pos);
        if (pos != v->size()) throw std::invalid_argument("trailing");
        return n;
    } catch (const std::exception&) {
        throw Error(ErrorCode::InvalidConfig, section + "." + key + " is not an integer: " + *v);
    }
}

bool ConfigFile::get_bool(const std::string& section, const std::string& key,
                          bool fallback) const {
    auto v = get(section, key);
    if (!v) return fallback;
    std::string s = *v;
    std::transform(s.begin(), s.end(), s.begin(), [](unsigned char c) { return std::tolower(c); });
    if (s == "true" || s == "1" || s == "yes" || s == "on") return true;
    if (s == "false" || s == "0" || s == "no" || s == "off") return false;
    throw Error(ErrorCode::InvalidConfig, section + "." + key + " is not a boolean: " + *v);
}

double ConfigFile::require_double(const std::string& section, const std::string& key) const {
    if (!has(section, key))
        throw Error(ErrorCode::InvalidConfig, "missing required key " + section + "." + key);
    return get_double(section, key, 0.0);
}

long ConfigFile::require_int(const std::string& section, const std::string& key) const {
    if (!has(section, key))
        throw Error(ErrorCode::InvalidConfig, "missing required key " + section + "." + key);
    return get_int(section, key, 0);
}

void ConfigFile::set(const std::string& section, const std::string& key,
                     const std::string& value) {
    sections_[section][key] = value;
}

} // namespace netpen

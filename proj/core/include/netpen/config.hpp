#pragma once

#include <map>
#include <optional>
#include <string>

namespace netpen {

/// Flat key = value sections, read from text of the form:
///
///   [scene]
///   rope_spacing = 0.5
///   # comment
///
/// Keys are unique within a section; later duplicates overwrite.
class ConfigFile {
public:
    static ConfigFile parse(const std::string& text);
    static ConfigFile load(const std::string& path);

    bool has_section(const std::string& section) const;
    bool has(const std::string& section, const std::string& key) const;

    std::optional<std::string> get(const std::string& section, const std::string& key) const;

    // Typed getters; throw Error(InvalidConfig) naming section.key on bad values.
    std::string get_string(const std::string& section, const std::string& key,
                           const std::string& fallback) const;
    double get_double(const std::string& section, const std::string& key, double fallback) const;
    long get_int(const std::string& section, const std::string& key, long fallback) const;
    bool get_bool(const std::string& section, const std::string& key, bool fallback) const;

    double require_double(const std::string& section, const std::string& key) const;
    long require_int(const std::string& section, const std::string& key) const;

    void set(const std::string& section, const std::string& key, const std::string& value);

    const std::map<std::string, std::map<std::string, std::string>>& sections() const {
        return sections_;
    }

private:
    std::map<std::string, std::map<std::string, std::string>> sections_;
};

} // namespace netpen

#pragma once

#include <cstdint>
#include <optional>
#include <string>

namespace netpen {

/// The four net-defect categories the system recognizes.
enum class DefectClass : uint8_t {
    Biofouling = 0,
    NetHole = 1,
    Plastic = 2,
    Vegetation = 3,
};

inline constexpr int kNumDefectClasses = 4;

const char* to_string(DefectClass c);
std::optional<DefectClass> defect_class_from_string(const std::string& name);

} // namespace netpen

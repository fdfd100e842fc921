#include "netpen/defect_class.hpp"

namespace netpen {

const char* to_string(DefectClass c) {
    switch (c) {
        case DefectClass::Biofouling: return "biofouling";
        case DefectClass::NetHole: return "net_hole";
        case DefectClass::Plastic: return "plastic";
        case DefectClass::Vegetation: return "vegetation";
    }
    return "unknown";
}

std::optional<DefectClass> defect_class_from_string(const std::string& name) {
    if (name == "biofouling") return DefectClass::Biofouling;
    if (name == "net_hole") return DefectClass::NetHole;
    if (name == "plastic") return DefectClass::Plastic;
    if (name == "vegetation") return DefectClass::Vegetation;
    return std::nullopt;
}

} // namespace netpen

#include "netpen/detect/remote.hpp"

namespace netpen::detect {

std::vector<Detection> request_detections(const Image& img, link::DetectorClient& session) {
    return session.request_detections(img, session.next_frame_id());
}

} // namespace netpen::detect

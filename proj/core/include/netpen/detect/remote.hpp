#pragma once

#include "netpen/detect/detection.hpp"
#include "netpen/image.hpp"
#include "netpen/link/session.hpp"

namespace netpen::detect {

/// Ships the frame to the topside detector over the link session and returns
/// the detections it reports for that frame. Throws Error(Timeout /
/// LinkClosed / FrameMismatch) like the underlying client.
std::vector<Detection> request_detections(const Image& img, link::DetectorClient& session);

} // namespace netpen::detect

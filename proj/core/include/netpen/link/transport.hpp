#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <utility>

namespace netpen::link {

/// Ordered reliable byte stream. receive() returns the bytes read, 0 at
/// end-of-stream, or nullopt when the timeout expires first.
class Transport {
public:
    virtual ~Transport() = default;
    virtual void send(const uint8_t* data, size_t len) = 0;
    virtual std::optional<size_t> receive(uint8_t* buf, size_t max, int timeout_ms) = 0;
    virtual void close() = 0;
    virtual bool is_open() const = 0;
};

/// In-memory duplex channel for tests and the single-process link mode.
std::pair<std::unique_ptr<Transport>, std::unique_ptr<Transport>> make_memory_pair();

/// Blocking connect to a local stream socket.
std::unique_ptr<Transport> tcp_connect(const std::string& host, uint16_t port, int timeout_ms);

class TcpListener {
public:
    TcpListener(const std::string& host, uint16_t port);
    ~TcpListener();
    TcpListener(const TcpListener&) = delete;
    TcpListener& operator=(const TcpListener&) = delete;

    uint16_t port() const { return port_; }
    std::unique_ptr<Transport> accept(int timeout_ms);

private:
    int fd_ = -1;
    uint16_t port_ = 0;
};

/// Grabs an ephemeral port from the kernel; a later bind can still race, but
/// on a single host this is reliable enough for spawning a peer.
uint16_t pick_free_port(const std::string& host);

} // namespace netpen::link
